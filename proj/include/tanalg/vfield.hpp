#ifndef TANALG_VFIELD_HPP
#define TANALG_VFIELD_HPP

#include <vector>

#include "tanalg/poly.hpp"

namespace tanalg {

// Coordinate vector of polynomials. With rank equal to the ring's variable
// count this is the vector field sum_i c[i] d/dx_i; other ranks appear as
// elements of free modules inside the Groebner engine.
class VField {
public:
    VField() = default;
    VField(RingPtr ring, std::vector<Poly> coords);

    static VField zero(RingPtr ring, int rank);
    static VField unit(RingPtr ring, int rank, int pos);
    // c * x^e in slot pos
    static VField monomial(RingPtr ring, int rank, int pos, Expo e, Rational c);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    const Poly& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Poly>& coords() const { return coords_; }

    bool is_zero() const;
    // max total degree over the coordinates, -1 when zero
    int total_degree() const;

    friend bool operator==(const VField& a, const VField& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const VField& a, const VField& b) { return !(a == b); }

    VField operator-() const;
    friend VField operator+(const VField& a, const VField& b);
    friend VField operator-(const VField& a, const VField& b);
    friend VField operator*(const Poly& f, const VField& v);
    friend VField operator*(const Rational& c, const VField& v);

private:
    RingPtr ring_;
    std::vector<Poly> coords_;
};

// D(f) = sum_i D[i] * df/dx_i. Rank must equal the ring's variable count.
Poly apply_field(const VField& D, const Poly& f);

// Lie bracket, coordinatewise [D,E]_j = D(E_j) - E(D_j).
VField bracket(const VField& D, const VField& E);

} // namespace tanalg

#endif
