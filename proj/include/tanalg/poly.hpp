#ifndef TANALG_POLY_HPP
#define TANALG_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tanalg/rational.hpp"
#include "tanalg/ring.hpp"

namespace tanalg {

struct Term {
    Expo mono;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Exact multivariate polynomial over Q in a fixed ring. Canonical form:
// terms sorted strictly descending under the ring's monomial order, no zero
// coefficients stored. A default-constructed Poly is the zero polynomial of
// no particular ring and is compatible with every ring.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, Rational c);
    static Poly variable(RingPtr ring, int index); // 0-based; throws on range
    static Poly monomial(RingPtr ring, Expo e, Rational c);
    // Normalizes: merges duplicates, strips zeros, sorts.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    // Caller guarantees terms already canonical (sorted, merged, zero-free).
    static Poly from_sorted(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the monomial 1 (zero if absent).
    Rational constant_coeff() const;
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    const Term& leading_term() const; // requires nonzero

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& f);

private:
    RingPtr ring_;           // null only for the zero polynomial
    std::vector<Term> terms_;
};

Poly partial(const Poly& f, int var); // formal d/dx_var, 0-based
Poly pow(const Poly& f, int k);       // k >= 0

// Scales f so its leading coefficient is 1. Zero stays zero.
Poly monic(const Poly& f);

// f with x_i replaced by images[i]; images live in `target` (all one ring).
Poly substitute(const Poly& f, std::span<const Poly> images, const RingPtr& target);

// Quotient when g divides f exactly, nullopt otherwise. g must be nonzero.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

// Monic gcd in Q[x_1..x_n] by primitive pseudo-remainder sequences.
// gcd(0,0) = 0; gcd with a nonzero constant is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

// Product of the distinct irreducible factors of f, normalized monic;
// computed as f / gcd(f, df/dx_1, ..., df/dx_n). Throws DomainError on 0.
Poly squarefree_part(const Poly& f);

} // namespace tanalg

#endif
