#include "tanalg/vfield.hpp"

#include <algorithm>

#include "tanalg/errors.hpp"

namespace tanalg {

VField::VField(RingPtr ring, std::vector<Poly> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (!ring_) throw RingError("vector field needs a ring");
    if (coords_.empty()) throw RingError("vector field needs at least one coordinate");
    for (const auto& c : coords_) merged_ring(ring_, c.ring());
}

VField VField::zero(RingPtr ring, int rank) {
    return VField(ring, std::vector<Poly>(static_cast<size_t>(rank), Poly(ring)));
}

VField VField::unit(RingPtr ring, int rank, int pos) {
    VField v = zero(ring, rank);
    v.coords_[static_cast<size_t>(pos)] = Poly::constant(ring, 1);
    return v;
}

VField VField::monomial(RingPtr ring, int rank, int pos, Expo e, Rational c) {
    VField v = zero(ring, rank);
    v.coords_[static_cast<size_t>(pos)] = Poly::monomial(ring, std::move(e), std::move(c));
    return v;
}

bool VField::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); });
}

int VField::total_degree() const {
    int d = -1;
    for (const auto& c : coords_) d = std::max(d, c.total_degree());
    return d;
}

VField VField::operator-() const {
    VField r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

static void check_ranks(const VField& a, const VField& b) {
    merged_ring(a.ring(), b.ring());
    if (a.rank() != b.rank()) throw RingError("vector fields of different rank");
}

VField operator+(const VField& a, const VField& b) {
    check_ranks(a, b);
    std::vector<Poly> coords;
    coords.reserve(a.coords().size());
    for (int i = 0; i < a.rank(); ++i) coords.push_back(a[i] + b[i]);
    return VField(a.ring(), std::move(coords));
}

VField operator-(const VField& a, const VField& b) {
    check_ranks(a, b);
    std::vector<Poly> coords;
    coords.reserve(a.coords().size());
    for (int i = 0; i < a.rank(); ++i) coords.push_back(a[i] - b[i]);
    return VField(a.ring(), std::move(coords));
}

VField operator*(const Poly& f, const VField& v) {
    std::vector<Poly> coords;
    coords.reserve(v.coords().size());
    for (const auto& c : v.coords()) coords.push_back(f * c);
    return VField(merged_ring(v.ring(), f.ring()), std::move(coords));
}

VField operator*(const Rational& c, const VField& v) {
    std::vector<Poly> coords;
    coords.reserve(v.coords().size());
    for (const auto& p : v.coords()) coords.push_back(c * p);
    return VField(v.ring(), std::move(coords));
}

Poly apply_field(const VField& D, const Poly& f) {
    const RingPtr& ring = merged_ring(D.ring(), f.ring());
    if (D.rank() != ring->nvars())
        throw RingError("apply_field: rank does not match variable count");
    Poly acc(ring);
    for (int i = 0; i < D.rank(); ++i) {
        if (D[i].is_zero()) continue;
        acc = acc + D[i] * partial(f, i);
    }
    return acc;
}

VField bracket(const VField& D, const VField& E) {
    const RingPtr& ring = merged_ring(D.ring(), E.ring());
    if (D.rank() != ring->nvars() || E.rank() != ring->nvars())
        throw RingError("bracket: rank does not match variable count");
    std::vector<Poly> coords;
    coords.reserve(D.coords().size());
    for (int j = 0; j < D.rank(); ++j) coords.push_back(apply_field(D, E[j]) - apply_field(E, D[j]));
    return VField(ring, std::move(coords));
}

} // namespace tanalg
