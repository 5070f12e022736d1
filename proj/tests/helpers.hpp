#ifndef TANALG_TESTS_HELPERS_HPP
#define TANALG_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "tanalg/expr_io.hpp"

namespace tanalg::testing {

inline RingPtr ring2(MonomialOrder o = MonomialOrder::grevlex) {
    return make_ring({"x", "y"}, o);
}

inline RingPtr ring3(MonomialOrder o = MonomialOrder::grevlex) {
    return make_ring({"x", "y", "z"}, o);
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }
inline VField F(const RingPtr& r, const std::string& text) { return parse_field(text, r); }

// small random polynomial: total degree <= max_deg, integer coefficients in
// [-5, 5], about `terms` monomials
inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_deg = 3,
                        int terms = 4) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    int n = ring->nvars();
    std::vector<Term> out;
    for (int t = 0; t < terms; ++t) {
        Expo e(static_cast<size_t>(n), 0);
        int budget = deg(rng);
        for (int v = 0; v < n && budget > 0; ++v) {
            std::uniform_int_distribution<int> part(0, budget);
            int k = part(rng);
            e[static_cast<size_t>(v)] = k;
            budget -= k;
        }
        int c = coeff(rng);
        if (c != 0) out.push_back({std::move(e), Rational(c)});
    }
    return Poly::from_terms(ring, std::move(out));
}

inline VField random_field(const RingPtr& ring, std::mt19937_64& rng, int max_deg = 2) {
    std::vector<Poly> coords;
    for (int i = 0; i < ring->nvars(); ++i) coords.push_back(random_poly(ring, rng, max_deg, 3));
    return VField(ring, std::move(coords));
}

} // namespace tanalg::testing

#endif
