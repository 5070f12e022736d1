#ifndef TANALG_RING_HPP
#define TANALG_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tanalg {

enum class MonomialOrder { lex, grlex, grevlex };

std::string order_name(MonomialOrder o);
std::optional<MonomialOrder> order_from_name(const std::string& name);

// The ambient polynomial ring Q[x_1..x_n] with a fixed monomial order.
// Every value in one computation shares one ring; operations on values from
// different rings throw RingError.
struct RingCtx {
    std::vector<std::string> names; // distinct, size >= 1
    MonomialOrder order = MonomialOrder::grevlex;

    int nvars() const { return static_cast<int>(names.size()); }
    std::optional<int> index_of(const std::string& name) const;

    friend bool operator==(const RingCtx& a, const RingCtx& b) {
        return a.names == b.names && a.order == b.order;
    }
};

using RingPtr = std::shared_ptr<const RingCtx>;

// Validates: n >= 1, names distinct and identifier-shaped.
RingPtr make_ring(std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::grevlex);

// Returns the common ring of two operands; either may be null (ring of a
// zero value). Throws RingError when both are set and differ.
const RingPtr& merged_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector of a monomial; size equals the ring's variable count.
using Expo = std::vector<int>;

int expo_degree(const Expo& e);
bool expo_divides(const Expo& a, const Expo& b); // a | b
Expo expo_mul(const Expo& a, const Expo& b);
Expo expo_div(const Expo& a, const Expo& b); // requires b | a
Expo expo_lcm(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);

// Three-way comparison under the given order: negative when a < b,
// zero when equal, positive when a > b. Total, multiplicative, a well-order.
int cmp_mono(const Expo& a, const Expo& b, MonomialOrder order);

} // namespace tanalg

#endif
