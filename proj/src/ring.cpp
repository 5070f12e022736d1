#include "tanalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tanalg/errors.hpp"

namespace tanalg {

std::string order_name(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::lex: return "lex";
        case MonomialOrder::grlex: return "grlex";
        case MonomialOrder::grevlex: return "grevlex";
    }
    return "?";
}

std::optional<MonomialOrder> order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "grlex") return MonomialOrder::grlex;
    if (name == "grevlex") return MonomialOrder::grevlex;
    return std::nullopt;
}

std::optional<int> RingCtx::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
}

static bool identifier_shaped(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
    if (names.empty()) throw DomainError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!identifier_shaped(n)) throw DomainError("bad variable name: '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name: '" + n + "'");
    }
    auto ctx = std::make_shared<RingCtx>();
    ctx->names = std::move(names);
    ctx->order = order;
    return ctx;
}

const RingPtr& merged_ring(const RingPtr& a, const RingPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || *a == *b) return a;
    throw RingError("operands from different rings");
}

int expo_degree(const Expo& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

bool expo_divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_mul(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo expo_div(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

int cmp_mono(const Expo& a, const Expo& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::lex: {
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::grlex: {
            int da = expo_degree(a), db = expo_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::grevlex: {
            int da = expo_degree(a), db = expo_degree(b);
            if (da != db) return da < db ? -1 : 1;
            // ties: last nonzero entry of a-b negative means a > b
            for (size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

} // namespace tanalg
