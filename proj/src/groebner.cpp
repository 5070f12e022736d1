#include "tanalg/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "tanalg/errors.hpp"

namespace tanalg {

bool module_term_greater(const Expo& m1, int p1, const Expo& m2, int p2,
                         const ModuleOrder& mo) {
    int b1 = p1 < mo.elim_split ? 0 : 1;
    int b2 = p2 < mo.elim_split ? 0 : 1;
    if (b1 != b2) return b1 < b2;
    int c = cmp_mono(m1, m2, mo.mono);
    if (c != 0) return c > 0;
    return p1 < p2;
}

std::optional<ModuleTerm> leading_module_term(const VField& v, const ModuleOrder& mo) {
    std::optional<ModuleTerm> best;
    for (int pos = 0; pos < v.rank(); ++pos) {
        const Poly& p = v[pos];
        if (p.is_zero()) continue;
        const Term& lt = p.leading_term();
        if (!best || module_term_greater(lt.mono, pos, best->mono, best->pos, mo))
            best = ModuleTerm{lt.mono, pos, lt.coeff};
    }
    return best;
}

namespace {

VField monic_field(const VField& v, const ModuleOrder& mo) {
    auto lt = leading_module_term(v, mo);
    if (!lt || lt->coeff.is_one()) return v;
    return (Rational(1) / lt->coeff) * v;
}

VField mono_shift(const VField& v, const Expo& shift, const Rational& scale) {
    Poly m = Poly::monomial(v.ring(), shift, scale);
    return m * v;
}

struct Pair {
    int i, j;
    Expo lcm;
    int pos;
    int deg;
};

VField s_pair(const VField& a, const VField& b, const Pair& p,
              const ModuleOrder& mo) {
    auto la = leading_module_term(a, mo);
    auto lb = leading_module_term(b, mo);
    VField left = mono_shift(a, expo_div(p.lcm, la->mono), Rational(1) / la->coeff);
    VField right = mono_shift(b, expo_div(p.lcm, lb->mono), Rational(1) / lb->coeff);
    return left - right;
}

// kept elements whose leading terms are not divisible by another kept one
std::vector<VField> minimalize(std::vector<VField> basis, const ModuleOrder& mo) {
    std::vector<ModuleTerm> lts;
    lts.reserve(basis.size());
    for (const auto& b : basis) lts.push_back(*leading_module_term(b, mo));
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (lts[j].pos == lts[i].pos && expo_divides(lts[j].mono, lts[i].mono) &&
                !(lts[i].mono == lts[j].mono && i < j)) {
                keep[i] = false;
            }
        }
    std::vector<VField> out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) out.push_back(std::move(basis[i]));
    return out;
}

} // namespace

VField normal_form(const VField& v, const std::vector<VField>& basis, const ModuleOrder& mo) {
    if (basis.empty() || v.is_zero()) return v;
    std::vector<ModuleTerm> lts;
    lts.reserve(basis.size());
    for (const auto& b : basis) lts.push_back(*leading_module_term(b, mo));

    VField work = v;
    VField remainder = VField::zero(v.ring(), v.rank());
    while (!work.is_zero()) {
        ModuleTerm lt = *leading_module_term(work, mo);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (lts[k].pos != lt.pos || !expo_divides(lts[k].mono, lt.mono)) continue;
            work = work - mono_shift(basis[k], expo_div(lt.mono, lts[k].mono),
                                     lt.coeff / lts[k].coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            VField t = VField::monomial(v.ring(), v.rank(), lt.pos, lt.mono, lt.coeff);
            remainder = remainder + t;
            work = work - t;
        }
    }
    return remainder;
}

std::vector<VField> buchberger(const std::vector<VField>& gens, const ModuleOrder& mo,
                               const GroebnerOptions& opts) {
    std::vector<VField> basis;
    RingPtr ring;
    int rank = -1;
    for (const auto& g : gens) {
        ring = merged_ring(ring, g.ring());
        if (rank < 0) rank = g.rank();
        if (g.rank() != rank) throw RingError("buchberger: mixed ranks");
        if (!g.is_zero()) basis.push_back(monic_field(g, mo));
    }
    if (basis.empty()) return {};

    std::vector<ModuleTerm> lts;
    for (const auto& b : basis) lts.push_back(*leading_module_term(b, mo));

    std::vector<Pair> pending;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (lts[i].pos != lts[j].pos) continue;
            Expo l = expo_lcm(lts[i].mono, lts[j].mono);
            pending.push_back({i, j, l, lts[i].pos, expo_degree(l)});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    std::set<std::pair<int, int>> done;
    while (!pending.empty()) {
        // normal strategy: minimal lcm degree, then input order
        size_t pick = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[pick];
            if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                pick = k;
        }
        Pair p = pending[pick];
        pending.erase(pending.begin() + static_cast<long>(pick));
        done.insert({p.i, p.j});

        if (rank == 1 && expo_coprime(lts[p.i].mono, lts[p.j].mono)) continue;
        if (opts.chain_criterion) {
            bool skip = false;
            for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
                if (k == p.i || k == p.j || lts[k].pos != p.pos) continue;
                if (!expo_divides(lts[k].mono, p.lcm)) continue;
                auto key = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
                if (done.count(key(p.i, k)) && done.count(key(k, p.j))) skip = true;
            }
            if (skip) continue;
        }

        VField r = normal_form(s_pair(basis[p.i], basis[p.j], p, mo), basis, mo);
        if (r.is_zero()) continue;
        basis.push_back(monic_field(r, mo));
        lts.push_back(*leading_module_term(basis.back(), mo));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    basis = minimalize(std::move(basis), mo);
    // autoreduce: every element fully reduced against the others
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<VField> others;
        others.reserve(basis.size() - 1);
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        basis[i] = monic_field(normal_form(basis[i], others, mo), mo);
    }
    std::sort(basis.begin(), basis.end(), [&](const VField& a, const VField& b) {
        auto la = leading_module_term(a, mo), lb = leading_module_term(b, mo);
        return module_term_greater(la->mono, la->pos, lb->mono, lb->pos, mo);
    });
    return basis;
}

bool verify_groebner(const std::vector<VField>& basis, const ModuleOrder& mo) {
    std::vector<ModuleTerm> lts;
    for (const auto& b : basis) lts.push_back(*leading_module_term(b, mo));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (lts[i].pos != lts[j].pos) continue;
            Pair p{static_cast<int>(i), static_cast<int>(j),
                   expo_lcm(lts[i].mono, lts[j].mono), lts[i].pos, 0};
            if (!normal_form(s_pair(basis[i], basis[j], p, mo), basis, mo).is_zero())
                return false;
        }
    return true;
}

// ---- VfModule ----

struct VfModule::Impl {
    RingPtr ring;
    int rank = 0;
    std::vector<VField> gens;
    mutable std::once_flag once;
    mutable std::vector<VField> gb;

    const std::vector<VField>& basis() const {
        std::call_once(once, [&] { gb = buchberger(gens, ModuleOrder{ring->order, 0}); });
        return gb;
    }
};

VfModule::VfModule(RingPtr ring, int rank, std::vector<VField> gens)
    : impl_(std::make_shared<Impl>()) {
    if (!ring) throw RingError("module needs a ring");
    if (rank < 1) throw RingError("module rank must be positive");
    for (const auto& g : gens) {
        merged_ring(ring, g.ring());
        if (g.rank() != rank) throw RingError("module generator of wrong rank");
    }
    impl_->ring = std::move(ring);
    impl_->rank = rank;
    impl_->gens = std::move(gens);
}

const RingPtr& VfModule::ring() const { return impl_->ring; }
int VfModule::rank() const { return impl_->rank; }
const std::vector<VField>& VfModule::gens() const { return impl_->gens; }
const std::vector<VField>& VfModule::basis() const { return impl_->basis(); }
ModuleOrder VfModule::order() const { return ModuleOrder{impl_->ring->order, 0}; }

bool VfModule::contains(const VField& v) const {
    merged_ring(ring(), v.ring());
    if (v.rank() != rank()) throw RingError("membership: rank mismatch");
    return reduce(v).is_zero();
}

VField VfModule::reduce(const VField& v) const {
    return normal_form(v, basis(), order());
}

// ---- Ideal ----

struct Ideal::Impl {
    RingPtr ring;
    std::vector<Poly> gens;
    mutable std::once_flag once;
    mutable std::vector<Poly> gb;

    const std::vector<Poly>& basis() const {
        std::call_once(once, [&] {
            std::vector<VField> wrapped;
            wrapped.reserve(gens.size());
            for (const auto& g : gens) wrapped.push_back(VField(ring, {g}));
            auto mgb = buchberger(wrapped, ModuleOrder{ring->order, 0});
            gb.reserve(mgb.size());
            for (const auto& v : mgb) gb.push_back(v[0]);
        });
        return gb;
    }
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : impl_(std::make_shared<Impl>()) {
    if (!ring) throw RingError("ideal needs a ring");
    for (const auto& g : gens) merged_ring(ring, g.ring());
    impl_->ring = std::move(ring);
    impl_->gens = std::move(gens);
}

const RingPtr& Ideal::ring() const { return impl_->ring; }
const std::vector<Poly>& Ideal::gens() const { return impl_->gens; }
const std::vector<Poly>& Ideal::basis() const { return impl_->basis(); }

bool Ideal::contains(const Poly& f) const {
    merged_ring(ring(), f.ring());
    return reduce(f).is_zero();
}

Poly Ideal::reduce(const Poly& f) const {
    std::vector<VField> wrapped;
    const auto& gb = basis();
    wrapped.reserve(gb.size());
    for (const auto& g : gb) wrapped.push_back(VField(ring(), {g}));
    return normal_form(VField(ring(), {f}), wrapped, ModuleOrder{ring()->order, 0})[0];
}

bool Ideal::is_unit() const {
    const auto& gb = basis();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

// ---- derived operations ----

VfModule syzygy_module(const std::vector<VField>& columns) {
    if (columns.empty()) throw DomainError("syzygy of an empty column list");
    RingPtr ring;
    int rank = columns[0].rank();
    for (const auto& c : columns) {
        ring = merged_ring(ring, c.ring());
        if (c.rank() != rank) throw RingError("syzygy: mixed column ranks");
    }
    if (!ring) throw RingError("syzygy needs ringed columns");

    int k = static_cast<int>(columns.size());
    std::vector<VField> embedded;
    embedded.reserve(columns.size());
    for (int i = 0; i < k; ++i) {
        std::vector<Poly> coords = columns[static_cast<size_t>(i)].coords();
        coords.resize(static_cast<size_t>(rank + k), Poly(ring));
        coords[static_cast<size_t>(rank + i)] = Poly::constant(ring, 1);
        embedded.push_back(VField(ring, std::move(coords)));
    }
    auto gb = buchberger(embedded, ModuleOrder{ring->order, rank});
    std::vector<VField> syz;
    for (const auto& g : gb) {
        bool upper_zero = true;
        for (int i = 0; i < rank && upper_zero; ++i) upper_zero = g[i].is_zero();
        if (!upper_zero) continue;
        std::vector<Poly> low(g.coords().begin() + rank, g.coords().end());
        syz.push_back(VField(ring, std::move(low)));
    }
    return VfModule(ring, k, std::move(syz));
}

VfModule module_intersect(const VfModule& A, const VfModule& B) {
    const RingPtr& ring = merged_ring(A.ring(), B.ring());
    if (A.rank() != B.rank()) throw RingError("intersect: rank mismatch");
    const auto& ga = A.basis();
    const auto& gb = B.basis();
    if (ga.empty() || gb.empty()) return VfModule(ring, A.rank(), {});

    std::vector<VField> cols = ga;
    cols.insert(cols.end(), gb.begin(), gb.end());
    VfModule syz = syzygy_module(cols);

    std::vector<VField> gens;
    for (const auto& s : syz.gens()) {
        VField v = VField::zero(ring, A.rank());
        for (size_t i = 0; i < ga.size(); ++i)
            v = v + s[static_cast<int>(i)] * ga[i];
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return VfModule(ring, A.rank(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    const RingPtr& ring = merged_ring(I.ring(), J.ring());
    auto wrap = [&](const std::vector<Poly>& ps) {
        std::vector<VField> out;
        out.reserve(ps.size());
        for (const auto& p : ps) out.push_back(VField(ring, {p}));
        return out;
    };
    VfModule A(ring, 1, wrap(I.basis()));
    VfModule B(ring, 1, wrap(J.basis()));
    VfModule M = module_intersect(A, B);
    std::vector<Poly> gens;
    for (const auto& v : M.basis()) gens.push_back(v[0]);
    return Ideal(ring, std::move(gens));
}

Ideal quotient_by_unit_vector(const VfModule& A, int j) {
    if (j < 0 || j >= A.rank()) throw DomainError("quotient: slot index out of range");
    const auto& gb = A.basis();
    if (gb.empty()) return Ideal(A.ring(), {});
    std::vector<VField> cols;
    cols.reserve(gb.size() + 1);
    cols.push_back(VField::unit(A.ring(), A.rank(), j));
    cols.insert(cols.end(), gb.begin(), gb.end());
    VfModule syz = syzygy_module(cols);
    std::vector<Poly> gens;
    for (const auto& s : syz.gens())
        if (!s[0].is_zero()) gens.push_back(s[0]);
    return Ideal(A.ring(), std::move(gens));
}

bool module_equal(const VfModule& A, const VfModule& B) {
    merged_ring(A.ring(), B.ring());
    if (A.rank() != B.rank()) throw RingError("module_equal: rank mismatch");
    return A.basis() == B.basis();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    merged_ring(I.ring(), J.ring());
    return I.basis() == J.basis();
}

std::optional<int> krull_dimension(const Ideal& I) {
    const auto& gb = I.basis();
    int n = I.ring()->nvars();
    if (n > 24) throw DomainError("independent-set enumeration supports at most 24 variables");
    if (gb.empty()) return n;
    if (I.is_unit()) return std::nullopt;

    std::vector<unsigned> supports;
    supports.reserve(gb.size());
    for (const auto& g : gb) {
        unsigned mask = 0;
        const Expo& m = g.leading_term().mono;
        for (int v = 0; v < n; ++v)
            if (m[v] > 0) mask |= 1u << v;
        supports.push_back(mask);
    }
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (unsigned sup : supports)
            if ((sup & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace tanalg
