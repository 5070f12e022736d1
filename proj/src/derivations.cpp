#include "tanalg/derivations.hpp"

#include <algorithm>

#include "tanalg/errors.hpp"

namespace tanalg {

std::string reduced_flag_name(ReducedFlag f) {
    switch (f) {
        case ReducedFlag::asserted: return "asserted";
        case ReducedFlag::verified: return "verified";
        case ReducedFlag::unknown: return "unknown";
    }
    return "?";
}

namespace {

bool is_monomial_ideal(const std::vector<Poly>& gb) {
    return std::all_of(gb.begin(), gb.end(),
                       [](const Poly& g) { return g.terms().size() == 1; });
}

Poly support_radical_of_monomial(const Poly& g) {
    Expo e = g.leading_term().mono;
    for (auto& k : e) k = k > 0 ? 1 : 0;
    return Poly::monomial(g.ring(), std::move(e), 1);
}

// univariate in x_v and squarefree
bool squarefree_univariate_in(const Poly& g, int v) {
    for (int w = 0; w < g.ring()->nvars(); ++w)
        if (w != v && g.degree_in(w) > 0) return false;
    if (g.degree_in(v) == 0) return false;
    return poly_gcd(g, partial(g, v)).is_constant();
}

} // namespace

RadicalResult radical_policy(const Ideal& I) {
    const auto& gb = I.basis();
    if (gb.empty() || I.is_unit()) return {I, true};

    if (gb.size() == 1) {
        Poly s = squarefree_part(gb[0]);
        return {Ideal(I.ring(), {s}), true};
    }
    if (is_monomial_ideal(gb)) {
        std::vector<Poly> gens;
        gens.reserve(gb.size());
        for (const auto& g : gb) gens.push_back(support_radical_of_monomial(g));
        return {Ideal(I.ring(), std::move(gens)), true};
    }
    // variablewise: a squarefree univariate member for every variable forces
    // the ideal to be radical (and zero-dimensional); it then equals its own
    // radical
    int n = I.ring()->nvars();
    bool all_vars = true;
    for (int v = 0; v < n && all_vars; ++v) {
        bool found = false;
        for (const auto& g : gb)
            if (squarefree_univariate_in(g, v)) {
                found = true;
                break;
            }
        all_vars = found;
    }
    if (all_vars) return {I, true};
    return {I, false};
}

Variety make_variety(Ideal ideal, ReducedFlag flag) {
    RadicalResult rad = radical_policy(ideal);
    Variety X;
    X.ideal = ideal;
    if (rad.exact) {
        bool is_radical = ideal_equal(ideal, rad.radical);
        X.radical_exact = is_radical;
        X.reduced = is_radical ? ReducedFlag::verified : ReducedFlag::unknown;
    } else {
        X.radical_exact = false;
        X.reduced = flag;
    }
    return X;
}

VarietyFamily make_family(std::vector<Variety> members) {
    if (members.empty()) throw DomainError("variety family must be nonempty");
    RingPtr ring;
    for (const auto& m : members) ring = merged_ring(ring, m.ideal.ring());
    return VarietyFamily{std::move(members)};
}

VfModule tangent_algebra(const Variety& X) {
    const RingPtr& ring = X.ideal.ring();
    if (!ring) throw RingError("tangent algebra needs a ringed ideal");
    int n = ring->nvars();
    if (X.ideal.gens().empty()) throw DomainError("tangent algebra of an ideal with no generators");

    // D(0) and D(1)-preservation are vacuous
    if (X.is_full() || X.is_empty()) return ambient_algebra(ring, AmbientKind::full);

    const auto& f = X.ideal.basis();
    int m = static_cast<int>(f.size());

    // columns of the system  sum_j a_j df_i/dx_j = sum_k b_ik f_k
    std::vector<VField> cols;
    cols.reserve(static_cast<size_t>(n + m * m));
    for (int j = 0; j < n; ++j) {
        std::vector<Poly> col;
        col.reserve(f.size());
        for (int i = 0; i < m; ++i) col.push_back(partial(f[static_cast<size_t>(i)], j));
        cols.push_back(VField(ring, std::move(col)));
    }
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            VField e = VField::zero(ring, m);
            std::vector<Poly> coords = e.coords();
            coords[static_cast<size_t>(i)] = f[static_cast<size_t>(k)];
            cols.push_back(VField(ring, std::move(coords)));
        }

    VfModule syz = syzygy_module(cols);
    std::vector<VField> gens;
    for (const auto& s : syz.gens()) {
        std::vector<Poly> a(s.coords().begin(), s.coords().begin() + n);
        VField v(ring, std::move(a));
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return VfModule(ring, n, std::move(gens));
}

bool is_tangent(const VField& D, const Variety& X) {
    merged_ring(D.ring(), X.ideal.ring());
    for (const auto& g : X.ideal.basis())
        if (!X.ideal.contains(apply_field(D, g))) return false;
    return true;
}

VfModule tangent_family(const VarietyFamily& F) {
    if (F.members.empty()) throw DomainError("tangent algebra of an empty family");
    VfModule acc = tangent_algebra(F.members[0]);
    for (size_t i = 1; i < F.members.size(); ++i)
        acc = module_intersect(acc, tangent_algebra(F.members[i]));
    return acc;
}

VfModule ambient_algebra(const RingPtr& ring, AmbientKind kind) {
    if (!ring) throw RingError("ambient algebra needs a ring");
    int n = ring->nvars();
    std::vector<VField> gens;
    if (kind == AmbientKind::full) {
        for (int j = 0; j < n; ++j) gens.push_back(VField::unit(ring, n, j));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Expo e(static_cast<size_t>(n), 0);
                e[static_cast<size_t>(i)] = 1;
                gens.push_back(VField::monomial(ring, n, j, std::move(e), 1));
            }
    }
    return VfModule(ring, n, std::move(gens));
}

VfModule ambient_relative(const VarietyFamily& F) {
    return tangent_family(F);
}

Ideal integral_ideal(const VfModule& A) {
    const RingPtr& ring = A.ring();
    if (A.rank() != ring->nvars())
        throw RingError("integral ideal needs a module of rank n");
    Ideal acc = quotient_by_unit_vector(A, 0);
    for (int j = 1; j < A.rank(); ++j) {
        if (acc.is_zero()) break;
        acc = ideal_intersect(acc, quotient_by_unit_vector(A, j));
    }
    return acc;
}

Variety integral_variety(const VfModule& A) {
    Ideal I = integral_ideal(A);
    RadicalResult rad = radical_policy(I);
    Variety X;
    X.ideal = rad.exact ? rad.radical : I;
    X.radical_exact = rad.exact;
    X.reduced = rad.exact ? ReducedFlag::verified : ReducedFlag::unknown;
    return X;
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<int> cols,
              size_t row, const RingPtr& ring) {
    if (cols.size() == 1) return m[row][static_cast<size_t>(cols[0])];
    Poly acc(ring);
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(c));
        Poly minor = poly_det(m, std::move(rest), row + 1, ring);
        Poly term = m[row][static_cast<size_t>(cols[c])] * minor;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

Variety singular_locus(const Variety& X, std::vector<std::string>* warnings) {
    if (X.is_empty() || X.is_full())
        throw DomainError("singular locus needs a germ different from empty and full");
    if (warnings) {
        if (X.reduced == ReducedFlag::unknown)
            warnings->push_back("reducedness unknown: Jacobian criterion assumes a reduced ideal");
        warnings->push_back("equidimensionality is user-asserted; mixed dimensions would skew the minor size");
    }
    const RingPtr& ring = X.ideal.ring();
    int n = ring->nvars();
    auto dim = krull_dimension(X.ideal);
    int c = n - *dim; // proper nonzero ideal: 0 <= dim <= n-1

    const auto& f = X.ideal.basis();
    int m = static_cast<int>(f.size());
    std::vector<std::vector<Poly>> jac(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) jac[static_cast<size_t>(i)].push_back(partial(f[static_cast<size_t>(i)], j));

    std::vector<Poly> gens = f;
    std::vector<std::vector<int>> row_sets, col_sets;
    subsets_of_size(m, c, row_sets);
    subsets_of_size(n, c, col_sets);
    for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) {
            std::vector<std::vector<Poly>> sub;
            sub.reserve(rows.size());
            for (int r : rows) sub.push_back(jac[static_cast<size_t>(r)]);
            Poly d = poly_det(sub, cols, 0, ring);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }

    Ideal sing(ring, std::move(gens));
    RadicalResult rad = radical_policy(sing);
    Variety S;
    S.ideal = rad.exact ? rad.radical : sing;
    S.radical_exact = rad.exact;
    S.reduced = rad.exact ? ReducedFlag::verified : ReducedFlag::unknown;
    return S;
}

bool is_smooth(const Variety& X) {
    return singular_locus(X).is_empty();
}

SingChain sing_chain(const Variety& X) {
    if (X.is_empty() || X.is_full())
        throw DomainError("singular chain needs a germ different from empty and full");
    SingChain chain;
    chain.links.push_back(X);
    int n = X.ideal.ring()->nvars();
    for (;;) {
        Variety S = singular_locus(chain.links.back());
        if (S.is_empty()) break;
        if (ideal_equal(S.ideal, chain.links.back().ideal))
            throw DomainError("singular locus did not shrink; input likely non-reduced");
        chain.links.push_back(std::move(S));
        if (static_cast<int>(chain.links.size()) > n + 1)
            throw DomainError("singular chain exceeded the ambient dimension bound");
    }
    chain.k_max = static_cast<int>(chain.links.size()) - 1;
    return chain;
}

RecoveryReport recovery_check(const Variety& X) {
    if (X.is_empty() || X.is_full())
        throw DomainError("recovery check needs a germ different from empty and full");
    RecoveryReport rep;
    VfModule A = tangent_algebra(X);
    rep.integral = integral_ideal(A);

    rep.integral_in_ix = true;
    for (const auto& g : rep.integral.basis())
        if (!X.ideal.contains(g)) {
            rep.integral_in_ix = false;
            break;
        }

    RadicalResult rad = radical_policy(rep.integral);
    rep.radical = rad.radical;
    rep.radical_exact = rad.exact;

    // direct containment settles the question without any radical
    bool direct = true;
    for (const auto& g : X.ideal.basis())
        if (!rep.integral.contains(g)) {
            direct = false;
            break;
        }
    if (direct) {
        rep.ix_in_radical = true;
    } else if (rad.exact) {
        bool in_rad = true;
        for (const auto& g : X.ideal.basis())
            if (!rep.radical.contains(g)) {
                in_rad = false;
                break;
            }
        rep.ix_in_radical = in_rad;
    } else {
        rep.ix_in_radical = std::nullopt;
    }

    if (rep.integral_in_ix && rep.ix_in_radical.value_or(false))
        rep.verdict = RecoveryReport::Verdict::equal;
    else if (!rep.ix_in_radical.has_value())
        rep.verdict = RecoveryReport::Verdict::containment_only;
    else
        rep.verdict = RecoveryReport::Verdict::not_equal;
    return rep;
}

bool sing_stability_check(const Variety& X) {
    Variety S = singular_locus(X);
    if (S.is_empty()) throw DomainError("sing stability needs a singular germ");
    VfModule DX = tangent_algebra(X);
    VfModule DXS = module_intersect(DX, tangent_algebra(S));
    return module_equal(DX, DXS);
}

IrredundancyReport irredundancy_check(const VarietyFamily& F) {
    if (F.members.empty()) throw DomainError("irredundancy of an empty family");
    const RingPtr& ring = F.members[0].ideal.ring();
    VfModule full = tangent_family(F);
    IrredundancyReport rep;
    rep.needed.reserve(F.members.size());
    for (size_t i = 0; i < F.members.size(); ++i) {
        VarietyFamily rest;
        for (size_t j = 0; j < F.members.size(); ++j)
            if (j != i) rest.members.push_back(F.members[j]);
        VfModule without = rest.members.empty() ? ambient_algebra(ring, AmbientKind::full)
                                                : tangent_family(rest);
        rep.needed.push_back(!module_equal(without, full));
    }
    rep.irredundant = std::all_of(rep.needed.begin(), rep.needed.end(), [](bool b) { return b; });
    return rep;
}

} // namespace tanalg
