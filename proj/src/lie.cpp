#include "tanalg/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tanalg/errors.hpp"

namespace tanalg {

bool bracket_closure_check(const VfModule& A) {
    const auto& gens = A.basis();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!A.contains(bracket(gens[i], gens[j]))) return false;
    return true;
}

namespace {

// all exponent vectors of the given total degree, descending under the order
std::vector<Expo> monomials_of_degree(int n, int deg, MonomialOrder ord) {
    std::vector<Expo> out;
    Expo cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            cur[static_cast<size_t>(var)] = left;
            out.push_back(cur);
            cur[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[static_cast<size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(),
              [&](const Expo& a, const Expo& b) { return cmp_mono(a, b, ord) > 0; });
    return out;
}

std::vector<VField> multiples_grid(const std::vector<VField>& gens, const RingPtr& ring,
                                   int degree_bound) {
    std::vector<VField> out;
    MonomialOrder ord = ring->order;
    for (int deg = 0; deg <= degree_bound; ++deg) {
        if (deg == 0) {
            out.insert(out.end(), gens.begin(), gens.end());
            continue;
        }
        for (const auto& m : monomials_of_degree(ring->nvars(), deg, ord)) {
            Poly mono = Poly::monomial(ring, m, 1);
            for (const auto& g : gens) out.push_back(mono * g);
        }
    }
    return out;
}

// stable canonical key for visited-set pruning
std::string field_key(const VField& v) {
    std::ostringstream os;
    for (int i = 0; i < v.rank(); ++i) {
        os << '|';
        for (const auto& t : v[i].terms()) {
            os << t.coeff.str() << ':';
            for (int e : t.mono) os << e << ',';
            os << ';';
        }
    }
    return os.str();
}

} // namespace

std::vector<VField> make_probe_grid(const VfModule& ambient, int degree_bound) {
    return multiples_grid(ambient.basis(), ambient.ring(), degree_bound);
}

Certificate ad_probe(const VField& a, const VfModule& A, const VfModule& ambient,
                     int degree_bound, int depth) {
    if (a.is_zero()) throw DomainError("ad probe witness must be nonzero");
    if (depth < 1 || depth > 2) throw DomainError("ad probe depth must be 1 or 2");
    if (!A.contains(a)) throw DomainError("ad probe witness must lie in the subalgebra");

    Certificate cert;
    cert.witness = a;
    cert.degree_bound = degree_bound;
    cert.depth = depth;

    std::vector<VField> probes = make_probe_grid(ambient, degree_bound);
    cert.probe_count = static_cast<int>(probes.size());

    std::vector<VField> level1;
    level1.reserve(probes.size());
    for (size_t i = 0; i < probes.size(); ++i) {
        VField b = bracket(a, probes[i]);
        if (!A.contains(b)) {
            cert.verdict = Certificate::Verdict::fail;
            cert.counterexample = BracketCounterexample{a, {static_cast<int>(i)}, b};
            cert.detail = "depth-1 bracket escapes the subalgebra";
            return cert;
        }
        level1.push_back(std::move(b));
    }
    if (depth == 2) {
        for (size_t i = 0; i < probes.size(); ++i)
            for (size_t j = 0; j < probes.size(); ++j) {
                VField b = bracket(level1[i], probes[j]);
                if (!A.contains(b)) {
                    cert.verdict = Certificate::Verdict::fail;
                    cert.counterexample =
                        BracketCounterexample{a, {static_cast<int>(i), static_cast<int>(j)}, b};
                    cert.detail = "depth-2 bracket escapes the subalgebra";
                    return cert;
                }
            }
    }
    cert.verdict = Certificate::Verdict::pass;
    cert.detail = "all probe brackets stay in the subalgebra";
    return cert;
}

namespace {

// breadth-first escape search along depth-1 probes, duplicate states pruned
std::optional<std::vector<int>> escape_search(const VField& start, const VfModule& A,
                                              const std::vector<VField>& probes, int max_depth) {
    struct Node {
        VField field;
        std::vector<int> path;
    };
    std::vector<Node> frontier{{start, {}}};
    std::set<std::string> seen{field_key(start)};
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (size_t p = 0; p < probes.size(); ++p) {
                VField b = bracket(node.field, probes[p]);
                if (b.is_zero()) continue;
                std::vector<int> path = node.path;
                path.push_back(static_cast<int>(p));
                if (!A.contains(b)) return path;
                if (seen.insert(field_key(b)).second)
                    next.push_back({std::move(b), std::move(path)});
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

} // namespace

Certificate balanced_certificate(const VfModule& A, const VfModule& ambient,
                                 int degree_bound, int k_ideal) {
    if (k_ideal <= 0) k_ideal = degree_bound + 1;
    for (const auto& g : A.basis())
        if (!ambient.contains(g))
            throw DomainError("balanced certificate needs A contained in the ambient algebra");

    Certificate cert;
    cert.degree_bound = degree_bound;
    cert.depth = 2;
    cert.k_ideal = k_ideal;
    cert.probe_count = static_cast<int>(make_probe_grid(ambient, degree_bound).size());

    if (module_equal(A, ambient)) {
        cert.verdict = Certificate::Verdict::fail;
        cert.detail = "A is an ideal of itself: every element's brackets stay inside";
        if (!A.basis().empty())
            cert.ideal_evidence.push_back({A.basis().front(), false, {}});
        return cert;
    }

    // (i) witness search over generator multiples, grid order
    std::vector<VField> candidates = multiples_grid(A.basis(), A.ring(), degree_bound);
    for (const auto& cand : candidates) {
        if (cand.is_zero()) continue;
        Certificate probe = ad_probe(cand, A, ambient, degree_bound, 2);
        if (probe.verdict == Certificate::Verdict::pass) {
            cert.witness = cand;
            break;
        }
    }

    // (ii) bounded ideal-freeness: every low-degree element of A must escape
    std::vector<VField> linear_probes = make_probe_grid(ambient, 1);
    bool all_refuted = true;
    for (const auto& cand : candidates) {
        if (cand.is_zero() || cand.total_degree() > degree_bound) continue;
        IdealCandidateRecord rec;
        rec.candidate = cand;
        auto path = escape_search(cand, A, linear_probes, k_ideal);
        if (path) {
            rec.refuted = true;
            rec.escape_path = std::move(*path);
        } else {
            all_refuted = false;
        }
        cert.ideal_evidence.push_back(std::move(rec));
    }

    if (cert.witness && all_refuted) {
        cert.verdict = Certificate::Verdict::pass;
        cert.detail = "witness passes depth-2 probes; every bounded candidate escapes";
    } else {
        cert.verdict = Certificate::Verdict::inconclusive;
        std::string why;
        if (!cert.witness) why = "no witness within the degree bound";
        if (!all_refuted) {
            if (!why.empty()) why += "; ";
            why += "candidates unrefuted within the bracket depth bound";
        }
        cert.detail = why;
    }
    return cert;
}

bool replay_certificate(const Certificate& cert, const VfModule& A, const VfModule& ambient) {
    std::vector<VField> probes = make_probe_grid(ambient, cert.degree_bound);
    if (static_cast<int>(probes.size()) != cert.probe_count) return false;

    if (cert.counterexample) {
        VField cur = cert.counterexample->start;
        for (int idx : cert.counterexample->probe_path) {
            if (idx < 0 || idx >= static_cast<int>(probes.size())) return false;
            cur = bracket(cur, probes[static_cast<size_t>(idx)]);
        }
        if (cur != cert.counterexample->escaped) return false;
        return !A.contains(cur) && cert.verdict == Certificate::Verdict::fail;
    }

    if (cert.verdict == Certificate::Verdict::pass && cert.witness) {
        Certificate again = ad_probe(*cert.witness, A, ambient, cert.degree_bound, cert.depth);
        if (again.verdict != Certificate::Verdict::pass) return false;
    }

    std::vector<VField> linear_probes = make_probe_grid(ambient, 1);
    for (const auto& rec : cert.ideal_evidence) {
        if (!rec.refuted) {
            if (cert.verdict == Certificate::Verdict::pass) return false;
            continue;
        }
        VField cur = rec.candidate;
        bool escaped = false;
        for (size_t s = 0; s < rec.escape_path.size(); ++s) {
            int idx = rec.escape_path[s];
            if (idx < 0 || idx >= static_cast<int>(linear_probes.size())) return false;
            cur = bracket(cur, linear_probes[static_cast<size_t>(idx)]);
            bool inside = A.contains(cur);
            if (s + 1 == rec.escape_path.size())
                escaped = !inside;
            else if (!inside)
                return false; // escape must happen exactly at the recorded step
        }
        if (!escaped) return false;
    }
    return true;
}

VisibilityReport visibility_diagnostic(const VfModule& A, AmbientKind kind) {
    VisibilityReport rep;
    rep.integral = integral_ideal(A);
    RadicalResult rad = radical_policy(rep.integral);
    rep.xa.ideal = rad.exact ? rad.radical : rep.integral;
    rep.xa.radical_exact = rad.exact;
    rep.xa.reduced = rad.exact ? ReducedFlag::verified : ReducedFlag::unknown;

    rep.a_equals_tangent_of_xa = module_equal(A, tangent_algebra(rep.xa));
    rep.xa_proper = !rep.xa.is_empty() && !rep.xa.is_full();

    const RingPtr& ring = A.ring();
    if (rep.xa_proper) {
        Variety sing = singular_locus(rep.xa);
        rep.xa_smooth = sing.is_empty();
        if (!sing.is_empty()) {
            std::vector<Poly> vars;
            for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
            rep.isolated_singularity = ideal_equal(sing.ideal, Ideal(ring, std::move(vars)));
        }
    }

    VfModule amb = ambient_algebra(ring, kind);
    rep.contained_in_ambient = true;
    for (const auto& g : A.basis())
        if (!amb.contains(g)) {
            rep.contained_in_ambient = false;
            break;
        }

    if (!rep.a_equals_tangent_of_xa) {
        rep.verdict = "not-of-tangent-algebra-shape";
    } else if (kind == AmbientKind::full && rep.xa_proper && rep.xa_smooth.value_or(false)) {
        rep.verdict = "maximal-visible-shape";
    } else if (kind == AmbientKind::at_origin && rep.xa_proper && rep.contained_in_ambient &&
               rep.isolated_singularity.value_or(false)) {
        rep.verdict = "maximal-visible-shape-at-origin";
    } else {
        rep.verdict = "tangent-algebra-shape-only";
    }
    return rep;
}

} // namespace tanalg
