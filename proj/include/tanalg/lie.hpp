#ifndef TANALG_LIE_HPP
#define TANALG_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tanalg/derivations.hpp"

namespace tanalg {

// True iff every pairwise bracket of basis generators stays in the module;
// sufficient for closure of the whole generated module.
bool bracket_closure_check(const VfModule& A);

// Deterministic probe grid: x^alpha * g over the ambient basis generators,
// |alpha| <= degree_bound; degree ascending, monomials descending within a
// degree, generators in basis order.
std::vector<VField> make_probe_grid(const VfModule& ambient, int degree_bound);

struct BracketCounterexample {
    VField start;
    std::vector<int> probe_path; // indices into the probe grid
    VField escaped;              // iterated bracket that leaves A
};

struct IdealCandidateRecord {
    VField candidate;
    bool refuted = false;
    std::vector<int> escape_path; // indices into the depth-1 probe subset
};

// Bounded evidence for the balanced conditions. A pass is replayable; a
// fail carries one explicit escaping bracket. Neither is a proof: the
// conditions quantify over an infinite-dimensional algebra and the record
// keeps the bounds (d, depth, k_ideal, probe count) next to the verdict.
struct Certificate {
    enum class Verdict { pass, fail, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::optional<VField> witness;
    int degree_bound = 0;
    int depth = 0;   // witness bracket depth, at most 2
    int k_ideal = 0; // depth bound of the ideal-freeness search (0 = not run)
    int probe_count = 0;
    std::string detail;
    std::optional<BracketCounterexample> counterexample;
    std::vector<IdealCandidateRecord> ideal_evidence;
};

// Checks [a, probes] in A and, at depth 2, [[a, probes], probes] in A over
// the full grid. a must be a nonzero member of A; depth is 1 or 2.
Certificate ad_probe(const VField& a, const VfModule& A, const VfModule& ambient,
                     int degree_bound, int depth);

// Witness search over A-generator multiples combined with bounded
// ideal-freeness evidence: every low-degree element of A must escape via
// some iterated bracket within k_ideal steps. Pass requires both parts;
// an unrefuted candidate or a missing witness yields inconclusive, never a
// silent pass. k_ideal <= 0 selects the default degree_bound + 1.
Certificate balanced_certificate(const VfModule& A, const VfModule& ambient,
                                 int degree_bound, int k_ideal = 0);

// Re-runs every probe bracket membership recorded in the certificate.
bool replay_certificate(const Certificate& cert, const VfModule& A, const VfModule& ambient);

struct VisibilityReport {
    Ideal integral;  // I(A) before the radical policy
    Variety xa;      // X(A)
    bool a_equals_tangent_of_xa = false;
    bool xa_proper = false;                    // nonempty and not the full germ
    std::optional<bool> xa_smooth;             // set when proper
    std::optional<bool> isolated_singularity;  // Sing X(A) = {0}, set when singular
    bool contained_in_ambient = false;
    std::string verdict;
};

// The integral-variety route: compute X(A), compare A with its tangent
// algebra, and report the shape relative to the chosen ambient.
VisibilityReport visibility_diagnostic(const VfModule& A, AmbientKind kind);

} // namespace tanalg

#endif
