#ifndef TANALG_DERIVATIONS_HPP
#define TANALG_DERIVATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tanalg/groebner.hpp"

namespace tanalg {

enum class ReducedFlag { asserted, verified, unknown };

std::string reduced_flag_name(ReducedFlag f);

// A variety germ at the origin, stored through its ideal. The empty germ is
// the unit ideal, the full germ the zero ideal. radical_exact records
// whether the stored ideal is known to equal its radical.
struct Variety {
    Ideal ideal;
    ReducedFlag reduced = ReducedFlag::asserted;
    bool radical_exact = false;

    bool is_empty() const { return ideal.is_unit(); }
    bool is_full() const { return ideal.is_zero(); }
};

// Classifies the ideal under the radical policy to settle the flags: when
// the policy certifies the ideal radical, reduced upgrades to verified;
// when it certifies it non-radical, reduced degrades to unknown.
Variety make_variety(Ideal ideal, ReducedFlag flag = ReducedFlag::asserted);

struct VarietyFamily {
    std::vector<Variety> members; // nonempty, one ring; containments allowed
};

VarietyFamily make_family(std::vector<Variety> members);

struct RadicalResult {
    Ideal radical; // equals the input when exact is false
    bool exact;
};

// Exact radical for the policy classes: principal ideals (squarefree part),
// monomial ideals (support radical), and ideals holding a squarefree
// univariate member for every variable (hence zero-dimensional radical).
// Everything else is returned unchanged with exact = false.
RadicalResult radical_policy(const Ideal& I);

// The tangent algebra: all fields D with D(I_X) inside I_X, computed from
// syzygies of the Jacobian columns against the ideal generators.
VfModule tangent_algebra(const Variety& X);

// True iff D maps every ideal generator back into the ideal (sufficient by
// the Leibniz rule).
bool is_tangent(const VField& D, const Variety& X);

// Intersection of the members' tangent algebras.
VfModule tangent_family(const VarietyFamily& F);

enum class AmbientKind { full, at_origin };

// full: the whole module of fields; at_origin: fields vanishing at 0,
// generated by x_i d/dx_j.
VfModule ambient_algebra(const RingPtr& ring, AmbientKind kind);

// The relative ambient: fields tangent to every member of F.
VfModule ambient_relative(const VarietyFamily& F);

// I(A) = {g : g * e_j in A for every slot j}.
Ideal integral_ideal(const VfModule& A);

// Variety over integral_ideal(A) with the radical policy applied.
Variety integral_variety(const VfModule& A);

// Zero set of I_X plus the c x c Jacobian minors, c = n - dim I_X.
// Proper input required. Warnings (unknown reducedness, the asserted
// equidimensionality) are appended when a sink is supplied.
Variety singular_locus(const Variety& X, std::vector<std::string>* warnings = nullptr);

bool is_smooth(const Variety& X);

struct SingChain {
    std::vector<Variety> links; // [X, Sing X, ...], last link nonempty
    int k_max = 0;
};

SingChain sing_chain(const Variety& X);

struct RecoveryReport {
    enum class Verdict { equal, containment_only, not_equal };
    Ideal integral;                    // I(D_X)
    Ideal radical;                     // after policy; = integral when inexact
    bool radical_exact = false;
    bool integral_in_ix = false;       // I(D_X) in I_X
    std::optional<bool> ix_in_radical; // nullopt: policy inapplicable, undecided
    Verdict verdict = Verdict::containment_only;
};

// Recovers X(D_X) and reports both containments against I_X.
RecoveryReport recovery_check(const Variety& X);

// module_equal(D_X, D_{X,Sing X}); requires singular X.
bool sing_stability_check(const Variety& X);

struct IrredundancyReport {
    std::vector<bool> needed; // deleting member i changes the intersection
    bool irredundant = false;
};

IrredundancyReport irredundancy_check(const VarietyFamily& F);

} // namespace tanalg

#endif
