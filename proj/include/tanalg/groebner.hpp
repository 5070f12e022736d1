#ifndef TANALG_GROEBNER_HPP
#define TANALG_GROEBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "tanalg/vfield.hpp"

namespace tanalg {

// Term-over-position extension of the ring order: monomials compared first,
// ties broken by lower position. Positions below elim_split dominate all
// others, which turns the order into a position-elimination order for
// syzygy computations.
struct ModuleOrder {
    MonomialOrder mono = MonomialOrder::grevlex;
    int elim_split = 0;
};

bool module_term_greater(const Expo& m1, int p1, const Expo& m2, int p2,
                         const ModuleOrder& mo);

struct ModuleTerm {
    Expo mono;
    int pos;
    Rational coeff;
};

// Leading term of a nonzero element; nullopt for zero.
std::optional<ModuleTerm> leading_module_term(const VField& v, const ModuleOrder& mo);

struct GroebnerOptions {
    // Buchberger's chain criterion; the coprime criterion is always applied
    // in rank 1 (it does not carry over to modules).
    bool chain_criterion = false;
};

// Reduced Groebner basis of the submodule generated by gens: autoreduced,
// monic, sorted descending by leading term. Unique for a fixed order.
std::vector<VField> buchberger(const std::vector<VField>& gens, const ModuleOrder& mo,
                               const GroebnerOptions& opts = {});

// Remainder with no term divisible by any basis leading term. Idempotent;
// v - normal_form(v) lies in the module spanned by basis.
VField normal_form(const VField& v, const std::vector<VField>& basis, const ModuleOrder& mo);

// Post-hoc check that every S-pair of basis reduces to zero.
bool verify_groebner(const std::vector<VField>& basis, const ModuleOrder& mo);

// Finitely generated submodule of a free module, with a lazily computed and
// then frozen reduced Groebner basis. Copies share the cache; safe to query
// concurrently once constructed.
class VfModule {
public:
    VfModule() = default;
    VfModule(RingPtr ring, int rank, std::vector<VField> gens);

    const RingPtr& ring() const;
    int rank() const;
    const std::vector<VField>& gens() const;
    const std::vector<VField>& basis() const;
    ModuleOrder order() const;

    bool contains(const VField& v) const;
    VField reduce(const VField& v) const;
    bool is_zero() const { return basis().empty(); }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Ideal of the polynomial ring, handled as the rank-1 case of the module
// engine. Same caching discipline as VfModule.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const;
    const std::vector<Poly>& gens() const;
    const std::vector<Poly>& basis() const;

    bool contains(const Poly& f) const;
    Poly reduce(const Poly& f) const;
    bool is_zero() const { return basis().empty(); }
    bool is_unit() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Generators of {(c_1..c_k) : sum c_i * columns[i] = 0}, living in the free
// module of rank k = columns.size(). Throws DomainError on empty input.
VfModule syzygy_module(const std::vector<VField>& columns);

// Intersection via syzygies of the concatenated generator matrix.
VfModule module_intersect(const VfModule& A, const VfModule& B);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// The ideal {g : g * e_j lies in A}; 0-based slot index.
Ideal quotient_by_unit_vector(const VfModule& A, int j);

// True iff the reduced bases coincide termwise.
bool module_equal(const VfModule& A, const VfModule& B);
bool ideal_equal(const Ideal& I, const Ideal& J);

// Dimension of the leading-term ideal via maximal independent variable
// sets. nullopt is the "empty" sentinel for the unit ideal.
std::optional<int> krull_dimension(const Ideal& I);

} // namespace tanalg

#endif
