#ifndef TANALG_AUTOMORPHISM_HPP
#define TANALG_AUTOMORPHISM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanalg/derivations.hpp"

namespace tanalg {

enum class AutoClass { linear, elementary, composite };

std::string auto_class_name(AutoClass c);

// Automorphism germ of (C^n, 0), stored through its pullback images
// phi*(x_i). Invariants: zero constant terms, invertible linear part, and
// the stored inverse images compose with the images to the exact identity.
class AutoMap {
public:
    // Classifies and inverts: linear maps by exact matrix inversion,
    // elementary maps x_k -> x_k + p (p free of x_k, all other coordinates
    // fixed) by sign flip. Throws DomainError for anything else.
    static AutoMap from_images(RingPtr ring, std::vector<Poly> images);

    // Accepts any polynomial automorphism with a supplied inverse; both
    // compositions are verified to be the identity.
    static AutoMap with_inverse(RingPtr ring, std::vector<Poly> images,
                                std::vector<Poly> inverse_images);

    static AutoMap identity(RingPtr ring);

    // Pullback composition: compose(a, b).pullback(f) = b*(a*(f)), i.e. the
    // point map a . b.
    static AutoMap compose(const AutoMap& a, const AutoMap& b);

    AutoMap inverse() const;

    const RingPtr& ring() const { return ring_; }
    AutoClass cls() const { return cls_; }
    const std::vector<Poly>& images() const { return images_; }
    const std::vector<Poly>& inverse_images() const { return inverse_images_; }

    Poly pullback(const Poly& f) const;         // phi*(f) = f(images)
    Poly pullback_inverse(const Poly& f) const; // (phi*)^-1(f)

    // Rechecks both compositions against the identity coordinates.
    bool verify() const;

private:
    AutoMap(RingPtr ring, std::vector<Poly> images, std::vector<Poly> inverse_images,
            AutoClass cls);
    RingPtr ring_;
    std::vector<Poly> images_;
    std::vector<Poly> inverse_images_;
    AutoClass cls_;
};

// Phi(D) = phi* . D . (phi*)^-1, coordinatewise phi*(D((phi*)^-1(x_j))).
VField conjugate_field(const AutoMap& phi, const VField& D);

// Verifies phi carries X onto Y at the ideal level, then decides
// Phi(D_Y) = D_X. Throws DomainError naming the failing generator when the
// ideal correspondence does not hold.
bool conjugation_check(const AutoMap& phi, const Variety& X, const Variety& Y);

// lambda_f(D) = Phi(f * Phi^-1(D)); equals phi*(f) * D for induced Phi.
VField lambda_apply(const Poly& f, const AutoMap& phi, const VField& D);

struct ExtractResult {
    std::optional<Poly> factor;
    std::string failure; // nonempty exactly when extraction failed
    bool ok() const { return factor.has_value(); }
};

// Common factor of a table of (probe, image) rows: exact coordinatewise
// division, consistent across coordinates and across rows. A failure
// signals a table not of the induced form phi*(f) * D.
ExtractResult extract_common_factor(const std::vector<std::pair<VField, VField>>& table);

// Runs lambda_apply over the probes and extracts phi*(f). At least two
// nonzero probes are required.
ExtractResult lambda_factor_extract(const AutoMap& phi, const Poly& f,
                                    const std::vector<VField>& probes);

} // namespace tanalg

#endif
