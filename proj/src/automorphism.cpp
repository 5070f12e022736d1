#include "tanalg/automorphism.hpp"

#include "tanalg/errors.hpp"
#include "tanalg/expr_io.hpp"

namespace tanalg {

std::string auto_class_name(AutoClass c) {
    switch (c) {
        case AutoClass::linear: return "linear";
        case AutoClass::elementary: return "elementary";
        case AutoClass::composite: return "composite";
    }
    return "?";
}

namespace {

void check_images(const RingPtr& ring, const std::vector<Poly>& images) {
    int n = ring->nvars();
    if (static_cast<int>(images.size()) != n)
        throw DomainError("automorphism needs one image per variable");
    for (const auto& p : images) {
        merged_ring(ring, p.ring());
        if (!p.constant_coeff().is_zero())
            throw DomainError("automorphism image has a nonzero constant term");
    }
}

// coefficient of x_j in the linear part of p
Rational linear_coeff(const Poly& p, int j) {
    for (const auto& t : p.terms()) {
        if (expo_degree(t.mono) != 1) continue;
        if (t.mono[j] == 1) return t.coeff;
    }
    return 0;
}

// exact inverse of the n x n linear-part matrix, nullopt when singular
std::optional<std::vector<std::vector<Rational>>> invert_matrix(
    std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

AutoMap::AutoMap(RingPtr ring, std::vector<Poly> images, std::vector<Poly> inverse_images,
                 AutoClass cls)
    : ring_(std::move(ring)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)),
      cls_(cls) {}

AutoMap AutoMap::from_images(RingPtr ring, std::vector<Poly> images) {
    check_images(ring, images);
    int n = ring->nvars();

    std::vector<std::vector<Rational>> lin(static_cast<size_t>(n),
                                           std::vector<Rational>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lin[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            linear_coeff(images[static_cast<size_t>(i)], j);

    auto inv = invert_matrix(lin);
    if (!inv) throw DomainError("automorphism has a singular linear part");

    bool all_linear = true;
    for (const auto& p : images)
        if (p.total_degree() > 1) all_linear = false;

    if (all_linear) {
        std::vector<Poly> inverse;
        inverse.reserve(images.size());
        for (int i = 0; i < n; ++i) {
            Poly row(ring);
            for (int j = 0; j < n; ++j)
                row = row + (*inv)[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                Poly::variable(ring, j);
            inverse.push_back(std::move(row));
        }
        return AutoMap(ring, std::move(images), std::move(inverse), AutoClass::linear);
    }

    // elementary triangular: exactly one coordinate moved, x_k -> x_k + p
    // with p free of x_k
    int moved = -1;
    for (int i = 0; i < n; ++i)
        if (images[static_cast<size_t>(i)] != Poly::variable(ring, i)) {
            if (moved >= 0) { moved = -2; break; }
            moved = i;
        }
    if (moved >= 0) {
        Poly p = images[static_cast<size_t>(moved)] - Poly::variable(ring, moved);
        if (p.degree_in(moved) == 0) {
            std::vector<Poly> inverse;
            inverse.reserve(images.size());
            for (int i = 0; i < n; ++i)
                inverse.push_back(i == moved ? Poly::variable(ring, i) - p
                                             : Poly::variable(ring, i));
            return AutoMap(ring, std::move(images), std::move(inverse), AutoClass::elementary);
        }
    }
    throw DomainError(
        "cannot invert this automorphism class exactly; supply an inverse or build it "
        "by composing linear and elementary maps");
}

AutoMap AutoMap::with_inverse(RingPtr ring, std::vector<Poly> images,
                              std::vector<Poly> inverse_images) {
    check_images(ring, images);
    check_images(ring, inverse_images);
    AutoMap m(ring, std::move(images), std::move(inverse_images), AutoClass::composite);
    if (!m.verify())
        throw DomainError("supplied inverse does not compose to the identity");
    return m;
}

AutoMap AutoMap::identity(RingPtr ring) {
    std::vector<Poly> images;
    for (int i = 0; i < ring->nvars(); ++i) images.push_back(Poly::variable(ring, i));
    std::vector<Poly> inverse = images;
    return AutoMap(std::move(ring), std::move(images), std::move(inverse), AutoClass::linear);
}

AutoMap AutoMap::compose(const AutoMap& a, const AutoMap& b) {
    const RingPtr& ring = merged_ring(a.ring_, b.ring_);
    std::vector<Poly> images, inverse;
    images.reserve(a.images_.size());
    inverse.reserve(a.images_.size());
    for (int i = 0; i < ring->nvars(); ++i) {
        images.push_back(substitute(a.images_[static_cast<size_t>(i)], b.images_, ring));
        inverse.push_back(
            substitute(b.inverse_images_[static_cast<size_t>(i)], a.inverse_images_, ring));
    }
    return AutoMap(ring, std::move(images), std::move(inverse), AutoClass::composite);
}

AutoMap AutoMap::inverse() const {
    AutoClass cls = cls_ == AutoClass::composite ? AutoClass::composite : cls_;
    return AutoMap(ring_, inverse_images_, images_, cls);
}

Poly AutoMap::pullback(const Poly& f) const {
    return substitute(f, images_, ring_);
}

Poly AutoMap::pullback_inverse(const Poly& f) const {
    return substitute(f, inverse_images_, ring_);
}

bool AutoMap::verify() const {
    for (int i = 0; i < ring_->nvars(); ++i) {
        Poly xi = Poly::variable(ring_, i);
        if (substitute(images_[static_cast<size_t>(i)], inverse_images_, ring_) != xi) return false;
        if (substitute(inverse_images_[static_cast<size_t>(i)], images_, ring_) != xi) return false;
    }
    return true;
}

VField conjugate_field(const AutoMap& phi, const VField& D) {
    const RingPtr& ring = merged_ring(phi.ring(), D.ring());
    if (D.rank() != ring->nvars()) throw RingError("conjugate_field: rank mismatch");
    if (!phi.verify()) throw DomainError("automorphism failed inverse verification");
    std::vector<Poly> coords;
    coords.reserve(phi.inverse_images().size());
    for (int j = 0; j < ring->nvars(); ++j)
        coords.push_back(phi.pullback(apply_field(D, phi.inverse_images()[static_cast<size_t>(j)])));
    return VField(ring, std::move(coords));
}

bool conjugation_check(const AutoMap& phi, const Variety& X, const Variety& Y) {
    const RingPtr& ring = merged_ring(phi.ring(), merged_ring(X.ideal.ring(), Y.ideal.ring()));
    for (const auto& g : Y.ideal.basis())
        if (!X.ideal.contains(phi.pullback(g)))
            throw DomainError("phi does not map X onto Y: phi*(" + render(g) +
                              ") escapes I_X");
    for (const auto& g : X.ideal.basis())
        if (!Y.ideal.contains(phi.pullback_inverse(g)))
            throw DomainError("phi does not map X onto Y: (phi*)^-1(" + render(g) +
                              ") escapes I_Y");

    VfModule DY = tangent_algebra(Y);
    std::vector<VField> images;
    images.reserve(DY.basis().size());
    for (const auto& g : DY.basis()) images.push_back(conjugate_field(phi, g));
    VfModule conj(ring, ring->nvars(), std::move(images));
    return module_equal(conj, tangent_algebra(X));
}

VField lambda_apply(const Poly& f, const AutoMap& phi, const VField& D) {
    if (!phi.verify()) throw DomainError("automorphism failed inverse verification");
    VField pulled = conjugate_field(phi.inverse(), D);
    return conjugate_field(phi, f * pulled);
}

ExtractResult extract_common_factor(const std::vector<std::pair<VField, VField>>& table) {
    if (table.size() < 2) throw DomainError("factor extraction needs at least two probes");
    std::optional<Poly> common;
    for (size_t r = 0; r < table.size(); ++r) {
        const auto& [probe, image] = table[r];
        if (probe.is_zero()) throw DomainError("factor extraction probe must be nonzero");
        std::optional<Poly> factor;
        for (int j = 0; j < probe.rank(); ++j) {
            if (probe[j].is_zero()) {
                if (!image[j].is_zero())
                    return {std::nullopt,
                            "probe " + std::to_string(r) + ": image has a nonzero coordinate " +
                                std::to_string(j) + " where the probe vanishes"};
                continue;
            }
            auto q = exact_divide(image[j], probe[j]);
            if (!q)
                return {std::nullopt, "probe " + std::to_string(r) +
                                          ": division not exact at coordinate " + std::to_string(j)};
            if (factor && *q != *factor)
                return {std::nullopt, "probe " + std::to_string(r) +
                                          ": coordinate factors disagree"};
            factor = std::move(q);
        }
        if (common && *factor != *common)
            return {std::nullopt, "factors disagree across probes"};
        common = std::move(factor);
    }
    return {std::move(common), ""};
}

ExtractResult lambda_factor_extract(const AutoMap& phi, const Poly& f,
                                    const std::vector<VField>& probes) {
    if (probes.size() < 2) throw DomainError("factor extraction needs at least two probes");
    std::vector<std::pair<VField, VField>> table;
    table.reserve(probes.size());
    for (const auto& D : probes) {
        if (D.is_zero()) throw DomainError("factor extraction probe must be nonzero");
        table.emplace_back(D, lambda_apply(f, phi, D));
    }
    return extract_common_factor(table);
}

} // namespace tanalg
