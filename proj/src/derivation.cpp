#include "diffalg/derivation.hpp"

#include "diffalg/error.hpp"

namespace diffalg {

Derivation::Derivation(RegistryPtr ring, std::vector<MultiPoly> images)
    : ring_(std::move(ring)), images_(std::move(images)), max_image_degree_(0) {
    if (images_.size() != ring_->size())
        fail(Errc::RingMismatch, "one image per registry variable is required");
    for (const auto& img : images_) {
        if (img.ring() != ring_) fail(Errc::RingMismatch, "image lives in a different ring");
        max_image_degree_ = std::max(max_image_degree_, img.total_degree());
    }
}

const MultiPoly& Derivation::image(std::size_t var) const {
    if (var >= images_.size()) fail(Errc::UnknownVariable, "variable index out of range");
    return images_[var];
}

MultiPoly apply(const Derivation& d, const MultiPoly& f) {
    if (f.ring() != d.ring()) fail(Errc::RingMismatch, "polynomial outside the derivation's ring");
    MultiPoly out(f.ring());
    for (std::size_t v = 0; v < f.ring()->size(); ++v) {
        if (!f.involves(v) || d.image(v).is_zero()) continue;
        out += partial_derivative(f, v) * d.image(v);
    }
    return out;
}

RationalFunction apply_rational(const Derivation& d, const RationalFunction& w) {
    if (w.ring() != d.ring()) fail(Errc::RingMismatch, "function outside the derivation's ring");
    const MultiPoly df = apply(d, w.num());
    const MultiPoly dg = apply(d, w.den());
    return RationalFunction(w.den() * df - w.num() * dg, w.den() * w.den());
}

Derivation paper_derivation(const RegistryPtr& ring) {
    return coordinatewise_derivation(
        ring, {GaussRational(0), GaussRational(2), GaussRational(-2), GaussRational(1)});
}

Derivation coordinatewise_derivation(const RegistryPtr& ring,
                                     const std::vector<GaussRational>& p_coeffs) {
    if (ring->size() == 0) fail(Errc::EmptyInput, "ring has no variables");
    std::vector<MultiPoly> images;
    images.reserve(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
        const MultiPoly x = MultiPoly::variable(ring, v);
        MultiPoly img = MultiPoly::zero(ring);
        for (std::size_t k = p_coeffs.size(); k-- > 0;)
            img = img * x + MultiPoly::constant(ring, p_coeffs[k]);
        images.push_back(std::move(img));
    }
    return Derivation(ring, std::move(images));
}

}  // namespace diffalg
