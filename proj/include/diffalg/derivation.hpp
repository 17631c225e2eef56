#pragma once

#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

/// A derivation on a polynomial ring, given by the images of the variables
/// and extended additively and by the Leibniz rule.
class Derivation {
public:
    Derivation(RegistryPtr ring, std::vector<MultiPoly> images);

    const RegistryPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& images() const { return images_; }
    const MultiPoly& image(std::size_t var) const;
    std::uint64_t max_image_degree() const { return max_image_degree_; }

private:
    RegistryPtr ring_;
    std::vector<MultiPoly> images_;
    std::uint64_t max_image_degree_;
};

/// Df = sum over variables of (df/dX_i) * D(X_i).
MultiPoly apply(const Derivation& d, const MultiPoly& f);

/// Quotient rule: D(f/g) = (g*Df - f*Dg)/g^2, reduced.
RationalFunction apply_rational(const Derivation& d, const RationalFunction& w);

/// Each variable v gets the image v^3 - 2*v^2 + 2*v.
Derivation paper_derivation(const RegistryPtr& ring);

/// Each variable v gets the image p(v), for a univariate polynomial p given
/// by its coefficient list (index = power, values exact scalars).
Derivation coordinatewise_derivation(const RegistryPtr& ring,
                                     const std::vector<GaussRational>& p_coeffs);

}  // namespace diffalg
