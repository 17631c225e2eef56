#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diffalg/multipoly.hpp"

namespace diffalg {

/// Exact square root when a is the square of a rational; nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& a);

/// Exact square root within Q(i), when one exists there.
std::optional<GaussRational> gauss_sqrt(const GaussRational& a);

/// Square root within the given coefficient field.
std::optional<GaussRational> field_sqrt(const GaussRational& a, Field field);

struct RootList {
    std::vector<std::pair<GaussRational, std::uint64_t>> roots;  // value, multiplicity
    MultiPoly residual;  // monic rootless cofactor; 1 when f splits over the field
};

/// All roots of f in its ring's coefficient field, with multiplicity.
/// f must have constant coefficients as a polynomial in `var`
/// (linear/quadratic cases solved in closed form; higher degrees by the
/// rational/Gaussian-integer root theorem).
RootList field_roots(const MultiPoly& f, std::size_t var);

}  // namespace diffalg
