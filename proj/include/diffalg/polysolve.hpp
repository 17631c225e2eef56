#pragma once

#include <map>

#include "diffalg/groebner.hpp"

namespace diffalg {

/// Solutions of a polynomial system over the ring's coefficient field.
/// `points` lists every solution all of whose coordinates lie in the field;
/// `positive_dimensional` is set when any solution component is not a point,
/// in which case nothing is enumerated for that component.
struct SystemSolutions {
    std::vector<std::map<std::size_t, GaussRational>> points;
    bool positive_dimensional = false;
};

SystemSolutions solve_poly_system(const std::vector<MultiPoly>& gens, const RegistryPtr& ring,
                                  std::uint64_t degree_budget = kDefaultDegreeBudget);

}  // namespace diffalg
