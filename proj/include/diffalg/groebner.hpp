#pragma once

#include <cstdint>
#include <vector>

#include "diffalg/multipoly.hpp"

namespace diffalg {

enum class MonoOrder { GradedLex, Lex };

int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder order);

constexpr std::uint64_t kDefaultDegreeBudget = 24;

/// Reduced Groebner basis: elements monic, no leading term divides another,
/// tails in normal form; sorted ascending by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RegistryPtr ring, MonoOrder order, std::vector<MultiPoly> basis)
        : ring_(std::move(ring)), order_(order), basis_(std::move(basis)) {}

    const RegistryPtr& ring() const { return ring_; }
    MonoOrder order() const { return order_; }
    const std::vector<MultiPoly>& basis() const { return basis_; }

    bool is_unit_ideal() const;

private:
    RegistryPtr ring_;
    MonoOrder order_;
    std::vector<MultiPoly> basis_;
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonoOrder order,
                         std::uint64_t degree_budget = kDefaultDegreeBudget);

/// Full normal form of p modulo gb: no remaining term is divisible by any
/// basis leading term; p minus the result lies in the ideal.
MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& gb);

bool ideal_member(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                  std::uint64_t degree_budget = kDefaultDegreeBudget);

}  // namespace diffalg
