#pragma once

#include <string>

#include "diffalg/multipoly.hpp"

namespace diffalg {

/// Reduced fraction of polynomials: gcd(num, den) constant, den monic.
class RationalFunction {
public:
    RationalFunction(MultiPoly num, MultiPoly den);
    explicit RationalFunction(MultiPoly num);

    static RationalFunction zero(const RegistryPtr& ring);
    static RationalFunction constant(const RegistryPtr& ring, const GaussRational& c);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const RegistryPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// "num / den" with the denominator parenthesized; plain num when den = 1.
    std::string str() const;

private:
    struct Reduced {};
    RationalFunction(MultiPoly num, MultiPoly den, Reduced);

    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace diffalg
