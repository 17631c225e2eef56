#include "diffalg/ratfunc.hpp"

#include "diffalg/error.hpp"

namespace diffalg {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_, den_);
    if (den_.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.ring(), GaussRational(1));
        return;
    }
    const MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    const GaussRational lc = den_.leading_coeff();
    if (!(lc == GaussRational(1))) {
        const GaussRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.ring(), GaussRational(1))) {}

RationalFunction RationalFunction::zero(const RegistryPtr& ring) {
    return RationalFunction(MultiPoly::zero(ring));
}

RationalFunction RationalFunction::constant(const RegistryPtr& ring, const GaussRational& c) {
    return RationalFunction(MultiPoly::constant(ring, c));
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, Reduced{});
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) fail(Errc::DivisionByZero, "division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) {
        if (den_.constant_value() == GaussRational(1)) return num_.str();
        return num_.scaled(den_.constant_value().inverse()).str();
    }
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace diffalg
