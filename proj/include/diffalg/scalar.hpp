#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "diffalg/error.hpp"

namespace diffalg {

using Int = mpz_class;

/// Exact rational number, kept canonical (denominator > 0, lowest terms, 0 = 0/1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT (implicit by design)
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(from_canonical{}, -v_); }
    Rational operator+(const Rational& o) const { return Rational(from_canonical{}, v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(from_canonical{}, v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(from_canonical{}, v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
        return Rational(from_canonical{}, v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
        return Rational(from_canonical{}, 1 / v_);
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    /// Canonical text: "p" when integral, else "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    struct from_canonical {};
    Rational(from_canonical, mpq_class q) : v_(std::move(q)) {}  // gmp keeps results canonical

    mpq_class v_;
};

/// Element of Q(i): re + im*i with exact rational components.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}  // NOLINT (implicit by design)
    GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }
    bool is_rational() const { return im_.is_zero(); }
    bool is_rational_integer() const { return im_.is_zero() && re_.is_integer(); }
    bool is_gaussian_integer() const { return re_.is_integer() && im_.is_integer(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational operator+(const GaussRational& o) const {
        return GaussRational(re_ + o.re_, im_ + o.im_);
    }
    GaussRational operator-(const GaussRational& o) const {
        return GaussRational(re_ - o.re_, im_ - o.im_);
    }
    GaussRational operator*(const GaussRational& o) const {
        return GaussRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRational operator/(const GaussRational& o) const {
        if (o.is_zero()) fail(Errc::DivisionByZero, "gaussian rational division by zero");
        Rational n = o.norm();
        return GaussRational((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
    }
    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }

    GaussRational inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
        Rational n = norm();
        return GaussRational(re_ / n, -(im_ / n));
    }

    bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    /// Canonical sign used when pulling "-" out of rendered terms:
    /// negative iff re < 0, or re = 0 and im < 0.
    bool canonical_negative() const {
        int s = re_.sign();
        return s < 0 || (s == 0 && im_.sign() < 0);
    }

    /// Canonical text: "0", "3/2", "i", "-2*i", "1+i", "1/2-3*i".
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imag;
        if (im_ == Rational(1)) imag = "i";
        else if (im_ == Rational(-1)) imag = "-i";
        else imag = im_.str() + "*i";
        if (re_.is_zero()) return imag;
        if (im_.sign() > 0) return re_.str() + "+" + imag;
        return re_.str() + imag;  // imag already carries the minus
    }

private:
    Rational re_;
    Rational im_;
};

/// Deterministic total order (not the field order; map keys and sorting only).
inline bool scalar_less(const GaussRational& a, const GaussRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

struct ScalarLess {
    bool operator()(const GaussRational& a, const GaussRational& b) const {
        return scalar_less(a, b);
    }
};

}  // namespace diffalg
