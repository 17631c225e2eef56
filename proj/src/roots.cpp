#include "diffalg/roots.hpp"

#include <algorithm>

#include "diffalg/error.hpp"

namespace diffalg {

namespace {

constexpr unsigned long kTrialLimit = 4'000'000;

std::optional<Int> integer_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// All positive divisors of |n| (n != 0) by trial division.
std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    if (n == 0) fail(Errc::ZeroInput, "divisors of zero requested");
    std::vector<Int> out;
    unsigned long steps = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (++steps > kTrialLimit)
            fail(Errc::Internal, "coefficient too large for divisor enumeration");
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct GaussInt {
    Int re, im;
};

Int gauss_norm(const GaussInt& g) { return g.re * g.re + g.im * g.im; }

bool gauss_divides(const GaussInt& d, const GaussInt& a) {
    const Int n = gauss_norm(d);
    // a / d = a * conj(d) / N(d); exact iff both components divide.
    const Int re = a.re * d.re + a.im * d.im;
    const Int im = a.im * d.re - a.re * d.im;
    return re % n == 0 && im % n == 0;
}

// Divisors of a nonzero Gaussian integer, one representative per associate
// class, found through the norm: every divisor's norm divides N(a).
std::vector<GaussInt> gauss_divisors(const GaussInt& a) {
    std::vector<GaussInt> out;
    unsigned long steps = 0;
    for (const Int& m : positive_divisors(gauss_norm(a))) {
        for (Int x = 0; x * x <= m; ++x) {
            if (++steps > kTrialLimit)
                fail(Errc::Internal, "coefficient too large for divisor enumeration");
            const auto y = integer_sqrt(m - x * x);
            if (!y) continue;
            for (const GaussInt& d : {GaussInt{x, *y}, GaussInt{*y, x}}) {
                if (d.re == 0 && d.im == 0) continue;
                // canonical associate: re > 0, im >= 0 (for pure-imaginary, re = 0 -> rotate)
                GaussInt c = d;
                if (c.re <= 0 && !(c.re == 0 && c.im > 0)) continue;
                if (c.re == 0) c = GaussInt{c.im, 0};
                if (!gauss_divides(c, a)) continue;
                const bool seen = std::any_of(out.begin(), out.end(), [&](const GaussInt& e) {
                    return e.re == c.re && e.im == c.im;
                });
                if (!seen) out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& a) {
    if (a.sign() < 0) return std::nullopt;
    const auto n = integer_sqrt(a.num());
    if (!n) return std::nullopt;
    const auto d = integer_sqrt(a.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

std::optional<GaussRational> gauss_sqrt(const GaussRational& a) {
    const Rational &re = a.re(), &im = a.im();
    if (im.is_zero()) {
        if (re.sign() >= 0) {
            const auto s = rational_sqrt(re);
            if (!s) return std::nullopt;
            return GaussRational(*s, Rational(0));
        }
        const auto s = rational_sqrt(-re);
        if (!s) return std::nullopt;
        return GaussRational(Rational(0), *s);
    }
    const auto t = rational_sqrt(re * re + im * im);
    if (!t) return std::nullopt;
    const auto x = rational_sqrt((re + *t) / Rational(2));
    if (!x || x->is_zero()) return std::nullopt;
    const Rational y = im / (Rational(2) * *x);
    const GaussRational s(*x, y);
    if (!(s * s == a)) return std::nullopt;
    return s;
}

std::optional<GaussRational> field_sqrt(const GaussRational& a, Field field) {
    if (field == Field::Qi) return gauss_sqrt(a);
    if (!a.is_rational()) return std::nullopt;
    if (a.re().sign() < 0) return std::nullopt;
    const auto s = rational_sqrt(a.re());
    if (!s) return std::nullopt;
    return GaussRational(*s, Rational(0));
}

namespace {

GaussRational horner(const std::vector<GaussRational>& c, const GaussRational& x) {
    GaussRational acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// Quotient of c by (X - r); remainder must be zero (checked by caller via horner).
std::vector<GaussRational> deflate(const std::vector<GaussRational>& c, const GaussRational& r) {
    std::vector<GaussRational> q(c.size() - 1, GaussRational(0));
    GaussRational carry = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + r * carry;
    }
    return q;
}

// Candidate roots by the integer root theorem after clearing denominators.
std::vector<GaussRational> root_candidates(const std::vector<GaussRational>& c, Field field) {
    Int denom_lcm = 1;
    for (const auto& a : c) {
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), a.re().den().get_mpz_t());
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), a.im().den().get_mpz_t());
    }
    const Rational scale{denom_lcm};
    auto as_int = [&](const GaussRational& a) {
        return GaussInt{(a.re() * scale).num(), (a.im() * scale).num()};
    };
    const GaussInt a0 = as_int(c.front());
    const GaussInt an = as_int(c.back());

    std::vector<GaussRational> out;
    auto push = [&](const GaussRational& cand) {
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    };
    if (field == Field::Q) {
        for (const Int& p : positive_divisors(a0.re))
            for (const Int& q : positive_divisors(an.re)) {
                push(GaussRational(Rational(p, q), Rational(0)));
                push(GaussRational(Rational(-p, q), Rational(0)));
            }
        return out;
    }
    static const GaussRational units[] = {
        GaussRational(1), GaussRational(Rational(-1), Rational(0)),
        GaussRational(Rational(0), Rational(1)), GaussRational(Rational(0), Rational(-1))};
    for (const GaussInt& p : gauss_divisors(a0))
        for (const GaussInt& q : gauss_divisors(an)) {
            const GaussRational num(Rational(p.re), Rational(p.im));
            const GaussRational den(Rational(q.re), Rational(q.im));
            const GaussRational base = num / den;
            for (const auto& u : units) push(base * u);
        }
    return out;
}

std::optional<GaussRational> one_root(const std::vector<GaussRational>& c, Field field) {
    const std::size_t deg = c.size() - 1;
    if (c.front().is_zero()) return GaussRational(0);
    if (deg == 1) return -(c[0] / c[1]);
    if (deg == 2) {
        const GaussRational disc = c[1] * c[1] - GaussRational(4) * c[2] * c[0];
        const auto s = field_sqrt(disc, field);
        if (!s) return std::nullopt;
        return (-c[1] + *s) / (GaussRational(2) * c[2]);
    }
    for (const auto& cand : root_candidates(c, field))
        if (horner(c, cand).is_zero()) return cand;
    return std::nullopt;
}

}  // namespace

RootList field_roots(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) fail(Errc::ZeroInput, "root extraction from the zero polynomial");
    std::vector<GaussRational> c;
    for (const auto& coeff : coeffs_in_var(f, var)) {
        if (!coeff.is_constant())
            fail(Errc::UnsupportedShape, "coefficient involves another variable");
        c.push_back(coeff.constant_value());
    }
    const Field field = f.ring()->field();
    RootList out{{}, MultiPoly::constant(f.ring(), GaussRational(1))};
    while (c.size() > 1) {
        const auto r = one_root(c, field);
        if (!r) break;
        std::uint64_t mult = 0;
        while (c.size() > 1 && horner(c, *r).is_zero()) {
            c = deflate(c, *r);
            ++mult;
        }
        if (mult == 0) fail(Errc::Internal, "candidate failed to divide");
        out.roots.emplace_back(*r, mult);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
    if (c.size() > 1) {
        MultiPoly res(f.ring());
        const MultiPoly x = MultiPoly::variable(f.ring(), var);
        for (std::size_t k = c.size(); k-- > 0;)
            res = res * x + MultiPoly::constant(f.ring(), c[k]);
        out.residual = res.monic();
    }
    return out;
}

}  // namespace diffalg
