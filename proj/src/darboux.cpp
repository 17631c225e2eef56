#include "diffalg/darboux.hpp"

#include <algorithm>
#include <map>

#include "diffalg/error.hpp"
#include "diffalg/linalg.hpp"
#include "diffalg/polysolve.hpp"

namespace diffalg {

std::optional<MultiPoly> cofactor(const MultiPoly& f, const Derivation& d) {
    if (f.is_constant()) fail(Errc::ConstantInput, "constants have every cofactor");
    return try_exact_divide(apply(d, f), f);
}

// ---------------------------------------------------------------------------
// Eigen-polynomial recursion (one designated variable, cubic family)

namespace {

bool is_cubic_family(const Derivation& d) {
    const RegistryPtr& ring = d.ring();
    for (std::size_t v = 0; v < ring->size(); ++v) {
        const MultiPoly x = MultiPoly::variable(ring, v);
        const MultiPoly expected =
            x * x * x - MultiPoly::constant(ring, 2) * x * x + MultiPoly::constant(ring, 2) * x;
        if (!(d.image(v) == expected)) return false;
    }
    return true;
}

}  // namespace

std::optional<MultiPoly> eigenpoly_solve(const MultiPoly& z, const Derivation& d,
                                         const std::string& var) {
    const RegistryPtr& ring = d.ring();
    if (z.ring() != ring) fail(Errc::RingMismatch, "cofactor outside the derivation's ring");
    const std::size_t v = ring->index_of(var);
    if (!is_cubic_family(d))
        fail(Errc::NotApplicable, "recursion requires the coordinatewise cubic derivation");

    auto bs = coeffs_in_var(z, v);
    if (bs.size() > 3)
        fail(Errc::BadCofactorShape, "cofactor has degree > 2 in " + var);
    bs.resize(3, MultiPoly::zero(ring));
    const MultiPoly &b0 = bs[0], &b1 = bs[1], &b2 = bs[2];

    if (!b2.is_constant()) return std::nullopt;
    const GaussRational lead = b2.constant_value();
    if (!lead.is_rational_integer() || lead.re().sign() <= 0) return std::nullopt;
    const Int n_int = lead.re().num();
    if (!n_int.fits_ulong_p() || n_int.get_ui() > 4096)
        fail(Errc::DegreeBudgetExceeded, "eigenvalue leading coefficient too large");
    const std::size_t n = n_int.get_ui();

    auto cnst = [&](long k) { return MultiPoly::constant(ring, GaussRational(k)); };
    std::vector<MultiPoly> a(n + 1, MultiPoly::zero(ring));
    a[n] = cnst(1);
    a[n - 1] = -(b1 + cnst(2 * static_cast<long>(n)));
    for (std::size_t idx = n - 1; idx-- > 0;) {
        const long i = static_cast<long>(idx);
        const MultiPoly rhs = apply(d, a[idx + 2]) + (cnst(2 * i + 4) - b0) * a[idx + 2] -
                              (b1 + cnst(2 * (i + 1))) * a[idx + 1];
        a[idx] = rhs.scaled(GaussRational(static_cast<long>(n) - i).inverse());
    }

    const MultiPoly x = MultiPoly::variable(ring, v);
    MultiPoly f = MultiPoly::zero(ring);
    for (std::size_t k = n + 1; k-- > 0;) f = f * x + a[k];
    if (!(apply(d, f) == z * f)) return std::nullopt;
    return f;
}

// ---------------------------------------------------------------------------
// Bounded search for Darboux pairs

namespace {

// All monomials of the ring with the given total degree, descending graded-lex.
void monomials_of_degree(std::size_t nvars, std::uint32_t degree,
                         std::vector<Monomial>& out) {
    Monomial work(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos + 1 == nvars) {
            work[pos] = left;
            out.push_back(work);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            work[pos] = e;
            self(self, pos + 1, left - e);
        }
        work[pos] = 0;
    };
    if (nvars == 0) return;
    rec(rec, 0, degree);
}

// Polynomial in the X-variables whose coefficients are polynomials in the
// unknown c-variables; ordered by the X-monomial only, which keeps division
// by a candidate with unit leading coefficient exact.
using BlockPoly = std::map<Monomial, MultiPoly, MonoGradedLexLess>;

void block_add(BlockPoly& target, const Monomial& m, const MultiPoly& cpoly) {
    if (cpoly.is_zero()) return;
    auto [it, fresh] = target.emplace(m, cpoly);
    if (!fresh) {
        it->second += cpoly;
        if (it->second.is_zero()) target.erase(it);
    }
}

// target += shift * scale_x * block, where scale_x is a plain X-polynomial.
void block_add_product(BlockPoly& target, const BlockPoly& block, const MultiPoly& x_poly,
                       const MultiPoly& c_scale) {
    for (const auto& [mb, cb] : block)
        for (const auto& [mx, cx] : x_poly.terms())
            block_add(target, mono_mul(mb, mx), (cb * c_scale).scaled(cx));
}

}  // namespace

CofactorSpace darboux_search(const Derivation& d, std::uint64_t degree_bound,
                             std::uint64_t degree_budget) {
    if (degree_bound < 1) fail(Errc::ZeroInput, "degree bound must be at least 1");
    const RegistryPtr& ring = d.ring();
    const std::size_t nvars = ring->size();

    CofactorSpace space{d, {}, {}, {}};
    for (std::uint32_t k = 1; k <= degree_bound; ++k) {
        std::vector<Monomial> tops;
        monomials_of_degree(nvars, k, tops);
        std::sort(tops.begin(), tops.end(), [](const Monomial& a, const Monomial& b) {
            return mono_cmp_graded_lex(a, b) > 0;
        });
        std::vector<Monomial> lower_pool;  // all monomials of degree <= k, descending
        for (std::uint32_t j = 0; j <= k; ++j) monomials_of_degree(nvars, j, lower_pool);
        std::sort(lower_pool.begin(), lower_pool.end(), [](const Monomial& a, const Monomial& b) {
            return mono_cmp_graded_lex(a, b) > 0;
        });

        for (const Monomial& top : tops) {
            std::vector<Monomial> lows;
            for (const Monomial& m : lower_pool)
                if (mono_cmp_graded_lex(m, top) < 0) lows.push_back(m);

            std::vector<std::string> cnames;
            cnames.reserve(lows.size());
            for (std::size_t t = 0; t < lows.size(); ++t)
                cnames.push_back("c" + std::to_string(t));
            const RegistryPtr c_ring = make_registry(cnames, ring->field());
            const MultiPoly c_one = MultiPoly::constant(c_ring, GaussRational(1));

            // f = top + sum_t c_t * lows[t]
            BlockPoly f;
            f.emplace(top, c_one);
            for (std::size_t t = 0; t < lows.size(); ++t)
                f.emplace(lows[t], MultiPoly::variable(c_ring, t));

            // Df via the partial-derivative expansion.
            BlockPoly df;
            for (std::size_t v = 0; v < nvars; ++v) {
                if (d.image(v).is_zero()) continue;
                BlockPoly partial;
                for (const auto& [m, cp] : f) {
                    if (m[v] == 0) continue;
                    Monomial dm = m;
                    dm[v] -= 1;
                    block_add(partial, dm, cp.scaled(GaussRational(Rational(Int(m[v])))));
                }
                block_add_product(df, partial, d.image(v), c_one);
            }

            // Remainder of Df by f (leading coefficient of f at `top` is 1).
            BlockPoly r = std::move(df);
            while (true) {
                const Monomial* mm = nullptr;
                for (auto it = r.rbegin(); it != r.rend(); ++it) {
                    if (mono_divides(top, it->first)) {
                        mm = &it->first;
                        break;
                    }
                }
                if (!mm) break;
                const Monomial shift = mono_div(*mm, top);
                const MultiPoly q = r.at(*mm);
                BlockPoly scaled_f;
                for (const auto& [m, cp] : f)
                    block_add(scaled_f, mono_mul(m, shift), cp * q);
                for (const auto& [m, cp] : scaled_f) block_add(r, m, -cp);
            }

            std::vector<MultiPoly> equations;
            for (const auto& [m, cp] : r) equations.push_back(cp);

            const SystemSolutions sols = solve_poly_system(equations, c_ring, degree_budget);
            if (sols.positive_dimensional) {
                space.families.push_back(FamilyFlag{k, top});
                continue;
            }
            for (const auto& point : sols.points) {
                MultiPoly candidate(ring);
                candidate.insert_term(top, GaussRational(1));
                for (std::size_t t = 0; t < lows.size(); ++t) {
                    const auto it = point.find(t);
                    if (it == point.end()) fail(Errc::Internal, "incomplete solution point");
                    candidate.insert_term(lows[t], it->second);
                }
                const auto w = cofactor(candidate, d);
                if (!w) fail(Errc::Internal, "search produced a non-Darboux candidate");
                space.pairs.push_back(DarbouxPair{std::move(candidate), *w});
            }
        }
    }

    std::sort(space.pairs.begin(), space.pairs.end(),
              [](const DarbouxPair& a, const DarbouxPair& b) { return poly_cmp(a.f, b.f) < 0; });
    space.pairs.erase(std::unique(space.pairs.begin(), space.pairs.end(),
                                  [](const DarbouxPair& a, const DarbouxPair& b) {
                                      return a.f == b.f;
                                  }),
                      space.pairs.end());
    // Keep only "new" polynomials: drop anything another returned f divides.
    std::vector<DarbouxPair> kept;
    for (std::size_t a = 0; a < space.pairs.size(); ++a) {
        bool composite = false;
        for (std::size_t b = 0; b < space.pairs.size() && !composite; ++b) {
            if (a == b) continue;
            composite = try_exact_divide(space.pairs[a].f, space.pairs[b].f).has_value();
        }
        if (!composite) kept.push_back(space.pairs[a]);
    }
    space.pairs = std::move(kept);
    return space;
}

// ---------------------------------------------------------------------------
// Relations among cofactors and first integrals

std::vector<std::vector<Int>> cofactor_relations(const CofactorSpace& space) {
    if (space.pairs.empty()) fail(Errc::EmptyInput, "no Darboux pairs supplied");
    const std::size_t n = space.pairs.size();
    std::vector<Monomial> support;
    for (const auto& pr : space.pairs)
        for (const auto& [m, c] : pr.w.terms())
            if (std::find(support.begin(), support.end(), m) == support.end())
                support.push_back(m);
    std::sort(support.begin(), support.end(), MonoGradedLexLess{});

    ExactMatrix mat(2 * support.size(), n);
    for (std::size_t row = 0; row < support.size(); ++row)
        for (std::size_t col = 0; col < n; ++col) {
            const auto it = space.pairs[col].w.terms().find(support[row]);
            if (it == space.pairs[col].w.terms().end()) continue;
            mat(2 * row, col) = GaussRational(it->second.re());
            mat(2 * row + 1, col) = GaussRational(it->second.im());
        }

    std::vector<std::vector<Int>> basis;
    for (const auto& v : nullspace(mat)) basis.push_back(integer_scale(v));
    return basis;
}

RationalFunction first_integral(const CofactorSpace& space, const std::vector<Int>& relation) {
    if (relation.size() != space.pairs.size())
        fail(Errc::NotARelation, "relation length differs from the number of pairs");
    const RegistryPtr& ring = space.derivation.ring();
    MultiPoly combo(ring);
    for (std::size_t k = 0; k < relation.size(); ++k)
        combo = add_scaled(combo, GaussRational(Rational(relation[k])), space.pairs[k].w);
    if (!combo.is_zero())
        fail(Errc::NotARelation, "cofactor combination is not zero");

    MultiPoly num = MultiPoly::constant(ring, GaussRational(1));
    MultiPoly den = num;
    for (std::size_t k = 0; k < relation.size(); ++k) {
        const Int& e = relation[k];
        if (e == 0) continue;
        Int mag = abs(e);
        if (!mag.fits_ulong_p())
            fail(Errc::DegreeBudgetExceeded, "relation exponent too large");
        const MultiPoly powed = space.pairs[k].f.pow(mag.get_ui());
        (e > 0 ? num : den) = (e > 0 ? num : den) * powed;
    }
    RationalFunction result(num, den);
    if (!apply_rational(space.derivation, result).is_zero())
        fail(Errc::Internal, "integral fails to differentiate to zero");
    return result;
}

// ---------------------------------------------------------------------------
// Residue criterion

ResidueReport eigenvalue_rational_solvable(const MultiPoly& p,
                                           const std::vector<GaussRational>& roots,
                                           const GaussRational& c) {
    if (p.is_constant()) fail(Errc::ConstantInput, "p must be nonconstant");
    const RegistryPtr& ring = p.ring();
    std::size_t var = ring->size();
    for (std::size_t v = 0; v < ring->size(); ++v) {
        if (!p.involves(v)) continue;
        if (var != ring->size()) fail(Errc::UnsupportedShape, "p involves several variables");
        var = v;
    }
    if (!(p.leading_coeff() == GaussRational(1)))
        fail(Errc::NotApplicable, "p must be monic");
    if (!poly_gcd(p, partial_derivative(p, var)).is_constant())
        fail(Errc::NotSquarefree, "p has a repeated factor");

    const MultiPoly x = MultiPoly::variable(ring, var);
    MultiPoly product = MultiPoly::constant(ring, GaussRational(1));
    for (const auto& r : roots) product = product * (x - MultiPoly::constant(ring, r));
    if (!(product == p))
        fail(Errc::IncompleteRoots, "roots do not multiply back to p");

    const MultiPoly dp = partial_derivative(p, var);
    ResidueReport report;
    report.solvable = true;
    for (const auto& r : roots) {
        const GaussRational slope = substitute(dp, var, r).constant_value();
        const GaussRational residue = c / slope;
        report.residues.emplace_back(r, residue);
        report.solvable = report.solvable && residue.is_rational_integer();
    }
    if (!report.solvable) return report;

    MultiPoly num = MultiPoly::constant(ring, GaussRational(1));
    MultiPoly den = num;
    for (const auto& [r, residue] : report.residues) {
        const Int e = residue.re().num();
        report.exponents.emplace_back(r, e);
        if (e == 0) continue;
        Int mag = abs(e);
        if (!mag.fits_ulong_p()) fail(Errc::DegreeBudgetExceeded, "exponent too large");
        const MultiPoly factor = (x - MultiPoly::constant(ring, r)).pow(mag.get_ui());
        (e > 0 ? num : den) = (e > 0 ? num : den) * factor;
    }
    RationalFunction witness(num, den);

    std::vector<MultiPoly> images(ring->size(), MultiPoly::zero(ring));
    images[var] = p;
    const Derivation d(ring, std::move(images));
    const RationalFunction lhs = apply_rational(d, witness);
    const RationalFunction rhs = witness * RationalFunction::constant(ring, c);
    if (!(lhs == rhs)) fail(Errc::Internal, "residue witness failed verification");
    report.witness = std::move(witness);
    return report;
}

}  // namespace diffalg
