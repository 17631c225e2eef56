#include "diffalg/groebner.hpp"

#include <algorithm>
#include <list>
#include <optional>

#include "diffalg/error.hpp"

namespace diffalg {

int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder order) {
    return order == MonoOrder::GradedLex ? mono_cmp_graded_lex(a, b) : mono_cmp_lex(a, b);
}

namespace {

// Term maps are sorted graded-lex; under lex the leading term needs a scan.
const Monomial& leading_monomial(const MultiPoly& p, MonoOrder order) {
    if (order == MonoOrder::GradedLex) return p.leading_monomial();
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || mono_cmp_lex(m, *best) > 0) best = &m;
    return *best;
}

MultiPoly make_monic(const MultiPoly& p, MonoOrder order) {
    const Monomial lm = leading_monomial(p, order);
    return p.scaled(p.terms().at(lm).inverse());
}

struct Budget {
    std::uint64_t cap;
    void check(const MultiPoly& p) const {
        if (!p.is_zero() && p.total_degree() > cap)
            fail(Errc::DegreeBudgetExceeded,
                 "total degree " + std::to_string(p.total_degree()) + " exceeds budget " +
                     std::to_string(cap));
    }
};

// Full normal form of p by the (monic) divisors; optional budget applies to
// intermediate results during basis construction.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                      const std::vector<Monomial>& lms, MonoOrder order, const Budget* budget) {
    MultiPoly r = p;
    MultiPoly out(p.ring());
    while (!r.is_zero()) {
        if (budget) budget->check(r);
        const Monomial lm = leading_monomial(r, order);
        const GaussRational lc = r.terms().at(lm);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!mono_divides(lms[k], lm)) continue;
            r -= divisors[k].mul_term(mono_div(lm, lms[k]), lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t(p.ring());
            t += MultiPoly::from_terms(p.ring(), {{lm, lc}});
            out += t;
            r -= t;
        }
    }
    return out;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonoOrder order,
                         std::uint64_t degree_budget) {
    std::vector<MultiPoly> work;
    for (const auto& g : gens)
        if (!g.is_zero()) work.push_back(g);
    if (work.empty()) fail(Errc::EmptyInput, "no nonzero generators");
    const RegistryPtr ring = work.front().ring();
    for (const auto& g : work) {
        if (g.ring() != ring) fail(Errc::RingMismatch, "generators span several rings");
    }
    const Budget budget{degree_budget};
    for (auto& g : work) {
        budget.check(g);
        g = make_monic(g, order);
    }

    std::vector<MultiPoly> basis;
    std::vector<Monomial> lms;
    for (const auto& g : work) {
        basis.push_back(g);
        lms.push_back(leading_monomial(g, order));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint64_t degree;
    };
    auto pair_before = [](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::list<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(lms[i], lms[j]);
            queue.push_back(Pair{i, j, l, mono_degree(l)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::vector<std::pair<std::size_t, std::size_t>> done;
    auto is_done = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::find(done.begin(), done.end(), std::make_pair(a, b)) != done.end();
    };

    while (!queue.empty()) {
        auto best = queue.begin();
        for (auto it = std::next(queue.begin()); it != queue.end(); ++it)
            if (pair_before(*it, *best)) best = it;
        const Pair pr = *best;
        queue.erase(best);
        done.emplace_back(pr.i, pr.j);

        // First Buchberger criterion: coprime leading terms.
        if (pr.lcm == mono_mul(lms[pr.i], lms[pr.j])) continue;
        // Chain criterion.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            chained = mono_divides(lms[k], pr.lcm) && is_done(pr.i, k) && is_done(pr.j, k);
        }
        if (chained) continue;

        const MultiPoly s = basis[pr.i].mul_term(mono_div(pr.lcm, lms[pr.i]), GaussRational(1)) -
                            basis[pr.j].mul_term(mono_div(pr.lcm, lms[pr.j]), GaussRational(1));
        MultiPoly r = normal_form(s, basis, lms, order, &budget);
        if (r.is_zero()) continue;
        budget.check(r);
        basis.push_back(make_monic(r, order));
        lms.push_back(leading_monomial(basis.back(), order));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading term another element divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[b]) continue;
            if (mono_divides(lms[b], lms[a]) &&
                (lms[b] != lms[a] || b < a)) {
                keep[a] = false;
                break;
            }
        }
    }
    std::vector<MultiPoly> minimal;
    std::vector<Monomial> minimal_lms;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (!keep[a]) continue;
        minimal.push_back(basis[a]);
        minimal_lms.push_back(lms[a]);
    }

    // Inter-reduce tails for the reduced basis.
    std::vector<MultiPoly> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<MultiPoly> others;
        std::vector<Monomial> other_lms;
        for (std::size_t b = 0; b < minimal.size(); ++b) {
            if (b == a) continue;
            others.push_back(minimal[b]);
            other_lms.push_back(minimal_lms[b]);
        }
        MultiPoly nf = others.empty()
                           ? minimal[a]
                           : normal_form(minimal[a], others, other_lms, order, nullptr);
        reduced.push_back(make_monic(nf, order));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& x, const MultiPoly& y) {
        return mono_cmp(leading_monomial(x, order), leading_monomial(y, order), order) < 0;
    });
    return GroebnerBasis(ring, order, std::move(reduced));
}

MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& gb) {
    if (p.ring() != gb.ring()) fail(Errc::RingMismatch, "polynomial outside the basis ring");
    if (p.is_zero()) return p;
    std::vector<Monomial> lms;
    lms.reserve(gb.basis().size());
    for (const auto& g : gb.basis()) lms.push_back(leading_monomial(g, gb.order()));
    return normal_form(p, gb.basis(), lms, gb.order(), nullptr);
}

bool ideal_member(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                  std::uint64_t degree_budget) {
    bool any_nonzero = false;
    for (const auto& g : gens) any_nonzero = any_nonzero || !g.is_zero();
    if (!any_nonzero) return p.is_zero();
    return reduce(p, buchberger(gens, MonoOrder::GradedLex, degree_budget)).is_zero();
}

}  // namespace diffalg
