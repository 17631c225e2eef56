#include "diffalg/polysolve.hpp"

#include <algorithm>
#include <set>

#include "diffalg/error.hpp"
#include "diffalg/roots.hpp"

namespace diffalg {

namespace {

using Point = std::map<std::size_t, GaussRational>;

GaussRational eval_at(const MultiPoly& p, const Point& point) {
    MultiPoly acc = p;
    for (const auto& [v, val] : point)
        if (acc.involves(v)) acc = substitute(acc, v, val);
    return acc.constant_value();
}

// g = a*v + rest with constant a != 0 and rest free of v.
std::optional<std::pair<std::size_t, MultiPoly>> linear_pivot(const MultiPoly& g,
                                                              const std::set<std::size_t>& vars) {
    for (std::size_t v : vars) {
        if (g.degree_in(v) != 1) continue;
        const auto coeffs = coeffs_in_var(g, v);
        if (!coeffs[1].is_constant()) continue;
        // value = -rest / a
        return std::make_pair(v, coeffs[0].scaled(-coeffs[1].constant_value().inverse()));
    }
    return std::nullopt;
}

void solve_rec(std::vector<MultiPoly> gens, std::set<std::size_t> vars, const RegistryPtr& ring,
               std::uint64_t budget, SystemSolutions& out) {
    // Normalize the working set.
    std::vector<MultiPoly> active;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return;  // nonzero constant: no solutions
        active.push_back(std::move(g));
    }

    // Eliminate variables that appear affine-linearly with constant coefficient.
    std::vector<std::pair<std::size_t, MultiPoly>> elim;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const auto pivot = linear_pivot(active[k], vars);
            if (!pivot) continue;
            const auto& [v, expr] = *pivot;
            elim.emplace_back(v, expr);
            vars.erase(v);
            std::vector<MultiPoly> next;
            for (std::size_t j = 0; j < active.size(); ++j) {
                if (j == k) continue;
                MultiPoly s = substitute(active[j], v, expr);
                if (s.is_zero()) continue;
                if (s.is_constant()) return;  // inconsistent
                next.push_back(std::move(s));
            }
            active = std::move(next);
            changed = true;
            break;
        }
    }

    auto emit = [&](Point point) {
        for (auto it = elim.rbegin(); it != elim.rend(); ++it)
            point[it->first] = eval_at(it->second, point);
        out.points.push_back(std::move(point));
    };

    if (active.empty()) {
        if (!vars.empty()) {
            out.positive_dimensional = true;  // unconstrained variables remain
            return;
        }
        emit({});
        return;
    }

    const GroebnerBasis gb = buchberger(active, MonoOrder::Lex, budget);
    if (gb.is_unit_ideal()) return;

    // Zero-dimensionality: every remaining variable needs a pure-power lex
    // leading term in the basis.
    const std::size_t least = *vars.rbegin();  // lex-least = highest index
    const MultiPoly* univariate = nullptr;
    for (std::size_t v : vars) {
        bool covered = false;
        for (const auto& b : gb.basis()) {
            const Monomial* lm = nullptr;
            for (const auto& [m, c] : b.terms())
                if (!lm || mono_cmp_lex(m, *lm) > 0) lm = &m;
            bool pure = (*lm)[v] > 0;
            for (std::size_t u = 0; pure && u < lm->size(); ++u)
                if (u != v && (*lm)[u] > 0) pure = false;
            if (pure) {
                covered = true;
                if (v == least) univariate = &b;
                break;
            }
        }
        if (!covered) {
            out.positive_dimensional = true;
            return;
        }
    }

    const RootList roots = field_roots(*univariate, least);
    for (const auto& [r, mult] : roots.roots) {
        std::vector<MultiPoly> next;
        for (const auto& g : active) {
            MultiPoly s = substitute(g, least, r);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        std::set<std::size_t> sub_vars = vars;
        sub_vars.erase(least);
        SystemSolutions sub;
        solve_rec(std::move(next), std::move(sub_vars), ring, budget, sub);
        out.positive_dimensional = out.positive_dimensional || sub.positive_dimensional;
        for (auto& pt : sub.points) {
            pt[least] = r;
            emit(std::move(pt));
        }
    }
}

}  // namespace

SystemSolutions solve_poly_system(const std::vector<MultiPoly>& gens, const RegistryPtr& ring,
                                  std::uint64_t degree_budget) {
    for (const auto& g : gens)
        if (g.ring() != ring) fail(Errc::RingMismatch, "generator outside the stated ring");
    std::set<std::size_t> vars;
    for (std::size_t v = 0; v < ring->size(); ++v) vars.insert(v);
    SystemSolutions out;
    solve_rec(gens, std::move(vars), ring, degree_budget, out);
    std::sort(out.points.begin(), out.points.end(), [](const Point& a, const Point& b) {
        auto it = a.begin();
        auto jt = b.begin();
        for (; it != a.end() && jt != b.end(); ++it, ++jt) {
            if (it->first != jt->first) return it->first < jt->first;
            if (it->second != jt->second) return scalar_less(it->second, jt->second);
        }
        return a.size() < b.size();
    });
    return out;
}

}  // namespace diffalg
