#include "diffalg/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "diffalg/error.hpp"

namespace diffalg {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) fail(Errc::Internal, "exponent vectors of different length");
}

}  // namespace

std::uint64_t mono_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    require_same_size(d, m);
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] > m[k]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    Monomial r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    require_same_size(m, d);
    Monomial r(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (d[k] > m[k]) fail(Errc::NotDivisible, "monomial does not divide");
        r[k] = m[k] - d[k];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    Monomial r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

int mono_cmp_graded_lex(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    const std::uint64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db ? -1 : 1;
    return mono_cmp_lex(a, b);
}

int mono_cmp_lex(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring() != b.ring()) fail(Errc::RingMismatch, "operands belong to different rings");
}

void MultiPoly::insert_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    if (m.size() != ring_->size()) fail(Errc::Internal, "exponent vector length mismatch");
    if (ring_->field() == Field::Q && !c.is_rational())
        fail(Errc::ImaginaryInRationalField, "imaginary coefficient in a Q-ring");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(const RegistryPtr& ring, const GaussRational& c) {
    MultiPoly p(ring);
    p.insert_term(Monomial(ring->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const RegistryPtr& ring, std::size_t index) {
    if (index >= ring->size()) fail(Errc::UnknownVariable, "variable index out of range");
    MultiPoly p(ring);
    Monomial m(ring->size(), 0);
    m[index] = 1;
    p.insert_term(m, GaussRational(1));
    return p;
}

MultiPoly MultiPoly::variable(const RegistryPtr& ring, const std::string& name) {
    return variable(ring, ring->index_of(name));
}

MultiPoly MultiPoly::from_terms(RegistryPtr ring, TermMap terms) {
    MultiPoly p(std::move(ring));
    for (auto& [m, c] : terms) p.insert_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

GaussRational MultiPoly::constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    if (!is_constant()) fail(Errc::ConstantInput, "polynomial is not constant");
    return terms_.begin()->second;
}

std::uint64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    return mono_degree(terms_.rbegin()->first);  // graded order: last key has max degree
}

std::uint64_t MultiPoly::degree_in(std::size_t var) const {
    if (var >= ring_->size()) fail(Errc::UnknownVariable, "variable index out of range");
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m[var]);
    return d;
}

bool MultiPoly::involves(std::size_t var) const {
    if (var >= ring_->size()) fail(Errc::UnknownVariable, "variable index out of range");
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) fail(Errc::ZeroInput, "zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const GaussRational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) fail(Errc::ZeroInput, "zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_ring(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_ring(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_ring(*this, o);
    MultiPoly r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const GaussRational& c) const {
    MultiPoly r(ring_);
    for (const auto& [m, a] : terms_) r.insert_term(m, a * c);
    return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const GaussRational& c) const {
    MultiPoly r(ring_);
    for (const auto& [mm, a] : terms_) r.insert_term(mono_mul(mm, m), a * c);
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly acc = MultiPoly::constant(ring_, GaussRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    require_same_ring(*this, o);
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

std::optional<GaussRational> MultiPoly::constant_ratio(const MultiPoly& o) const {
    require_same_ring(*this, o);
    if (terms_.empty()) return GaussRational(0);
    if (o.terms_.empty()) return std::nullopt;
    if (terms_.size() != o.terms_.size()) return std::nullopt;
    GaussRational ratio = leading_coeff() / o.leading_coeff();
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        if (it->second != jt->second * ratio) return std::nullopt;
    }
    return ratio;
}

MultiPoly add_scaled(const MultiPoly& a, const GaussRational& c, const MultiPoly& b) {
    require_same_ring(a, b);
    MultiPoly r = a;
    for (const auto& [m, cb] : b.terms()) r.insert_term(m, c * cb);
    return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool coeff_is_mixed(const GaussRational& c) { return !c.re().is_zero() && !c.im().is_zero(); }

std::string render_scalar(const GaussRational& c) {
    if (coeff_is_mixed(c)) return "(" + c.str() + ")";
    return c.str();
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const GaussRational& c = it->second;
        const bool neg = c.canonical_negative();
        const GaussRational a = neg ? -c : c;
        std::string body;
        if (mono_degree(m) == 0) {
            body = render_scalar(a);
        } else {
            if (!(a == GaussRational(1))) body = render_scalar(a) + "*";
            bool first_var = true;
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                if (!first_var) body += "*";
                first_var = false;
                body += ring_->name(v);
                if (m[v] > 1) body += "^" + std::to_string(m[v]);
            }
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << body;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g) {
    require_same_ring(f, g);
    if (g.is_zero()) fail(Errc::DivisionByZero, "division by the zero polynomial");
    MultiPoly q(f.ring());
    MultiPoly r = f;
    const Monomial& gm = g.leading_monomial();
    const GaussRational& gc = g.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!mono_divides(gm, rm)) return std::nullopt;
        const Monomial tm = mono_div(rm, gm);
        const GaussRational tc = r.leading_coeff() / gc;
        q.insert_term(tm, tc);
        r -= g.mul_term(tm, tc);
    }
    return q;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) fail(Errc::NotDivisible, "no exact quotient exists");
    return *q;
}

// ---------------------------------------------------------------------------
// GCD via primitive pseudo-remainder sequences

namespace {

// Coefficient of var^k, as a polynomial of the same ring with var struck out.
MultiPoly coeff_of_power(const MultiPoly& f, std::size_t var, std::uint64_t k) {
    MultiPoly::TermMap picked;
    for (const auto& [m, c] : f.terms()) {
        if (m[var] != k) continue;
        Monomial reduced = m;
        reduced[var] = 0;
        picked.emplace(std::move(reduced), c);
    }
    return MultiPoly::from_terms(f.ring(), std::move(picked));
}

// Highest registry index occurring in f or g, if any.
std::optional<std::size_t> top_variable(const MultiPoly& f, const MultiPoly& g) {
    const std::size_t n = f.ring()->size();
    for (std::size_t v = n; v-- > 0;)
        if (f.involves(v) || g.involves(v)) return v;
    return std::nullopt;
}

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
    MultiPoly cont(f.ring());
    for (std::uint64_t k = 0, d = f.degree_in(var); k <= d; ++k) {
        MultiPoly c = coeff_of_power(f, var, k);
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? c.monic() : poly_gcd(cont, c);
        if (cont.is_constant()) break;
    }
    return cont;
}

MultiPoly primitive_part(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) return f;
    return exact_divide(f, content_in(f, var)).monic();
}

// Pseudo-remainder of a by b with respect to var; deg_var(b) <= deg_var(a).
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
    const std::uint64_t db = b.degree_in(var);
    const MultiPoly lb = coeff_of_power(b, var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const std::uint64_t da = a.degree_in(var);
        const MultiPoly la = coeff_of_power(a, var, da);
        Monomial shift(a.ring()->size(), 0);
        shift[var] = static_cast<std::uint32_t>(da - db);
        a = a * lb - (b.mul_term(shift, GaussRational(1)) * la);
    }
    return a;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(f.ring(), GaussRational(1));

    const std::size_t var = *top_variable(f, g);
    const MultiPoly cf = content_in(f, var);
    const MultiPoly cg = content_in(g, var);
    const MultiPoly cont = poly_gcd(cf, cg);

    MultiPoly a = exact_divide(f, cf);
    MultiPoly b = exact_divide(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (true) {
        MultiPoly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) break;
        a = std::move(b);
        b = primitive_part(r, var);
    }
    return (cont * primitive_part(b, var)).monic();
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroInput, "square-free part of the zero polynomial");
    if (f.is_constant()) return MultiPoly::constant(f.ring(), GaussRational(1));
    MultiPoly common = f;
    for (std::size_t v = 0; v < f.ring()->size(); ++v) {
        if (!f.involves(v)) continue;
        common = poly_gcd(common, partial_derivative(f, v));
        if (common.is_constant()) break;
    }
    return exact_divide(f, common).monic();
}

// ---------------------------------------------------------------------------
// Substitution and derivatives

MultiPoly substitute(const MultiPoly& f, std::size_t var, const MultiPoly& value) {
    require_same_ring(f, value);
    if (var >= f.ring()->size()) fail(Errc::UnknownVariable, "variable index out of range");
    if (!f.involves(var)) return f;
    const auto coeffs = coeffs_in_var(f, var);
    MultiPoly acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * value + coeffs[k];
    return acc;
}

MultiPoly substitute(const MultiPoly& f, std::size_t var, const GaussRational& value) {
    return substitute(f, var, MultiPoly::constant(f.ring(), value));
}

MultiPoly substitute(const MultiPoly& f, const std::string& var, const MultiPoly& value) {
    return substitute(f, f.ring()->index_of(var), value);
}

MultiPoly substitute(const MultiPoly& f, const std::string& var, const GaussRational& value) {
    return substitute(f, f.ring()->index_of(var), value);
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
    if (var >= f.ring()->size()) fail(Errc::UnknownVariable, "variable index out of range");
    MultiPoly::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        out.emplace(std::move(dm), c * GaussRational(Rational(Int(m[var])), Rational(0)));
    }
    return MultiPoly::from_terms(f.ring(), std::move(out));
}

MultiPoly partial_derivative(const MultiPoly& f, const std::string& var) {
    return partial_derivative(f, f.ring()->index_of(var));
}

std::vector<MultiPoly> coeffs_in_var(const MultiPoly& f, std::size_t var) {
    if (var >= f.ring()->size()) fail(Errc::UnknownVariable, "variable index out of range");
    std::vector<MultiPoly> out(f.degree_in(var) + 1, MultiPoly::zero(f.ring()));
    for (const auto& [m, c] : f.terms()) {
        Monomial reduced = m;
        reduced[var] = 0;
        out[m[var]].insert_term(reduced, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resultant (Sylvester determinant, fraction-free elimination)

namespace {

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const RegistryPtr& ring) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(ring, GaussRational(1));
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(ring, GaussRational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return MultiPoly::zero(ring);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return MultiPoly::zero(f.ring());
    const auto fa = coeffs_in_var(f, var);
    const auto ga = coeffs_in_var(g, var);
    const std::size_t df = fa.size() - 1, dg = ga.size() - 1;
    if (df == 0 && dg == 0) return MultiPoly::constant(f.ring(), GaussRational(1));
    if (df == 0) return f.pow(dg);
    if (dg == 0) return g.pow(df);
    const std::size_t n = df + dg;
    std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly::zero(f.ring())));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j <= df; ++j) s[i][i + j] = fa[df - j];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t j = 0; j <= dg; ++j) s[dg + i][i + j] = ga[dg - j];
    return bareiss_determinant(std::move(s), f.ring());
}

// ---------------------------------------------------------------------------
// Ring transport and deterministic ordering

MultiPoly rename_ring(const MultiPoly& f, const RegistryPtr& target,
                      const std::vector<std::size_t>& var_map) {
    if (var_map.size() != f.ring()->size())
        fail(Errc::Internal, "variable map length mismatch");
    MultiPoly out(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial t(target->size(), 0);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (var_map[v] >= target->size())
                fail(Errc::UnknownVariable,
                     "variable " + f.ring()->name(v) + " has no image in the target ring");
            t[var_map[v]] += m[v];
        }
        out.insert_term(t, c);
    }
    return out;
}

int poly_cmp(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    auto it = a.terms().rbegin();
    auto jt = b.terms().rbegin();
    for (; it != a.terms().rend() && jt != b.terms().rend(); ++it, ++jt) {
        const int mc = mono_cmp_graded_lex(it->first, jt->first);
        if (mc != 0) return mc;
        if (it->second != jt->second)
            return scalar_less(it->second, jt->second) ? -1 : 1;
    }
    if (it != a.terms().rend()) return 1;
    if (jt != b.terms().rend()) return -1;
    return 0;
}

}  // namespace diffalg
