#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffalg/registry.hpp"
#include "diffalg/scalar.hpp"

namespace diffalg {

/// Exponent vector; one entry per registry variable.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t mono_degree(const Monomial& m);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& m, const Monomial& d);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// Graded lexicographic: total degree first, then lex by registry order.
int mono_cmp_graded_lex(const Monomial& a, const Monomial& b);
int mono_cmp_lex(const Monomial& a, const Monomial& b);

struct MonoGradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp_graded_lex(a, b) < 0;
    }
};

/// Sparse multivariate polynomial over Q or Q(i), canonical by construction:
/// no zero coefficients, terms keyed by exponent vector in graded-lex order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussRational, MonoGradedLexLess>;

    explicit MultiPoly(RegistryPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(const RegistryPtr& ring) { return MultiPoly(ring); }
    static MultiPoly constant(const RegistryPtr& ring, const GaussRational& c);
    static MultiPoly variable(const RegistryPtr& ring, std::size_t index);
    static MultiPoly variable(const RegistryPtr& ring, const std::string& name);
    static MultiPoly from_terms(RegistryPtr ring, TermMap terms);

    const RegistryPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant value; zero polynomial gives 0.
    GaussRational constant_value() const;

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint64_t degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;

    /// Leading data under graded-lex.
    const Monomial& leading_monomial() const;
    const GaussRational& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);

    MultiPoly scaled(const GaussRational& c) const;
    MultiPoly mul_term(const Monomial& m, const GaussRational& c) const;
    MultiPoly pow(std::uint64_t e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Scaled to leading coefficient 1 (zero stays zero).
    MultiPoly monic() const;

    /// If *this = c * o for a scalar c, returns c.
    std::optional<GaussRational> constant_ratio(const MultiPoly& o) const;

    std::string str() const;

    /// Accumulate c * m, keeping the no-zero-terms invariant.
    void insert_term(const Monomial& m, const GaussRational& c);

private:
    RegistryPtr ring_;
    TermMap terms_;
};

/// a + c*b in one pass.
MultiPoly add_scaled(const MultiPoly& a, const GaussRational& c, const MultiPoly& b);

void require_same_ring(const MultiPoly& a, const MultiPoly& b);

/// Exact quotient f/g; NotDivisible when none exists.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);
std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Monic gcd via primitive pseudo-remainder sequences on the last occurring
/// registry variable, with recursively computed contents.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

/// Product of the distinct irreducible factors of f, monic.
MultiPoly squarefree_part(const MultiPoly& f);

MultiPoly substitute(const MultiPoly& f, std::size_t var, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& f, std::size_t var, const GaussRational& value);
MultiPoly substitute(const MultiPoly& f, const std::string& var, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& f, const std::string& var, const GaussRational& value);

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);
MultiPoly partial_derivative(const MultiPoly& f, const std::string& var);

/// Dense coefficient list of f seen as a polynomial in `var` (index = power);
/// entries live in the same ring with `var` removed from their support.
std::vector<MultiPoly> coeffs_in_var(const MultiPoly& f, std::size_t var);

/// Determinant-based resultant of f and g with respect to `var`
/// (Sylvester matrix, fraction-free elimination).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Move a polynomial into another ring: var_map[i] is the index in `target`
/// of source variable i, or npos if unused (an error if it actually occurs).
MultiPoly rename_ring(const MultiPoly& f, const RegistryPtr& target,
                      const std::vector<std::size_t>& var_map);

/// Deterministic total order on polynomials of one ring (sorting only).
int poly_cmp(const MultiPoly& a, const MultiPoly& b);

}  // namespace diffalg
