#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diffalg/derivation.hpp"
#include "diffalg/groebner.hpp"

namespace diffalg {

/// Df = w*f exactly; f has leading coefficient 1.
struct DarbouxPair {
    MultiPoly f;
    MultiPoly w;
};

/// A positive-dimensional solution branch found by darboux_search: every
/// member of an affine family of degree-`degree` polynomials with leading
/// monomial `lead` is Darboux, so the family is flagged, not enumerated.
struct FamilyFlag {
    std::uint64_t degree;
    Monomial lead;
};

struct CofactorSpace {
    Derivation derivation;
    std::vector<DarbouxPair> pairs;
    std::vector<std::vector<Int>> relation_basis;
    std::vector<FamilyFlag> families;
};

struct ResidueReport {
    bool solvable = false;
    /// (root, c / p'(root)) in input order.
    std::vector<std::pair<GaussRational, GaussRational>> residues;
    /// Present iff solvable: the exponent at each root.
    std::vector<std::pair<GaussRational, Int>> exponents;
    /// Present iff solvable: Y = prod (X - r)^{n_r}, verified to satisfy DY = cY.
    std::optional<RationalFunction> witness;
};

/// The w with apply(D, f) = w*f, when f divides its image exactly.
std::optional<MultiPoly> cofactor(const MultiPoly& f, const Derivation& d);

/// Coefficient recursion for Df = zf in one designated variable, for the
/// coordinatewise cubic derivation (image v^3 - 2v^2 + 2v per variable):
/// writing z = b2*var^2 + b1*var + b0 with b's free of var, a solution needs
/// b2 = N a positive integer; then a_N = 1, a_{N-1} = -(b1 + 2N) and
/// (N - i)a_i = D(a_{i+2}) + (2i + 4 - b0)a_{i+2} - (b1 + 2(i+1))a_{i+1}
/// downward. Returns the candidate iff the full identity Df = zf verifies.
std::optional<MultiPoly> eigenpoly_solve(const MultiPoly& z, const Derivation& d,
                                         const std::string& var);

/// All Darboux pairs with deg f <= degree_bound, one per scalar class
/// (leading coefficient 1), minus any f another returned f divides exactly.
/// Positive-dimensional branches are reported in `families` instead.
CofactorSpace darboux_search(const Derivation& d, std::uint64_t degree_bound,
                             std::uint64_t degree_budget = kDefaultDegreeBudget);

/// Integer basis of { n : sum_i n_i * w_i = 0 } over the space's cofactors.
std::vector<std::vector<Int>> cofactor_relations(const CofactorSpace& space);

/// prod f_i^{n_i} for an integer relation among the cofactors; the result
/// differentiates to exactly zero (verified).
RationalFunction first_integral(const CofactorSpace& space, const std::vector<Int>& relation);

/// Residue criterion for DY = cY with D = p * d/dX on rational functions of
/// one variable: solvable iff every residue c / p'(r) at the roots r of the
/// monic squarefree p is a rational integer; the witness is then
/// Y = prod (X - r)^{c/p'(r)}.
ResidueReport eigenvalue_rational_solvable(const MultiPoly& p,
                                           const std::vector<GaussRational>& roots,
                                           const GaussRational& c);

}  // namespace diffalg
