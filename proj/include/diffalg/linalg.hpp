#pragma once

#include <cstddef>
#include <vector>

#include "diffalg/scalar.hpp"

namespace diffalg {

/// Dense matrix over Q(i) for the exact kernel computations.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows, std::vector<GaussRational>(cols)) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussRational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRational& operator()(std::size_t r, std::size_t c) { return entries_[r][c]; }
    const GaussRational& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }

    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<GaussRational>> entries_;
};

/// Basis of {v : m v = 0}. Pivots are chosen column by column, taking the first
/// (lowest-index) row with a nonzero entry; each basis vector is scaled so its
/// first nonzero entry is 1. Full column rank yields the empty list.
std::vector<std::vector<GaussRational>> nullspace(const ExactMatrix& m);

/// Row rank by an independent echelon pass (shares no code with nullspace's
/// back-substitution; used as the cross-check oracle).
std::size_t rank(ExactMatrix m);

/// Smallest positive scalar multiple of v with integer entries and entry gcd 1.
/// All entries must be genuinely rational (im = 0) and v nonzero.
std::vector<Int> integer_scale(const std::vector<GaussRational>& v);

}  // namespace diffalg
