#include "diffalg/linalg.hpp"

#include <optional>

namespace diffalg {

std::vector<GaussRational> ExactMatrix::apply(const std::vector<GaussRational>& v) const {
    if (v.size() != cols_) fail(Errc::Internal, "matrix/vector size mismatch");
    std::vector<GaussRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        GaussRational acc;
        for (std::size_t c = 0; c < cols_; ++c) acc += entries_[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(ExactMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) { pivot = r; break; }
        }
        if (!pivot) continue;
        if (*pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(*pivot, c), m(row, c));
        }
        GaussRational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussRational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::vector<std::vector<GaussRational>> nullspace(const ExactMatrix& matrix) {
    ExactMatrix m = matrix;
    std::vector<std::size_t> pivot_cols = rref(m);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<GaussRational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussRational> v(m.cols());
        v[free_col] = GaussRational(1);
        for (std::size_t p = 0; p < pivot_cols.size(); ++p)
            v[pivot_cols[p]] = -m(p, free_col);
        // scale so the first nonzero entry is 1
        for (const GaussRational& e : v) {
            if (!e.is_zero()) {
                GaussRational inv = e.inverse();
                for (GaussRational& x : v) x = x * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(ExactMatrix m) {
    // Forward elimination only; deliberately not sharing the rref path.
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
        for (std::size_t rr = r + 1; rr < m.rows(); ++rr) {
            if (m(rr, col).is_zero()) continue;
            GaussRational factor = m(rr, col) / m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(rr, c) = m(rr, c) - factor * m(r, c);
        }
        ++r;
    }
    return r;
}

std::vector<Int> integer_scale(const std::vector<GaussRational>& v) {
    bool all_zero = true;
    for (const auto& e : v) {
        if (!e.im().is_zero()) fail(Errc::NonRationalEntry, "entry has nonzero imaginary part");
        if (!e.is_zero()) all_zero = false;
    }
    if (v.empty() || all_zero) fail(Errc::ZeroVector, "cannot scale the zero vector");

    Int lcm_den = 1;
    for (const auto& e : v) {
        Int den = e.re().den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    std::vector<Int> out;
    out.reserve(v.size());
    Int content = 0;
    for (const auto& e : v) {
        Int n = e.re().num() * (lcm_den / e.re().den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        out.push_back(n);
    }
    for (Int& n : out) n /= content;
    return out;
}

}  // namespace diffalg
