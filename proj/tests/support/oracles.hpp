// Test-only reference implementations, kept independent of the library code
// they cross-check.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <crnbinom/matrix.hpp>
#include <crnbinom/rational.hpp>

namespace oracle {

using crnbinom::Rational;
using RatRows = std::vector<std::vector<Rational>>;

inline RatRows to_rows(const crnbinom::RationalMatrix& m) {
    RatRows rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

inline crnbinom::RationalMatrix from_rows(const RatRows& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    crnbinom::RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline crnbinom::RationalMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    crnbinom::RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = crnbinom::rational_of(rows[i][j]);
    return m;
}

/// Textbook two-phase reduction: forward elimination to echelon form, then
/// back-substitution and normalization. Written separately from the library's
/// single-pass Gauss-Jordan on purpose.
inline RatRows naive_rref(RatRows m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t i = top; i < rows; ++i)
            if (m[i][col] != 0) {
                found = i;
                break;
            }
        if (found == rows) continue;
        std::swap(m[top], m[found]);
        for (std::size_t i = top + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const Rational ratio = m[i][col] / m[top][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= ratio * m[top][j];
        }
        pivot_cols.push_back(col);
        ++top;
    }
    for (std::size_t p = pivot_cols.size(); p-- > 0;) {
        const std::size_t col = pivot_cols[p];
        const Rational scale = 1 / m[p][col];
        for (std::size_t j = 0; j < cols; ++j) m[p][j] *= scale;
        for (std::size_t i = 0; i < p; ++i) {
            const Rational ratio = m[i][col];
            if (ratio == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= ratio * m[p][j];
        }
    }
    return m;
}

/// Fraction-free (Bareiss) elimination over integers; returns the rank.
/// Intermediates ride in 128-bit, entries stay minors of the input.
inline std::size_t bareiss_rank(std::vector<std::vector<long long>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    long long prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                const __int128 num =
                    (__int128)a[rank][col] * a[i][j] - (__int128)a[i][col] * a[rank][j];
                a[i][j] = (long long)(num / prev);
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<long long>> random_int_matrix(std::mt19937_64& rng,
                                                             std::size_t rows, std::size_t cols,
                                                             long long lo, long long hi) {
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    const auto span = std::uint64_t(hi - lo + 1);
    for (auto& row : m)
        for (auto& cell : row) cell = lo + (long long)(rng() % span);
    return m;
}

/// Replays one pivot step of plain row elimination (no normalization, no row
/// swaps): zeroes column `col` everywhere except the pivot row.
inline void eliminate_column(RatRows& m, std::size_t pivot_row, std::size_t col) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (i == pivot_row || m[i][col] == 0) continue;
        const Rational mult = -m[i][col] / m[pivot_row][col];
        for (std::size_t j = 0; j < cols; ++j)
            if (m[pivot_row][j] != 0) m[i][j] += mult * m[pivot_row][j];
    }
}

}  // namespace oracle
