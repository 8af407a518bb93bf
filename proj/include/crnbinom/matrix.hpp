#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crnbinom/decomposition.hpp"
#include "crnbinom/network.hpp"
#include "crnbinom/rational.hpp"
#include "crnbinom/verdict.hpp"

namespace crnbinom {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(cells_[a * cols_ + j], cells_[b * cols_ + j]);
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> cells_;
};

/// Integer coefficient matrix: one row per species (network order), one
/// column per non-degenerate reaction (network order); entry (k, j) is the
/// stoichiometric difference of species k across reaction j.
struct BinomialCoefficientMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> entries;                 // row-major
    std::vector<std::string> row_labels;            // species names
    std::vector<std::string> col_labels;            // binomial names
    std::vector<std::uint32_t> column_reactions;    // column -> reaction index

    long long at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

namespace detail {

/// "k12" -> "b12"; anything else gets a positional fallback.
inline std::string binomial_name(const ReversibleReaction& rx) {
    if (rx.forward_label.size() > 1 && rx.forward_label[0] == 'k')
        return "b" + rx.forward_label.substr(1);
    return "b_" + std::to_string(rx.index + 1);
}

}  // namespace detail

inline BinomialCoefficientMatrix build_matrix(const ReactionNetwork& net) {
    BinomialCoefficientMatrix m;
    m.rows = net.species_count();
    m.row_labels = net.species_names();
    for (const auto& rx : net.reactions) {
        if (rx.degenerate()) continue;  // zero binomial: no column
        m.column_reactions.push_back(rx.index);
        m.col_labels.push_back(detail::binomial_name(rx));
    }
    m.cols = m.column_reactions.size();
    m.entries.assign(m.rows * m.cols, 0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const auto& rx = net.reactions[m.column_reactions[j]];
        bool nonzero = false;
        for (std::size_t k = 0; k < m.rows; ++k) {
            const long long c = species_coefficient(rx, std::uint32_t(k));
            m.entries[k * m.cols + j] = c;
            nonzero |= c != 0;
        }
        if (!nonzero)
            throw std::logic_error("all-zero column for non-degenerate reaction");
    }
    return m;
}

inline RationalMatrix to_rational(const BinomialCoefficientMatrix& m) {
    RationalMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = rational_of(m.at(i, j));
    return out;
}

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t rank = 0;
};

/// Gauss-Jordan over exact rationals. Pivoting is deterministic: columns left
/// to right, topmost nonzero row; zero rows end up last. The result is the
/// unique reduced row echelon form of the row space.
inline RrefResult rref(RationalMatrix m) {
    RrefResult result;
    std::size_t pivot_row = 0;
    Rational factor, tmp;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t row = pivot_row;
        while (row < m.rows() && m.at(row, col) == 0) ++row;
        if (row == m.rows()) continue;
        m.swap_rows(row, pivot_row);
        const Rational inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (m.at(pivot_row, j) != 0) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (m.at(pivot_row, j) == 0) continue;
                tmp = factor * m.at(pivot_row, j);
                m.at(i, j) -= tmp;
            }
        }
        result.pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }
    result.rank = result.pivots.size();
    result.matrix = std::move(m);
    return result;
}

struct MatrixCheck {
    Verdict verdict = Verdict::UnconditionallyBinomial;
    std::vector<std::size_t> violating_rows;        // RREF row indices with > 1 nonzero
    std::vector<std::string> violating_species;     // positional row labels, if supplied
};

/// Row criterion: binomial iff every RREF row has at most one nonzero entry.
inline MatrixCheck is_unconditionally_binomial_matrix(
    const RrefResult& r, const std::vector<std::string>& row_labels = {}) {
    MatrixCheck check;
    for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
        std::size_t nonzeros = 0;
        for (std::size_t j = 0; j < r.matrix.cols(); ++j)
            if (r.matrix.at(i, j) != 0 && ++nonzeros > 1) break;
        if (nonzeros > 1) {
            check.violating_rows.push_back(i);
            if (i < row_labels.size()) check.violating_species.push_back(row_labels[i]);
        }
    }
    if (!check.violating_rows.empty()) check.verdict = Verdict::NotUnconditionallyBinomial;
    return check;
}

/// Aligned text table with row and column labels; entries as exact rationals.
inline std::string format_matrix_table(const RationalMatrix& m,
                                       const std::vector<std::string>& row_labels,
                                       const std::vector<std::string>& col_labels) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> widths(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        widths[j] = j < col_labels.size() ? col_labels[j].size() : 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            cells[i][j] = to_string(m.at(i, j));
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    }
    std::size_t label_width = 0;
    for (const auto& label : row_labels) label_width = std::max(label_width, label.size());
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (std::size_t j = 0; j < m.cols(); ++j)
        out << "  " << pad(j < col_labels.size() ? col_labels[j] : "", widths[j]);
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << pad(i < row_labels.size() ? row_labels[i] : "", label_width);
        for (std::size_t j = 0; j < m.cols(); ++j) out << "  " << pad(cells[i][j], widths[j]);
        out << '\n';
    }
    return out.str();
}

inline std::string format_matrix_table(const BinomialCoefficientMatrix& m) {
    return format_matrix_table(to_rational(m), m.row_labels, m.col_labels);
}

}  // namespace crnbinom
