#ifndef LOCPERF_INTMATRIX_HPP
#define LOCPERF_INTMATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "locperf/integer.hpp"

namespace locperf {

/// Dense integer matrix, row-major, arbitrary-precision entries.
/// Empty shapes (0 rows and/or 0 columns) are legal.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    IntMatrix multiplied(const IntMatrix& rhs) const;
    IntMatrix transposed() const;
    std::vector<Integer> apply(const std::vector<Integer>& x) const;

    /// Exact determinant (square matrices) by fraction-free Bareiss elimination.
    Integer determinant() const;

    bool is_diagonal() const;

    /// Text format: first line "rows cols", then one line of entries per row.
    std::string to_text() const;
    static IntMatrix from_text(std::istream& in);
    static IntMatrix from_text(const std::string& text);

  private:
    std::size_t rows_, cols_;
    std::vector<Integer> entries_;
};

struct SnfResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form u*m*v = d. Pivoting picks the nonzero entry of
/// smallest absolute value, ties broken by lowest (row, col), so the
/// output is deterministic.
SnfResult smith_normal_form(const IntMatrix& m);

/// Any integer solution x of a*x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_linear(const IntMatrix& a, const std::vector<Integer>& b);

}  // namespace locperf

#endif
