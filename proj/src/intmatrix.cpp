#include "locperf/intmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace locperf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * x[j];
    return out;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss: exact integer elimination, prev pivot divides exactly.
    IntMatrix w(*this);
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::string IntMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix IntMatrix::from_text(std::istream& in) {
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix text: bad header (want 'rows cols')");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("matrix text: missing entries");
            m.at(i, j) = parse_integer(tok);
        }
    return m;
}

IntMatrix IntMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    IntMatrix m = from_text(in);
    std::string extra;
    if (in >> extra) throw std::invalid_argument("matrix text: trailing data");
    return m;
}

namespace {

// Row/column elementary operations on m mirrored into u (left) / v (right).
struct SnfWork {
    IntMatrix m, u, v;

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[dst] += k * row[src]
    void row_addmul(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += k * m.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += k * u.at(src, j);
    }
    // col[dst] += k * col[src]
    void col_addmul(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += k * m.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += k * v.at(i, src);
    }
    void row_negate(std::size_t r) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
    SnfWork w{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols())};
    const std::size_t rows = input.rows(), cols = input.cols();
    const std::size_t limit = rows < cols ? rows : cols;

    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // Smallest-|value| nonzero pivot in the trailing submatrix,
            // ties broken by lowest (row, col).
            std::size_t pi = rows, pj = cols;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Integer& x = w.m.at(i, j);
                    if (x == 0) continue;
                    Integer ax = abs(x);
                    if (pi == rows || ax < best) { pi = i; pj = j; best = ax; }
                }
            if (pi == rows) {
                // Trailing submatrix is zero; done.
                return {w.u, w.m, w.v};
            }
            w.row_swap(t, pi);
            w.col_swap(t, pj);
            if (w.m.at(t, t) < 0) w.row_negate(t);
            const Integer pivot = w.m.at(t, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.m.at(i, t) == 0) continue;
                w.row_addmul(i, t, -floor_div(w.m.at(i, t), pivot));
                if (w.m.at(i, t) != 0) dirty = true;  // remainder smaller than pivot
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.m.at(t, j) == 0) continue;
                w.col_addmul(j, t, -floor_div(w.m.at(t, j), pivot));
                if (w.m.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide everything that remains for the chain to hold.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (w.m.at(i, j) % pivot != 0) { bad_row = i; break; }
            if (bad_row != rows) {
                w.row_addmul(t, bad_row, 1);
                continue;
            }
            break;
        }
    }
    return {w.u, w.m, w.v};
}

std::optional<std::vector<Integer>> solve_linear(const IntMatrix& a, const std::vector<Integer>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    SnfResult snf = smith_normal_form(a);
    std::vector<Integer> ub = snf.u.apply(b);
    const std::size_t limit = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<Integer> z(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer d = i < limit ? snf.d.at(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            z[i] = ub[i] / d;
        }
    }
    return snf.v.apply(z);
}

}  // namespace locperf
