#include "homology/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace homology {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>> &rows)
{
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix &rhs) const
{
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int &a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

Int IntMatrix::determinant() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("IntMatrix::determinant: matrix not square");
    }
    const std::size_t n = rows_;
    if (n == 0) return 1;

    // Bareiss: all intermediate values are minors of the input, so the
    // computation stays fraction-free.
    IntMatrix w(*this);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && w.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            w.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev; // exact division
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && at(i, j) != 0) return false;
        }
    }
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int &factor)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += factor * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int &factor)
{
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += factor * at(r, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) {
            os << (j ? " " : "") << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

} // namespace homology
