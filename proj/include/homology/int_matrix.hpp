#pragma once

#include "homology/bigint.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homology {

/**
 * Dense matrix of arbitrary-precision integers, row-major.
 *
 * Empty shapes (0 rows and/or 0 columns) are legal values, not errors; the
 * linear algebra below treats them as rank-0 inputs.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int &at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }
    const Int &at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

    IntMatrix multiply(const IntMatrix &rhs) const;

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    /// The 0x0 determinant is 1.
    Int determinant() const;

    bool is_diagonal() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += factor * row j
    void add_row(std::size_t i, std::size_t j, const Int &factor);
    /// col i += factor * col j
    void add_col(std::size_t i, std::size_t j, const Int &factor);
    void negate_row(std::size_t i);

    bool operator==(const IntMatrix &rhs) const = default;

    std::string str() const;

private:
    std::size_t index(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_) {
            throw std::out_of_range("IntMatrix: index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside " + std::to_string(rows_) +
                                    " x " + std::to_string(cols_));
        }
        return i * cols_ + j;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

} // namespace homology
