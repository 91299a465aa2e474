#pragma once

#include "homology/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homology {

/**
 * Smith decomposition u*m*v = d of an integer matrix m:
 * u, v unimodular, d diagonal with d_1 | d_2 | ... and non-negative entries.
 */
struct SnfResult {
    IntMatrix u; // rows x rows, left transform
    IntMatrix d; // rows x cols, diagonal
    IntMatrix v; // cols x cols, right transform

    std::vector<Int> diagonal() const;
    std::size_t rank() const;
};

/// Total on all integer matrices, including empty shapes.
SnfResult smith_normal_form(const IntMatrix &m);

/**
 * Finite(ly generated) abelian group in canonical form: invariant factors
 * d_1 | d_2 | ..., each >= 2, plus a free rank. Factors equal to 1 are
 * never stored.
 */
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(std::vector<Int> invariant_factors, std::size_t free_rank);

    const std::vector<Int> &invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }

    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    /// Z_n for some n (or trivial); at most one invariant factor.
    bool is_cyclic() const { return factors_.size() <= 1 && free_rank_ == 0; }

    /// Product of the invariant factors. Only defined for finite groups.
    Int order() const;
    /// Largest invariant factor (1 for the trivial group). Finite groups only.
    Int exponent() const;

    bool operator==(const AbelianGroup &rhs) const = default;

    /// "Z_2 x Z_6", "Z^2", "0", ...
    std::string str() const;

private:
    std::vector<Int> factors_;
    std::size_t free_rank_ = 0;
};

/**
 * Structure of Z^ambient_rank / (row lattice of relations).
 *
 * Throws std::invalid_argument unless relations has ambient_rank columns.
 */
AbelianGroup quotient_structure(std::size_t ambient_rank, const IntMatrix &relations);

} // namespace homology
