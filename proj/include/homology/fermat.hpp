#pragma once

#include "homology/bigint.hpp"
#include "homology/int_matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace homology {

/**
 * Parameters (k, n) of a generalized Fermat curve: k-th power sums in n+1
 * variables, carrying an action of Z_k^n. Requires k, n >= 2 and
 * (k-1)(n-1) > 2 so the curve is hyperbolic.
 */
class FermatType {
public:
    FermatType(Int k, std::size_t n);

    const Int &k() const { return k_; }
    std::size_t n() const { return n_; }

    bool operator==(const FermatType &rhs) const = default;

private:
    Int k_;
    std::size_t n_ = 0;
};

/**
 * Element of Z_m^n as a coordinate vector, each entry reduced to [0, m).
 */
class ExponentVector {
public:
    ExponentVector(std::vector<Int> coords, Int modulus);

    const std::vector<Int> &coords() const { return coords_; }
    const Int &modulus() const { return modulus_; }
    std::size_t size() const { return coords_.size(); }

    bool is_zero() const;

    ExponentVector plus(const ExponentVector &rhs) const;
    ExponentVector scaled(const Int &factor) const;
    ExponentVector negated() const;

    bool operator==(const ExponentVector &rhs) const = default;

    /// "(4, 4) mod 5"
    std::string str() const;

private:
    std::vector<Int> coords_;
    Int modulus_;
};

/**
 * Genus 1 + k^{n-1} ((n-1)(k-1) - 2) / 2. Verified on every call against
 * the Riemann-Hurwitz genus of the uniform signature (k, ..., k) with n+1
 * entries; disagreement throws logic_error.
 */
Int fermat_genus(const FermatType &t);

/**
 * The n+1 distinguished coordinate rotations a_1, ..., a_{n+1} of Z_k^n:
 * the standard basis followed by a_{n+1} = -(a_1 + ... + a_n).
 */
std::vector<ExponentVector> generators(const FermatType &t);

struct AxialPower {
    std::size_t axis = 0; // 1-based index into generators()
    Int exponent;         // in [1, k)

    bool operator==(const AxialPower &rhs) const = default;
};

/**
 * Identifies v as a nontrivial power of one of the n+1 distinguished
 * rotations; those are exactly the elements acting with fixed points.
 * Returns nothing for the identity and for elements acting freely.
 */
std::optional<AxialPower> fixed_point_classification(const FermatType &t, const ExponentVector &v);

/**
 * Linear map M on Z_k^n sending each distinguished rotation a_j to
 * a_{sigma(j)}, as an n x n matrix with entries in [0, k). sigma is given
 * as 1-based images, length n+1. M is uniquely determined by the images
 * of a_1, ..., a_n; compatibility with a_{n+1} is rechecked and a
 * mismatch (impossible for a true permutation) throws logic_error.
 */
IntMatrix permutation_action(const FermatType &t, const std::vector<std::size_t> &sigma);

/// Branch value: exact rational or named symbol.
using LambdaValue = std::variant<Rational, std::string>;

/**
 * One defining equation lambda_{index} x_a^k + x_b^k + x_c^k = 0.
 * lambda index 0 denotes the constant 1.
 */
struct CurveEquation {
    std::size_t lambda_index = 0;
    std::array<std::size_t, 3> variables{}; // 1-based

    bool operator==(const CurveEquation &rhs) const = default;
};

/**
 * Fiber-product model of the generalized Fermat curve of type (k, n):
 * n-1 equations in variables x_1, ..., x_{n+1}, branched over
 * inf, 0, 1, lambda_1, ..., lambda_{n-2}.
 */
struct CurveModel {
    Int degree;
    std::size_t num_variables = 0;
    std::vector<CurveEquation> equations;
    std::vector<LambdaValue> lambdas;

    /// Rendering of lambda_index (index 0 is "1").
    std::string lambda_repr(std::size_t index) const;
    /// "inf", "0", "1", then the lambdas in order.
    std::vector<std::string> branch_values() const;
    /// One equation per line.
    std::string str() const;
};

/**
 * Builds the model for type t from the n-2 branch values specified after
 * the conventional inf, 0, 1. Branch values must be finite, pairwise
 * distinct, and different from 0 and 1; violations throw invalid_argument.
 */
CurveModel curve_model(const FermatType &t, const std::vector<LambdaValue> &lambdas);

} // namespace homology
