#include "homology/snf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homology {

std::vector<Int> SnfResult::diagonal() const
{
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

std::size_t SnfResult::rank() const
{
    std::size_t r = 0;
    for (const Int &e : diagonal()) {
        if (e != 0) ++r;
    }
    return r;
}

namespace {

// Position of the smallest nonzero |entry| in the submatrix m[t.., t..],
// or nothing if that submatrix is zero.
bool find_pivot(const IntMatrix &m, std::size_t t, std::size_t &pr, std::size_t &pc)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Int &e = m.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

bool pivot_is_lone(const IntMatrix &m, std::size_t t)
{
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) != 0) return false;
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) != 0) return false;
    }
    return true;
}

// First entry of m[t+1.., t+1..] not divisible by the pivot, if any.
bool find_nondivisible(const IntMatrix &m, std::size_t t, std::size_t &row)
{
    const Int &p = m.at(t, t);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (m.at(i, j) % p != 0) {
                row = i;
                return true;
            }
        }
    }
    return false;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &m)
{
    SnfResult r;
    r.u = IntMatrix::identity(m.rows());
    r.d = m;
    r.v = IntMatrix::identity(m.cols());

    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(r.d, t, pr, pc)) break; // remaining submatrix is zero

            // Smallest-|entry| pivoting keeps intermediate growth down.
            r.d.swap_rows(t, pr);
            r.u.swap_rows(t, pr);
            r.d.swap_cols(t, pc);
            r.v.swap_cols(t, pc);

            for (std::size_t i = t + 1; i < r.d.rows(); ++i) {
                if (r.d.at(i, t) != 0) {
                    Int q = r.d.at(i, t) / r.d.at(t, t);
                    r.d.add_row(i, t, -q);
                    r.u.add_row(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < r.d.cols(); ++j) {
                if (r.d.at(t, j) != 0) {
                    Int q = r.d.at(t, j) / r.d.at(t, t);
                    r.d.add_col(j, t, -q);
                    r.v.add_col(j, t, -q);
                }
            }
            if (!pivot_is_lone(r.d, t)) continue;

            // Fold a non-divisible entry into row t so the next rounds drive
            // the pivot down to the gcd; this is what yields the chain
            // d_t | d_{t+1} | ...
            std::size_t bad = 0;
            if (find_nondivisible(r.d, t, bad)) {
                r.d.add_row(t, bad, 1);
                r.u.add_row(t, bad, 1);
                continue;
            }
            break;
        }
        if (r.d.at(t, t) < 0) {
            r.d.negate_row(t);
            r.u.negate_row(t);
        }
    }
    return r;
}

AbelianGroup::AbelianGroup(std::vector<Int> invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank)
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) {
            throw std::invalid_argument("AbelianGroup: invariant factors must be >= 2");
        }
        if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
            throw std::invalid_argument("AbelianGroup: invariant factors must form a divisibility chain");
        }
    }
}

Int AbelianGroup::order() const
{
    if (free_rank_ != 0) {
        throw std::domain_error("AbelianGroup::order: group is infinite (free rank > 0)");
    }
    Int p = 1;
    for (const Int &f : factors_) p *= f;
    return p;
}

Int AbelianGroup::exponent() const
{
    if (free_rank_ != 0) {
        throw std::domain_error("AbelianGroup::exponent: group is infinite (free rank > 0)");
    }
    return factors_.empty() ? Int(1) : factors_.back();
}

std::string AbelianGroup::str() const
{
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int &f : factors_) {
        os << (first ? "" : " x ") << "Z_" << f;
        first = false;
    }
    if (free_rank_ > 0) {
        os << (first ? "" : " x ") << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
    }
    return os.str();
}

AbelianGroup quotient_structure(std::size_t ambient_rank, const IntMatrix &relations)
{
    if (relations.rows() > 0 && relations.cols() != ambient_rank) {
        throw std::invalid_argument("quotient_structure: relations have " +
                                    std::to_string(relations.cols()) + " columns, ambient rank is " +
                                    std::to_string(ambient_rank));
    }
    if (relations.rows() == 0) {
        return AbelianGroup({}, ambient_rank);
    }
    SnfResult snf = smith_normal_form(relations);
    std::vector<Int> factors;
    std::size_t rank = 0;
    for (const Int &e : snf.diagonal()) {
        if (e == 0) continue;
        ++rank;
        if (e > 1) factors.push_back(e);
    }
    return AbelianGroup(std::move(factors), ambient_rank - rank);
}

} // namespace homology
