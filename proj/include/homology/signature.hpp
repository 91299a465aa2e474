#pragma once

#include "homology/bigint.hpp"
#include "homology/snf.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homology {

/**
 * Branch data of a genus-zero orbifold: cone orders k_1 <= ... <= k_{n+1},
 * each at least 2, at least three of them. Input is sorted on construction;
 * was_reordered() reports whether sorting changed the given order.
 */
class Signature {
public:
    explicit Signature(std::vector<Int> orders);

    const std::vector<Int> &orders() const { return orders_; }
    std::size_t size() const { return orders_.size(); }
    bool was_reordered() const { return was_reordered_; }

    bool operator==(const Signature &other) const { return orders_ == other.orders_; }

    /// "(2, 5, 10)"
    std::string str() const;

private:
    std::vector<Int> orders_;
    bool was_reordered_ = false;
};

/// lcm of all cone orders.
Int signature_lcm(const Signature &sig);

struct MaclachlanCheck {
    bool ok = false;
    /// Smallest 1-based position whose removal changes the lcm; empty when ok.
    std::optional<std::size_t> failing_index;
};

/// Holds iff deleting any single entry leaves the lcm unchanged.
MaclachlanCheck maclachlan_check(const Signature &sig);

/**
 * Abelianization Z^{n+1} / <x_1 + ... + x_{n+1}, k_1 x_1, ..., k_{n+1} x_{n+1}>.
 * Always finite.
 */
AbelianGroup homology_group(const Signature &sig);

/**
 * (prod k_j) / lcm(k_j). Equals the order of homology_group(sig); the test
 * suite enforces that equality rather than assuming it.
 */
Int homology_order(const Signature &sig);

/**
 * Genus of the degree-homology_order cover attached to the signature, by
 * Riemann-Hurwitz: 1 + |A| (sum(1 - 1/k_j) - 2) / 2, computed exactly.
 *
 * Throws domain_error when sum(1 - 1/k_j) <= 2 (spherical or euclidean
 * signature) or when the value fails to be an integer, which can only
 * happen if the lcm condition fails.
 */
Int homology_genus(const Signature &sig);

/**
 * Combined answer to "is this the branch data of a homology cover, and of
 * what": lcm condition first, then group, order, and genus. cover_genus is
 * absent when the lcm condition fails (the genus formula need not be
 * integral there). Non-hyperbolic signatures that pass the lcm condition
 * still raise the homology_genus error.
 */
struct HomologyVerdict {
    bool maclachlan_ok = false;
    std::optional<std::size_t> failing_index;
    std::optional<Int> cover_genus;
    AbelianGroup group;
    Int group_order = 0;
};

HomologyVerdict is_homology_signature(const Signature &sig);

/// True iff the candidate is isomorphic to homology_group(sig).
bool is_homology_pair(const Signature &sig, const AbelianGroup &candidate);

} // namespace homology
