#pragma once

#include "homology/cover.hpp"
#include "homology/signature.hpp"
#include "homology/snf.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homology {

/**
 * One signature admitting a homology cover, with the data the exports use:
 * group, group order, cover genus, whether the signature is uniform (a
 * generalized Fermat type), and the quotient orbifold.
 */
struct CatalogEntry {
    Signature signature;
    AbelianGroup group;
    Int order;
    Int genus;
    bool is_fermat = false;
    OrbifoldStructure orbifold;
};

/**
 * Every signature whose homology cover has genus in [genus_min, genus_max],
 * sorted by genus, then length, then cone orders lexicographically.
 *
 * The search is pruned with |A| <= 4(genus_max + 1): each cone order divides
 * the exponent of A, so entries are bounded by the order cap, and
 * prod k_j = |A| * lcm <= |A|^2 bounds both the partial products and the
 * length. check_bounds re-verifies the order cap on the output, and the
 * tests replay small ranges against an unpruned enumeration.
 *
 * Requires 2 <= genus_min <= genus_max; anything else throws
 * invalid_argument, as does a genus_max too large to search exhaustively.
 */
std::vector<CatalogEntry> enumerate_homology_signatures(const Int &genus_min, const Int &genus_max);

/**
 * Order bounds evaluated on catalog output: |A| <= 4(g + 1) for every entry,
 * |A| <= 4g + 2 when the group is cyclic, and the Hurwitz bound
 * |A| <= 84(g - 1). violations lists one line per failed comparison.
 */
struct BoundCheck {
    std::size_t entries_checked = 0;
    bool order_bound_ok = true;
    bool cyclic_bound_ok = true;
    bool hurwitz_bound_ok = true;
    std::vector<std::string> violations;

    bool all_ok() const { return violations.empty(); }
};

BoundCheck check_bounds(const std::vector<CatalogEntry> &entries);

/**
 * Named example with frozen expectations. notes carries inert metadata such
 * as a defining curve equation; nothing computes from it.
 */
struct Fixture {
    std::string name;
    Signature signature;
    AbelianGroup expected_group;
    Int expected_genus;
    std::string notes;
};

/**
 * Result of replaying every fixture through the library. failures holds
 * "name: detail" lines; empty means every expectation matched.
 */
struct FixtureRun {
    std::vector<Fixture> fixtures;
    std::vector<std::string> failures;

    bool all_passed() const { return failures.empty(); }
};

/**
 * Worked examples with known groups, genera, and orbifold data: the cyclic
 * order-10 action in genus 2, the degree-7 Fermat curve, hyperelliptic
 * curves in genus 2 and 3, and the two-subgroup hyperelliptic families for
 * even genus 2 through 8. Expectations are frozen literals, not recomputed.
 */
FixtureRun reference_fixtures();

} // namespace homology
