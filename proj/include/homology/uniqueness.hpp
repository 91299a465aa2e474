#pragma once

#include "homology/fermat.hpp"
#include "homology/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homology {

/**
 * Order of the image of a cone point of order `existing` under the
 * quotient by a stabilizer of order `stabilizer`: their product. A result
 * of 1 means the image is a regular point.
 */
Int quotient_cone_order(const Int &stabilizer, const Int &existing);

enum class ActingGroup { cyclic, klein };

/**
 * One way a cyclic or Klein group can act on the genus-zero orbifold of a
 * generalized Fermat curve of the given base type, recorded through the
 * shape of the quotient orbifold.
 *
 * quotient_orders lists the images of the base cone points: alpha points
 * keep order k, the others are absorbed into points of order q*k (cyclic,
 * beta of them) or 2k and 2 (Klein, beta1 and beta2). For cyclic actions
 * the rotation also has fixed points away from the base cone points when
 * beta < 2; full_quotient_orders() appends those bare order-q points,
 * which plain quotient_orders omits.
 */
struct QuotientScenario {
    FermatType base_type;
    ActingGroup acting_group;
    Int group_order;  // q >= 2 for cyclic, 4 for Klein
    Int alpha;
    Int beta;         // cyclic only: in {0, 1, 2}
    Int beta1, beta2; // Klein only: beta1 + beta2 = 3
    std::vector<Int> quotient_orders; // sorted
    bool valid_orbifold = false;      // at least 3 cone points

    /// Present exactly when valid_orbifold.
    std::optional<Signature> resulting_signature() const;

    /// quotient_orders plus the bare fixed points of a cyclic rotation.
    std::vector<Int> full_quotient_orders() const;

    std::string str() const;
};

/**
 * All (alpha >= 1, beta in {0,1,2}) with n+1 = alpha*q + beta, each giving
 * the quotient shape (k x alpha, qk x beta). Empty when no solution.
 * Requires q >= 2.
 */
std::vector<QuotientScenario> cyclic_case_signatures(const FermatType &t, const Int &q);

/**
 * All (alpha >= 0, beta1 + beta2 = 3) with n+1 = 4*alpha + 2*beta1, each
 * giving the quotient shape (k x alpha, 2k x beta1, 2 x beta2).
 */
std::vector<QuotientScenario> klein_case_signatures(const FermatType &t);

struct CaseVerdict {
    std::string label; // one of 1, 2a, 2b, 3a, 3b, 3c, 3d
    bool feasible = false;
    std::string reason;
};

/**
 * Result of testing whether generalized Fermat groups of two distinct
 * types could act on the same surface. The named cases cover the
 * combinations of induced cyclic and Klein actions; each is replayed as a
 * concrete constraint check in both role orderings. feasible_overall also
 * folds in an exhaustive scan over all scenario pairs (cone-order
 * multisets, group-order bookkeeping, exponent divisibility), so a shape
 * the named chains miss still gets flagged rather than slipping through.
 */
struct CoexistenceReport {
    FermatType type_a;
    FermatType type_b;
    Int genus_a;
    Int genus_b;
    bool same_genus = false;
    std::vector<CaseVerdict> case_verdicts; // empty when genera differ
    bool feasible_overall = false;
};

/**
 * Requires a.k() != b.k(); equal degrees throw invalid_argument since a
 * fixed degree admits a unique such group. When the genera differ, the
 * report short-circuits with no case verdicts.
 */
CoexistenceReport coexistence_check(const FermatType &a, const FermatType &b);

/**
 * Enumerates every valid type with k <= k_max and n <= n_max, groups them
 * by genus, and runs coexistence_check across each same-genus pair of
 * distinct degrees. Reports are sorted by (genus, k, n) of the first
 * type. Every pair is expected to be refuted; a feasible report throws
 * logic_error, as it would mean two distinct types share a surface.
 * Requires k_max >= 3 and n_max >= 2.
 */
std::vector<CoexistenceReport> genus_collision_scan(long long k_max, std::size_t n_max);

struct DiophantineEquation {
    std::string name;
    bool solution_found = false;
    /// Smallest p from which the left side exceeds the right through p_max.
    long long first_dominant = 0;
    /// Smallest p from which left/right strictly increases through p_max.
    long long ratio_monotone_from = 0;
    /// first_dominant found, monotone from no later than it, no solutions.
    bool dominance_certified = false;
};

struct DiophantineReport {
    long long p_max = 0;
    std::vector<DiophantineEquation> equations;
    bool any_solution = false;
};

/**
 * Checks 3*2^(3p) = 32*p^2 and 2^(3p) = 256*p^6 for integer solutions
 * p in [2, p_max], exactly, and certifies that past an explicit crossover
 * the left sides dominate with strictly increasing ratio. Requires
 * p_max >= 2.
 */
DiophantineReport diophantine_check(long long p_max);

} // namespace homology
