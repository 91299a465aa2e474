#pragma once

#include "homology/fermat.hpp"
#include "homology/signature.hpp"
#include "homology/snf.hpp"

#include <vector>

namespace homology {

/**
 * Data realizing the homology cover of a signature inside the ambient
 * group Z_mu^n, mu the lcm of the cone orders: the subgroup generated by
 * k_j e_j (j <= n) and k_{n+1}(e_1 + ... + e_n), and the quotient of
 * Z_mu^n by it. The quotient is isomorphic to homology_group of the
 * signature; the constructor verifies this.
 */
struct CoverConstruction {
    Int mu;
    std::size_t ambient_rank = 0;               // n, the rank of Z_mu^n
    std::vector<ExponentVector> k_a_generators; // n+1 vectors, modulus mu
    AbelianGroup quotient;
};

/**
 * Builds the construction above. Requires the lcm condition (deleting any
 * entry keeps the lcm); signatures failing it throw domain_error. The
 * isomorphism check against homology_group throws logic_error on
 * mismatch, which would indicate a bug rather than bad input.
 */
CoverConstruction homology_cover_construction(const Signature &sig);

struct ConeClass {
    Int point_count;
    Int cone_order; // >= 2

    bool operator==(const ConeClass &rhs) const = default;
};

/**
 * The quotient orbifold of the homology cover by its deck group: genus of
 * the cover plus the cone points, aggregated over branch indices with the
 * same cone order mu/k_j. Branch indices with mu/k_j = 1 contribute
 * smooth points and are omitted. Classes are sorted by cone order.
 */
struct OrbifoldStructure {
    Int genus;
    std::vector<ConeClass> cone_classes;
};

/**
 * Computes the structure for a signature passing the lcm condition with a
 * hyperbolic cover. Lcm failures throw domain_error; non-hyperbolic
 * signatures propagate the homology_genus error.
 */
OrbifoldStructure orbifold_structure(const Signature &sig);

} // namespace homology
