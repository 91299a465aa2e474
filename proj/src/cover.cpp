#include "homology/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace homology {

namespace {

void require_maclachlan(const Signature &sig, const char *who)
{
    MaclachlanCheck mc = maclachlan_check(sig);
    if (!mc.ok) {
        std::ostringstream os;
        os << who << ": signature " << sig.str() << " fails the lcm condition at order #"
           << *mc.failing_index;
        throw std::domain_error(os.str());
    }
}

} // namespace

CoverConstruction homology_cover_construction(const Signature &sig)
{
    require_maclachlan(sig, "homology_cover_construction");

    CoverConstruction c;
    c.mu = signature_lcm(sig);
    const std::size_t n = sig.size() - 1;
    c.ambient_rank = n;

    const auto &ks = sig.orders();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> coords(n, 0);
        coords[j] = ks[j];
        c.k_a_generators.emplace_back(std::move(coords), c.mu);
    }
    c.k_a_generators.emplace_back(std::vector<Int>(n, ks[n]), c.mu);

    // Z_mu^n is itself a quotient of Z^n, so the relation lattice is the
    // subgroup generators together with mu e_i for every i.
    IntMatrix relations(n + c.k_a_generators.size(), n);
    for (std::size_t i = 0; i < n; ++i) relations.at(i, i) = c.mu;
    for (std::size_t g = 0; g < c.k_a_generators.size(); ++g) {
        for (std::size_t j = 0; j < n; ++j) {
            relations.at(n + g, j) = c.k_a_generators[g].coords()[j];
        }
    }
    c.quotient = quotient_structure(n, relations);

    if (!(c.quotient == homology_group(sig))) {
        throw std::logic_error("homology_cover_construction: quotient " + c.quotient.str() +
                               " differs from the abelianization " + homology_group(sig).str() +
                               " for " + sig.str());
    }
    return c;
}

OrbifoldStructure orbifold_structure(const Signature &sig)
{
    require_maclachlan(sig, "orbifold_structure");

    OrbifoldStructure s;
    s.genus = homology_genus(sig);
    const Int mu = signature_lcm(sig);
    const Int order = homology_order(sig);

    // Branch indices sharing a cone order share a k value, so grouping by
    // cone order and summing |A|/k_j point counts loses nothing.
    std::map<Int, Int> points_by_cone_order;
    for (const Int &k : sig.orders()) {
        Int cone = mu / k;
        if (cone < 2) continue;
        points_by_cone_order[cone] += order / k;
    }
    for (const auto &[cone, count] : points_by_cone_order) {
        s.cone_classes.push_back(ConeClass{count, cone});
    }
    return s;
}

} // namespace homology
