#pragma once

#include "homology/catalog.hpp"
#include "homology/cover.hpp"
#include "homology/fermat.hpp"
#include "homology/signature.hpp"
#include "homology/snf.hpp"
#include "homology/uniqueness.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace homology {

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json int_to_json(const Int &value);

nlohmann::json to_json(const Signature &sig);
nlohmann::json to_json(const AbelianGroup &group);
nlohmann::json to_json(const HomologyVerdict &verdict, const Signature &sig);
nlohmann::json to_json(const OrbifoldStructure &orbifold);
nlohmann::json to_json(const CoverConstruction &cover);
nlohmann::json to_json(const CurveModel &model);
nlohmann::json to_json(const CatalogEntry &entry);
nlohmann::json to_json(const CoexistenceReport &report);
nlohmann::json to_json(const DiophantineReport &report);
nlohmann::json to_json(const FixtureRun &run);

nlohmann::json catalog_to_json(const std::vector<CatalogEntry> &entries);

/**
 * Header row plus one line per entry, comma separated. Multi-valued fields
 * use spaces inside ("2 5 10") and cone classes render as
 * count x order pairs ("2x2 5x5"), so no quoting is needed.
 */
std::string catalog_csv(const std::vector<CatalogEntry> &entries);

/// "homology signature; group Z_10; genus 2" or the failure reason.
std::string describe(const HomologyVerdict &verdict);
/// "genus 2; 2 points of order 2, 5 points of order 5".
std::string describe(const OrbifoldStructure &orbifold);
/// Multi-line rendering: modulus, rank, generators, quotient.
std::string describe(const CoverConstruction &cover);
/// One line per case label with its refutation.
std::string describe(const CoexistenceReport &report);
/// One line per equation with crossover and certificate status.
std::string describe(const DiophantineReport &report);

} // namespace homology
