#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homology/catalog.hpp"
#include "homology/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

using homology::AbelianGroup;
using homology::BoundCheck;
using homology::CatalogEntry;
using homology::ConeClass;
using homology::FixtureRun;
using homology::Int;
using homology::Signature;

namespace {

// Unpruned reference enumeration: every non-decreasing tuple with entries up
// to 4(gmax+1) and length up to 2*log2(4(gmax+1)) + 2 is tested directly.
// The divisibility condition is phrased as "each entry divides the lcm of
// the others" and the genus comes from one big integer numerator, so both
// checks take a different route than the library. With use_product_cutoff
// the tuple product is additionally capped at (4(gmax+1))^2, which the
// pruning argument in the library derives; the cutoff keeps larger gmax
// tractable and is itself validated by the cutoff-free runs at small gmax.
std::vector<std::pair<std::vector<long long>, Int>> oracle_signatures(long long gmin, long long gmax,
                                                                      bool use_product_cutoff) {
    const long long entry_cap = 4 * (gmax + 1);
    const std::size_t length_cap =
        static_cast<std::size_t>(2.0 * std::log2(static_cast<double>(entry_cap))) + 2;

    std::vector<std::pair<std::vector<long long>, Int>> found;
    const auto test_tuple = [&](const std::vector<long long> &t) {
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            long long others = 1;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != skip)
                    others = std::lcm(others, t[j]);
            if (others % t[skip] != 0)
                return; // removing position skip changes the lcm
        }
        Int product = 1;
        long long mu = 1;
        for (long long k : t) {
            product *= k;
            mu = std::lcm(mu, k);
        }
        // 2(g - 1) * mu = sum_j (product / k_j)(k_j - 1) - 2 * product.
        Int numerator = -2 * product;
        for (long long k : t)
            numerator += product / k * (k - 1);
        if (numerator <= 0)
            return; // spherical or euclidean
        if (numerator % (2 * mu) != 0)
            return;
        Int genus = 1 + numerator / (2 * mu);
        if (genus >= gmin && genus <= gmax)
            found.emplace_back(t, genus);
    };

    std::vector<long long> t;
    const auto recurse = [&](const auto &self, long long lo, long long product) -> void {
        if (t.size() >= 3)
            test_tuple(t);
        if (t.size() == length_cap)
            return;
        for (long long k = lo; k <= entry_cap; ++k) {
            if (use_product_cutoff && product > entry_cap * entry_cap / k)
                break;
            t.push_back(k);
            self(self, k, product * k);
            t.pop_back();
        }
    };
    recurse(recurse, 2, 1);

    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second)
            return a.second < b.second;
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return found;
}

std::vector<long long> to_ll(const Signature &sig) {
    std::vector<long long> out;
    for (const Int &k : sig.orders())
        out.push_back(k.convert_to<long long>());
    return out;
}

} // namespace

TEST_CASE("enumerate_homology_signatures rejects bad ranges") {
    CHECK_THROWS_AS(homology::enumerate_homology_signatures(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(homology::enumerate_homology_signatures(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(homology::enumerate_homology_signatures(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(homology::enumerate_homology_signatures(2, Int("10000000000")),
                    std::invalid_argument);
}

TEST_CASE("genus 2 catalog is exactly the three known signatures") {
    const auto cat = homology::enumerate_homology_signatures(2, 2);
    REQUIRE(cat.size() == 3);

    CHECK(cat[0].signature == Signature({2, 5, 10}));
    CHECK(cat[0].group == AbelianGroup({10}, 0));
    CHECK(cat[0].order == 10);
    CHECK(cat[0].orbifold.cone_classes == std::vector<ConeClass>{{2, 2}, {5, 5}});

    CHECK(cat[1].signature == Signature({2, 6, 6}));
    CHECK(cat[1].group == AbelianGroup({2, 6}, 0));
    CHECK(cat[1].order == 12);
    CHECK(cat[1].orbifold.cone_classes == std::vector<ConeClass>{{6, 3}});

    CHECK(cat[2].signature == Signature({2, 2, 3, 3}));
    CHECK(cat[2].group == AbelianGroup({6}, 0));
    CHECK(cat[2].order == 6);
    CHECK(cat[2].orbifold.cone_classes == std::vector<ConeClass>{{4, 2}, {6, 3}});

    for (const CatalogEntry &e : cat) {
        CHECK(e.genus == 2);
        CHECK_FALSE(e.is_fermat);
        CHECK(e.orbifold.genus == 2);
    }
}

TEST_CASE("genus 3 catalog contains the pinned entries") {
    const auto cat = homology::enumerate_homology_signatures(3, 3);
    const auto find = [&](std::vector<Int> orders) -> const CatalogEntry * {
        const Signature want(std::move(orders));
        for (const CatalogEntry &e : cat)
            if (e.signature == want)
                return &e;
        return nullptr;
    };

    const CatalogEntry *hyp = find({2, 8, 8});
    REQUIRE(hyp != nullptr);
    CHECK(hyp->group == AbelianGroup({2, 8}, 0));
    CHECK_FALSE(hyp->is_fermat);

    const CatalogEntry *fermat = find({4, 4, 4});
    REQUIRE(fermat != nullptr);
    CHECK(fermat->group == AbelianGroup({4, 4}, 0));
    CHECK(fermat->is_fermat);

    const CatalogEntry *mixed = find({3, 4, 12});
    REQUIRE(mixed != nullptr);
    CHECK(mixed->group == AbelianGroup({12}, 0));
}

TEST_CASE("catalog matches the unpruned oracle for small genus") {
    for (long long gmax : {2, 3}) {
        const auto cat = homology::enumerate_homology_signatures(2, gmax);
        const auto expected = oracle_signatures(2, gmax, false);
        REQUIRE(cat.size() == expected.size());
        for (std::size_t i = 0; i < cat.size(); ++i) {
            CHECK(to_ll(cat[i].signature) == expected[i].first);
            CHECK(cat[i].genus == expected[i].second);
        }
    }
}

TEST_CASE("catalog matches the product-cutoff oracle through genus 6") {
    const auto cat = homology::enumerate_homology_signatures(2, 6);
    const auto expected = oracle_signatures(2, 6, true);
    REQUIRE(cat.size() == expected.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(to_ll(cat[i].signature) == expected[i].first);
        CHECK(cat[i].genus == expected[i].second);
    }
}

TEST_CASE("catalog entries carry consistent data") {
    const auto cat = homology::enumerate_homology_signatures(2, 6);
    REQUIRE(cat.size() > 10);

    std::set<std::vector<long long>> seen;
    for (const CatalogEntry &e : cat) {
        CHECK(seen.insert(to_ll(e.signature)).second);
        CHECK(maclachlan_check(e.signature).ok);
        CHECK(e.order == homology::homology_order(e.signature));
        CHECK(e.order == e.group.order());
        CHECK(e.genus == homology::homology_genus(e.signature));
        CHECK(e.orbifold.genus == e.genus);

        const auto &ks = e.signature.orders();
        const bool uniform = std::all_of(ks.begin(), ks.end(),
                                         [&](const Int &k) { return k == ks.front(); });
        CHECK(e.is_fermat == uniform);

        // Cone classes account for exactly the branch indices with k_j < mu.
        const Int mu = homology::signature_lcm(e.signature);
        Int expected_points = 0;
        for (const Int &k : ks)
            if (k != mu)
                expected_points += e.order / k;
        Int listed_points = 0;
        for (const ConeClass &c : e.orbifold.cone_classes) {
            CHECK(c.cone_order >= 2);
            listed_points += c.point_count;
        }
        CHECK(listed_points == expected_points);
    }

    // Sorted by genus, then length, then orders.
    for (std::size_t i = 1; i < cat.size(); ++i) {
        const auto &a = cat[i - 1];
        const auto &b = cat[i];
        const auto key = [](const CatalogEntry &e) {
            return std::make_tuple(e.genus, e.signature.size(), e.signature.orders());
        };
        CHECK(key(a) < key(b));
    }
}

TEST_CASE("genus range filtering is a slice of the full run") {
    const auto full = homology::enumerate_homology_signatures(2, 6);
    const auto slice = homology::enumerate_homology_signatures(4, 5);

    std::vector<std::vector<long long>> expected;
    for (const CatalogEntry &e : full)
        if (e.genus >= 4 && e.genus <= 5)
            expected.push_back(to_ll(e.signature));

    REQUIRE(slice.size() == expected.size());
    for (std::size_t i = 0; i < slice.size(); ++i)
        CHECK(to_ll(slice[i].signature) == expected[i]);
}

TEST_CASE("order bounds hold through genus 30") {
    const auto cat = homology::enumerate_homology_signatures(2, 30);
    REQUIRE(cat.size() > 30);

    const BoundCheck bounds = homology::check_bounds(cat);
    CHECK(bounds.entries_checked == cat.size());
    CHECK(bounds.all_ok());
    CHECK(bounds.order_bound_ok);
    CHECK(bounds.cyclic_bound_ok);
    CHECK(bounds.hurwitz_bound_ok);
    CHECK(bounds.violations.empty());
}

TEST_CASE("check_bounds reports a doctored entry") {
    auto cat = homology::enumerate_homology_signatures(2, 2);
    REQUIRE(!cat.empty());
    REQUIRE(cat[0].group.is_cyclic());
    cat[0].order = 10000;

    const BoundCheck bounds = homology::check_bounds(cat);
    CHECK_FALSE(bounds.all_ok());
    CHECK_FALSE(bounds.order_bound_ok);
    CHECK_FALSE(bounds.cyclic_bound_ok);
    CHECK_FALSE(bounds.hurwitz_bound_ok);
    CHECK(bounds.violations.size() == 3);
    CHECK(bounds.violations[0].find("(2, 5, 10)") != std::string::npos);
}

TEST_CASE("uniform entries determine n from genus and k") {
    const auto cat = homology::enumerate_homology_signatures(2, 30);

    std::map<std::pair<Int, Int>, std::set<std::size_t>> lengths;
    std::size_t uniform_count = 0;
    for (const CatalogEntry &e : cat) {
        if (!e.is_fermat)
            continue;
        ++uniform_count;
        const Int k = e.signature.orders().front();
        lengths[{e.genus, k}].insert(e.signature.size());

        // The uniform entry agrees with the closed-form type data.
        const homology::FermatType type(k, e.signature.size() - 1);
        CHECK(homology::fermat_genus(type) == e.genus);
        CHECK(e.group.invariant_factors() == std::vector<Int>(e.signature.size() - 1, k));
    }
    CHECK(uniform_count >= 8);
    for (const auto &[key, ns] : lengths)
        CHECK(ns.size() == 1);

    // Same genus with different k does occur (genus 10 below), so the map
    // key genuinely needs both coordinates.
    CHECK(lengths.count({10, 3}) == 1);
    CHECK(lengths.count({10, 6}) == 1);
}

TEST_CASE("reference fixtures replay cleanly") {
    const FixtureRun run = homology::reference_fixtures();

    CHECK(run.fixtures.size() == 12);
    CHECK(run.all_passed());
    CHECK(run.failures.empty());

    std::set<std::string> names;
    for (const auto &f : run.fixtures) {
        CHECK(names.insert(f.name).second);
        CHECK(f.expected_genus >= 2);
    }

    const auto find = [&](const std::string &name) -> const homology::Fixture * {
        for (const auto &f : run.fixtures)
            if (f.name == name)
                return &f;
        return nullptr;
    };

    const auto *hyp3 = find("hyperelliptic-genus-3");
    REQUIRE(hyp3 != nullptr);
    CHECK(hyp3->notes == "w^2 = u^8 - 1");
    CHECK(hyp3->signature == Signature({2, 8, 8}));

    const auto *pair2 = find("conjugate-pair-genus-2");
    REQUIRE(pair2 != nullptr);
    CHECK(pair2->notes.find("y^2 = x(x^4 - 1)") != std::string::npos);

    const auto *full6 = find("hyperelliptic-g6-full");
    REQUIRE(full6 != nullptr);
    CHECK(full6->signature == Signature({2, 14, 14}));
    CHECK(full6->expected_group == AbelianGroup({2, 14}, 0));
    CHECK(full6->notes == "y^2 = x^14 - 1");

    const auto *idx8 = find("hyperelliptic-g8-index-2");
    REQUIRE(idx8 != nullptr);
    CHECK(idx8->signature == Signature({2, 2, 9, 9}));
    CHECK(idx8->expected_group == AbelianGroup({18}, 0));
}
