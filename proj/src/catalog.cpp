#include "homology/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homology {

namespace {

bool is_uniform(const Signature &sig) {
    const std::vector<Int> &ks = sig.orders();
    return std::all_of(ks.begin(), ks.end(), [&](const Int &k) { return k == ks.front(); });
}

bool entry_less(const CatalogEntry &a, const CatalogEntry &b) {
    if (a.genus != b.genus)
        return a.genus < b.genus;
    if (a.signature.size() != b.signature.size())
        return a.signature.size() < b.signature.size();
    return a.signature.orders() < b.signature.orders();
}

// Emits every non-decreasing tuple with entries in [min_entry, entry_cap]
// and product at most product_cap, extending the shared buffer in place.
template <typename Consider>
void extend_tuples(std::vector<long long> &buffer, long long min_entry, long long product,
                   long long entry_cap, long long product_cap, std::size_t length_cap,
                   const Consider &consider) {
    if (buffer.size() >= 3)
        consider(buffer);
    if (buffer.size() == length_cap)
        return;
    for (long long k = min_entry; k <= entry_cap; ++k) {
        if (product > product_cap / k)
            break;
        buffer.push_back(k);
        extend_tuples(buffer, k, product * k, entry_cap, product_cap, length_cap, consider);
        buffer.pop_back();
    }
}

} // namespace

std::vector<CatalogEntry> enumerate_homology_signatures(const Int &genus_min, const Int &genus_max) {
    if (genus_min < 2)
        throw std::invalid_argument("genus_min must be at least 2, got " + genus_min.str());
    if (genus_max < genus_min)
        throw std::invalid_argument("empty genus range [" + genus_min.str() + ", " +
                                    genus_max.str() + "]");
    if (genus_max > 1000000)
        throw std::invalid_argument("genus_max " + genus_max.str() +
                                    " is too large for exhaustive enumeration");

    const long long order_cap = 4 * (genus_max.convert_to<long long>() + 1);
    const long long product_cap = order_cap * order_cap;
    const std::size_t length_cap =
        static_cast<std::size_t>(2.0 * std::log2(static_cast<double>(order_cap))) + 2;

    std::vector<CatalogEntry> out;
    const auto consider = [&](const std::vector<long long> &tuple) {
        Signature sig(std::vector<Int>(tuple.begin(), tuple.end()));
        if (!maclachlan_check(sig).ok)
            return;
        Int genus;
        try {
            genus = homology_genus(sig);
        } catch (const std::domain_error &) {
            return; // spherical or euclidean
        }
        if (genus < genus_min || genus > genus_max)
            return;
        AbelianGroup group = homology_group(sig);
        Int order = group.order();
        out.push_back(CatalogEntry{sig, std::move(group), std::move(order), std::move(genus),
                                   is_uniform(sig), orbifold_structure(sig)});
    };

    std::vector<long long> buffer;
    extend_tuples(buffer, 2, 1, order_cap, product_cap, length_cap, consider);
    std::sort(out.begin(), out.end(), entry_less);
    return out;
}

BoundCheck check_bounds(const std::vector<CatalogEntry> &entries) {
    BoundCheck result;
    for (const CatalogEntry &e : entries) {
        ++result.entries_checked;
        const Int &g = e.genus;
        if (e.order > 4 * (g + 1)) {
            result.order_bound_ok = false;
            result.violations.push_back(e.signature.str() + ": order " + e.order.str() +
                                        " exceeds 4(g+1) = " + Int(4 * (g + 1)).str());
        }
        if (e.group.is_cyclic() && e.order > 4 * g + 2) {
            result.cyclic_bound_ok = false;
            result.violations.push_back(e.signature.str() + ": cyclic order " + e.order.str() +
                                        " exceeds 4g+2 = " + Int(4 * g + 2).str());
        }
        if (e.order > 84 * (g - 1)) {
            result.hurwitz_bound_ok = false;
            result.violations.push_back(e.signature.str() + ": order " + e.order.str() +
                                        " exceeds 84(g-1) = " + Int(84 * (g - 1)).str());
        }
    }
    return result;
}

namespace {

Fixture make_fixture(std::string name, std::vector<Int> orders, std::vector<Int> factors,
                     Int genus, std::string notes) {
    return Fixture{std::move(name), Signature(std::move(orders)),
                   AbelianGroup(std::move(factors), 0), std::move(genus), std::move(notes)};
}

} // namespace

FixtureRun reference_fixtures() {
    FixtureRun run;
    std::vector<Fixture> &fx = run.fixtures;

    fx.push_back(make_fixture("cyclic-10-genus-2", {2, 5, 10}, {10}, 2,
                              "cyclic homology group of order 10 in genus 2"));
    fx.push_back(make_fixture("fermat-degree-7", {7, 7, 7}, {7, 7}, 15,
                              "x^7 + y^7 + z^7 = 0; the order-7 rotation of y^7 = x z^4 (x - z)^2 "
                              "yields the same quotient signature, but Z_7 is not a homology group"));
    fx.push_back(make_fixture("hyperelliptic-genus-3", {2, 8, 8}, {2, 8}, 3, "w^2 = u^8 - 1"));
    fx.push_back(make_fixture("conjugate-pair-genus-2", {2, 2, 3, 3}, {6}, 2,
                              "y^2 = x(x^4 - 1); two conjugate homology groups of order 6"));
    for (long long g = 2; g <= 8; g += 2) {
        const std::string curve = "y^2 = x^" + std::to_string(2 * g + 2) + " - 1";
        fx.push_back(make_fixture("hyperelliptic-g" + std::to_string(g) + "-full",
                                  {2, 2 * g + 2, 2 * g + 2}, {2, 2 * g + 2}, g, curve));
        fx.push_back(make_fixture("hyperelliptic-g" + std::to_string(g) + "-index-2",
                                  {2, 2, g + 1, g + 1}, {2 * g + 2}, g, curve));
    }

    const auto fail = [&](const std::string &name, const std::string &detail) {
        run.failures.push_back(name + ": " + detail);
    };

    for (const Fixture &f : fx) {
        if (!maclachlan_check(f.signature).ok)
            fail(f.name, "lcm condition fails on " + f.signature.str());
        const AbelianGroup got = homology_group(f.signature);
        if (got != f.expected_group)
            fail(f.name, "group " + got.str() + ", expected " + f.expected_group.str());
        const Int genus = homology_genus(f.signature);
        if (genus != f.expected_genus)
            fail(f.name, "genus " + genus.str() + ", expected " + f.expected_genus.str());
    }

    // Facts tied to specific fixtures: the rejected cyclic candidate and the
    // pinned orbifold shapes.
    if (is_homology_pair(Signature({7, 7, 7}), AbelianGroup({7}, 0)))
        fail("fermat-degree-7", "Z_7 accepted as a homology group of (7, 7, 7)");
    if (orbifold_structure(Signature({2, 8, 8})).cone_classes != std::vector<ConeClass>{{8, 4}})
        fail("hyperelliptic-genus-3", "cone classes differ from 8 points of order 4");
    for (long long g = 2; g <= 8; g += 2) {
        const std::vector<ConeClass> want{{2 * g + 2, g + 1}};
        if (orbifold_structure(Signature({2, 2 * g + 2, 2 * g + 2})).cone_classes != want)
            fail("hyperelliptic-g" + std::to_string(g) + "-full",
                 "cone classes differ from 2g+2 points of order g+1");
    }
    return run;
}

} // namespace homology
