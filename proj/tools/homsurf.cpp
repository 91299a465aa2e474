#include "CLI11.hpp"

#include "homology/catalog.hpp"
#include "homology/cover.hpp"
#include "homology/fermat.hpp"
#include "homology/serialize.hpp"
#include "homology/signature.hpp"
#include "homology/uniqueness.hpp"

#include <cstddef>
#include <exception>
#include <iostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using homology::Int;
using homology::Signature;
using nlohmann::json;

// Exit codes: 0 success, 1 failed check, 2 usage or malformed input.
constexpr int kOk = 0;
constexpr int kFailedCheck = 1;
constexpr int kUsage = 2;

Signature parse_signature(const std::vector<long long> &orders) {
    Signature sig(std::vector<Int>(orders.begin(), orders.end()));
    if (sig.was_reordered())
        std::cerr << "note: signature reordered to " << sig.str() << "\n";
    return sig;
}

void emit(const json &doc) { std::cout << doc.dump(2) << "\n"; }

int run_check_signature(const std::vector<long long> &orders, const std::string &format) {
    const Signature sig = parse_signature(orders);
    const homology::HomologyVerdict verdict = homology::is_homology_signature(sig);
    if (format == "json")
        emit(homology::to_json(verdict, sig));
    else
        std::cout << homology::describe(verdict) << "\n";
    return verdict.maclachlan_ok && verdict.cover_genus ? kOk : kFailedCheck;
}

int run_homology_group(const std::vector<long long> &orders, const std::string &format) {
    const Signature sig = parse_signature(orders);
    const homology::AbelianGroup group = homology::homology_group(sig);
    std::optional<Int> genus;
    try {
        genus = homology::homology_genus(sig);
    } catch (const std::domain_error &) {
        // Group and order stand on their own; the genus column is only
        // defined for hyperbolic signatures passing the lcm condition.
    }
    if (format == "json") {
        json doc{{"signature", homology::to_json(sig)},
                 {"group", homology::to_json(group)},
                 {"order", homology::int_to_json(group.order())}};
        if (genus)
            doc["genus"] = homology::int_to_json(*genus);
        emit(doc);
    } else {
        std::string factors = "[";
        const auto &ds = group.invariant_factors();
        for (std::size_t i = 0; i < ds.size(); ++i)
            factors += (i ? ", " : "") + ds[i].str();
        factors += "]";
        std::cout << "group " << group.str() << "; invariant factors " << factors << "; order "
                  << group.order().str();
        if (genus)
            std::cout << "; genus " << genus->str();
        std::cout << "\n";
    }
    return kOk;
}

int run_genus(const std::vector<long long> &orders, const std::string &format) {
    const Signature sig = parse_signature(orders);
    const Int genus = homology::homology_genus(sig);
    if (format == "json")
        emit(json{{"signature", homology::to_json(sig)},
                  {"genus", homology::int_to_json(genus)}});
    else
        std::cout << genus.str() << "\n";
    return kOk;
}

int run_orbifold(const std::vector<long long> &orders, const std::string &format) {
    const Signature sig = parse_signature(orders);
    const homology::OrbifoldStructure orbifold = homology::orbifold_structure(sig);
    if (format == "json")
        emit(homology::to_json(orbifold));
    else
        std::cout << homology::describe(orbifold) << "\n";
    return kOk;
}

int run_cover(const std::vector<long long> &orders, const std::string &format) {
    const Signature sig = parse_signature(orders);
    const homology::CoverConstruction cover = homology::homology_cover_construction(sig);
    if (format == "json")
        emit(homology::to_json(cover));
    else
        std::cout << homology::describe(cover) << "\n";
    return kOk;
}

homology::LambdaValue parse_lambda(const std::string &text) {
    static const std::regex rational(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(text, rational))
        return text; // symbolic branch value
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return homology::Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("branch value " + text + " has zero denominator");
    return homology::Rational(num, den);
}

int run_fermat(long long k, std::size_t n, bool emit_curve, std::vector<std::string> lambda_args,
               const std::string &format) {
    const homology::FermatType type(k, n);
    const Int genus = homology::fermat_genus(type);
    const Signature sig(std::vector<Int>(n + 1, k));
    const homology::AbelianGroup group = homology::homology_group(sig);

    std::optional<homology::CurveModel> curve;
    if (emit_curve) {
        if (lambda_args.empty())
            for (std::size_t i = 1; i + 1 < n; ++i)
                lambda_args.push_back("lambda" + std::to_string(i));
        std::vector<homology::LambdaValue> lambdas;
        for (const std::string &arg : lambda_args)
            lambdas.push_back(parse_lambda(arg));
        curve = homology::curve_model(type, lambdas);
    }

    if (format == "json") {
        json doc{{"k", homology::int_to_json(type.k())},
                 {"n", type.n()},
                 {"signature", homology::to_json(sig)},
                 {"group", homology::to_json(group)},
                 {"genus", homology::int_to_json(genus)}};
        if (curve)
            doc["curve"] = homology::to_json(*curve);
        emit(doc);
    } else {
        std::cout << "type (" << type.k().str() << ", " << type.n() << "); signature " << sig.str()
                  << "; group " << group.str() << "; genus " << genus.str() << "\n";
        if (curve) {
            std::cout << curve->str() << "\n";
            std::cout << "branched over";
            const auto values = curve->branch_values();
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << (i ? ", " : " ") << values[i];
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_uniqueness(long long k_max, std::size_t n_max, const std::string &format) {
    const std::vector<homology::CoexistenceReport> reports =
        homology::genus_collision_scan(k_max, n_max);
    bool any_feasible = false;
    for (const auto &r : reports)
        any_feasible = any_feasible || r.feasible_overall;

    if (format == "json") {
        json pairs = json::array();
        for (const auto &r : reports)
            pairs.push_back(homology::to_json(r));
        emit(json{{"k_max", k_max},
                  {"n_max", n_max},
                  {"pairs", std::move(pairs)},
                  {"any_feasible", any_feasible}});
    } else {
        if (reports.empty()) {
            std::cout << "no same-genus type pairs with distinct k for k <= " << k_max
                      << ", n <= " << n_max << "\n";
        } else {
            for (const auto &r : reports)
                std::cout << homology::describe(r) << "\n";
            std::cout << reports.size() << " same-genus pair(s), "
                      << (any_feasible ? "FEASIBLE COEXISTENCE FOUND" : "all ruled out") << "\n";
        }
    }
    return any_feasible ? kFailedCheck : kOk;
}

int run_diophantine(long long p_max, const std::string &format) {
    const homology::DiophantineReport report = homology::diophantine_check(p_max);
    if (format == "json")
        emit(homology::to_json(report));
    else
        std::cout << homology::describe(report) << "\n";
    return report.any_solution ? kFailedCheck : kOk;
}

int run_enumerate(long long genus_min, long long genus_max, const std::string &format) {
    const auto entries = homology::enumerate_homology_signatures(genus_min, genus_max);
    if (format == "json") {
        emit(json{{"genus_min", genus_min},
                  {"genus_max", genus_max},
                  {"count", entries.size()},
                  {"entries", homology::catalog_to_json(entries)}});
    } else if (format == "csv") {
        std::cout << homology::catalog_csv(entries);
    } else {
        for (const auto &e : entries)
            std::cout << "g=" << e.genus.str() << " " << e.signature.str() << " group "
                      << e.group.str() << " order " << e.order.str()
                      << (e.is_fermat ? " fermat" : "") << "\n";
        std::cout << entries.size() << " signature(s)\n";
    }
    return kOk;
}

int run_fixtures(const std::string &format) {
    const homology::FixtureRun run = homology::reference_fixtures();
    if (format == "json") {
        emit(homology::to_json(run));
    } else {
        for (const auto &f : run.fixtures) {
            bool passed = true;
            for (const std::string &line : run.failures)
                if (line.rfind(f.name + ":", 0) == 0)
                    passed = false;
            std::cout << (passed ? "PASS " : "FAIL ") << f.name << " " << f.signature.str()
                      << " -> " << f.expected_group.str() << ", genus "
                      << f.expected_genus.str() << "\n";
        }
        for (const std::string &line : run.failures)
            std::cout << "failure: " << line << "\n";
        std::cout << run.fixtures.size() << " fixture(s), "
                  << (run.all_passed() ? "all passed" : "FAILURES") << "\n";
    }
    return run.all_passed() ? kOk : kFailedCheck;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Homology actions on Riemann surfaces: signature checks, covers, catalogs"};
    app.require_subcommand(1);

    int rc = kOk;
    const auto add_format = [](CLI::App *sub, std::string &storage,
                               std::vector<std::string> allowed) {
        sub->add_option("--format", storage, "Output format")
            ->check(CLI::IsMember(std::move(allowed)));
    };
    const auto add_signature_command = [&](const std::string &name, const std::string &help,
                                           auto runner) {
        auto orders = std::make_shared<std::vector<long long>>();
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("orders", *orders, "Cone orders k1 k2 ... (at least three)")
            ->required()
            ->expected(-1);
        add_format(sub, *format, {"text", "json"});
        sub->callback([&rc, orders, format, runner] { rc = runner(*orders, *format); });
        return sub;
    };

    add_signature_command("check-signature",
                          "Test the lcm condition and report group and cover genus",
                          run_check_signature);
    add_signature_command("homology-group", "Invariant factors of the abelianized cover group",
                          run_homology_group);
    add_signature_command("genus", "Genus of the homology cover", run_genus);
    add_signature_command("orbifold", "Quotient orbifold of the homology cover", run_orbifold);
    add_signature_command("cover", "Explicit cover data inside Z_mu^n", run_cover);

    {
        auto k = std::make_shared<long long>(0);
        auto n = std::make_shared<std::size_t>(0);
        auto emit_curve = std::make_shared<bool>(false);
        auto lambdas = std::make_shared<std::vector<std::string>>();
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand("fermat", "Generalized Fermat type (k, n) data");
        sub->add_option("--k", *k, "Cone order k >= 2")->required();
        sub->add_option("--n", *n, "Rank n >= 2")->required();
        sub->add_flag("--emit-curve", *emit_curve, "Print the fiber-product curve model");
        sub->add_option("--lambdas", *lambdas,
                        "Branch values after inf, 0, 1: rationals like 5/2 or symbols");
        add_format(sub, *format, {"text", "json"});
        sub->callback([&rc, k, n, emit_curve, lambdas, format] {
            rc = run_fermat(*k, *n, *emit_curve, *lambdas, *format);
        });
    }
    {
        auto k_max = std::make_shared<long long>(0);
        auto n_max = std::make_shared<std::size_t>(0);
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand(
            "uniqueness", "Scan same-genus type pairs and refute coexistence case by case");
        sub->add_option("--k-max", *k_max, "Largest k to scan")->required();
        sub->add_option("--n-max", *n_max, "Largest n to scan")->required();
        add_format(sub, *format, {"text", "json"});
        sub->callback([&rc, k_max, n_max, format] { rc = run_uniqueness(*k_max, *n_max, *format); });
    }
    {
        auto p_max = std::make_shared<long long>(0);
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand(
            "diophantine", "Check the two exponential equations for solutions up to p-max");
        sub->add_option("--p-max", *p_max, "Largest p to test")->required();
        add_format(sub, *format, {"text", "json"});
        sub->callback([&rc, p_max, format] { rc = run_diophantine(*p_max, *format); });
    }
    {
        auto genus_min = std::make_shared<long long>(0);
        auto genus_max = std::make_shared<long long>(0);
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand("enumerate", "All homology signatures in a genus range");
        sub->add_option("--genus-min", *genus_min, "Smallest genus (>= 2)")->required();
        sub->add_option("--genus-max", *genus_max, "Largest genus")->required();
        add_format(sub, *format, {"text", "json", "csv"});
        sub->callback(
            [&rc, genus_min, genus_max, format] { rc = run_enumerate(*genus_min, *genus_max, *format); });
    }
    {
        auto format = std::make_shared<std::string>("text");
        CLI::App *sub = app.add_subcommand("fixtures", "Replay the reference examples");
        add_format(sub, *format, {"text", "json"});
        sub->callback([&rc, format] { rc = run_fixtures(*format); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kFailedCheck;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailedCheck;
    }
    return rc;
}
