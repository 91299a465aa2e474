#include "homology/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

namespace homology {

namespace {

using nlohmann::json;

json type_to_json(const FermatType &t) {
    return json{{"k", int_to_json(t.k())}, {"n", t.n()}};
}

json cone_classes_to_json(const std::vector<ConeClass> &classes) {
    json out = json::array();
    for (const ConeClass &c : classes)
        out.push_back(json{{"point_count", int_to_json(c.point_count)},
                           {"cone_order", int_to_json(c.cone_order)}});
    return out;
}

std::string join_ints(const std::vector<Int> &values, const char *separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += separator;
        out += values[i].str();
    }
    return out;
}

} // namespace

json int_to_json(const Int &value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi)
        return value.convert_to<std::int64_t>();
    return value.str();
}

json to_json(const Signature &sig) {
    json out = json::array();
    for (const Int &k : sig.orders())
        out.push_back(int_to_json(k));
    return out;
}

json to_json(const AbelianGroup &group) {
    json factors = json::array();
    for (const Int &d : group.invariant_factors())
        factors.push_back(int_to_json(d));
    json out{{"invariant_factors", std::move(factors)},
             {"free_rank", group.free_rank()},
             {"description", group.str()}};
    if (group.is_finite())
        out["order"] = int_to_json(group.order());
    return out;
}

json to_json(const HomologyVerdict &verdict, const Signature &sig) {
    json out{{"signature", to_json(sig)},
             {"maclachlan_ok", verdict.maclachlan_ok},
             {"group", to_json(verdict.group)},
             {"order", int_to_json(verdict.group_order)}};
    if (verdict.failing_index)
        out["failing_index"] = *verdict.failing_index;
    if (verdict.cover_genus)
        out["genus"] = int_to_json(*verdict.cover_genus);
    return out;
}

json to_json(const OrbifoldStructure &orbifold) {
    return json{{"genus", int_to_json(orbifold.genus)},
                {"cone_classes", cone_classes_to_json(orbifold.cone_classes)}};
}

json to_json(const CoverConstruction &cover) {
    json generators = json::array();
    for (const ExponentVector &g : cover.k_a_generators) {
        json coords = json::array();
        for (const Int &c : g.coords())
            coords.push_back(int_to_json(c));
        generators.push_back(std::move(coords));
    }
    return json{{"mu", int_to_json(cover.mu)},
                {"ambient_rank", cover.ambient_rank},
                {"generators", std::move(generators)},
                {"quotient", to_json(cover.quotient)}};
}

json to_json(const CurveModel &model) {
    json equations = json::array();
    for (const CurveEquation &eq : model.equations)
        equations.push_back(json{{"lambda", model.lambda_repr(eq.lambda_index)},
                                 {"variables", eq.variables}});
    json lambdas = json::array();
    for (std::size_t i = 0; i < model.lambdas.size(); ++i)
        lambdas.push_back(model.lambda_repr(i + 1));
    return json{{"degree", int_to_json(model.degree)},
                {"num_variables", model.num_variables},
                {"equations", std::move(equations)},
                {"lambdas", std::move(lambdas)},
                {"branch_values", model.branch_values()}};
}

json to_json(const CatalogEntry &entry) {
    json factors = json::array();
    for (const Int &d : entry.group.invariant_factors())
        factors.push_back(int_to_json(d));
    return json{{"genus", int_to_json(entry.genus)},
                {"signature", to_json(entry.signature)},
                {"invariant_factors", std::move(factors)},
                {"order", int_to_json(entry.order)},
                {"is_fermat", entry.is_fermat},
                {"group", entry.group.str()},
                {"orbifold_cone_classes", cone_classes_to_json(entry.orbifold.cone_classes)}};
}

json to_json(const CoexistenceReport &report) {
    json cases = json::array();
    for (const CaseVerdict &v : report.case_verdicts)
        cases.push_back(json{{"label", v.label}, {"feasible", v.feasible}, {"reason", v.reason}});
    return json{{"type_a", type_to_json(report.type_a)},
                {"type_b", type_to_json(report.type_b)},
                {"genus_a", int_to_json(report.genus_a)},
                {"genus_b", int_to_json(report.genus_b)},
                {"same_genus", report.same_genus},
                {"cases", std::move(cases)},
                {"feasible_overall", report.feasible_overall}};
}

json to_json(const DiophantineReport &report) {
    json equations = json::array();
    for (const DiophantineEquation &eq : report.equations)
        equations.push_back(json{{"name", eq.name},
                                 {"solution_found", eq.solution_found},
                                 {"first_dominant", eq.first_dominant},
                                 {"ratio_monotone_from", eq.ratio_monotone_from},
                                 {"dominance_certified", eq.dominance_certified}});
    return json{{"p_max", report.p_max},
                {"any_solution", report.any_solution},
                {"equations", std::move(equations)}};
}

json to_json(const FixtureRun &run) {
    json fixtures = json::array();
    for (const Fixture &f : run.fixtures) {
        bool passed = true;
        for (const std::string &line : run.failures)
            if (line.rfind(f.name + ":", 0) == 0)
                passed = false;
        json expected = json::array();
        for (const Int &d : f.expected_group.invariant_factors())
            expected.push_back(int_to_json(d));
        fixtures.push_back(json{{"name", f.name},
                                {"signature", to_json(f.signature)},
                                {"expected_invariant_factors", std::move(expected)},
                                {"expected_genus", int_to_json(f.expected_genus)},
                                {"notes", f.notes},
                                {"passed", passed}});
    }
    return json{{"all_passed", run.all_passed()},
                {"failures", run.failures},
                {"fixtures", std::move(fixtures)}};
}

json catalog_to_json(const std::vector<CatalogEntry> &entries) {
    json out = json::array();
    for (const CatalogEntry &e : entries)
        out.push_back(to_json(e));
    return out;
}

std::string catalog_csv(const std::vector<CatalogEntry> &entries) {
    std::string out = "genus,signature,invariant_factors,order,is_fermat,orbifold_cone_classes\n";
    for (const CatalogEntry &e : entries) {
        out += e.genus.str();
        out += ',';
        out += join_ints(e.signature.orders(), " ");
        out += ',';
        out += join_ints(e.group.invariant_factors(), " ");
        out += ',';
        out += e.order.str();
        out += ',';
        out += e.is_fermat ? "true" : "false";
        out += ',';
        for (std::size_t i = 0; i < e.orbifold.cone_classes.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += e.orbifold.cone_classes[i].point_count.str();
            out += 'x';
            out += e.orbifold.cone_classes[i].cone_order.str();
        }
        out += '\n';
    }
    return out;
}

std::string describe(const HomologyVerdict &verdict) {
    if (!verdict.maclachlan_ok)
        return "Maclachlan fails at order " + std::to_string(*verdict.failing_index);
    if (verdict.cover_genus)
        return "homology signature; group " + verdict.group.str() + "; genus " +
               verdict.cover_genus->str();
    return "lcm condition holds; group " + verdict.group.str() + "; no hyperbolic cover";
}

std::string describe(const OrbifoldStructure &orbifold) {
    std::string out = "genus " + orbifold.genus.str() + "; ";
    if (orbifold.cone_classes.empty())
        return out + "no cone points";
    for (std::size_t i = 0; i < orbifold.cone_classes.size(); ++i) {
        const ConeClass &c = orbifold.cone_classes[i];
        if (i > 0)
            out += ", ";
        out += c.point_count.str() + " points of order " + c.cone_order.str();
    }
    return out;
}

std::string describe(const CoverConstruction &cover) {
    std::string out = "mu " + cover.mu.str() + "; ambient rank " +
                      std::to_string(cover.ambient_rank) + "\ngenerators:";
    for (const ExponentVector &g : cover.k_a_generators)
        out += "\n  " + g.str();
    out += "\nquotient " + cover.quotient.str();
    return out;
}

std::string describe(const CoexistenceReport &report) {
    std::string out = "(k=" + report.type_a.k().str() + ", n=" + std::to_string(report.type_a.n()) +
                      ") vs (k=" + report.type_b.k().str() + ", n=" +
                      std::to_string(report.type_b.n()) + "): ";
    if (!report.same_genus)
        return out + "genus " + report.genus_a.str() + " vs " + report.genus_b.str() +
               "; different genus, nothing to check";
    out += "genus " + report.genus_a.str() +
           (report.feasible_overall ? "; FEASIBLE coexistence" : "; coexistence ruled out");
    for (const CaseVerdict &v : report.case_verdicts)
        out += "\n  case " + v.label + ": " + (v.feasible ? "feasible; " : "ruled out; ") + v.reason;
    return out;
}

std::string describe(const DiophantineReport &report) {
    std::string out =
        "p in [2, " + std::to_string(report.p_max) + "]: " +
        (report.any_solution ? "SOLUTION FOUND" : "no solutions");
    for (const DiophantineEquation &eq : report.equations) {
        out += "\n  " + eq.name + ": ";
        out += eq.solution_found ? "solution found" : "no solution";
        if (eq.first_dominant != 0)
            out += "; left side dominates from p = " + std::to_string(eq.first_dominant);
        else
            out += "; left side not yet dominant at p_max";
        out += "; ratio monotone from p = " + std::to_string(eq.ratio_monotone_from);
        out += eq.dominance_certified ? "; dominance certified" : "; dominance not certified";
    }
    return out;
}

} // namespace homology
