#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "uptail/builtin.hpp"
#include "uptail/report.hpp"

using namespace uptail;

namespace {

// Minimal validator for the JSON-Schema subset the schema file uses:
// type, enum, required, properties, items, and $ref into #/$defs.
void validate(const Json& root, const Json& schema, const Json& value,
              const std::string& path, std::vector<std::string>& errors) {
    const Json* sch = &schema;
    if (sch->contains("$ref")) {
        std::string ref = (*sch)["$ref"].get<std::string>();
        REQUIRE(ref.rfind("#/$defs/", 0) == 0);
        sch = &root["$defs"][ref.substr(8)];
    }
    if (sch->contains("type")) {
        std::string t = (*sch)["type"].get<std::string>();
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "boolean" && value.is_boolean()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number());
        if (!ok) errors.push_back(path + ": expected " + t + ", got " + value.dump());
    }
    if (sch->contains("enum")) {
        bool ok = false;
        for (const auto& e : (*sch)["enum"]) ok = ok || e == value;
        if (!ok) errors.push_back(path + ": " + value.dump() + " not in enum");
    }
    if (sch->contains("required") && value.is_object())
        for (const auto& k : (*sch)["required"])
            if (!value.contains(k.get<std::string>()))
                errors.push_back(path + ": missing key " + k.get<std::string>());
    if (sch->contains("properties") && value.is_object())
        for (const auto& [k, sub] : (*sch)["properties"].items())
            if (value.contains(k)) validate(root, sub, value[k], path + "/" + k, errors);
    if (sch->contains("items") && value.is_array()) {
        int i = 0;
        for (const auto& el : value)
            validate(root, (*sch)["items"], el, path + "[" + std::to_string(i++) + "]", errors);
    }
}

Json load_schema() {
    std::ifstream in(std::string(UPTAIL_SOURCE_DIR) + "/docs/report-schema.json");
    REQUIRE(in.good());
    return Json::parse(in);
}

}  // namespace

TEST_CASE("bounds report: deterministic bytes, schema-valid") {
    SolverConfig cfg;
    Json schema = load_schema();
    for (const Digraph& g : {triangle_transitive(), directed_cycle(2), y1_construction(3),
                             star_mixed()}) {
        Json a = bounds_report(g, 1.5, cfg);
        Json b = bounds_report(g, 1.5, cfg);
        CHECK(a.dump(2) == b.dump(2));
        std::vector<std::string> errors;
        validate(schema, schema, a, "", errors);
        for (const auto& e : errors) FAIL_CHECK(e);
        CHECK(errors.empty());
    }
}

TEST_CASE("bounds report: content spot checks") {
    SolverConfig cfg;
    Json r = bounds_report(triangle_transitive(), 1.0, cfg);
    CHECK(r["digraph"]["num_vertices"] == 3);
    CHECK(r["digraph"]["flags"]["regular"] == true);
    CHECK(r["independent_sets"]["count"] == 4);
    CHECK(r["independent_sets"]["profiles"].size() == 4);
    // empty set row is all zeros
    CHECK(r["independent_sets"]["profiles"][0]["members"].empty());
    CHECK(r["independent_sets"]["profiles"][0]["a_weight"] == 0);
    CHECK(r["polynomials"]["f"].get<std::string>().find("y1&y2") == std::string::npos);
    CHECK(r["clique_branch"]["active"] == true);
    CHECK(r["clique_branch"]["value"].get<double>() == doctest::Approx(1.0));
    CHECK(r["bounds"]["upper"].get<double>() ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(r["bounds"]["ratio_upper_over_lower"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r["closed_form"]["known"] == true);
    CHECK(r["warnings"].empty());
    // non-oriented digraph carries its warning through to the report
    Json c2 = bounds_report(directed_cycle(2), 1.0, cfg);
    CHECK(c2["tightness"] == "TIGHT_CERTIFIED");
    CHECK(!c2["warnings"].empty());
    CHECK(!c2["certificates"]["fired"].empty());
    // text rendering mentions the headline numbers
    std::string text = render_bounds_text(r);
    CHECK(text.find("upper") != std::string::npos);
    CHECK(text.find("0.666666667") != std::string::npos);
}

TEST_CASE("example table: every row passes and the report says so") {
    SolverConfig cfg;
    auto rows = builtin_example_rows(cfg);
    CHECK(rows.size() >= 30);
    for (const auto& row : rows) {
        CAPTURE(row.name);
        CAPTURE(row.quantity);
        CHECK(std::abs(row.computed - row.reference) <= row.tolerance);
        CHECK(row.pass);
        CHECK(!row.source.empty());
    }
    Json rep = examples_report(rows);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["rows"].size() == rows.size());
    std::string text = render_examples_text(rows);
    CHECK(text.find("all rows pass") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("plant CSV: headers, sections, parsable numbers") {
    SolverConfig cfg;
    std::string csv = plant_verify_csv(triangle_transitive(), 1.0, {1e-2, 1e-3}, cfg);
    CHECK(csv.find("# generator: splitmix64") != std::string::npos);
    CHECK(csv.find("# construction: hub") != std::string::npos);
    CHECK(csv.find("# construction: clique") != std::string::npos);  // regular digraph
    CHECK(csv.find("p,t_ratio,mass_ratio") != std::string::npos);
    // hub row at p = 1e-2: frozen live values for the delta = 1 triangle
    CHECK(csv.find("0.01,2.0031666") != std::string::npos);
    // clique mass ratio is exactly 1 at delta = 1
    CHECK(csv.find(",1\n") != std::string::npos);
    // the mixed star is not regular: no clique section
    std::string star_csv = plant_verify_csv(star_mixed(), 1.0, {1e-2}, cfg);
    CHECK(star_csv.find("# construction: hub") != std::string::npos);
    CHECK(star_csv.find("# construction: clique") == std::string::npos);
    // infeasible p produces marked rows, not an exception
    std::string big_p = plant_verify_csv(triangle_transitive(), 1e6, {0.5}, cfg);
    CHECK(big_p.find("infeasible,infeasible") != std::string::npos);
}

TEST_CASE("simulate report: exact sections by shape") {
    SolverConfig cfg;
    Json c2 = simulate_report(directed_cycle(2), 30, 0.2, 0.5, 200, 1, cfg);
    CHECK(c2["config"]["generator"] == "splitmix64");
    CHECK(c2["monte_carlo"]["samples"] == 200);
    CHECK(c2["exact"]["available"] == true);
    CHECK(c2["exact"]["kind"] == "two-cycle binomial");
    CHECK(c2["exact"]["trials"] == 435);
    Json edge = simulate_report(make_digraph(2, {{0, 1}}), 30, 0.2, 0.5, 200, 1, cfg);
    CHECK(edge["exact"]["kind"] == "single-edge binomial");
    CHECK(edge["exact"]["trials"] == 870);
    Json tri = simulate_report(triangle_cyclic(), 20, 0.2, 0.5, 200, 1, cfg);
    CHECK(tri["exact"]["available"] == false);
    // same seed, same report bytes
    Json again = simulate_report(directed_cycle(2), 30, 0.2, 0.5, 200, 1, cfg);
    CHECK(c2.dump() == again.dump());
}
