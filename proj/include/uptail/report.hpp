#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "uptail/digraph.hpp"
#include "uptail/variational.hpp"

namespace uptail {

using Json = nlohmann::ordered_json;

inline const char* tool_name() { return "uptail"; }
inline const char* tool_version() { return "0.1.0"; }

// Full analysis of one digraph: structure, profiles, polynomials, solver
// results, bounds, certificates, closed form when recognized. Key order is
// fixed, so the serialized report is byte-identical across runs.
Json bounds_report(const Digraph& g, double delta, const SolverConfig& cfg);
std::string render_bounds_text(const Json& report);

// Built-in example table: computed quantities against their reference values.
// `source` says where the reference number comes from (closed form, reduced
// level equation, frozen oracle value).
struct ExampleRow {
    std::string name;
    double delta = 0.0;
    std::string quantity;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string source;
};

std::vector<ExampleRow> builtin_example_rows(const SolverConfig& cfg);
Json examples_report(const std::vector<ExampleRow>& rows);
std::string render_examples_text(const std::vector<ExampleRow>& rows);

// Planting self-check: for each p, discretize the hub construction at the
// solver argmin (and the clique block for connected regular digraphs) and
// report t_step / p^{e(H)} against 1 + delta and ip_mass / (p^Delta log(1/p))
// against the variational objective. CSV with '#' header comments.
std::string plant_verify_csv(const Digraph& g, double delta, const std::vector<double>& p_list,
                             const SolverConfig& cfg);

// Monte Carlo tail estimate plus, where an exact route exists (single edge,
// 2-cycle), the matching binomial numbers.
Json simulate_report(const Digraph& g, int n, double p, double delta, int samples,
                     std::uint64_t seed, const SolverConfig& cfg);

}  // namespace uptail
