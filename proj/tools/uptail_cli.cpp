#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uptail/errors.hpp"
#include "uptail/report.hpp"

namespace {

// Exit codes: 0 ok, 1 example-table failure, 2 parse/usage error,
// 3 cap exceeded, 4 infeasible.
constexpr int kExitExamplesFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInfeasible = 4;

struct Args {
    std::string graph_file;
    double delta = 1.0;
    double tol = 1e-9;
    bool json = false;
    std::vector<double> p_list;
    int n = 0;
    double p = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};

int run_bounds(const Args& a) {
    uptail::SolverConfig cfg;
    cfg.tol = a.tol;
    uptail::Digraph g = uptail::parse_edge_list_file(a.graph_file);
    uptail::Json report = uptail::bounds_report(g, a.delta, cfg);
    if (a.json) std::cout << report.dump(2) << "\n";
    else std::cout << uptail::render_bounds_text(report);
    return 0;
}

int run_examples(const Args& a) {
    uptail::SolverConfig cfg;
    auto rows = uptail::builtin_example_rows(cfg);
    if (a.json) std::cout << uptail::examples_report(rows).dump(2) << "\n";
    else std::cout << uptail::render_examples_text(rows);
    for (const auto& r : rows)
        if (!r.pass) return kExitExamplesFail;
    return 0;
}

int run_plant_verify(const Args& a) {
    uptail::SolverConfig cfg;
    uptail::Digraph g = uptail::parse_edge_list_file(a.graph_file);
    std::cout << uptail::plant_verify_csv(g, a.delta, a.p_list, cfg);
    return 0;
}

int run_simulate(const Args& a) {
    uptail::SolverConfig cfg;
    uptail::Digraph g = uptail::parse_edge_list_file(a.graph_file);
    uptail::Json report =
        uptail::simulate_report(g, a.n, a.p, a.delta, a.samples, a.seed, cfg);
    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"upper-tail bounds for subgraph counts in sparse random digraphs"};
    app.require_subcommand(1);
    Args a;

    auto* bounds = app.add_subcommand("bounds", "analyze one digraph end to end");
    bounds->add_option("--graph", a.graph_file, "edge-list file")->required();
    bounds->add_option("--delta", a.delta, "tail excess, > 0")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds->add_option("--tol", a.tol, "objective tolerance")->check(CLI::PositiveNumber);
    bounds->add_flag("--json", a.json, "emit JSON instead of text");

    auto* examples = app.add_subcommand("paper-examples", "run the built-in example table");
    examples->add_flag("--json", a.json, "emit JSON instead of text");

    auto* plant = app.add_subcommand("plant-verify",
                                     "planted-construction convergence table (CSV)");
    plant->add_option("--graph", a.graph_file, "edge-list file")->required();
    plant->add_option("--delta", a.delta, "tail excess, > 0")
        ->required()
        ->check(CLI::PositiveNumber);
    plant->add_option("--p-list", a.p_list, "edge probabilities to tabulate")
        ->required()
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));

    auto* sim = app.add_subcommand("simulate", "Monte Carlo tail estimate");
    sim->add_option("--graph", a.graph_file, "edge-list file")->required();
    sim->add_option("--n", a.n, "host graph size")->required()->check(CLI::Range(2, 1000000));
    sim->add_option("--p", a.p, "edge probability")
        ->required()
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    sim->add_option("--delta", a.delta, "tail excess, > -1")
        ->required()
        ->check(CLI::Range(-1.0 + 1e-12, 1e12));
    sim->add_option("--samples", a.samples, "Monte Carlo samples, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", a.seed, "generator seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (bounds->parsed()) return run_bounds(a);
        if (examples->parsed()) return run_examples(a);
        if (plant->parsed()) return run_plant_verify(a);
        if (sim->parsed()) return run_simulate(a);
    } catch (const uptail::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const uptail::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const uptail::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
