#include "uptail/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "uptail/builtin.hpp"
#include "uptail/graphon.hpp"
#include "uptail/matching.hpp"
#include "uptail/simulate.hpp"
#include "uptail/tail_polynomial.hpp"

namespace uptail {

namespace {

const char* family_str(Family f) { return f == Family::Y2One ? "y2=1" : "y1=1"; }

const char* region_str(Region r) {
    switch (r) {
        case Region::X1LeX2: return "x1<=x2";
        case Region::X2LeX1: return "x2<=x1";
        case Region::XEqual: return "x1=x2";
    }
    return "x1=x2";
}

Json config_json(double delta, const SolverConfig& cfg) {
    Json j;
    j["delta"] = delta;
    j["tol"] = cfg.tol;
    j["level_tol"] = cfg.level_tol;
    j["g_grid"] = cfg.g_grid;
    j["f_grid"] = cfg.f_grid;
    j["f_zoom_grid"] = cfg.f_zoom_grid;
    j["f_zoom_levels"] = cfg.f_zoom_levels;
    j["f_candidates"] = cfg.f_candidates;
    j["polish_sweeps"] = cfg.polish_sweeps;
    j["core_cap"] = cfg.core_cap;
    return j;
}

Json digraph_json(const Digraph& g) {
    Json j;
    j["num_vertices"] = g.n;
    j["num_edges"] = g.m();
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    return j;
}

Json variational_json(const VariationalResult& r) {
    Json j;
    j["feasible"] = r.feasible;
    if (r.feasible) {
        j["value"] = r.value;
        j["x1"] = r.x1;
        j["x2"] = r.x2;
        j["y1"] = r.y1;
        j["y2"] = r.y2;
        j["family"] = family_str(r.family);
        j["region"] = region_str(r.region);
        j["family_value_y2_one"] = r.family_value_y2_one;
        j["family_value_y1_one"] = r.family_value_y1_one;
    }
    j["tol"] = r.tol;
    return j;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

Json bounds_report(const Digraph& g, double delta, const SolverConfig& cfg) {
    BoundsReport b = assemble_bounds(g, delta, cfg);
    auto deg = degrees(g);
    auto cls = classify(g);
    auto core = max_degree_core(g);
    auto sets = enumerate_independent_sets(g, cfg.core_cap);

    Json j;
    j["tool"] = tool_name();
    j["version"] = tool_version();
    j["command"] = "bounds";
    j["config"] = config_json(delta, cfg);
    {
        Json d = digraph_json(g);
        d["max_degree"] = deg.max_degree;
        d["in_degrees"] = deg.in;
        d["out_degrees"] = deg.out;
        Json flags;
        flags["oriented"] = cls.oriented;
        flags["weakly_connected"] = cls.weakly_connected;
        flags["regular"] = cls.regular;
        flags["balanced_at_max"] = cls.balanced_at_max;
        flags["bipartite"] = cls.bipartite;
        flags["is_star"] = cls.is_star;
        flags["is_directed_cycle"] = cls.is_directed_cycle;
        d["flags"] = flags;
        d["core_vertices"] = core;
        j["digraph"] = d;
    }
    {
        Json s;
        s["count"] = sets.size();
        if (sets.size() <= 4096) {
            Json rows = Json::array();
            for (const auto& members : sets) {
                Json row;
                row["members"] = members;
                if (members.empty()) {
                    row["v_plus"] = 0;
                    row["v_minus"] = 0;
                    row["v_pm"] = 0;
                    row["out_neighborhood"] = 0;
                    row["in_neighborhood"] = 0;
                    row["a_weight"] = 0;
                    row["b_weight"] = 0;
                } else {
                    auto pr = set_profile(g, members);
                    auto db = directional_bounds(g, members);
                    row["v_plus"] = pr.v_plus;
                    row["v_minus"] = pr.v_minus;
                    row["v_pm"] = pr.v_pm;
                    row["out_neighborhood"] = pr.a_count;
                    row["in_neighborhood"] = pr.b_count;
                    row["a_weight"] = db.a_weight;
                    row["b_weight"] = db.b_weight;
                }
                rows.push_back(row);
            }
            s["profiles"] = rows;
        } else {
            s["profiles_omitted"] = true;
        }
        j["independent_sets"] = s;
    }
    {
        Json polys;
        polys["f"] = to_string(build_f(g, cfg.core_cap));
        polys["g"] = to_string(build_g(g, cfg.core_cap));
        polys["fbar"] = to_string(build_fbar(g, cfg.core_cap));
        j["polynomials"] = polys;
    }
    j["upper_variational"] = variational_json(b.upper_variational);
    j["lower_variational"] = variational_json(b.lower_variational);
    {
        Json cb;
        cb["active"] = b.clique_branch;
        if (b.clique_branch) cb["value"] = b.clique_value;
        j["clique_branch"] = cb;
    }
    {
        Json bounds;
        bounds["upper"] = b.upper;
        bounds["lower"] = b.lower;
        if (b.lower > 0.0 && std::isfinite(b.upper) && std::isfinite(b.lower))
            bounds["ratio_upper_over_lower"] = b.upper / b.lower;
        j["bounds"] = bounds;
    }
    j["tightness"] = to_string(b.tightness);
    {
        Json c;
        c["half_weight_a"] = b.certificates.half_weight_a;
        c["half_weight_b"] = b.certificates.half_weight_b;
        c["both_half_weights"] = b.certificates.both_half_weights;
        c["a_matches_out_neighborhood"] = b.certificates.a_matches_out_neighborhood;
        c["b_matches_in_neighborhood"] = b.certificates.b_matches_in_neighborhood;
        c["f_equals_g"] = b.certificates.f_equals_g;
        c["fired"] = b.certificates.fired;
        j["certificates"] = c;
    }
    {
        ClosedForm cf = closed_form(g, delta);
        Json c;
        c["known"] = cf.known;
        if (cf.known) {
            c["value"] = cf.value;
            c["description"] = cf.description;
        }
        j["closed_form"] = c;
    }
    j["warnings"] = b.warnings;
    return j;
}

std::string render_bounds_text(const Json& r) {
    std::ostringstream os;
    const auto& d = r["digraph"];
    os << r["tool"].get<std::string>() << " " << r["version"].get<std::string>()
       << " bounds report\n";
    os << "digraph: " << d["num_vertices"] << " vertices, " << d["num_edges"]
       << " edges, max degree " << d["max_degree"] << "\n";
    os << "core vertices: " << d["core_vertices"].dump() << "\n";
    os << "independent sets: " << r["independent_sets"]["count"] << "\n";
    os << "f    = " << r["polynomials"]["f"].get<std::string>() << "\n";
    os << "g    = " << r["polynomials"]["g"].get<std::string>() << "\n";
    os << "fbar = " << r["polynomials"]["fbar"].get<std::string>() << "\n";
    auto render_side = [&](const char* label, const Json& v) {
        os << label << ": ";
        if (!v["feasible"].get<bool>()) {
            os << "infeasible\n";
            return;
        }
        os << fmt(v["value"].get<double>()) << "  (x1=" << fmt(v["x1"].get<double>())
           << " x2=" << fmt(v["x2"].get<double>()) << " y1=" << fmt(v["y1"].get<double>())
           << " y2=" << fmt(v["y2"].get<double>()) << ", family "
           << v["family"].get<std::string>() << ", tol " << fmt(v["tol"].get<double>())
           << ")\n";
    };
    render_side("F (upper search)", r["upper_variational"]);
    render_side("G (lower search)", r["lower_variational"]);
    if (r["clique_branch"]["active"].get<bool>())
        os << "clique branch: " << fmt(r["clique_branch"]["value"].get<double>()) << "\n";
    os << "upper bound: " << fmt(r["bounds"]["upper"].get<double>()) << "\n";
    os << "lower bound: " << fmt(r["bounds"]["lower"].get<double>()) << "\n";
    os << "tightness: " << r["tightness"].get<std::string>() << "\n";
    for (const auto& fired : r["certificates"]["fired"])
        os << "certificate: " << fired.get<std::string>() << "\n";
    if (r["closed_form"]["known"].get<bool>())
        os << "closed form: " << fmt(r["closed_form"]["value"].get<double>()) << " ("
           << r["closed_form"]["description"].get<std::string>() << ")\n";
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
    return os.str();
}

namespace {

// Independence polynomial of the k-cycle from the standard counting formula
// (k/(k-j)) C(k-j, j); independent of the set enumeration used by the solver.
std::vector<double> cycle_indep_poly(int k) {
    std::vector<double> c{1.0};
    for (int j = 1; 2 * j <= k; ++j) {
        double binom = 1.0;
        for (int i = 0; i < j; ++i)
            binom = binom * static_cast<double>(k - j - i) / static_cast<double>(i + 1);
        c.push_back(binom * static_cast<double>(k) / static_cast<double>(k - j));
    }
    return c;
}

double cycle_reference_value(int k, double delta) {
    auto c = cycle_indep_poly(k);
    auto eval = [&](double x) {
        double acc = 0.0;
        for (std::size_t d = c.size(); d-- > 0;) acc = acc * x + c[d];
        return acc;
    };
    double lo = 0.0, hi = 1.0;
    while (eval(hi) < 1.0 + delta) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (eval(mid) < 1.0 + delta) lo = mid;
        else hi = mid;
    }
    return 2.0 * 0.5 * (lo + hi);
}

ExampleRow make_row(std::string name, double delta, std::string quantity, double computed,
                    double reference, double tolerance, std::string source) {
    ExampleRow r;
    r.name = std::move(name);
    r.delta = delta;
    r.quantity = std::move(quantity);
    r.computed = computed;
    r.reference = reference;
    r.tolerance = tolerance;
    r.pass = std::abs(computed - reference) <= tolerance;
    r.source = std::move(source);
    return r;
}

}  // namespace

std::vector<ExampleRow> builtin_example_rows(const SolverConfig& cfg) {
    std::vector<ExampleRow> rows;

    for (const char* name : {"triangle-transitive", "triangle-cyclic"}) {
        Digraph g = std::string(name) == "triangle-transitive" ? triangle_transitive()
                                                               : triangle_cyclic();
        for (double delta : {0.5, 1.0, 3.375, 8.0}) {
            BoundsReport b = assemble_bounds(g, delta, cfg);
            double ref = std::min(std::pow(delta, 2.0 / 3.0), 2.0 * delta / 3.0);
            rows.push_back(make_row(name, delta, "upper bound", b.upper, ref,
                                    1e-6 * ref, "closed form"));
            rows.push_back(make_row(name, delta, "lower bound", b.lower, ref,
                                    1e-6 * ref, "closed form"));
        }
    }

    struct StarCase {
        const char* name;
        Digraph g;
        double factor;
    };
    std::vector<StarCase> stars = {{"star-out-3", star_out(3), 1.0},
                                   {"star-in-3", star_in(3), 1.0},
                                   {"star-mixed", star_mixed(), 2.0}};
    for (const auto& sc : stars)
        for (double delta : {0.01, 1.0, 1000.0}) {
            BoundsReport b = assemble_bounds(sc.g, delta, cfg);
            double ref = sc.factor * delta;
            rows.push_back(make_row(sc.name, delta, "upper bound", b.upper, ref,
                                    1e-8 * ref, "closed form"));
            rows.push_back(make_row(sc.name, delta, "lower bound", b.lower, ref,
                                    1e-8 * ref, "closed form"));
        }

    for (int k = 2; k <= 6; ++k) {
        double delta = 1.0;
        BoundsReport b = assemble_bounds(directed_cycle(k), delta, cfg);
        double ref = std::min(cycle_reference_value(k, delta), std::pow(delta, 2.0 / k));
        std::string name = "cycle-" + std::to_string(k);
        rows.push_back(make_row(name, delta, "upper bound", b.upper, ref, 1e-7 * ref,
                                "reduced level equation"));
        rows.push_back(make_row(name, delta, "lower bound", b.lower, ref, 1e-7 * ref,
                                "reduced level equation"));
    }

    {
        double delta = 100.0;
        BoundsReport b = assemble_bounds(y1_construction(3), delta, cfg);
        rows.push_back(make_row("y1-3", delta, "lower bound", b.lower, 7.207452182, 1e-4,
                                "frozen oracle value"));
        rows.push_back(make_row("y1-3", delta, "argmin y1", b.lower_variational.y1, 0.691,
                                0.005, "frozen oracle value"));
    }
    {
        double delta = 10000.0;
        BoundsReport b = assemble_bounds(gap_construction(5), delta, cfg);
        rows.push_back(make_row("gap-5", delta, "upper bound", b.upper, 7.283332380, 0.005,
                                "frozen oracle value"));
        rows.push_back(make_row("gap-5", delta, "lower bound", b.lower, 7.031470084, 0.005,
                                "frozen oracle value"));
    }
    return rows;
}

Json examples_report(const std::vector<ExampleRow>& rows) {
    Json j;
    j["tool"] = tool_name();
    j["version"] = tool_version();
    j["command"] = "paper-examples";
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : rows) {
        Json row;
        row["name"] = r.name;
        row["delta"] = r.delta;
        row["quantity"] = r.quantity;
        row["computed"] = r.computed;
        row["reference"] = r.reference;
        row["tolerance"] = r.tolerance;
        row["pass"] = r.pass;
        row["source"] = r.source;
        arr.push_back(row);
        all = all && r.pass;
    }
    j["rows"] = arr;
    j["all_pass"] = all;
    return j;
}

std::string render_examples_text(const std::vector<ExampleRow>& rows) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-20s %10s %-14s %16s %16s %10s %-5s %s\n", "name",
                  "delta", "quantity", "computed", "reference", "tol", "pass", "source");
    os << buf;
    bool all = true;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-20s %10g %-14s %16.9f %16.9f %10.2g %-5s %s\n",
                      r.name.c_str(), r.delta, r.quantity.c_str(), r.computed, r.reference,
                      r.tolerance, r.pass ? "ok" : "FAIL", r.source.c_str());
        os << buf;
        all = all && r.pass;
    }
    os << (all ? "all rows pass\n" : "SOME ROWS FAIL\n");
    return os.str();
}

std::string plant_verify_csv(const Digraph& g, double delta, const std::vector<double>& p_list,
                             const SolverConfig& cfg) {
    BoundsReport b = assemble_bounds(g, delta, cfg);
    if (!b.upper_variational.feasible)
        throw InfeasibleError("plant-verify needs a converged upper-bound search");
    const VariationalResult& v = b.upper_variational;
    auto deg = degrees(g);
    auto cls = classify(g);
    int e = g.m();

    std::ostringstream os;
    os << "# " << tool_name() << " " << tool_version() << " plant-verify\n";
    os << "# generator: " << generator_name() << " (unused: this table is deterministic)\n";
    os << "# digraph: n=" << g.n << " m=" << e << " max_degree=" << deg.max_degree << "\n";
    os << "# delta: " << fmt(delta) << "\n";
    os << "# argmin: x1=" << fmt(v.x1) << " x2=" << fmt(v.x2) << " y1=" << fmt(v.y1)
       << " y2=" << fmt(v.y2) << " value=" << fmt(v.value) << "\n";
    os << "# t_ratio = t_step / p^e (target >= 1+delta as p -> 0)\n";
    os << "# mass_ratio = ip_mass / (p^max_degree log(1/p)) (target: the bound value)\n";
    os << "# construction: hub\n";
    os << "p,t_ratio,mass_ratio\n";
    for (double p : p_list) {
        os << fmt(p) << ",";
        try {
            StepGraphon w = hub_graphon(v.x1, v.x2, v.y1, v.y2, p, deg.max_degree);
            double t_ratio = t_step(g, w) / std::pow(p, e);
            double mass_ratio =
                ip_mass(w, p) / (std::pow(p, deg.max_degree) * std::log(1.0 / p));
            os << fmt(t_ratio) << "," << fmt(mass_ratio) << "\n";
        } catch (const InfeasibleError&) {
            os << "infeasible,infeasible\n";
        }
    }
    if (cls.weakly_connected && cls.regular) {
        os << "# construction: clique\n";
        os << "p,t_ratio,mass_ratio\n";
        for (double p : p_list) {
            os << fmt(p) << ",";
            try {
                StepGraphon w = clique_graphon(delta, p, g.n, deg.max_degree);
                double t_ratio = t_step(g, w) / std::pow(p, e);
                double mass_ratio =
                    ip_mass(w, p) / (std::pow(p, deg.max_degree) * std::log(1.0 / p));
                os << fmt(t_ratio) << "," << fmt(mass_ratio) << "\n";
            } catch (const InfeasibleError&) {
                os << "infeasible,infeasible\n";
            }
        }
    }
    return os.str();
}

Json simulate_report(const Digraph& g, int n, double p, double delta, int samples,
                     std::uint64_t seed, const SolverConfig& cfg) {
    (void)cfg;
    Json j;
    j["tool"] = tool_name();
    j["version"] = tool_version();
    j["command"] = "simulate";
    {
        Json c;
        c["n"] = n;
        c["p"] = p;
        c["delta"] = delta;
        c["samples"] = samples;
        c["seed"] = seed;
        c["generator"] = generator_name();
        j["config"] = c;
    }
    j["digraph"] = digraph_json(g);

    TailEstimate est = mc_upper_tail(g, n, p, delta, samples, seed);
    {
        Json m;
        m["neg_log"] = est.neg_log;
        m["half_width"] = est.half_width;
        m["samples"] = est.samples;
        m["hits"] = est.hits;
        m["one_sided"] = est.one_sided;
        j["monte_carlo"] = m;
    }

    Json ex;
    if (g.n == 2 && g.m() == 2) {
        BinomialTail bt = binomial_tail_c2(n, p, delta);
        ex["available"] = true;
        ex["kind"] = "two-cycle binomial";
        ex["neg_log"] = bt.neg_log_exact;
        ex["asymptotic_neg_log"] = bt.neg_log_asymptotic;
        ex["trials"] = bt.trials;
        ex["threshold"] = bt.threshold;
        if (bt.neg_log_asymptotic > 0.0)
            ex["ratio_exact_over_asymptotic"] = bt.neg_log_exact / bt.neg_log_asymptotic;
    } else if (g.n == 2 && g.m() == 1) {
        long long m = static_cast<long long>(n) * (n - 1);
        long long k0 = static_cast<long long>(
            std::ceil((1.0 + delta) * p * static_cast<double>(n) * static_cast<double>(n)));
        ex["available"] = true;
        ex["kind"] = "single-edge binomial";
        ex["neg_log"] = binomial_neg_log_tail(m, p, k0);
        ex["trials"] = m;
        ex["threshold"] = k0;
    } else {
        ex["available"] = false;
    }
    j["exact"] = ex;
    return j;
}

}  // namespace uptail
