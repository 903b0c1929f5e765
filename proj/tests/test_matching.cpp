#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "uptail/builtin.hpp"
#include "uptail/matching.hpp"

using namespace uptail;

namespace {

// Reference matching number: try all subsets of collapsed arcs.
int brute_max_matching(const BipartiteWitness& w) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& a : w.arcs) pairs.insert({a.s, a.t});
    std::vector<std::pair<int, int>> e(pairs.begin(), pairs.end());
    int best = 0;
    int k = static_cast<int>(e.size());
    REQUIRE(k <= 20);
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::set<int> used_s, used_t;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < k && ok; ++i)
            if (mask & (1 << i)) {
                if (!used_s.insert(e[i].first).second) ok = false;
                if (!used_t.insert(e[i].second).second) ok = false;
                ++size;
            }
        if (ok) best = std::max(best, size);
    }
    return best;
}

bool cover_touches_all(const BipartiteWitness& w, const VertexCover& c) {
    std::set<int> sc(c.s_cover.begin(), c.s_cover.end());
    std::set<int> tc(c.t_cover.begin(), c.t_cover.end());
    for (const auto& a : w.arcs)
        if (!sc.count(a.s) && !tc.count(a.t)) return false;
    return true;
}

}  // namespace

TEST_CASE("witness construction preserves direction and rejects dependent sets") {
    Digraph g = triangle_transitive();
    auto w = induced_bipartite(g, {1});  // the source vertex
    CHECK(w.s_side == std::vector<int>{1});
    CHECK(w.t_side == std::vector<int>{0, 2});
    CHECK(w.arcs.size() == 2);
    for (const auto& a : w.arcs) CHECK(a.s_to_t);

    CHECK_THROWS_AS(induced_bipartite(g, {0, 1}), std::invalid_argument);

    // a 2-cycle contributes two opposite arcs
    Digraph c2 = directed_cycle(2);
    auto w2 = induced_bipartite(c2, {0});
    CHECK(w2.arcs.size() == 2);
    CHECK(w2.arcs[0].s_to_t != w2.arcs[1].s_to_t);
}

TEST_CASE("Konig chain: fractional = matching = cover, exactly") {
    for (const auto& g : uptail_test::property_corpus()) {
        for (const auto& s : enumerate_independent_sets(g)) {
            if (s.empty()) continue;
            auto w = induced_bipartite(g, s);
            int nu = max_matching(w);
            auto cover = min_vertex_cover(w);
            Rational frac = max_fractional_matching_value(w);
            CHECK(cover.size() == nu);
            CHECK(cover_touches_all(w, cover));
            CHECK(frac == Rational(nu));  // integral optimum, exact equality
        }
    }
}

TEST_CASE("max matching against subset brute force") {
    int checked = 0;
    for (const auto& g : uptail_test::property_corpus()) {
        for (const auto& s : enumerate_independent_sets(g)) {
            if (s.empty()) continue;
            auto w = induced_bipartite(g, s);
            std::set<std::pair<int, int>> pairs;
            for (const auto& a : w.arcs) pairs.insert({a.s, a.t});
            if (pairs.size() > 16) continue;
            CHECK(max_matching(w) == brute_max_matching(w));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("directional weights match the enumeration oracle") {
    int checked = 0;
    for (const auto& g : uptail_test::property_corpus()) {
        for (const auto& s : enumerate_independent_sets(g)) {
            if (s.empty()) continue;
            auto w = induced_bipartite(g, s);
            if (w.arcs.size() > 24) continue;
            DirectionalBounds lp, brute;
            bool lp_feasible = true, brute_feasible = true;
            try {
                lp = directional_bounds(w);
            } catch (const InfeasibleError&) {
                lp_feasible = false;
            }
            try {
                brute = brute_force_directional_bounds(w);
            } catch (const InfeasibleError&) {
                brute_feasible = false;
            }
            REQUIRE(lp_feasible == brute_feasible);
            if (lp_feasible) {
                CHECK(lp.a_weight == brute.a_weight);
                CHECK(lp.b_weight == brute.b_weight);
            }
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("directional sandwich per set") {
    for (const auto& g : uptail_test::property_corpus()) {
        for (const auto& s : enumerate_independent_sets(g)) {
            if (s.empty()) continue;
            auto pr = set_profile(g, s);
            auto w = induced_bipartite(g, s);
            DirectionalBounds db;
            try {
                db = directional_bounds(w);
            } catch (const InfeasibleError&) {
                // S not saturable: matching number below |S|
                CHECK(max_matching(w) < static_cast<int>(s.size()));
                continue;
            }
            int tau = min_vertex_cover(w).size();
            CHECK(pr.v_plus <= db.a_weight);
            CHECK(db.a_weight <= tau);
            CHECK(db.a_weight <= std::min(pr.v_plus + pr.v_pm, pr.a_count));
            CHECK(pr.v_minus <= db.b_weight);
            CHECK(db.b_weight <= tau);
            CHECK(db.b_weight <= std::min(pr.v_minus + pr.v_pm, pr.b_count));
        }
    }
}

TEST_CASE("hand-checked directional weights") {
    // transitive triangle: source has a = 1, b = 0; sink has a = 0, b = 1
    Digraph t = triangle_transitive();
    auto src = directional_bounds(t, {1});
    CHECK(src.a_weight == 1);
    CHECK(src.b_weight == 0);
    auto sink = directional_bounds(t, {0});
    CHECK(sink.a_weight == 0);
    CHECK(sink.b_weight == 1);
    auto mid = directional_bounds(t, {2});
    CHECK(mid.a_weight == 1);
    CHECK(mid.b_weight == 1);

    // directed cycles: every set pushes full weight both ways
    for (int k = 2; k <= 6; ++k) {
        Digraph c = directed_cycle(k);
        for (const auto& s : enumerate_independent_sets(c)) {
            if (s.empty()) continue;
            auto db = directional_bounds(c, s);
            CHECK(db.a_weight == static_cast<int>(s.size()));
            CHECK(db.b_weight == static_cast<int>(s.size()));
        }
    }

    // y1 construction: a_S = 1 (shared sink), b_S = |S| (distinct feeders)
    Digraph y = y1_construction(3);
    for (const auto& s : enumerate_independent_sets(y)) {
        if (s.empty()) continue;
        auto db = directional_bounds(y, s);
        CHECK(db.a_weight == 1);
        CHECK(db.b_weight == static_cast<int>(s.size()));
    }
}

TEST_CASE("exact simplex solves small LPs") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), value 14/5
    LinearProgram lp;
    lp.num_vars = 2;
    lp.rows.push_back({{Rational(1), Rational(2)}, Rational(4), false});
    lp.rows.push_back({{Rational(3), Rational(1)}, Rational(6), false});
    lp.objective = {Rational(1), Rational(1)};
    auto sol = solve_lp_max(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.value == Rational(14) / 5);
    CHECK(sol.w[0] == Rational(8) / 5);
    CHECK(sol.w[1] == Rational(6) / 5);
}

TEST_CASE("exact simplex reports infeasible equality systems") {
    // x = 2 and x = 3 cannot both hold
    LinearProgram lp;
    lp.num_vars = 1;
    lp.rows.push_back({{Rational(1)}, Rational(2), true});
    lp.rows.push_back({{Rational(1)}, Rational(3), true});
    lp.objective = {Rational(1)};
    CHECK_FALSE(solve_lp_max(lp).feasible);
}

TEST_CASE("exact simplex handles redundant equalities") {
    // x + y = 2 stated twice, maximize x -> 2
    LinearProgram lp;
    lp.num_vars = 2;
    lp.rows.push_back({{Rational(1), Rational(1)}, Rational(2), true});
    lp.rows.push_back({{Rational(1), Rational(1)}, Rational(2), true});
    lp.objective = {Rational(1), Rational(0)};
    auto sol = solve_lp_max(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.value == Rational(2));
}
