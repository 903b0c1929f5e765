#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "uptail/builtin.hpp"
#include "uptail/graphon.hpp"
#include "uptail/variational.hpp"

using namespace uptail;

TEST_CASE("entropy cell: values, endpoints, domain") {
    CHECK(ip(0.3, 0.3) == doctest::Approx(0.0));
    CHECK(ip(0.5, 0.25) ==
          doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(0.5 / 0.75)));
    CHECK(ip(1.0, 0.25) == doctest::Approx(std::log(4.0)));
    CHECK(ip(0.0, 0.25) == doctest::Approx(std::log(4.0 / 3.0)));
    CHECK_THROWS_AS(ip(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ip(1.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ip(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ip(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("density of a constant step function is p^edges") {
    StepGraphon w{{1.0}, {{0.2}}};
    CHECK(t_step(triangle_transitive(), w) == doctest::Approx(std::pow(0.2, 3)));
    CHECK(t_step(directed_cycle(5), w) == doctest::Approx(std::pow(0.2, 5)));
    CHECK(ip_mass(w, 0.2) == doctest::Approx(0.0));
    // two equal halves at p is still constant-p in every density
    StepGraphon half{{0.5, 0.5}, {{0.2, 0.2}, {0.2, 0.2}}};
    CHECK(t_step(star_mixed(), half) == doctest::Approx(std::pow(0.2, 3)));
}

TEST_CASE("two-block hand computation") {
    // block 0 of mass 1/4 sends 1 to everything; rest at p = 0.1
    StepGraphon w{{0.25, 0.75}, {{1.0, 1.0}, {0.1, 0.1}}};
    Digraph edge = make_digraph(2, {{0, 1}});
    // t = sum_i m_i (m_0 v_{i0} + m_1 v_{i1})
    double expect = 0.25 * (0.25 + 0.75) + 0.75 * (0.25 * 0.1 + 0.75 * 0.1);
    CHECK(t_step(edge, w) == doctest::Approx(expect));
    CHECK(ip_mass(w, 0.1) == doctest::Approx(0.25 * std::log(10.0)));
}

TEST_CASE("hub structure: measures partition, block levels") {
    double p = 0.01;
    auto w = hub_graphon(0.4, 0.7, 0.8, 0.6, p, 2);
    REQUIRE(w.blocks() == 7);
    double total = 0;
    for (double m : w.measure) {
        CHECK(m >= -1e-15);
        total += m;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    // hub masses: min to the shared block, remainders to the exclusive ones
    double a3 = 0.4 * p * p;
    CHECK(w.measure[0] == doctest::Approx(a3));
    CHECK(w.measure[1] == doctest::Approx(0.0));          // x1 < x2: A1\A2 empty
    CHECK(w.measure[2] == doctest::Approx(0.3 * p * p));  // A2 \ A1
    for (auto& row : w.value)
        for (double v : row) CHECK((v == doctest::Approx(1.0) || v == doctest::Approx(p)));
    // out-hub rows broadcast 1 into all of B1, in-hub columns receive 1 from B2
    CHECK(w.value[1][3] == doctest::Approx(1.0));
    CHECK(w.value[3][1] == doctest::Approx(p));
    CHECK(w.value[3][2] == doctest::Approx(1.0));
    CHECK(w.value[5][2] == doctest::Approx(1.0));  // B2\B1 still feeds A2
    CHECK(w.value[6][6] == doctest::Approx(p));
    CHECK_THROWS_AS(hub_graphon(3.0, 3.0, 1.0, 1.0, 0.9, 2), InfeasibleError);
}

TEST_CASE("planting the triangle hub reproduces the frozen expansion") {
    // at the lower-bound argmin for delta = 1 the density ratio is
    // 2 + p/3 - (5/3) p^2 + O(p^3) and the entropy ratio tends to 2/3
    Digraph tri = triangle_transitive();
    auto G = solve_G(build_g(tri), 1.0);
    REQUIRE(G.feasible);
    for (double p : {1e-2, 1e-3, 1e-4}) {
        auto w = hub_graphon(G.x1, G.x2, G.y1, G.y2, p, 2);
        double t_ratio = t_step(tri, w) / std::pow(p, 3);
        double series = 2.0 + p / 3.0 - (5.0 / 3.0) * p * p;
        CHECK(t_ratio == doctest::Approx(series).epsilon(1e-5));
        double mass_ratio = ip_mass(w, p) / (p * p * std::log(1.0 / p));
        CHECK(mass_ratio == doctest::Approx(2.0 / 3.0).epsilon(20.0 * p));
    }
}

TEST_CASE("planting an out-star hub overshoots by exactly delta") {
    // star with out-center: one hub side empty, density gain is x1 y1^k = delta
    Digraph st = star_out(3);
    auto G = solve_G(build_g(st), 5.0);
    REQUIRE(G.feasible);
    double p = 1e-3;
    auto w = hub_graphon(G.x1, G.x2, G.y1, G.y2, p, 3);
    double mass_ratio = ip_mass(w, p) / (std::pow(p, 3) * std::log(1.0 / p));
    CHECK(mass_ratio == doctest::Approx(5.0).epsilon(1e-2));
    double excess = t_step(st, w) / std::pow(p, 3) - 1.0;
    CHECK(excess == doctest::Approx(5.0).epsilon(5e-2));
}

TEST_CASE("clique block: side, density and entropy scaling") {
    double p = 1e-3, delta = 1.0;
    auto w = clique_graphon(delta, p, 3, 2);
    REQUIRE(w.blocks() == 2);
    CHECK(w.measure[0] == doctest::Approx(std::pow(delta, 1.0 / 3.0) * p));
    CHECK(w.value[0][0] == doctest::Approx(1.0));
    CHECK(w.value[0][1] == doctest::Approx(p));
    // mass ratio against p^Delta log(1/p) is exactly delta^{2/v}
    double mass_ratio = ip_mass(w, p) / (p * p * std::log(1.0 / p));
    CHECK(mass_ratio == doctest::Approx(std::pow(delta, 2.0 / 3.0)).epsilon(1e-9));
    // densities: the planted block alone contributes delta p^e from each
    // orientation-preserving placement inside the bidirectional clique
    double t_ratio = t_step(triangle_cyclic(), w) / std::pow(p, 3);
    CHECK(t_ratio > 1.0 + delta * 0.9);
    CHECK_THROWS_AS(clique_graphon(1e9, 0.5, 3, 2), InfeasibleError);
}
