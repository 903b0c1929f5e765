#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "uptail/builtin.hpp"
#include "uptail/simulate.hpp"

using namespace uptail;

TEST_CASE("splitmix64 known-answer vectors") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
    SplitMix64 rng42(42);
    CHECK(rng42.uniform() == doctest::Approx(0.7415648787718233).epsilon(1e-15));
    CHECK(rng42.uniform() == doctest::Approx(0.1599103928769201).epsilon(1e-15));
    CHECK(std::string(generator_name()) == "splitmix64");
}

TEST_CASE("sampling: determinism, diagonal, edge counts") {
    auto g1 = sample_digraph(20, 0.3, 7);
    auto g2 = sample_digraph(20, 0.3, 7);
    CHECK(g1.a == g2.a);
    CHECK(g1.a != sample_digraph(20, 0.3, 8).a);
    int edges = 0;
    for (int i = 0; i < 20; ++i) {
        CHECK(g1.at(i, i) == 0);
        for (int j = 0; j < 20; ++j) edges += g1.at(i, j);
    }
    // 380 ordered pairs at p = 0.3: mean 114, sd ~8.9; 5 sd is comfortable
    CHECK(edges > 114 - 45);
    CHECK(edges < 114 + 45);
    // p = 0 and p = 1 are deterministic
    auto empty = sample_digraph(5, 0.0, 1);
    auto full = sample_digraph(5, 1.0, 1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CHECK(empty.at(i, j) == 0);
            CHECK(full.at(i, j) == (i == j ? 0 : 1));
        }
}

namespace {

std::int64_t brute_hom_count(const Digraph& h, const AdjacencyMatrix& g) {
    std::vector<int> img(h.n, 0);
    std::int64_t total = 0;
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : h.edges) ok = ok && g.at(img[u], img[v]) == 1;
        total += ok;
        int k = h.n - 1;
        while (k >= 0 && img[k] == g.n - 1) img[k--] = 0;
        if (k < 0) break;
        ++img[k];
    }
    return total;
}

}  // namespace

TEST_CASE("homomorphism counts match brute force") {
    auto g = sample_digraph(7, 0.4, 123);
    for (const Digraph& h : {triangle_transitive(), triangle_cyclic(), directed_cycle(2),
                             star_out(2), star_mixed()}) {
        CHECK(hom_count(h, g) == brute_hom_count(h, g));
    }
    // 2-cycle homs = 2 x (bidirectional pairs) + 0 from the empty diagonal
    std::int64_t pairs = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) pairs += g.at(i, j) && g.at(j, i);
    CHECK(hom_count(directed_cycle(2), g) == 2 * pairs);
    Digraph big = star_out(9);  // 10 vertices: 30^10 > 1e8
    CHECK_THROWS_AS(hom_count(big, sample_digraph(30, 0.1, 1)), CapExceeded);
}

TEST_CASE("exact binomial tails hit the frozen oracle values") {
    // direct tail values
    CHECK(binomial_neg_log_tail(132, 0.3, 65) ==
          doctest::Approx(12.789030660).epsilon(1e-9));
    CHECK(binomial_neg_log_tail(10, 0.5, 0) == doctest::Approx(0.0));
    CHECK(std::isinf(binomial_neg_log_tail(10, 0.5, 11)));
    CHECK(binomial_neg_log_tail(10, 0.5, 10) == doctest::Approx(10 * std::log(2.0)));
    // 2-cycle wrapper at n = 100, p = 0.1, delta = 1: threshold lands on 100
    auto t = binomial_tail_c2(100, 0.1, 1.0);
    CHECK(t.trials == 4950);
    CHECK(t.threshold == 100);
    CHECK(t.neg_log_exact == doctest::Approx(22.637727466444183).epsilon(1e-12));
    CHECK(t.neg_log_asymptotic ==
          doctest::Approx(0.5 * 1e4 * 0.01 * (2 * std::log(2.0) - 1)).epsilon(1e-12));
    CHECK(t.neg_log_exact / t.neg_log_asymptotic ==
          doctest::Approx(1.172045453).epsilon(1e-9));
    // delta = 0 keeps a genuine tail (threshold just above the mean)
    auto t0 = binomial_tail_c2(100, 0.1, 0.0);
    CHECK(t0.threshold == 50);
    CHECK(t0.neg_log_exact == doctest::Approx(0.711982913).epsilon(1e-9));
    // the exact/asymptotic ratio decreases toward 1 as n grows
    double r100 = t.neg_log_exact / t.neg_log_asymptotic;
    auto t200 = binomial_tail_c2(200, 0.1, 1.0);
    auto t400 = binomial_tail_c2(400, 0.1, 1.0);
    double r200 = t200.neg_log_exact / t200.neg_log_asymptotic;
    double r400 = t400.neg_log_exact / t400.neg_log_asymptotic;
    CHECK(t200.threshold == 399);
    CHECK(t400.threshold == 1597);
    CHECK(r200 == doctest::Approx(1.058950368).epsilon(1e-9));
    CHECK(r400 == doctest::Approx(1.025532813).epsilon(1e-9));
    CHECK(r100 > r200);
    CHECK(r200 > r400);
    CHECK(r400 > 1.0);
}

TEST_CASE("monte carlo tail tracks the exact 2-cycle answer") {
    // n = 12, p = 0.45, delta = 0.1: tail is common enough to estimate
    auto est = mc_upper_tail(directed_cycle(2), 12, 0.45, 0.1, 4000, 99);
    REQUIRE(est.hits > 0);
    CHECK(est.samples == 4000);
    CHECK_FALSE(est.one_sided);
    // the hom threshold (1+delta) p^2 n^2 counts each pair twice; match it
    // exactly rather than using the mean-based density of binomial_tail_c2
    double thr = 1.1 * 0.45 * 0.45 * 144.0;
    auto k0 = static_cast<long long>(std::ceil(thr / 2.0));
    double exact = binomial_neg_log_tail(66, 0.45 * 0.45, k0);
    CHECK(std::abs(est.neg_log - exact) <= 3 * est.half_width + 0.05);
    // a hopeless threshold yields the one-sided Wilson floor
    auto rare = mc_upper_tail(directed_cycle(2), 40, 0.1, 2.0, 500, 5);
    CHECK(rare.hits == 0);
    CHECK(rare.one_sided);
    CHECK(rare.neg_log > 4.0);
    CHECK(rare.half_width == 0.0);
}

TEST_CASE("penalized gradient matches central differences") {
    Digraph h = triangle_transitive();
    int n = 5;
    SplitMix64 rng(2024);
    std::vector<double> q(n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) q[i * n + j] = 0.05 + 0.9 * rng.uniform();
    double p = 0.2, mu = 50.0;
    double thr = 1.02 * t_hom_density(h, q, n);  // penalty active
    auto grad = penalized_gradient(h, q, n, p, mu, thr);
    double step = 1e-6;
    for (int k = 0; k < n * n; ++k) {
        if (k % (n + 1) == 0) {
            CHECK(grad[k] == 0.0);
            continue;
        }
        auto qp = q, qm = q;
        qp[k] += step;
        qm[k] -= step;
        double fd = (penalized_objective(h, qp, n, p, mu, thr) -
                     penalized_objective(h, qm, n, p, mu, thr)) /
                    (2 * step);
        CHECK(grad[k] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("finite-n entropy optimizer: feasibility and caps") {
    Digraph h = triangle_transitive();
    auto r = discrete_phi_upper(h, 6, 0.3, 0.5, 2, 11);
    REQUIRE(r.feasible);
    CHECK(r.value > 0.0);
    CHECK(r.q.size() == 36);
    double thr = 1.5 * std::pow(0.3, 3);
    CHECK(t_hom_density(h, r.q, 6) >= thr - 1e-9);
    double ip_total = 0.0;
    // the reported value is the entropy of the returned matrix
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) {
                double x = r.q[i * 6 + j];
                ip_total += x * std::log(x / 0.3) +
                            (1 - x) * std::log((1 - x) / 0.7);
            }
    CHECK(r.value == doctest::Approx(ip_total).epsilon(1e-9));
    CHECK(r.restart_values.size() == 5);  // const-p, hub, clique, 2 restarts
    double best = INFINITY;
    for (double v : r.restart_values) best = std::min(best, v);
    CHECK(r.value == doctest::Approx(best).epsilon(1e-12));
    // beating every product structure is impossible: value below n^2 ip(1,p)
    CHECK(r.value < 36 * std::log(1.0 / 0.3));
    CHECK_THROWS_AS(discrete_phi_upper(h, 9, 0.3, 0.5, 1, 1), CapExceeded);
    CHECK_THROWS_AS(discrete_phi_upper(gap_construction(5), 6, 0.3, 0.5, 1, 1), CapExceeded);
}
