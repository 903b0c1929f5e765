#pragma once

#include <cstdint>
#include <vector>

#include "uptail/digraph.hpp"

namespace uptail {

// SplitMix64: 64-bit counter-based generator (Steele/Lea/Flood mixer). Chosen
// for bit-for-bit reproducibility across platforms; std:: distributions are
// implementation-defined and deliberately avoided.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline const char* generator_name() { return "splitmix64"; }

// Dense 0/1 adjacency with a zero diagonal.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<std::uint8_t> a;  // row-major

    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Directed Erdos-Renyi sample: each ordered pair independently with
// probability p, drawn in row-major order from SplitMix64(seed).
AdjacencyMatrix sample_digraph(int n, double p, std::uint64_t seed);

// Number of homomorphisms V(H) -> V(G) (all maps, not only injective ones).
// Prunes zero partial products; still refuses n^{v(H)} > 1e8.
std::int64_t hom_count(const Digraph& h, const AdjacencyMatrix& g);

// Monte Carlo estimate of -log P( t(H,G) >= (1+delta) p^{e(H)} ) with G a
// directed Erdos-Renyi sample. half_width is the 95% Wilson interval mapped
// through -log; one_sided marks the zero-hit case where only a lower bound
// on -log P survives.
struct TailEstimate {
    double neg_log = 0.0;
    double half_width = 0.0;
    int samples = 0;
    int hits = 0;
    bool exact = false;
    bool one_sided = false;
};

TailEstimate mc_upper_tail(const Digraph& h, int n, double p, double delta, int samples,
                           std::uint64_t seed);

// Exact upper tail for the 2-cycle count: the number of bidirectional pairs
// is Bin(m, p^2) with m = n(n-1)/2, and the tail is taken at
// ceil((1+delta) m p^2). neg_log_exact uses stable log-space summation;
// neg_log_asymptotic is n^2 p^2 [(1+delta)log(1+delta) - delta] / 2.
struct BinomialTail {
    double neg_log_exact = 0.0;
    double neg_log_asymptotic = 0.0;
    long long trials = 0;
    long long threshold = 0;
};

BinomialTail binomial_tail_c2(int n, double p, double delta);

// Generic exact binomial upper tail -log P(Bin(m,q) >= k0), exposed for the
// oracle comparisons in the tests.
double binomial_neg_log_tail(long long m, double q, long long k0);

// Finite-n demonstrator: minimize sum ip(Q_ij, p) over matrices Q in [0,1]
// with zero diagonal subject to t(H,Q) >= (1+delta) p^{e(H)}, by projected
// gradient on a quadratic penalty (mu scaled x10 for five rounds) from a few
// deterministic starts plus seeded perturbations. Returns the best strictly
// feasible value. Caps: n <= 8, v(H) <= 4.
struct PhiUpperResult {
    bool feasible = false;
    double value = 0.0;
    std::vector<double> q;              // row-major argmin
    std::vector<double> restart_values; // per-start feasible values (inf if none)
};

PhiUpperResult discrete_phi_upper(const Digraph& h, int n, double p, double delta,
                                  int restarts, std::uint64_t seed);

// Weighted homomorphism density t(H,Q) = n^{-v(H)} sum_maps prod Q[edge] and
// the penalty objective ip_sum + mu * max(0, threshold - t)^2 with its exact
// gradient; public so the finite-difference checks can see them.
double t_hom_density(const Digraph& h, const std::vector<double>& q, int n);
double penalized_objective(const Digraph& h, const std::vector<double>& q, int n, double p,
                           double mu, double threshold);
std::vector<double> penalized_gradient(const Digraph& h, const std::vector<double>& q, int n,
                                       double p, double mu, double threshold);

}  // namespace uptail
