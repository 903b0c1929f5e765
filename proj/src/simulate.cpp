#include "uptail/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "uptail/errors.hpp"
#include "uptail/graphon.hpp"
#include "uptail/variational.hpp"

namespace uptail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Vertex order for the backtracking homomorphism count: BFS over the weak
// adjacency so each new vertex is constrained by an already placed one.
std::vector<int> bfs_order(const Digraph& h) {
    std::vector<int> order;
    std::vector<char> seen(h.n, 0);
    auto out = h.out_adjacency();
    auto in = h.in_adjacency();
    for (int s = 0; s < h.n; ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : out[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            for (int w : in[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return order;
}

struct PlacedEdge {
    int earlier_pos;
    bool outgoing;  // true: new vertex -> earlier vertex
};

// constraints[k]: edges between order[k] and order[0..k-1].
std::vector<std::vector<PlacedEdge>> order_constraints(const Digraph& h,
                                                       const std::vector<int>& order) {
    std::vector<int> pos(h.n);
    for (int k = 0; k < h.n; ++k) pos[order[k]] = k;
    std::vector<std::vector<PlacedEdge>> cons(h.n);
    for (const auto& e : h.edges) {
        int pu = pos[e.first], pv = pos[e.second];
        if (pu > pv) cons[pu].push_back({pv, true});
        else cons[pv].push_back({pu, false});
    }
    return cons;
}

}  // namespace

AdjacencyMatrix sample_digraph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_digraph needs n >= 1");
    AdjacencyMatrix g;
    g.n = n;
    g.a.assign(static_cast<std::size_t>(n) * n, 0);
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            g.at(i, j) = rng.uniform() < p ? 1 : 0;
        }
    return g;
}

std::int64_t hom_count(const Digraph& h, const AdjacencyMatrix& g) {
    if (h.n < 1) throw std::invalid_argument("hom_count needs a nonempty pattern");
    if (std::pow(static_cast<double>(g.n), h.n) > 1e8)
        throw CapExceeded("hom_count state space exceeds 1e8 maps");
    auto order = bfs_order(h);
    auto cons = order_constraints(h, order);

    std::vector<int> image(h.n, 0);
    std::int64_t count = 0;
    int k = 0;
    image[0] = -1;
    while (k >= 0) {
        int v = ++image[k];
        if (v >= g.n) {
            --k;
            continue;
        }
        bool ok = true;
        for (const auto& c : cons[k]) {
            int w = image[c.earlier_pos];
            if (!(c.outgoing ? g.at(v, w) : g.at(w, v))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (k == h.n - 1) {
            ++count;
            continue;
        }
        image[++k] = -1;
    }
    return count;
}

TailEstimate mc_upper_tail(const Digraph& h, int n, double p, double delta, int samples,
                           std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("mc_upper_tail needs samples >= 1");
    if (std::pow(static_cast<double>(n), h.n) > 1e8)
        throw CapExceeded("mc_upper_tail: hom_count state space exceeds 1e8 maps");
    double thr = (1.0 + delta) * std::pow(p, static_cast<double>(h.m())) *
                 std::pow(static_cast<double>(n), static_cast<double>(h.n));

    SplitMix64 rng(seed);
    TailEstimate est;
    est.samples = samples;
    AdjacencyMatrix g;
    g.n = n;
    g.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                g.at(i, j) = rng.uniform() < p ? 1 : 0;
            }
        if (static_cast<double>(hom_count(h, g)) >= thr) ++est.hits;
    }

    const double z = 1.959963984540054;  // 97.5% normal quantile, 95% two-sided
    double nn = static_cast<double>(samples);
    double phat = static_cast<double>(est.hits) / nn;
    double denom = 1.0 + z * z / nn;
    double center = (phat + z * z / (2.0 * nn)) / denom;
    double halfw =
        z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
    double lo = std::max(0.0, center - halfw);
    double hi = std::min(1.0, center + halfw);

    if (est.hits == 0) {
        est.one_sided = true;
        est.neg_log = -std::log(hi);  // confidence lower bound on -log P
        est.half_width = 0.0;
    } else {
        est.neg_log = -std::log(phat);
        double upper = -std::log(lo);
        double lower = hi >= 1.0 ? 0.0 : -std::log(hi);
        est.half_width = 0.5 * (upper - lower);
    }
    return est;
}

double binomial_neg_log_tail(long long m, double q, long long k0) {
    if (m < 1 || q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("binomial_neg_log_tail needs m >= 1 and 0 < q < 1");
    if (k0 <= 0) return 0.0;
    if (k0 > m) return kInf;
    double lq = std::log(q), l1q = std::log(1.0 - q);
    double lgm = std::lgamma(static_cast<double>(m) + 1.0);
    std::vector<double> terms;
    double mx = -kInf;
    for (long long k = k0; k <= m; ++k) {
        double t = lgm - std::lgamma(static_cast<double>(k) + 1.0) -
                   std::lgamma(static_cast<double>(m - k) + 1.0) +
                   static_cast<double>(k) * lq + static_cast<double>(m - k) * l1q;
        terms.push_back(t);
        if (t > mx) mx = t;
        if (mx - t > 100.0 && k > k0 + 20) break;  // far past the mode
    }
    double s = 0.0;
    for (double t : terms) s += std::exp(t - mx);
    return -(mx + std::log(s));
}

BinomialTail binomial_tail_c2(int n, double p, double delta) {
    if (n < 2) throw std::invalid_argument("binomial_tail_c2 needs n >= 2");
    BinomialTail r;
    r.trials = static_cast<long long>(n) * (n - 1) / 2;
    double q = p * p;
    r.threshold = static_cast<long long>(
        std::ceil((1.0 + delta) * static_cast<double>(r.trials) * q));
    r.neg_log_exact = binomial_neg_log_tail(r.trials, q, r.threshold);
    r.neg_log_asymptotic = 0.5 * n * n * p * p *
                           ((1.0 + delta) * std::log(1.0 + delta) - delta);
    return r;
}

double t_hom_density(const Digraph& h, const std::vector<double>& q, int n) {
    if (static_cast<int>(q.size()) != n * n)
        throw std::invalid_argument("t_hom_density: q must be n x n row-major");
    std::vector<int> assign(h.n, 0);
    double total = 0.0;
    while (true) {
        double prod = 1.0;
        for (const auto& e : h.edges) {
            prod *= q[static_cast<std::size_t>(assign[e.first]) * n + assign[e.second]];
            if (prod == 0.0) break;
        }
        total += prod;
        int pos = 0;
        while (pos < h.n && ++assign[pos] == n) assign[pos++] = 0;
        if (pos == h.n) break;
    }
    return total / std::pow(static_cast<double>(n), h.n);
}

double penalized_objective(const Digraph& h, const std::vector<double>& q, int n, double p,
                           double mu, double threshold) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc += ip(q[static_cast<std::size_t>(i) * n + j], p);
    double gap = threshold - t_hom_density(h, q, n);
    if (gap > 0.0) acc += mu * gap * gap;
    return acc;
}

std::vector<double> penalized_gradient(const Digraph& h, const std::vector<double>& q, int n,
                                       double p, double mu, double threshold) {
    std::vector<double> grad(q.size(), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double x = q[static_cast<std::size_t>(i) * n + j];
            // d ip / dx, finite only in the open interval
            grad[static_cast<std::size_t>(i) * n + j] =
                std::log(x / p) - std::log((1.0 - x) / (1.0 - p));
        }

    // dt/dq via per-map prefix/suffix products over the edges.
    int e = h.m();
    std::vector<double> pre(e + 1), suf(e + 1), dt(q.size(), 0.0);
    std::vector<int> assign(h.n, 0);
    double t = 0.0;
    while (true) {
        pre[0] = 1.0;
        for (int i = 0; i < e; ++i) {
            const auto& ed = h.edges[i];
            pre[i + 1] = pre[i] * q[static_cast<std::size_t>(assign[ed.first]) * n +
                                    assign[ed.second]];
        }
        suf[e] = 1.0;
        for (int i = e; i-- > 0;) {
            const auto& ed = h.edges[i];
            suf[i] = suf[i + 1] * q[static_cast<std::size_t>(assign[ed.first]) * n +
                                    assign[ed.second]];
        }
        t += pre[e];
        for (int i = 0; i < e; ++i) {
            const auto& ed = h.edges[i];
            dt[static_cast<std::size_t>(assign[ed.first]) * n + assign[ed.second]] +=
                pre[i] * suf[i + 1];
        }
        int pos = 0;
        while (pos < h.n && ++assign[pos] == n) assign[pos++] = 0;
        if (pos == h.n) break;
    }
    double scale = std::pow(static_cast<double>(n), h.n);
    t /= scale;
    double gap = threshold - t;
    if (gap > 0.0) {
        double c = -2.0 * mu * gap / scale;
        for (std::size_t k = 0; k < grad.size(); ++k) grad[k] += c * dt[k];
    }
    for (int i = 0; i < n; ++i) grad[static_cast<std::size_t>(i) * n + i] = 0.0;
    return grad;
}

namespace {

void project_box(std::vector<double>& q, int n) {
    const double lo = 1e-9, hi = 1.0 - 1e-9;
    for (auto& x : q) x = std::clamp(x, lo, hi);
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + i] = 0.0;
}

std::vector<double> discretize_graphon(const StepGraphon& w, int n) {
    std::vector<int> block(n);
    for (int i = 0; i < n; ++i) {
        double x = (i + 0.5) / n, cum = 0.0;
        int b = w.blocks() - 1;
        for (int k = 0; k < w.blocks(); ++k) {
            cum += w.measure[k];
            if (x < cum) {
                b = k;
                break;
            }
        }
        block[i] = b;
    }
    std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) q[static_cast<std::size_t>(i) * n + j] = w.value[block[i]][block[j]];
    return q;
}

double ip_sum(const std::vector<double>& q, int n, double p) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc += ip(q[static_cast<std::size_t>(i) * n + j], p);
    return acc;
}

// Scale q toward the all-ones matrix until the density constraint holds;
// returns false when even q = 1 off the diagonal cannot reach the threshold.
bool repair_feasibility(const Digraph& h, std::vector<double>& q, int n, double threshold) {
    if (t_hom_density(h, q, n) >= threshold) return true;
    auto blend = [&](double s) {
        std::vector<double> r(q.size());
        for (std::size_t k = 0; k < q.size(); ++k) r[k] = q[k] + s * (1.0 - q[k]);
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i) * n + i] = 0.0;
        return r;
    };
    if (t_hom_density(h, blend(1.0), n) < threshold) return false;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (t_hom_density(h, blend(mid), n) >= threshold) hi = mid;
        else lo = mid;
    }
    q = blend(hi);
    return true;
}

}  // namespace

PhiUpperResult discrete_phi_upper(const Digraph& h, int n, double p, double delta,
                                  int restarts, std::uint64_t seed) {
    if (n > 8) throw CapExceeded("discrete_phi_upper caps at n <= 8");
    if (h.n > 4) throw CapExceeded("discrete_phi_upper caps at v(H) <= 4");
    if (n < 2) throw std::invalid_argument("discrete_phi_upper needs n >= 2");
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("discrete_phi_upper needs 0 < p < 1");

    double threshold = (1.0 + delta) * std::pow(p, static_cast<double>(h.m()));
    int max_deg = degrees(h).max_degree;

    std::vector<std::vector<double>> starts;
    {
        std::vector<double> qc(static_cast<std::size_t>(n) * n, p);
        for (int i = 0; i < n; ++i) qc[static_cast<std::size_t>(i) * n + i] = 0.0;
        starts.push_back(qc);
    }
    try {
        auto g_res = solve_G(build_g(h), delta);
        if (g_res.feasible)
            starts.push_back(discretize_graphon(
                hub_graphon(g_res.x1, g_res.x2, g_res.y1, g_res.y2, p, max_deg), n));
    } catch (const std::exception&) {
        // hub start unavailable at these parameters; the others remain
    }
    try {
        starts.push_back(discretize_graphon(clique_graphon(delta, p, h.n, max_deg), n));
    } catch (const std::exception&) {
    }
    SplitMix64 rng(seed);
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> qr(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    qr[static_cast<std::size_t>(i) * n + j] =
                        std::clamp(p + 0.4 * (rng.uniform() - 0.25), 1e-6, 1.0 - 1e-6);
        starts.push_back(qr);
    }

    PhiUpperResult best;
    best.value = kInf;
    for (auto q : starts) {
        project_box(q, n);
        double mu = 100.0;
        for (int round = 0; round < 5; ++round, mu *= 10.0) {
            double step = 0.1;
            for (int iter = 0; iter < 200; ++iter) {
                double cur = penalized_objective(h, q, n, p, mu, threshold);
                auto grad = penalized_gradient(h, q, n, p, mu, threshold);
                double g2 = 0.0;
                for (double gk : grad) g2 += gk * gk;
                if (g2 < 1e-18) break;
                double s = step;
                bool moved = false;
                for (int bt = 0; bt < 40; ++bt, s *= 0.5) {
                    std::vector<double> cand(q.size());
                    for (std::size_t k = 0; k < q.size(); ++k) cand[k] = q[k] - s * grad[k];
                    project_box(cand, n);
                    if (penalized_objective(h, cand, n, p, mu, threshold) <
                        cur - 1e-4 * s * g2) {
                        q = std::move(cand);
                        moved = true;
                        step = s * 2.0;
                        break;
                    }
                }
                if (!moved) break;
            }
        }
        double rv = kInf;
        if (repair_feasibility(h, q, n, threshold)) {
            rv = ip_sum(q, n, p);
            if (rv < best.value) {
                best.value = rv;
                best.q = q;
                best.feasible = true;
            }
        }
        best.restart_values.push_back(rv);
    }
    if (!best.feasible) best.value = 0.0;
    return best;
}

}  // namespace uptail
