#include "uptail/graphon.hpp"

#include <cmath>
#include <stdexcept>

#include "uptail/errors.hpp"

namespace uptail {

double ip(double x, double p) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("ip needs 0 < p < 1");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("ip needs 0 <= x <= 1");
    double acc = 0.0;
    if (x > 0.0) acc += x * std::log(x / p);
    if (x < 1.0) acc += (1.0 - x) * std::log((1.0 - x) / (1.0 - p));
    return acc;
}

double t_step(const Digraph& g, const StepGraphon& w) {
    int k = w.blocks();
    if (k == 0) throw std::invalid_argument("empty step function");
    std::vector<int> assign(g.n, 0);
    double total = 0.0;
    // Odometer over all block assignments of the vertices.
    while (true) {
        double term = 1.0;
        for (int v = 0; v < g.n; ++v) term *= w.measure[assign[v]];
        if (term > 0.0)
            for (const auto& e : g.edges) term *= w.value[assign[e.first]][assign[e.second]];
        total += term;
        int pos = 0;
        while (pos < g.n && ++assign[pos] == k) assign[pos++] = 0;
        if (pos == g.n) break;
    }
    return total;
}

double ip_mass(const StepGraphon& w, double p) {
    double acc = 0.0;
    for (int i = 0; i < w.blocks(); ++i)
        for (int j = 0; j < w.blocks(); ++j)
            acc += w.measure[i] * w.measure[j] * ip(w.value[i][j], p);
    return acc;
}

StepGraphon hub_graphon(double x1, double x2, double y1, double y2, double p, int max_degree) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("hub_graphon needs 0 < p < 1");
    if (x1 < 0.0 || x2 < 0.0 || y1 < 0.0 || y1 > 1.0 || y2 < 0.0 || y2 > 1.0)
        throw std::invalid_argument("hub_graphon needs x >= 0 and y in [0,1]");

    double pd = std::pow(p, max_degree);
    double a3 = std::min(x1, x2) * pd;        // A1 n A2
    double a1 = x1 * pd - a3;                 // A1 \ A2
    double a2 = x2 * pd - a3;                 // A2 \ A1
    double au = a3 + a1 + a2;                 // A1 u A2
    // Enlarge the B sets so A1 u A2 fits inside B1 n B2; this only increases
    // the planted density, never past the target direction.
    double ey1 = std::max(y1, au);
    double ey2 = std::max(y2, au);
    double y3 = std::min(ey1, ey2);           // B1 n B2, maximal overlap

    double b_core = y3 - au;                  // (B1 n B2) \ (A1 u A2)
    double b1only = ey1 - y3;
    double b2only = ey2 - y3;
    double rest = 1.0 - (au + b_core + b1only + b2only);
    if (rest < -1e-12)
        throw InfeasibleError("hub blocks exceed total measure 1; p is too large here");
    if (rest < 0.0) rest = 0.0;

    StepGraphon w;
    w.measure = {a3, a1, a2, b_core, b1only, b2only, rest};
    // Membership per block: A1 = {0,1}, A2 = {0,2}, B1 = {0,1,2,3,4},
    // B2 = {0,1,2,3,5}.
    const bool in_a1[7] = {true, true, false, false, false, false, false};
    const bool in_a2[7] = {true, false, true, false, false, false, false};
    const bool in_b1[7] = {true, true, true, true, true, false, false};
    const bool in_b2[7] = {true, true, true, true, false, true, false};
    w.value.assign(7, std::vector<double>(7, p));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if ((in_a1[i] && in_b1[j]) || (in_b2[i] && in_a2[j])) w.value[i][j] = 1.0;
    return w;
}

StepGraphon clique_graphon(double delta, double p, int num_vertices, int max_degree) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("clique_graphon needs 0 < p < 1");
    if (delta <= 0.0) throw std::invalid_argument("clique_graphon needs delta > 0");
    double side = std::pow(delta, 1.0 / num_vertices) * std::pow(p, max_degree / 2.0);
    if (side > 1.0) throw InfeasibleError("clique block wider than 1; p is too large here");
    StepGraphon w;
    w.measure = {side, 1.0 - side};
    w.value.assign(2, std::vector<double>(2, p));
    w.value[0][0] = 1.0;
    return w;
}

}  // namespace uptail
