#include "uptail/matching.hpp"

#include <algorithm>
#include <queue>

namespace uptail {

BipartiteWitness induced_bipartite(const Digraph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.n, 0);
    for (int v : s) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        in_s[v] = 1;
    }
    for (auto [u, v] : g.edges)
        if (in_s[u] && in_s[v])
            throw std::invalid_argument("witness side is not independent");

    BipartiteWitness w;
    w.s_side = s;
    std::sort(w.s_side.begin(), w.s_side.end());
    std::vector<char> in_t(g.n, 0);
    for (auto [u, v] : g.edges) {
        if (in_s[u] && !in_s[v]) in_t[v] = 1;
        if (in_s[v] && !in_s[u]) in_t[u] = 1;
    }
    std::vector<int> t_pos(g.n, -1), s_pos(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (in_t[v]) {
            t_pos[v] = static_cast<int>(w.t_side.size());
            w.t_side.push_back(v);
        }
    for (std::size_t i = 0; i < w.s_side.size(); ++i) s_pos[w.s_side[i]] = static_cast<int>(i);

    for (auto [u, v] : g.edges) {
        if (in_s[u] && !in_s[v]) w.arcs.push_back({s_pos[u], t_pos[v], true});
        if (in_s[v] && !in_s[u]) w.arcs.push_back({s_pos[v], t_pos[u], false});
    }
    return w;
}

namespace {

// Collapsed simple bipartite adjacency: parallel opposite arcs count once.
std::vector<std::vector<int>> collapsed_adjacency(const BipartiteWitness& w) {
    std::vector<std::vector<int>> adj(w.s_side.size());
    for (const auto& a : w.arcs) adj[a.s].push_back(a.t);
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

struct KuhnState {
    std::vector<std::vector<int>> adj;
    std::vector<int> match_t;  // t position -> s position or -1
    std::vector<int> match_s;  // s position -> t position or -1

    bool try_augment(int s, std::vector<char>& visited) {
        for (int t : adj[s]) {
            if (visited[t]) continue;
            visited[t] = 1;
            if (match_t[t] < 0 || try_augment(match_t[t], visited)) {
                match_t[t] = s;
                match_s[s] = t;
                return true;
            }
        }
        return false;
    }
};

KuhnState run_kuhn(const BipartiteWitness& w) {
    KuhnState k;
    k.adj = collapsed_adjacency(w);
    k.match_t.assign(w.t_side.size(), -1);
    k.match_s.assign(w.s_side.size(), -1);
    for (std::size_t s = 0; s < w.s_side.size(); ++s) {
        std::vector<char> visited(w.t_side.size(), 0);
        k.try_augment(static_cast<int>(s), visited);
    }
    return k;
}

}  // namespace

int max_matching(const BipartiteWitness& w) {
    auto k = run_kuhn(w);
    int nu = 0;
    for (int m : k.match_s)
        if (m >= 0) ++nu;
    return nu;
}

VertexCover min_vertex_cover(const BipartiteWitness& w) {
    auto k = run_kuhn(w);
    // Alternating BFS from unmatched S vertices: forward along non-matching
    // edges, back along matching edges. Cover = unreached S + reached T.
    std::vector<char> s_reached(w.s_side.size(), 0), t_reached(w.t_side.size(), 0);
    std::queue<int> q;
    for (std::size_t s = 0; s < w.s_side.size(); ++s)
        if (k.match_s[s] < 0) {
            s_reached[s] = 1;
            q.push(static_cast<int>(s));
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int t : k.adj[s]) {
            if (k.match_s[s] == t || t_reached[t]) continue;
            t_reached[t] = 1;
            int s2 = k.match_t[t];
            if (s2 >= 0 && !s_reached[s2]) {
                s_reached[s2] = 1;
                q.push(s2);
            }
        }
    }
    VertexCover cover;
    for (std::size_t s = 0; s < w.s_side.size(); ++s)
        if (!s_reached[s]) cover.s_cover.push_back(static_cast<int>(s));
    for (std::size_t t = 0; t < w.t_side.size(); ++t)
        if (t_reached[t]) cover.t_cover.push_back(static_cast<int>(t));
    return cover;
}

namespace {

// Shared LP skeleton: one variable per arc, incident sums constrained per
// vertex. `saturate_s` turns the S rows into equalities.
LinearProgram witness_lp(const BipartiteWitness& w, bool saturate_s) {
    LinearProgram lp;
    lp.num_vars = static_cast<int>(w.arcs.size());
    auto add_side = [&](bool s_side, bool equality) {
        std::size_t count = s_side ? w.s_side.size() : w.t_side.size();
        for (std::size_t v = 0; v < count; ++v) {
            LinearProgram::Row row;
            row.coeff.assign(lp.num_vars, 0);
            for (int e = 0; e < lp.num_vars; ++e) {
                int end = s_side ? w.arcs[e].s : w.arcs[e].t;
                if (end == static_cast<int>(v)) row.coeff[e] = 1;
            }
            row.rhs = 1;
            row.equality = equality;
            lp.rows.push_back(std::move(row));
        }
    };
    add_side(true, saturate_s);
    add_side(false, false);
    return lp;
}

}  // namespace

Rational max_fractional_matching_value(const BipartiteWitness& w) {
    LinearProgram lp = witness_lp(w, /*saturate_s=*/false);
    lp.objective.assign(lp.num_vars, 1);
    auto sol = solve_lp_max(lp);
    // all-zero weights are always feasible here
    if (!sol.feasible) throw std::logic_error("fractional matching LP infeasible");
    return sol.value;
}

DirectionalBounds directional_bounds(const BipartiteWitness& w) {
    if (w.s_side.empty()) return {0, 0};
    DirectionalBounds out;
    for (bool forward : {true, false}) {
        LinearProgram lp = witness_lp(w, /*saturate_s=*/true);
        lp.objective.assign(lp.num_vars, 0);
        for (int e = 0; e < lp.num_vars; ++e)
            if (w.arcs[e].s_to_t == forward) lp.objective[e] = 1;
        auto sol = solve_lp_max(lp);
        if (!sol.feasible)
            throw InfeasibleError("witness side cannot be saturated by a fractional matching");
        // The constraint matrix is totally unimodular, so the optimum sits at
        // an integral vertex; a fractional value would mean a solver bug.
        if (denominator(sol.value) != 1)
            throw std::logic_error("directional bound came out fractional");
        int v = static_cast<int>(numerator(sol.value));
        (forward ? out.a_weight : out.b_weight) = v;
    }
    return out;
}

DirectionalBounds directional_bounds(const Digraph& g, const std::vector<int>& s) {
    return directional_bounds(induced_bipartite(g, s));
}

DirectionalBounds brute_force_directional_bounds(const BipartiteWitness& w) {
    if (static_cast<int>(w.arcs.size()) > 24)
        throw CapExceeded("brute-force directional bounds capped at 24 arcs");
    if (w.s_side.empty()) return {0, 0};

    std::vector<std::vector<int>> arcs_at(w.s_side.size());
    for (std::size_t e = 0; e < w.arcs.size(); ++e)
        arcs_at[w.arcs[e].s].push_back(static_cast<int>(e));

    int best_a = -1, best_b = -1;
    // Assign each S vertex one incident arc with a fresh T endpoint; every
    // matching saturating S shows up exactly once.
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t used_t, int forward) -> void {
        if (i == arcs_at.size()) {
            int backward = static_cast<int>(arcs_at.size()) - forward;
            best_a = std::max(best_a, forward);
            best_b = std::max(best_b, backward);
            return;
        }
        for (int e : arcs_at[i]) {
            const auto& arc = w.arcs[e];
            if (used_t >> arc.t & 1) continue;
            self(self, i + 1, used_t | (1ULL << arc.t), forward + (arc.s_to_t ? 1 : 0));
        }
    };
    rec(rec, 0, 0, 0);
    if (best_a < 0)
        throw InfeasibleError("no matching saturates the witness side");
    return {best_a, best_b};
}

}  // namespace uptail
