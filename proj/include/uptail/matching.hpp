#pragma once

#include <vector>

#include "uptail/digraph.hpp"
#include "uptail/rational_simplex.hpp"

namespace uptail {

// Bipartite witness of an independent set S: side S versus T = N(S), with one
// arc per digraph edge incident to S. Direction is preserved, so a 2-cycle
// between s and t contributes two parallel arcs with opposite orientation.
// Arc endpoints are positions into s_side/t_side, not original vertex ids.
struct BipartiteWitness {
    std::vector<int> s_side;  // original ids, sorted
    std::vector<int> t_side;  // original ids, sorted
    struct Arc {
        int s;          // index into s_side
        int t;          // index into t_side
        bool s_to_t;    // true: edge leaves S; false: edge enters S
    };
    std::vector<Arc> arcs;
};

// Requires S independent (no digraph edge between two members).
BipartiteWitness induced_bipartite(const Digraph& g, const std::vector<int>& s);

// Maximum matching size of the witness with parallel opposite arcs collapsed.
int max_matching(const BipartiteWitness& w);

// Konig cover: touches every arc, and |s_cover| + |t_cover| == max_matching.
struct VertexCover {
    std::vector<int> s_cover;  // positions into s_side
    std::vector<int> t_cover;  // positions into t_side
    int size() const { return static_cast<int>(s_cover.size() + t_cover.size()); }
};

VertexCover min_vertex_cover(const BipartiteWitness& w);

// LP value of max { sum w_e : per-vertex incident sums <= 1, w >= 0 }. On a
// bipartite graph this equals the integral matching number; the equality is
// what the tests assert, so this routine must NOT shortcut through
// max_matching.
Rational max_fractional_matching_value(const BipartiteWitness& w);

// Directional weights of S. Over all maximum fractional matchings of the
// witness (equivalently: all w >= 0 with incident sums exactly 1 on S and at
// most 1 on T), a_weight maximizes the total weight on arcs leaving S and
// b_weight the total on arcs entering S. Both are attained at integral
// vertices, hence integers. Throws InfeasibleError when S cannot be
// saturated.
struct DirectionalBounds {
    int a_weight = 0;
    int b_weight = 0;
};

DirectionalBounds directional_bounds(const Digraph& g, const std::vector<int>& s);
DirectionalBounds directional_bounds(const BipartiteWitness& w);

// Independent route for the same numbers: enumerate every integral matching
// that saturates the S side and take the directional maxima directly.
// Exponential; refuses witnesses with more than 24 arcs.
DirectionalBounds brute_force_directional_bounds(const BipartiteWitness& w);

}  // namespace uptail
