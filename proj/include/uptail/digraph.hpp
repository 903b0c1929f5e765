#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "uptail/errors.hpp"

namespace uptail {

// Simple digraph: vertices 0..n-1, at most one edge per ordered pair, no
// self-loops. Edges are kept sorted lexicographically, which makes equality,
// serialization and binary-search adjacency tests trivial.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;

    std::vector<std::vector<int>> out_adjacency() const;
    std::vector<std::vector<int>> in_adjacency() const;

    bool operator==(const Digraph&) const = default;
};

// Validates, dedups nothing: duplicate edges or self-loops throw.
Digraph make_digraph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list format: '#' starts a comment, first data line is "n m", then m
// lines "u v" (0-indexed). Throws ParseError with a distinct kind per defect.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list_file(const std::string& path);

// Inverse of parse_edge_list; edges appear in sorted order.
std::string serialize_edge_list(const Digraph& g);

struct DegreeSummary {
    std::vector<int> in;
    std::vector<int> out;
    std::vector<int> total;  // in + out
    int max_degree = 0;
};

DegreeSummary degrees(const Digraph& g);

// Vertices of maximum total degree, sorted. This is the vertex set of the
// induced subgraph whose independent sets index every polynomial term.
std::vector<int> max_degree_core(const Digraph& g);

struct Classification {
    bool oriented = false;           // no pair of opposite edges
    bool weakly_connected = false;
    bool regular = false;            // all total degrees equal
    bool balanced_at_max = false;    // in == out at every max-degree vertex
    bool bipartite = false;          // underlying undirected graph
    bool is_star = false;            // one center of degree >= 2, leaves of degree 1
    bool is_directed_cycle = false;  // connected, in = out = 1 everywhere (includes the 2-cycle)
};

Classification classify(const Digraph& g);

// Independent sets of the max-degree core, where u,v count as adjacent when
// the digraph has an edge between them in either direction. The empty set is
// always included. Output is in lexicographic order of the sorted member
// lists. Throws CapExceeded when the core is larger than `cap` (the
// enumeration is exponential in core size).
std::vector<std::vector<int>> enumerate_independent_sets(const Digraph& g, int cap = 26);

// Out/in neighborhoods of a vertex set S, always taken outside S.
//   n_plus  = N+(S)   out-neighbors        n_minus  = N-(S)  in-neighbors
//   n_pm    = N+ and N-                    n_plus0  = N+ only
//   n_minus0 = N- only
// All six lists are sorted and disjoint from S.
struct NeighborhoodProfile {
    std::vector<int> n_plus;
    std::vector<int> n_minus;
    std::vector<int> n_all;  // n_plus union n_minus
    std::vector<int> n_pm;
    std::vector<int> n_plus0;
    std::vector<int> n_minus0;
};

NeighborhoodProfile neighborhood_profile(const Digraph& g, const std::vector<int>& s);

// Per-set counts feeding the polynomial builders.
//   v_plus  = members of S with no in-edges in the whole digraph
//   v_minus = members with no out-edges
//   v_pm    = members with both
//   a_count = |N+(S)|, b_count = |N-(S)|
// Invariants: v_plus + v_minus + v_pm = |S| (every member of a max-degree
// core with max_degree >= 1 has at least one edge), a_count = n_plus0 + n_pm,
// b_count = n_minus0 + n_pm.
struct SetProfile {
    std::vector<int> members;
    int v_plus = 0;
    int v_minus = 0;
    int v_pm = 0;
    int a_count = 0;
    int b_count = 0;
    int n_plus0 = 0;
    int n_minus0 = 0;
    int n_pm = 0;
};

SetProfile set_profile(const Digraph& g, const std::vector<int>& s);

}  // namespace uptail
