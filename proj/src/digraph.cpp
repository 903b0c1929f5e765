#include "uptail/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace uptail {

bool Digraph::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Digraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) adj[u].push_back(v);
    return adj;  // already sorted: edges are sorted lexicographically
}

std::vector<std::vector<int>> Digraph::in_adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) adj[v].push_back(u);
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

Digraph make_digraph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (i > 0 && edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge");
    }
    Digraph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

namespace {

// Strips comments and blank lines; keeps a 1-based line counter for errors.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) return true;
    }
    return false;
}

std::pair<long long, long long> parse_int_pair(const std::string& line, int line_no) {
    std::istringstream ss(line);
    long long a, b;
    std::string rest;
    if (!(ss >> a >> b))
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "expected two integers, got \"" + line + "\"");
    if (ss >> rest)
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "trailing tokens after \"" + rest + "\"");
    return {a, b};
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no))
        throw ParseError(ParseErrorKind::MalformedLine, line_no, "missing header");
    auto [n, m] = parse_int_pair(line, line_no);
    if (n < 0 || m < 0 || n > 1'000'000)
        throw ParseError(ParseErrorKind::MalformedLine, line_no, "bad header counts");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no))
            throw ParseError(ParseErrorKind::MalformedLine, line_no,
                             "expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i));
        auto [u, v] = parse_int_pair(line, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseErrorKind::IndexOutOfRange, line_no,
                             "vertex index outside [0," + std::to_string(n - 1) + "]");
        if (u == v)
            throw ParseError(ParseErrorKind::SelfLoop, line_no,
                             "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, line_no))
        throw ParseError(ParseErrorKind::MalformedLine, line_no, "extra data after edge list");

    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                             "edge " + std::to_string(sorted[i].first) + " -> " +
                                 std::to_string(sorted[i].second) + " listed twice");
    Digraph g;
    g.n = static_cast<int>(n);
    g.edges = std::move(sorted);
    return g;
}

Digraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseErrorKind::MalformedLine, 0, "cannot open " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Digraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

DegreeSummary degrees(const Digraph& g) {
    DegreeSummary d;
    d.in.assign(g.n, 0);
    d.out.assign(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++d.out[u];
        ++d.in[v];
    }
    d.total.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        d.total[v] = d.in[v] + d.out[v];
        d.max_degree = std::max(d.max_degree, d.total[v]);
    }
    return d;
}

std::vector<int> max_degree_core(const Digraph& g) {
    auto d = degrees(g);
    std::vector<int> core;
    for (int v = 0; v < g.n; ++v)
        if (d.total[v] == d.max_degree) core.push_back(v);
    return core;
}

Classification classify(const Digraph& g) {
    Classification c;
    auto d = degrees(g);

    c.oriented = true;
    for (auto [u, v] : g.edges)
        if (g.has_edge(v, u)) c.oriented = false;

    c.regular = g.n > 0;
    for (int v = 0; v < g.n; ++v)
        if (d.total[v] != d.max_degree) c.regular = false;

    c.balanced_at_max = true;
    for (int v = 0; v < g.n; ++v)
        if (d.total[v] == d.max_degree && d.in[v] != d.out[v]) c.balanced_at_max = false;

    // Underlying undirected graph: connectivity and 2-colorability in one BFS.
    std::vector<std::vector<int>> und(g.n);
    for (auto [u, v] : g.edges) {
        und[u].push_back(v);
        und[v].push_back(u);
    }
    std::vector<int> color(g.n, -1);
    int components = 0;
    c.bipartite = true;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        ++components;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : und[u]) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    c.bipartite = false;
                }
            }
        }
    }
    c.weakly_connected = components == 1 && g.n > 0;

    // Star: one center of degree >= 2, every other vertex a degree-1 leaf
    // adjacent to the center.
    if (g.n >= 3 && c.weakly_connected) {
        int center = -1, leaves = 0;
        bool shape_ok = true;
        for (int v = 0; v < g.n; ++v) {
            if (d.total[v] == 1) {
                ++leaves;
            } else if (d.total[v] >= 2 && center == -1) {
                center = v;
            } else {
                shape_ok = false;
            }
        }
        c.is_star = shape_ok && center != -1 && leaves == g.n - 1 &&
                    d.total[center] == g.n - 1;
    }

    if (g.n >= 2 && c.weakly_connected) {
        bool all_one = true;
        for (int v = 0; v < g.n; ++v)
            if (d.in[v] != 1 || d.out[v] != 1) all_one = false;
        c.is_directed_cycle = all_one;
    }
    return c;
}

namespace {

struct CoreView {
    std::vector<int> vertices;           // sorted original ids
    std::vector<std::uint64_t> adjacent; // underlying adjacency, by core position
};

CoreView core_view(const Digraph& g, int cap) {
    CoreView cv;
    cv.vertices = max_degree_core(g);
    int k = static_cast<int>(cv.vertices.size());
    if (k > cap)
        throw CapExceeded("max-degree core has " + std::to_string(k) +
                          " vertices, cap is " + std::to_string(cap));
    cv.adjacent.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int u = cv.vertices[i], v = cv.vertices[j];
            if (g.has_edge(u, v) || g.has_edge(v, u)) {
                cv.adjacent[i] |= 1ULL << j;
                cv.adjacent[j] |= 1ULL << i;
            }
        }
    return cv;
}

}  // namespace

std::vector<std::vector<int>> enumerate_independent_sets(const Digraph& g, int cap) {
    auto cv = core_view(g, cap);
    int k = static_cast<int>(cv.vertices.size());
    std::vector<std::vector<int>> out;
    std::vector<int> current;

    // Emitting each set before extending it yields lexicographic order of the
    // sorted member lists, empty set first.
    auto rec = [&](auto&& self, int first, std::uint64_t blocked) -> void {
        out.push_back(current);
        for (int i = first; i < k; ++i) {
            if (blocked >> i & 1) continue;
            current.push_back(cv.vertices[i]);
            self(self, i + 1, blocked | cv.adjacent[i]);
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

NeighborhoodProfile neighborhood_profile(const Digraph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.n, 0), plus(g.n, 0), minus(g.n, 0);
    for (int v : s) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        in_s[v] = 1;
    }
    for (auto [u, v] : g.edges) {
        if (in_s[u] && !in_s[v]) plus[v] = 1;
        if (in_s[v] && !in_s[u]) minus[u] = 1;
    }
    NeighborhoodProfile np;
    for (int v = 0; v < g.n; ++v) {
        if (plus[v]) np.n_plus.push_back(v);
        if (minus[v]) np.n_minus.push_back(v);
        if (plus[v] || minus[v]) np.n_all.push_back(v);
        if (plus[v] && minus[v]) np.n_pm.push_back(v);
        if (plus[v] && !minus[v]) np.n_plus0.push_back(v);
        if (!plus[v] && minus[v]) np.n_minus0.push_back(v);
    }
    return np;
}

SetProfile set_profile(const Digraph& g, const std::vector<int>& s) {
    auto d = degrees(g);
    SetProfile p;
    p.members = s;
    std::sort(p.members.begin(), p.members.end());
    for (int v : p.members) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        if (d.in[v] == 0 && d.out[v] == 0)
            throw InfeasibleError("isolated vertex in profile set");
        if (d.in[v] == 0)
            ++p.v_plus;
        else if (d.out[v] == 0)
            ++p.v_minus;
        else
            ++p.v_pm;
    }
    auto np = neighborhood_profile(g, p.members);
    p.a_count = static_cast<int>(np.n_plus.size());
    p.b_count = static_cast<int>(np.n_minus.size());
    p.n_plus0 = static_cast<int>(np.n_plus0.size());
    p.n_minus0 = static_cast<int>(np.n_minus0.size());
    p.n_pm = static_cast<int>(np.n_pm.size());
    return p;
}

}  // namespace uptail
