#include "uptail/builtin.hpp"

#include <stdexcept>

namespace uptail {

Digraph triangle_transitive() { return make_digraph(3, {{1, 0}, {1, 2}, {2, 0}}); }

Digraph triangle_cyclic() { return make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph star_out(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_out needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return make_digraph(leaves + 1, e);
}

Digraph star_in(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_in needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({i, 0});
    return make_digraph(leaves + 1, e);
}

Digraph star_mixed() { return make_digraph(4, {{0, 1}, {0, 2}, {3, 0}}); }

Digraph directed_cycle(int k) {
    if (k < 2) throw std::invalid_argument("directed_cycle needs k >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
    return make_digraph(k, e);
}

Digraph y1_construction(int k) {
    if (k < 1) throw std::invalid_argument("y1_construction needs k >= 1");
    // Sources 0..k-1 all hit sink k; feeders k+1..2k each cover every source.
    int n = 2 * k + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, k});
    for (int j = k + 1; j <= 2 * k; ++j)
        for (int i = 0; i < k; ++i) e.push_back({j, i});
    return make_digraph(n, e);
}

Digraph gap_construction(int k) {
    if (k < 1) throw std::invalid_argument("gap_construction needs k >= 1");
    // Oriented complete bipartite between k+1 left and k+2 right vertices:
    // left 0..k-1 point at right nl, left k at right nl+1 and nl+2, and every
    // remaining pair is oriented right-to-left.
    int nl = k + 1, nr = k + 2, n = nl + nr;
    std::vector<std::pair<int, int>> forward;
    for (int i = 0; i < k; ++i) forward.push_back({i, nl});
    forward.push_back({k, nl + 1});
    forward.push_back({k, nl + 2});
    auto is_forward = [&](int i, int j) {
        for (const auto& e : forward)
            if (e.first == i && e.second == j) return true;
        return false;
    };
    std::vector<std::pair<int, int>> e = forward;
    for (int i = 0; i < nl; ++i)
        for (int j = nl; j < n; ++j)
            if (!is_forward(i, j)) e.push_back({j, i});
    return make_digraph(n, e);
}

const std::vector<BuiltinEntry>& builtin_graphs() {
    static const std::vector<BuiltinEntry> entries = {
        {"triangle-transitive", triangle_transitive()},
        {"triangle-cyclic", triangle_cyclic()},
        {"star-out-3", star_out(3)},
        {"star-in-3", star_in(3)},
        {"star-mixed", star_mixed()},
        {"cycle-2", directed_cycle(2)},
        {"cycle-3", directed_cycle(3)},
        {"cycle-4", directed_cycle(4)},
        {"cycle-5", directed_cycle(5)},
        {"cycle-6", directed_cycle(6)},
        {"y1-3", y1_construction(3)},
        {"gap-5", gap_construction(5)},
    };
    return entries;
}

}  // namespace uptail
