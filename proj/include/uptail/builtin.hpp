#pragma once

#include <string>
#include <vector>

#include "uptail/digraph.hpp"

namespace uptail {

// The worked examples, embedded so the CLI can exercise them without files.
Digraph triangle_transitive();           // 1->0, 1->2, 2->0
Digraph triangle_cyclic();               // 0->1->2->0
Digraph star_out(int leaves);            // center 0, all edges outward
Digraph star_in(int leaves);             // center 0, all edges inward
Digraph star_mixed();                    // center 0: two out, one in
Digraph directed_cycle(int k);           // k >= 2; k = 2 is the 2-cycle
Digraph y1_construction(int k);          // k source-side vertices, one shared sink,
                                         // k feeders covering all of them
Digraph gap_construction(int k);         // the k+1 by k+2 oriented bipartite example
                                         // whose upper and lower bounds separate

struct BuiltinEntry {
    std::string name;
    Digraph graph;
};

// Stable catalogue used by the examples report.
const std::vector<BuiltinEntry>& builtin_graphs();

}  // namespace uptail
