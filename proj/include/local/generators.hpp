#pragma once

#include <cstdint>
#include <vector>

#include "local/port_graph.hpp"

namespace local {

// Cycle on n >= 3 vertices.  Port 1 points clockwise (v -> v+1 mod n),
// port 2 counterclockwise, so port-sensitive problems are reproducible.
PortGraph gen_ring(int n);

// Path on n >= 1 vertices (0-1-2-...-n-1).
PortGraph gen_path(int n);

// Star K_{1,leaves}, center vertex 0.
PortGraph gen_star(int leaves);

// Uniform random attachment tree with max degree <= delta; deterministic
// for a fixed seed.
PortGraph gen_random_tree(int n, int delta, std::uint64_t seed);

// Random d-regular simple graph via the pairing model with defect-repair
// double-edge swaps; deterministic for a fixed seed.  Requires n*d even,
// d < n.
PortGraph gen_random_regular(int n, int d, std::uint64_t seed);

// Hard instance family for the k-level hierarchical coloring problem.
// level_of[v] is the backbone level the construction placed v on
// (1 = innermost paths, k = top backbone); head/tail are the ends of the
// top backbone.
struct HkInstance {
    PortGraph graph;
    int head = 0;
    int tail = 0;
    std::vector<int> level_of;
};

// Level-k instance with backbone length x (x vertices per backbone).
// Vertex count follows |H_1| = x, |H_i| = x + (x+1)|H_{i-1}| for middle
// levels, and |H_k| = x + (x+2)|H_{k-1}| at the top.  Max degree 3.
HkInstance gen_hk(int k, int x);

// Expected vertex count of gen_hk(k, x).
long long hk_vertex_count(int k, int x);

}  // namespace local
