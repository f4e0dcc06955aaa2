#pragma once

#include <string>
#include <vector>

#include "local/port_graph.hpp"

namespace local {

// Rake/compress tree decomposition with constant-length compress paths.
// level[v] is the final level after promotions; tag[v] records how the
// vertex was eliminated; paths(i) lists the multi-vertex level-i
// components (each a path with between ell and 2*ell vertices).
struct Decomposition {
    enum class Tag { Rake, Compress };

    int ell = 0;
    int levels = 0;  // L: levels range over 1..L
    std::vector<int> level;
    std::vector<int> tag_iter;  // iteration at which the vertex was tagged
    std::vector<Tag> tag;
    std::vector<char> promoted;
    std::vector<std::vector<std::vector<int>>> level_paths;  // [i-1] -> paths at level i
    long long simulated_rounds = 0;

    // One line per vertex: "v level tag" (tag is iR/iC with a trailing + if
    // promoted).
    std::string dump() const;
};

// Requires a tree and ell >= 2; ids (default: vertex numbers) break the
// rake tie at isolated edges and drive the independent-set promotion.
Decomposition rc_decompose(const PortGraph& g, int ell,
                           const std::vector<long long>* ids = nullptr);

// Checks every structural decomposition invariant; returns an error
// description or "" if all hold.
std::string validate_decomposition(const PortGraph& g, const Decomposition& d);

// Upper bound on the number of levels: log n to base 1/(1 - 1/(2(ell+1))),
// plus 2.
double decomposition_level_bound(int n, int ell);

}  // namespace local
