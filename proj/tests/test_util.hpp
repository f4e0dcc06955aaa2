#pragma once

// Shared helpers for the test suites: small-graph enumeration and brute
// oracles kept independent of the library's implementation paths.

#include <functional>
#include <set>
#include <vector>

#include "local/lcl.hpp"
#include "local/port_graph.hpp"

namespace testutil {

// All labeled trees on n vertices via Prüfer sequences (n=1,2 special).
inline std::vector<local::PortGraph> all_labeled_trees(int n, int delta_cap = -1) {
    using local::PortGraph;
    std::vector<PortGraph> out;
    auto push = [&](const std::vector<std::pair<int, int>>& edges) {
        PortGraph g = PortGraph::from_edges(n, edges);
        if (delta_cap > 0)
            for (int v = 0; v < n; ++v)
                if (g.degree(v) > delta_cap) return;
        out.push_back(std::move(g));
    };
    if (n == 1) {
        push({});
        return out;
    }
    if (n == 2) {
        push({{0, 1}});
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // Prüfer decode
        std::vector<int> deg(n, 1);
        for (int x : seq) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<int> rest(seq.begin(), seq.end());
        for (int x : rest) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--deg[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        push(edges);
        // next sequence
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

// Enumerate all complete labelings of g over q labels.
inline void for_each_labeling(int n, int q, const std::function<void(const local::Labeling&)>& f) {
    local::Labeling L(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            f(L);
            return;
        }
        for (int c = 0; c < q; ++c) {
            L[v] = c;
            rec(v + 1);
        }
    };
    rec(0);
}

// Paper-rule checker for the k-level hierarchical coloring, written
// directly from the global level decomposition.  Used as an oracle against
// the radius-k local verifier.
inline bool hier_legal_oracle(const local::PortGraph& g, int k, const local::Labeling& L) {
    using namespace local;
    std::vector<int> lvl = hier_levels(g, k);
    for (int v = 0; v < g.n(); ++v) {
        int lv = lvl[v];
        int lab = L[v];
        if (lv == k + 1) {
            if (lab != kSaturn) return false;
            continue;
        }
        bool exempt = false;
        if (lv >= 2)
            for (const HalfEdge& he : g.half_edges(v))
                if (lvl[he.to] < lv &&
                    (L[he.to] == kVenus || L[he.to] == kMars || L[he.to] == kSaturn))
                    exempt = true;
        if (lab == kSaturn) {
            if (!exempt) return false;
            continue;
        }
        if (exempt) return false;
        std::vector<int> same;
        for (const HalfEdge& he : g.half_edges(v))
            if (lvl[he.to] == lv) same.push_back(he.to);
        if (lab == kVenus)
            for (int u : same)
                if (L[u] == kVenus || L[u] == kMercury) return false;
        if (lab == kMars)
            for (int u : same)
                if (L[u] == kMars || L[u] == kMercury) return false;
        if (lv == k) {
            int nonexempt = 0;
            for (int u : same)
                if (L[u] != kSaturn) ++nonexempt;
            if (nonexempt <= 1 && lab != kVenus && lab != kMars) return false;
        }
    }
    return true;
}

}  // namespace testutil
