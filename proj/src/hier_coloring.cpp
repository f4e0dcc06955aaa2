#include "local/hier_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace local {

namespace {

bool pow_ge(long long base, int k, long long target) {
    __int128 acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= base;
        if (acc >= target) return true;
    }
    return acc >= target;
}

}  // namespace

long long hier_threshold(long long n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("hier_threshold");
    // smallest t with t^k >= 2^k * n
    long long target = n;
    for (int i = 0; i < k; ++i) target *= 2;
    long long t = std::max<long long>(
        1, static_cast<long long>(2.0 * std::pow(static_cast<double>(n), 1.0 / k)) - 2);
    while (!pow_ge(t, k, target)) ++t;
    return t;
}

long long solve_hier_round_bound(double advertised_n, int k) {
    long long n = std::max<long long>(1, static_cast<long long>(advertised_n));
    return (k + 1) * (hier_threshold(n, k) + 2) + k;
}

namespace {

// Shared core: runs on any graph-like adjacency with per-vertex levels,
// exemption from already-labeled lower levels, then per-component path
// coloring.  `known_level[v]` < 0 marks vertices whose level could not be
// determined (view boundaries); their labels stay unknown (-2).
struct HierSolver {
    int k;
    long long threshold;
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& level;          // k+1 max; <0 = unknown
    const std::vector<long long>& ids;
    std::vector<int> label;                 // -2 unknown, -1 unset, else HierLabel

    HierSolver(int k_, long long thr, const std::vector<std::vector<int>>& a,
               const std::vector<int>& lvl, const std::vector<long long>& ids_)
        : k(k_), threshold(thr), adj(a), level(lvl), ids(ids_) {
        label.assign(adj.size(), -2);
    }

    // 1 exempt, 0 not exempt, -1 unknown
    int exempt_status(int v) const {
        if (level[v] < 0) return -1;
        if (level[v] == 1) return 0;
        bool unknown = false;
        for (int u : adj[v]) {
            if (level[u] < 0) {
                unknown = true;
                continue;
            }
            if (level[u] < level[v]) {
                if (label[u] == -2) {
                    unknown = true;
                } else if (label[u] == kVenus || label[u] == kMars || label[u] == kSaturn) {
                    return 1;
                }
            }
        }
        return unknown ? -1 : 0;
    }

    void run() {
        for (int i = 1; i <= k; ++i) {
            std::vector<int> ex(adj.size(), -1);
            for (size_t v = 0; v < adj.size(); ++v)
                if (level[v] == i) {
                    ex[v] = exempt_status(static_cast<int>(v));
                    if (ex[v] == 1) label[v] = kSaturn;
                }
            // walk path/cycle components of non-exempt level-i vertices
            std::vector<char> done(adj.size(), 0);
            for (size_t v = 0; v < adj.size(); ++v) {
                if (level[v] != i || ex[v] != 0 || done[v]) continue;
                color_component(static_cast<int>(v), i, ex, done);
            }
        }
        for (size_t v = 0; v < adj.size(); ++v)
            if (level[v] == k + 1) label[v] = kSaturn;
    }

    // Same-level non-exempt neighbors of v; sets *uncertain if a neighbor's
    // membership cannot be resolved.
    std::vector<int> comp_nbrs(int v, int i, const std::vector<int>& ex, bool* uncertain) const {
        std::vector<int> out;
        for (int u : adj[v]) {
            if (level[u] < 0) {
                *uncertain = true;
                continue;
            }
            if (level[u] != i) continue;
            if (ex[u] < 0) {
                *uncertain = true;
                continue;
            }
            if (ex[u] == 0) out.push_back(u);
        }
        return out;
    }

    void color_component(int start, int i, std::vector<int>& ex, std::vector<char>& done) {
        // Collect the component by walking in both directions; stop early
        // once more than `threshold` vertices are seen (then it is "long").
        bool uncertain = false;
        std::vector<int> comp{start};
        bool cycle = false;
        bool overflow = false;
        for (int dir = 0; dir < 2 && !cycle; ++dir) {
            int prev = start;
            auto nb = comp_nbrs(start, i, ex, &uncertain);
            if (static_cast<int>(nb.size()) > 2) throw std::logic_error("hier: level degree > 2");
            if (static_cast<int>(nb.size()) <= dir) continue;
            int cur = nb[dir];
            while (true) {
                if (cur == start) {
                    cycle = true;
                    break;
                }
                if (dir == 0)
                    comp.push_back(cur);
                else
                    comp.insert(comp.begin(), cur);
                if (static_cast<long long>(comp.size()) > threshold) {
                    overflow = true;
                    break;
                }
                auto nxt = comp_nbrs(cur, i, ex, &uncertain);
                int next = -1;
                for (int u : nxt)
                    if (u != prev) next = u;
                if (next < 0) break;
                prev = cur;
                cur = next;
            }
            if (overflow) break;
        }
        if (uncertain && !cycle && !overflow) return;  // leave labels unknown
        if (cycle || overflow) {
            for (int u : comp) {
                label[u] = kMercury;
                done[u] = 1;
            }
            return;
        }
        // A path with <= threshold vertices: orient from the lower-ID endpoint.
        if (comp.size() > 1 && ids[comp.front()] > ids[comp.back()])
            std::reverse(comp.begin(), comp.end());
        for (size_t j = 0; j < comp.size(); ++j) {
            label[comp[j]] = (j % 2 == 0) ? kVenus : kMars;
            done[comp[j]] = 1;
        }
    }
};

}  // namespace

Labeling solve_hier_centralized(const PortGraph& g, int k, const std::vector<long long>& ids,
                                long long advertised_n) {
    long long n_adv = advertised_n > 0 ? advertised_n : g.n();
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (const HalfEdge& he : g.half_edges(v)) adj[v].push_back(he.to);
    std::vector<int> lvl = hier_levels(g, k);
    HierSolver solver(k, hier_threshold(n_adv, k), adj, lvl, ids);
    solver.run();
    Labeling L(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (solver.label[v] < 0) throw std::logic_error("solve_hier: unresolved label");
        L[v] = solver.label[v];
    }
    return L;
}

ViewAlgorithm solve_hier(int k) {
    ViewAlgorithm alg;
    alg.name = "hier:" + std::to_string(k);
    alg.round_bound = [k](double n, int) { return solve_hier_round_bound(n, k); };
    alg.decide = [k](const View& view) {
        const int m = static_cast<int>(view.verts.size());
        std::vector<std::vector<int>> adj(m);
        for (int i = 0; i < m; ++i)
            for (const ViewEdge& e : view.verts[i].edges) adj[i].push_back(e.to);
        // Levels with certainty: membership in V_j is decided only for
        // vertices with dist + j <= radius.
        std::vector<int> lvl(m, -1);
        std::vector<int> deg(m);
        for (int i = 0; i < m; ++i) deg[i] = view.verts[i].degree;
        std::vector<char> assigned(m, 0);
        for (int j = 1; j <= k; ++j) {
            std::vector<int> picked;
            for (int i = 0; i < m; ++i)
                if (!assigned[i] && view.verts[i].dist + j <= view.radius && deg[i] <= 2)
                    picked.push_back(i);
            for (int i : picked) {
                lvl[i] = j;
                assigned[i] = 1;
            }
            for (int i : picked)
                for (int u : adj[i])
                    if (!assigned[u]) --deg[u];
        }
        for (int i = 0; i < m; ++i)
            if (!assigned[i] && view.verts[i].dist + k <= view.radius) lvl[i] = k + 1;
        std::vector<long long> ids(m);
        for (int i = 0; i < m; ++i) ids[i] = view.verts[i].id;
        long long n_adv = std::max<long long>(1, static_cast<long long>(view.advertised_n));
        HierSolver solver(k, hier_threshold(n_adv, k), adj, lvl, ids);
        solver.run();
        if (solver.label[0] < 0) throw std::logic_error("solve_hier view: center unresolved");
        return solver.label[0];
    };
    alg.batch = [k](const PortGraph& g, const ViewContext& ctx) {
        if (!ctx.ids) throw std::invalid_argument("solve_hier: needs IDs");
        long long n_adv =
            ctx.advertised_n > 0 ? static_cast<long long>(ctx.advertised_n) : g.n();
        return solve_hier_centralized(g, k, *ctx.ids, n_adv).lab;
    };
    return alg;
}

}  // namespace local
