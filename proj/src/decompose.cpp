#include "local/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "local/symmetry.hpp"

namespace local {

double decomposition_level_bound(int n, int ell) {
    double shrink = 1.0 - 1.0 / (2.0 * (ell + 1));
    return std::log(static_cast<double>(std::max(n, 2))) / -std::log(shrink) + 2.0;
}

Decomposition rc_decompose(const PortGraph& g, int ell, const std::vector<long long>* ids_in) {
    if (ell < 2) throw std::invalid_argument("rc_decompose: ell >= 2");
    if (!is_tree(g)) throw std::invalid_argument("rc_decompose: input is not a tree");
    const int n = g.n();
    std::vector<long long> default_ids;
    if (!ids_in) {
        default_ids.resize(n);
        std::iota(default_ids.begin(), default_ids.end(), 0);
    }
    const std::vector<long long>& ids = ids_in ? *ids_in : default_ids;

    Decomposition d;
    d.ell = ell;
    d.level.assign(n, 0);
    d.tag_iter.assign(n, 0);
    d.tag.assign(n, Decomposition::Tag::Rake);
    d.promoted.assign(n, 0);

    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<int> live;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        live.push_back(v);
    }

    int iter = 0;
    long long iter_rounds = 0;
    while (!live.empty()) {
        ++iter;
        std::vector<int> tagged;
        std::vector<char> on_run(n, 0);
        // Compress: maximal alive degree-2 runs with >= ell vertices.
        std::vector<char> visited(n, 0);
        for (int v : live) {
            if (visited[v] || deg[v] != 2) continue;
            // walk the run both ways
            std::vector<int> run{v};
            visited[v] = 1;
            for (int dir = 0; dir < 2; ++dir) {
                int prev = v;
                int cur = -1;
                int count = 0;
                for (const HalfEdge& he : g.half_edges(v))
                    if (alive[he.to]) {
                        if (count == dir) cur = he.to;
                        ++count;
                    }
                while (cur >= 0 && alive[cur] && deg[cur] == 2 && !visited[cur]) {
                    visited[cur] = 1;
                    if (dir == 0)
                        run.push_back(cur);
                    else
                        run.insert(run.begin(), cur);
                    int nxt = -1;
                    for (const HalfEdge& he : g.half_edges(cur))
                        if (alive[he.to] && he.to != prev) nxt = he.to;
                    prev = cur;
                    cur = nxt;
                }
            }
            if (static_cast<int>(run.size()) >= ell)
                for (int u : run) {
                    on_run[u] = 1;
                    tagged.push_back(u);
                    d.tag[u] = Decomposition::Tag::Compress;
                }
        }
        // Rake.
        for (int v : live) {
            if (on_run[v]) continue;
            if (deg[v] == 0) {
                tagged.push_back(v);
                d.tag[v] = Decomposition::Tag::Rake;
            } else if (deg[v] == 1) {
                int u = -1;
                for (const HalfEdge& he : g.half_edges(v))
                    if (alive[he.to]) u = he.to;
                if (deg[u] > 1 || (deg[u] == 1 && ids[v] > ids[u])) {
                    tagged.push_back(v);
                    d.tag[v] = Decomposition::Tag::Rake;
                }
            }
        }
        if (tagged.empty()) throw std::logic_error("rc_decompose: no progress");
        for (int v : tagged) {
            d.level[v] = iter;
            d.tag_iter[v] = iter;
            alive[v] = 0;
        }
        for (int v : tagged)
            for (const HalfEdge& he : g.half_edges(v))
                if (alive[he.to]) --deg[he.to];
        std::vector<int> next_live;
        for (int v : live)
            if (alive[v]) next_live.push_back(v);
        live.swap(next_live);
        iter_rounds += ell + 2;
    }

    // Postprocessing: promote rake vertices adjacent to same-iteration
    // compress vertices, then split each compress path with an
    // (ell,2ell)-independent set.  Each vertex is promoted at most once.
    long long isp_rounds = 0;
    for (int v = 0; v < n; ++v) {
        if (d.tag[v] != Decomposition::Tag::Rake) continue;
        for (const HalfEdge& he : g.half_edges(v))
            if (d.tag_iter[he.to] == d.tag_iter[v] &&
                d.tag[he.to] == Decomposition::Tag::Compress) {
                d.level[v] = d.tag_iter[v] + 1;
                d.promoted[v] = 1;
                break;
            }
    }
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v] || d.tag[v] != Decomposition::Tag::Compress) continue;
        // collect the compress component of v at its iteration
        const int it = d.tag_iter[v];
        auto same = [&](int u) {
            return d.tag_iter[u] == it && d.tag[u] == Decomposition::Tag::Compress;
        };
        std::vector<int> path{v};
        seen[v] = 1;
        for (int dir = 0; dir < 2; ++dir) {
            int prev = v;
            int cur = -1;
            int count = 0;
            for (const HalfEdge& he : g.half_edges(v))
                if (same(he.to)) {
                    if (count == dir) cur = he.to;
                    ++count;
                }
            while (cur >= 0 && !seen[cur]) {
                seen[cur] = 1;
                if (dir == 0)
                    path.push_back(cur);
                else
                    path.insert(path.begin(), cur);
                int nxt = -1;
                for (const HalfEdge& he : g.half_edges(cur))
                    if (same(he.to) && he.to != prev) nxt = he.to;
                prev = cur;
                cur = nxt;
            }
        }
        std::vector<long long> path_ids(path.size());
        for (size_t j = 0; j < path.size(); ++j) path_ids[j] = ids[path[j]];
        PathIndependentSet isp = independent_set_path(path_ids, ell, 2 * ell);
        isp_rounds = std::max(isp_rounds, isp.simulated_rounds);
        for (int pos : isp.members) {
            d.level[path[pos]] = it + 1;
            d.promoted[path[pos]] = 1;
        }
    }

    d.levels = *std::max_element(d.level.begin(), d.level.end());
    d.simulated_rounds = iter_rounds + isp_rounds + 2;

    // Record the multi-vertex components per level, each in path order.
    d.level_paths.assign(d.levels, {});
    std::vector<char> used(n, 0);
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        const int lv = d.level[v];
        auto same = [&](int u) { return d.level[u] == lv; };
        int nsame = 0;
        for (const HalfEdge& he : g.half_edges(v))
            if (same(he.to)) ++nsame;
        if (nsame == 0) {
            used[v] = 1;
            continue;
        }
        if (nsame > 2) throw std::logic_error("rc_decompose: level degree > 2");
        if (nsame == 2) continue;  // start walks from path ends only
        std::vector<int> path{v};
        used[v] = 1;
        int prev = v, cur = -1;
        for (const HalfEdge& he : g.half_edges(v))
            if (same(he.to)) cur = he.to;
        while (cur >= 0) {
            path.push_back(cur);
            used[cur] = 1;
            int nxt = -1;
            for (const HalfEdge& he : g.half_edges(cur))
                if (same(he.to) && he.to != prev) nxt = he.to;
            prev = cur;
            cur = nxt;
        }
        d.level_paths[lv - 1].push_back(std::move(path));
    }
    return d;
}

std::string Decomposition::dump() const {
    std::ostringstream out;
    for (size_t v = 0; v < level.size(); ++v)
        out << v << ' ' << level[v] << ' ' << tag_iter[v]
            << (tag[v] == Tag::Compress ? "C" : "R") << (promoted[v] ? "+" : "") << '\n';
    return out.str();
}

std::string validate_decomposition(const PortGraph& g, const Decomposition& d) {
    const int n = g.n();
    std::ostringstream err;
    for (int v = 0; v < n; ++v) {
        if (d.level[v] < 1 || d.level[v] > d.levels) return "level out of range";
        int high = 0;
        for (const HalfEdge& he : g.half_edges(v))
            if (d.level[he.to] >= d.level[v]) ++high;
        if (high > 2) {
            err << "deg in G_i exceeds 2 at " << v;
            return err.str();
        }
    }
    // components per level: multi-vertex ones are paths sized [ell, 2ell]
    // with level-graph degree exactly 2; the top level has none.
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const HalfEdge& he : g.half_edges(u))
                if (!seen[he.to] && d.level[he.to] == d.level[v]) {
                    seen[he.to] = 1;
                    stack.push_back(he.to);
                }
        }
        if (comp.size() == 1) continue;
        if (d.level[v] == d.levels) return "top level has a multi-vertex component";
        if (static_cast<int>(comp.size()) < d.ell || static_cast<int>(comp.size()) > 2 * d.ell) {
            err << "component size " << comp.size() << " outside [ell,2ell] at level "
                << d.level[v];
            return err.str();
        }
        int ends = 0;
        for (int u : comp) {
            int same = 0, high = 0;
            for (const HalfEdge& he : g.half_edges(u)) {
                if (d.level[he.to] == d.level[v]) ++same;
                if (d.level[he.to] >= d.level[v]) ++high;
            }
            if (same > 2) return "component is not a path";
            if (same <= 1) ++ends;
            if (high != 2) return "path vertex without level-graph degree 2";
        }
        if (ends != 2) return "component is not a path (cycle?)";
    }
    if (d.levels > decomposition_level_bound(n, d.ell)) return "too many levels";
    return "";
}

}  // namespace local
