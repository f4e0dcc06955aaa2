#include "local/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace local {

namespace {

// Stage sizes: ell, ceil(ell/2), ..., 3, with a 2-orientation base; applied
// smallest first.
std::vector<int> stage_sizes(int ell) {
    std::vector<int> st;
    for (int k = ell; k > 2; k = (k + 1) / 2) st.push_back(k);
    st.push_back(2);
    std::reverse(st.begin(), st.end());
    return st;
}

int stage_margin(int k) { return k == 2 ? 4 : 2 * k + 4; }

// Orientation engine over positions with dir[p] in {+1,-1} (+1 points to
// p+1).  For circular arrays every position is computed; for segments only
// positions whose data lies inside [lo, hi].
struct Ring {
    bool circular;
    int n;
    int lo, hi;

    int step(int p, int d) const {
        if (circular) return ((p + d) % n + n) % n;
        int q = p + d;
        return (q < lo || q > hi) ? -1 : q;
    }
};

void a2_stage(const Ring& r, std::vector<int>& dir, const std::vector<long long>& ids) {
    auto v1 = [&](int p) {
        int a = r.step(p, -1), b = r.step(p, 1);
        return (a >= 0 && dir[a] == dir[p]) || (b >= 0 && dir[b] == dir[p]);
    };
    auto partner = [&](int p) { return r.step(p, dir[p]); };
    std::vector<int> nd = dir;
    int from = r.circular ? 0 : r.lo + 4;
    int to = r.circular ? r.n - 1 : r.hi - 4;
    for (int p = from; p <= to; ++p) {
        if (v1(p)) continue;
        int q = partner(p);
        if (q < 0) throw std::logic_error("a2_stage: window too small");
        if (!v1(q)) {
            if (ids[p] < ids[q]) nd[p] = -dir[p];  // V2 pair: smaller ID flips
        } else {
            nd[p] = dir[q];  // V3: adopt the facing V1 neighbor's direction
        }
    }
    dir.swap(nd);
}

void ak_stage(const Ring& r, int k, std::vector<int>& dir, const std::vector<long long>& ids) {
    // Run of p in direction d (+1/-1): extends while dir stays equal, capped
    // at k steps; returns (length, min id, end position, hit_cap).
    struct RunInfo {
        int len;
        long long min_id;
        int end;
        bool capped;
    };
    auto run_scan = [&](int p, int d) {
        RunInfo info{1, ids[p], p, false};
        int cur = p;
        for (int s = 1; s < k; ++s) {
            int nx = r.step(cur, d);
            if (nx < 0) {
                info.capped = true;  // clipped by the window: treat as long
                return info;
            }
            if (dir[nx] != dir[p]) return info;
            ++info.len;
            info.min_id = std::min(info.min_id, ids[nx]);
            info.end = nx;
            cur = nx;
            if (r.circular && nx == p) {  // uniform cycle
                info.capped = true;
                return info;
            }
        }
        info.capped = true;  // saw k same-direction vertices
        return info;
    };
    std::vector<int> nd = dir;
    int margin = stage_margin(k);
    int from = r.circular ? 0 : r.lo + margin;
    int to = r.circular ? r.n - 1 : r.hi - margin;
    for (int p = from; p <= to; ++p) {
        RunInfo left = run_scan(p, -1);
        RunInfo right = run_scan(p, 1);
        if (left.capped || right.capped) continue;  // run >= k: stable
        int len = left.len + right.len - 1;
        if (len >= k) continue;
        long long my_min = std::min(left.min_id, right.min_id);
        // Facing junction is on the side the run points toward.
        int junction_end = dir[p] > 0 ? right.end : left.end;
        int q = r.step(junction_end, dir[p]);
        if (q < 0) throw std::logic_error("ak_stage: window too small");
        RunInfo pl = run_scan(q, -1);
        RunInfo pr = run_scan(q, 1);
        if (pl.capped || pr.capped || pl.len + pr.len - 1 >= k) {
            nd[p] = -dir[p];  // partner is long: merge into it
        } else if (my_min < std::min(pl.min_id, pr.min_id)) {
            nd[p] = -dir[p];  // pair of short runs: smaller min-ID flips
        }
    }
    dir.swap(nd);
}

}  // namespace

long long orient_round_bound(int ell) {
    long long r = 1;
    for (int k : stage_sizes(ell)) r += stage_margin(k);
    return r;
}

std::vector<int> orient_cycle_centralized(const PortGraph& g, int ell,
                                          const std::vector<long long>& ids) {
    const int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) throw std::invalid_argument("orient_cycle: not a cycle");
    if (!is_connected(g) || n < 3) throw std::invalid_argument("orient_cycle: not a cycle");
    // Canonical traversal: start at the min-ID vertex, toward its smaller-ID
    // neighbor.
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (ids[v] < ids[start]) start = v;
    int a = g.neighbor(start, 1), b = g.neighbor(start, 2);
    int second = ids[a] < ids[b] ? a : b;
    std::vector<int> order{start, second};
    while (true) {
        int cur = order.back(), prev = order[order.size() - 2];
        int nxt = g.neighbor(cur, 1) == prev ? g.neighbor(cur, 2) : g.neighbor(cur, 1);
        if (nxt == start) break;
        order.push_back(nxt);
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("orient_cycle: not a cycle");

    const long long R = orient_round_bound(ell);
    std::vector<int> dir(n);
    if (n <= 2 * R + 1) {
        // Every view wraps: orient uniformly along the canonical traversal.
        std::fill(dir.begin(), dir.end(), 1);
    } else {
        std::vector<long long> pos_ids(n);
        for (int p = 0; p < n; ++p) pos_ids[p] = ids[order[p]];
        for (int p = 0; p < n; ++p) {
            int v = order[p];
            int nxt = order[(p + 1) % n];
            dir[p] = g.neighbor(v, 1) == nxt ? 1 : -1;
        }
        Ring r{true, n, 0, n - 1};
        for (int k : stage_sizes(ell)) {
            bool uniform = std::all_of(dir.begin(), dir.end(), [&](int d) { return d == dir[0]; });
            if (uniform) break;
            if (k == 2)
                a2_stage(r, dir, pos_ids);
            else
                ak_stage(r, k, dir, pos_ids);
        }
    }
    std::vector<int> labels(n);
    for (int p = 0; p < n; ++p) {
        int v = order[p];
        int target = dir[p] > 0 ? order[(p + 1) % n] : order[(p - 1 + n) % n];
        labels[v] = g.port_to(v, target) - 1;
    }
    return labels;
}

ViewAlgorithm orient_cycle(int ell) {
    if (ell < 2) throw std::invalid_argument("orient_cycle: ell >= 2");
    ViewAlgorithm alg;
    alg.name = "orient:" + std::to_string(ell);
    alg.round_bound = [ell](double, int) { return orient_round_bound(ell); };
    alg.decide = [ell](const View& view) {
        const ViewVertex& c = view.verts[0];
        if (c.degree != 2) throw std::invalid_argument("orient_cycle: not a cycle");
        const int R = static_cast<int>(orient_round_bound(ell));
        // Walk forward along the center's port-1 edge.
        std::vector<int> fwd;
        bool wrapped = false;
        {
            int prev = 0, cur = view.local_of_port(0, 1);
            while (cur >= 0 && cur != 0) {
                fwd.push_back(cur);
                int nxt = -1;
                for (const ViewEdge& e : view.verts[cur].edges)
                    if (e.to != prev) nxt = e.to;
                prev = cur;
                cur = nxt;
            }
            wrapped = (cur == 0);
        }
        auto port_of_center_to = [&](int local) {
            for (const ViewEdge& e : view.verts[0].edges)
                if (e.to == local) return e.port - 1;
            throw std::logic_error("orient decide: target not adjacent");
        };
        if (wrapped) {
            // Whole cycle visible: orient uniformly, forward from the
            // min-ID vertex toward its smaller-ID neighbor.
            const int n = static_cast<int>(fwd.size()) + 1;
            std::vector<int> seq{0};
            seq.insert(seq.end(), fwd.begin(), fwd.end());
            int best = 0;
            for (int p = 1; p < n; ++p)
                if (view.verts[seq[p]].id < view.verts[seq[best]].id) best = p;
            long long next_id = view.verts[seq[(best + 1) % n]].id;
            long long prev_id = view.verts[seq[(best - 1 + n) % n]].id;
            int d = next_id < prev_id ? 1 : -1;
            return port_of_center_to(seq[d > 0 ? 1 : n - 1]);
        }
        // Segment of 2R+1 positions, center in the middle.
        std::vector<int> bwd;
        {
            int prev = 0, cur = -1;
            for (const ViewEdge& e : c.edges)
                if (!fwd.empty() && e.to != fwd[0]) cur = e.to;
            while (cur >= 0) {
                bwd.push_back(cur);
                int nxt = -1;
                for (const ViewEdge& e : view.verts[cur].edges)
                    if (e.to != prev) nxt = e.to;
                prev = cur;
                cur = nxt;
            }
        }
        std::vector<int> seq(bwd.rbegin(), bwd.rend());
        const int cpos = static_cast<int>(seq.size());
        seq.push_back(0);
        seq.insert(seq.end(), fwd.begin(), fwd.end());
        const int m = static_cast<int>(seq.size());
        if (cpos != R || m != 2 * R + 1) throw std::logic_error("orient decide: bad segment");

        std::vector<long long> ids(m);
        std::vector<int> dir(m);
        for (int p = 0; p < m; ++p) {
            int local = seq[p];
            ids[p] = view.verts[local].id;
            int target = view.local_of_port(local, 1);
            if (target >= 0) {
                dir[p] = (p + 1 < m && seq[p + 1] == target) ? 1 : -1;
            } else {
                dir[p] = (p == m - 1) ? 1 : -1;  // port-1 edge leaves the view
            }
        }
        int lo = 0, hi = m - 1;
        for (int k : stage_sizes(ell)) {
            Ring r{false, m, lo, hi};
            if (k == 2)
                a2_stage(r, dir, ids);
            else
                ak_stage(r, k, dir, ids);
            lo += stage_margin(k);
            hi -= stage_margin(k);
        }
        if (cpos < lo || cpos > hi) throw std::logic_error("orient decide: window exhausted");
        return port_of_center_to(dir[cpos] > 0 ? seq[cpos + 1] : seq[cpos - 1]);
    };
    alg.batch = [ell](const PortGraph& g, const ViewContext& ctx) {
        if (!ctx.ids) throw std::invalid_argument("orient_cycle: needs IDs");
        return orient_cycle_centralized(g, ell, *ctx.ids);
    };
    return alg;
}

}  // namespace local
