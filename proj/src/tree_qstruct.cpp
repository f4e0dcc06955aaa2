#include "local/tree/qstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace local::tree {

void QStruct::add_vertex(int deg, int out_label, std::string input, int mask) {
    adj.emplace_back();
    deg_h.push_back(deg);
    out.push_back(out_label);
    in.push_back(std::move(input));
    pole_mask.push_back(mask);
    ++n;
}

void QStruct::add_edge(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
}

namespace {

std::string attr_string(const QStruct& q, int v) {
    std::ostringstream s;
    s << 'm' << q.pole_mask[v] << 'd' << q.deg_h[v] << 'o' << q.out[v] << 'i' << q.in[v];
    return s.str();
}

struct Canon {
    const QStruct& q;
    std::vector<std::string> enc;  // rooted encoding per vertex (w.r.t. parent)
    std::vector<int> parent;

    explicit Canon(const QStruct& qq) : q(qq), enc(qq.n), parent(qq.n, -2) {}

    const std::string& encode(int v, int par) {
        parent[v] = par;
        std::vector<std::string> kids;
        for (int u : q.adj[v])
            if (u != par) kids.push_back(encode(u, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + attr_string(q, v);
        for (const auto& k : kids) s += k;
        s += ")";
        return enc[v] = s;
    }

    // all preorders of the subtree at v that list equal-encoding siblings in
    // every relative order
    void orders_of(int v, std::vector<std::vector<int>>& outs, size_t cap) const {
        std::vector<int> kids;
        for (int u : q.adj[v])
            if (u != parent[v]) kids.push_back(u);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return enc[a] < enc[b]; });
        // arrangements of the children: permutations within equal-enc groups
        std::vector<std::vector<int>> arrangements{{}};
        size_t i = 0;
        while (i < kids.size()) {
            size_t j = i;
            while (j < kids.size() && enc[kids[j]] == enc[kids[i]]) ++j;
            std::vector<int> group(kids.begin() + i, kids.begin() + j);
            std::sort(group.begin(), group.end());
            std::vector<std::vector<int>> next;
            do {
                for (const auto& a : arrangements) {
                    std::vector<int> b = a;
                    b.insert(b.end(), group.begin(), group.end());
                    next.push_back(std::move(b));
                    if (next.size() > cap) throw std::runtime_error("canonical_orders: blowup");
                }
            } while (std::next_permutation(group.begin(), group.end()));
            arrangements = std::move(next);
            i = j;
        }
        outs.clear();
        for (const auto& arrangement : arrangements) {
            std::vector<std::vector<int>> sub{{v}};
            for (int u : arrangement) {
                std::vector<std::vector<int>> rec;
                orders_of(u, rec, cap);
                std::vector<std::vector<int>> grown;
                for (const auto& pre : sub)
                    for (const auto& tail : rec) {
                        std::vector<int> w = pre;
                        w.insert(w.end(), tail.begin(), tail.end());
                        grown.push_back(std::move(w));
                        if (grown.size() > cap)
                            throw std::runtime_error("canonical_orders: blowup");
                    }
                sub = std::move(grown);
            }
            for (auto& s : sub) outs.push_back(std::move(s));
            if (outs.size() > cap) throw std::runtime_error("canonical_orders: blowup");
        }
    }
};

}  // namespace

std::vector<std::vector<int>> canonical_orders(const QStruct& q) {
    // roots: first-pole vertex, then second-pole vertex if in another
    // component
    int root1 = -1, root2 = -1;
    for (int v = 0; v < q.n; ++v) {
        if (q.pole_mask[v] & 1) root1 = v;
        if (q.pole_mask[v] & 2) root2 = v;
    }
    if (root1 < 0) root1 = root2;
    if (root1 < 0) throw std::invalid_argument("canonical_orders: no pole");
    Canon canon(q);
    canon.encode(root1, -1);
    std::vector<char> comp1(q.n, 0);
    {
        std::vector<int> stack{root1};
        comp1[root1] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : q.adj[v])
                if (!comp1[u]) {
                    comp1[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    constexpr size_t kCap = 5000;
    std::vector<std::vector<int>> first;
    canon.orders_of(root1, first, kCap);
    bool two_comps = root2 >= 0 && !comp1[root2];
    if (!two_comps) {
        // every component must contain a pole
        for (int v = 0; v < q.n; ++v)
            if (!comp1[v]) throw std::logic_error("canonical_orders: stray component");
        return first;
    }
    canon.encode(root2, -1);
    std::vector<std::vector<int>> second;
    canon.orders_of(root2, second, kCap);
    std::vector<std::vector<int>> outs;
    for (const auto& a : first)
        for (const auto& b : second) {
            std::vector<int> w = a;
            w.insert(w.end(), b.begin(), b.end());
            outs.push_back(std::move(w));
            if (outs.size() > kCap) throw std::runtime_error("canonical_orders: blowup");
        }
    for (int v = 0; v < q.n; ++v) {
        bool seen = false;
        for (int u : outs[0])
            if (u == v) seen = true;
        if (!seen) throw std::logic_error("canonical_orders: stray component");
    }
    return outs;
}

std::string encode_structure(const QStruct& q) {
    int root1 = -1, root2 = -1;
    for (int v = 0; v < q.n; ++v) {
        if (q.pole_mask[v] & 1) root1 = v;
        if (q.pole_mask[v] & 2) root2 = v;
    }
    if (root1 < 0) root1 = root2;
    Canon canon(q);
    std::string s = canon.encode(root1, -1);
    if (root2 >= 0 && root2 != root1 && canon.parent[root2] == -2) {
        Canon c2(q);
        s += "|" + c2.encode(root2, -1);
    }
    return s;
}

std::uint32_t assignment_code(const std::vector<int>& order, const std::vector<int>& labels,
                              int sigma) {
    std::uint64_t code = 0, mult = 1;
    for (int v : order) {
        code += static_cast<std::uint64_t>(labels[v]) * mult;
        mult *= sigma;
    }
    if (mult > (1ull << 32)) throw std::overflow_error("assignment_code: Q too large");
    return static_cast<std::uint32_t>(code);
}

std::vector<int> assignment_decode(const std::vector<int>& order, std::uint32_t code, int sigma,
                                   int q_n) {
    std::vector<int> labels(q_n, -1);
    std::uint64_t c = code;
    for (int v : order) {
        labels[v] = static_cast<int>(c % sigma);
        c /= sigma;
    }
    return labels;
}

std::vector<std::uint32_t> canonical_ext(const QStruct& q,
                                         const std::vector<std::vector<int>>& orders,
                                         const std::vector<std::vector<int>>& raw_labelings,
                                         int sigma, std::vector<int>* chosen) {
    std::vector<std::uint32_t> best;
    bool have = false;
    for (const auto& order : orders) {
        std::vector<std::uint32_t> codes;
        codes.reserve(raw_labelings.size());
        for (const auto& lab : raw_labelings) codes.push_back(assignment_code(order, lab, sigma));
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        if (!have || codes < best) {
            best = std::move(codes);
            if (chosen) *chosen = order;
            have = true;
        }
    }
    if (!have) throw std::logic_error("canonical_ext: no orders");
    return best;
}

Tripartition tripartition(const PortGraph& g, const std::vector<int>& poles, int r) {
    if (r < 1) throw std::invalid_argument("tripartition: r >= 1");
    Tripartition t;
    t.region.assign(g.n(), 2);
    std::vector<int> dist_pole(g.n(), -1);
    for (int p : poles) {
        auto d = bfs_distances(g, p);
        for (int v = 0; v < g.n(); ++v)
            if (d[v] >= 0 && (dist_pole[v] < 0 || d[v] < dist_pole[v])) dist_pole[v] = d[v];
    }
    for (int v = 0; v < g.n(); ++v)
        if (dist_pole[v] >= 0 && dist_pole[v] <= r - 1) t.region[v] = 0;
    // D2: within r of D1
    for (int v = 0; v < g.n(); ++v) {
        if (t.region[v] != 0) continue;
        auto d = bfs_distances(g, v, r);
        for (int u = 0; u < g.n(); ++u)
            if (d[u] >= 0 && d[u] <= r && t.region[u] == 2) t.region[u] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        (t.region[v] == 0 ? t.d1 : t.region[v] == 1 ? t.d2 : t.d3).push_back(v);
    return t;
}

QStruct q_of_explicit(const PortGraph& g, const Labeling& partial, const std::vector<int>& poles,
                      int r, std::vector<int>* q_vertices) {
    Tripartition t = tripartition(g, poles, r);
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if (t.region[v] <= 1) verts.push_back(v);
    std::vector<int> idx(g.n(), -1);
    QStruct q;
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        idx[v] = static_cast<int>(i);
        int mask = 0;
        if (!poles.empty() && poles[0] == v) mask |= 1;
        if (poles.size() > 1 && poles[1] == v) mask |= 2;
        q.add_vertex(g.degree(v), partial[v], g.input_label(v), mask);
    }
    for (int v : verts)
        for (const HalfEdge& he : g.half_edges(v))
            if (idx[he.to] >= 0 && he.to > v) q.add_edge(idx[v], idx[he.to]);
    if (q_vertices) *q_vertices = verts;
    return q;
}

}  // namespace local::tree
