#include "local/view.hpp"

#include <queue>
#include <stdexcept>

namespace local {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    std::uint64_t h = splitmix64(a);
    h = splitmix64(h ^ (b + 0x632be59bd9b4e019ULL));
    h = splitmix64(h ^ (c + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (d + 0xd1b54a32d192ed03ULL));
    return h;
}

std::uint64_t View::bit_chunk(int local, std::uint64_t chunk) const {
    if (!bits_attached_) throw std::logic_error("View: random bits were not attached");
    return mix64(hidden.seed, static_cast<std::uint64_t>(hidden.orig[local]),
                 hidden.epoch[local], chunk);
}

int View::bit(int local, std::uint64_t idx) const {
    return static_cast<int>((bit_chunk(local, idx >> 6) >> (idx & 63)) & 1);
}

int View::local_of_port(int local, int port) const {
    for (const ViewEdge& e : verts[local].edges)
        if (e.port == port) return e.to;
    return -1;
}

View make_view(const PortGraph& g, int v, int t, const ViewContext& ctx) {
    View view;
    view.radius = t;
    view.delta = g.delta();
    view.advertised_n = ctx.advertised_n > 0 ? ctx.advertised_n : static_cast<double>(g.n());
    view.bits_attached_ = ctx.attach_bits;
    view.hidden.seed = ctx.seed;

    std::vector<int> local_of(g.n(), -1);
    std::vector<int> order;
    std::queue<int> q;
    local_of[v] = 0;
    order.push_back(v);
    std::vector<int> dist(1, 0);
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[local_of[u]] == t) continue;
        for (const HalfEdge& he : g.half_edges(u))
            if (local_of[he.to] < 0) {
                local_of[he.to] = static_cast<int>(order.size());
                order.push_back(he.to);
                dist.push_back(dist[local_of[u]] + 1);
                q.push(he.to);
            }
    }
    const int m = static_cast<int>(order.size());
    view.verts.resize(m);
    view.hidden.orig = order;
    view.hidden.epoch.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        int u = order[i];
        ViewVertex& vv = view.verts[i];
        vv.dist = dist[i];
        vv.degree = g.degree(u);
        vv.input = g.input_label(u);
        if (ctx.ids) vv.id = (*ctx.ids)[u];
        if (ctx.outputs) vv.out = (*ctx.outputs)[u];
        if (ctx.epochs) view.hidden.epoch[i] = (*ctx.epochs)[u];
        for (int p = 1; p <= g.degree(u); ++p) {
            int w = g.neighbor(u, p);
            if (local_of[w] >= 0)
                vv.edges.push_back(ViewEdge{p, local_of[w], g.reverse_port(u, p)});
        }
    }
    return view;
}

View permute_view(const View& view, const std::vector<int>& perm) {
    if (perm.size() != view.verts.size() || perm[0] != 0)
        throw std::invalid_argument("permute_view: bad permutation");
    View out = view;
    for (size_t i = 0; i < perm.size(); ++i) {
        out.verts[perm[i]] = view.verts[i];
        out.hidden.orig[perm[i]] = view.hidden.orig[i];
        out.hidden.epoch[perm[i]] = view.hidden.epoch[i];
        for (ViewEdge& e : out.verts[perm[i]].edges) e.to = perm[e.to];
    }
    return out;
}

}  // namespace local
