#include "local/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace local {

PortGraph gen_ring(int n) {
    if (n < 3) throw std::invalid_argument("gen_ring: n must be at least 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    PortGraph g = PortGraph::from_edges(n, edges, 2);
    // Insertion order gives v >= 1 its counterclockwise edge first; swap so
    // that port 1 is clockwise everywhere (vertex 0 already is).
    for (int v = 1; v < n; ++v) g.permute_ports(v, {1, 0});
    return g;
}

PortGraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return PortGraph::from_edges(n, edges, n == 1 ? 0 : 2);
}

PortGraph gen_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return PortGraph::from_edges(leaves + 1, edges);
}

PortGraph gen_random_tree(int n, int delta, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_tree: n must be positive");
    if (n >= 3 && delta < 2)
        throw std::invalid_argument("gen_random_tree: infeasible (n >= 3 needs delta >= 2)");
    if (n == 2 && delta < 1) throw std::invalid_argument("gen_random_tree: infeasible");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    std::vector<int> eligible;  // vertices with spare degree
    eligible.push_back(0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
        size_t idx = pick(rng);
        int parent = eligible[idx];
        edges.emplace_back(parent, v);
        if (++deg[parent] >= delta) {
            eligible[idx] = eligible.back();
            eligible.pop_back();
        }
        deg[v] = 1;
        if (deg[v] < delta) eligible.push_back(v);
        if (eligible.empty() && v + 1 < n)
            throw std::invalid_argument("gen_random_tree: degree budget exhausted");
    }
    return PortGraph::from_edges(n, edges, std::max(delta, n == 1 ? 0 : 1));
}

PortGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n <= d || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_random_regular: need n > d and n*d even");
    std::mt19937_64 rng(seed);
    // Pairing model: n*d stubs matched uniformly, then self loops and
    // parallel edges are repaired by re-wiring against random partners.
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j) stubs[static_cast<size_t>(v) * d + j] = v;
    std::shuffle(stubs.begin(), stubs.end(), rng);
    long long m = static_cast<long long>(n) * d / 2;
    std::vector<std::pair<int, int>> edges(m);
    for (long long e = 0; e < m; ++e) edges[e] = {stubs[2 * e], stubs[2 * e + 1]};

    auto edge_key = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
    };
    std::map<long long, int> cnt;
    for (auto& e : edges) ++cnt[edge_key(e.first, e.second)];
    auto defective = [&](long long e) {
        auto [a, b] = edges[e];
        return a == b || cnt[edge_key(a, b)] > 1;
    };
    std::vector<long long> todo;
    for (long long e = 0; e < m; ++e)
        if (defective(e)) todo.push_back(e);
    std::uniform_int_distribution<long long> anyedge(0, m - 1);
    long long guard = 0;
    while (!todo.empty()) {
        if (++guard > 50'000'000) throw std::runtime_error("gen_random_regular: repair stalled");
        long long e = todo.back();
        if (!defective(e)) {
            todo.pop_back();
            continue;
        }
        long long o = anyedge(rng);
        if (o == e) continue;
        auto [a, b] = edges[e];
        auto [c, dd] = edges[o];
        if (rng() & 1) std::swap(c, dd);
        // Propose the double swap (a,b),(c,dd) -> (a,c),(b,dd).
        if (a == c || b == dd) continue;
        --cnt[edge_key(a, b)];
        --cnt[edge_key(c, dd)];
        long long k1 = edge_key(a, c), k2 = edge_key(b, dd);
        if (k1 == k2 || cnt[k1] > 0 || cnt[k2] > 0) {
            ++cnt[edge_key(a, b)];
            ++cnt[edge_key(c, dd)];
            continue;
        }
        ++cnt[k1];
        ++cnt[k2];
        edges[e] = {a, c};
        edges[o] = {std::min(b, dd), std::max(b, dd)};
        todo.pop_back();
    }
    return PortGraph::from_edges(n, edges, d);
}

long long hk_vertex_count(int k, int x) {
    long long c = x;
    for (int i = 2; i <= k; ++i) c = x + (x + (i == k ? 2 : 1)) * c;
    return c;
}

namespace {

struct HkBuilder {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> level_of;
    int next = 0;

    int fresh(int level) {
        level_of.push_back(level);
        return next++;
    }

    // Returns (head, tail) of a level-i gadget; top = true applies the
    // extra-copy rule at both backbone ends.
    std::pair<int, int> build(int i, int x, bool top) {
        std::vector<int> backbone(x);
        for (int j = 0; j < x; ++j) {
            backbone[j] = fresh(i);
            if (j > 0) edges.emplace_back(backbone[j - 1], backbone[j]);
        }
        if (i > 1) {
            auto attach = [&](int owner) {
                auto [h, t] = build(i - 1, x, false);
                (void)t;
                edges.emplace_back(owner, h);
            };
            for (int j = 0; j < x; ++j) attach(backbone[j]);
            attach(backbone[x - 1]);  // every non-base gadget gives its tail a spare copy
            if (top) attach(backbone[0]);
        }
        return {backbone[0], backbone[x - 1]};
    }
};

}  // namespace

HkInstance gen_hk(int k, int x) {
    if (k < 1 || x < 3) throw std::invalid_argument("gen_hk: need k >= 1 and x >= 3");
    HkBuilder b;
    auto [head, tail] = b.build(k, x, /*top=*/true);
    HkInstance inst;
    inst.graph = PortGraph::from_edges(b.next, b.edges, 3);
    inst.head = head;
    inst.tail = tail;
    inst.level_of = std::move(b.level_of);
    return inst;
}

}  // namespace local
