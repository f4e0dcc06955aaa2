#include "local/port_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace local {

PortGraph::PortGraph(int n, int delta_cap) : adj_(n), inputs_(n), delta_(delta_cap) {}

void PortGraph::add_edge(int u, int v) {
    int pu = static_cast<int>(adj_[u].size()) + 1;
    int pv = static_cast<int>(adj_[v].size()) + 1;
    adj_[u].push_back(HalfEdge{v, pv});
    adj_[v].push_back(HalfEdge{u, pu});
}

PortGraph PortGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                int delta_cap) {
    PortGraph g(n, delta_cap);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("from_edges: bad edge endpoint");
        g.add_edge(u, v);
    }
    if (delta_cap < 0) {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, g.degree(v));
        g.delta_ = d;
    }
    g.validate();
    return g;
}

int PortGraph::port_to(int v, int u) const {
    for (int p = 1; p <= degree(v); ++p)
        if (neighbor(v, p) == u) return p;
    return 0;
}

bool PortGraph::has_input_labels() const {
    for (const auto& s : inputs_)
        if (!s.empty()) return true;
    return false;
}

long long PortGraph::edge_count() const {
    long long twice = 0;
    for (const auto& a : adj_) twice += static_cast<long long>(a.size());
    return twice / 2;
}

void PortGraph::validate() const {
    for (int v = 0; v < n(); ++v) {
        if (degree(v) > delta_)
            throw std::runtime_error("validate: degree exceeds declared delta");
        for (int p = 1; p <= degree(v); ++p) {
            const HalfEdge& he = adj_[v][p - 1];
            if (he.to < 0 || he.to >= n())
                throw std::runtime_error("validate: neighbor out of range");
            if (he.to == v) throw std::runtime_error("validate: self loop");
            if (he.rev_port < 1 || he.rev_port > degree(he.to))
                throw std::runtime_error("validate: reverse port out of range");
            const HalfEdge& back = adj_[he.to][he.rev_port - 1];
            if (back.to != v || back.rev_port != p)
                throw std::runtime_error("validate: port symmetry broken");
        }
    }
}

std::string PortGraph::to_text() const {
    std::ostringstream out;
    out << n() << ' ' << delta_ << '\n';
    for (int v = 0; v < n(); ++v) {
        out << v << ' ' << degree(v) << ' ' << (inputs_[v].empty() ? "-" : inputs_[v]);
        for (int p = 1; p <= degree(v); ++p) out << ' ' << p << ':' << neighbor(v, p);
        out << '\n';
    }
    return out.str();
}

PortGraph PortGraph::from_text(const std::string& text) {
    std::istringstream in(text);
    int n = -1, delta = -1;
    if (!(in >> n >> delta) || n < 0) throw std::runtime_error("graph text: bad header");
    PortGraph g(n, delta);
    for (int i = 0; i < n; ++i) {
        int v = -1, deg = -1;
        std::string label;
        if (!(in >> v >> deg >> label) || v != i || deg < 0)
            throw std::runtime_error("graph text: bad vertex line");
        if (label != "-") g.inputs_[v] = label;
        g.adj_[v].resize(deg);
        for (int j = 0; j < deg; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("graph text: truncated adjacency");
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw std::runtime_error("graph text: bad port token");
            int p = std::stoi(tok.substr(0, colon));
            int u = std::stoi(tok.substr(colon + 1));
            if (p != j + 1) throw std::runtime_error("graph text: ports must be listed in order");
            g.adj_[v][j].to = u;
        }
    }
    // Recover reverse ports, then check everything.
    for (int v = 0; v < n; ++v)
        for (int p = 1; p <= g.degree(v); ++p) {
            int u = g.adj_[v][p - 1].to;
            if (u < 0 || u >= n) throw std::runtime_error("graph text: neighbor out of range");
            int q = 0;
            for (int pp = 1; pp <= g.degree(u); ++pp)
                if (g.adj_[u][pp - 1].to == v) {
                    // Parallel edges are not representable in this format.
                    q = pp;
                }
            if (q == 0) throw std::runtime_error("graph text: asymmetric edge");
            g.adj_[v][p - 1].rev_port = q;
        }
    g.validate();
    return g;
}

void PortGraph::permute_ports(int v, const std::vector<int>& perm) {
    const int d = degree(v);
    if (static_cast<int>(perm.size()) != d) throw std::invalid_argument("permute_ports: size");
    std::vector<HalfEdge> next(d);
    for (int i = 0; i < d; ++i) next[i] = adj_[v][perm[i]];
    adj_[v] = next;
    for (int p = 1; p <= d; ++p) {
        const HalfEdge& he = adj_[v][p - 1];
        adj_[he.to][he.rev_port - 1].rev_port = p;
    }
    validate();
}

std::vector<int> bfs_distances(const PortGraph& g, int src, int cap) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (cap >= 0 && dist[v] == cap) continue;
        for (const HalfEdge& he : g.half_edges(v))
            if (dist[he.to] < 0) {
                dist[he.to] = dist[v] + 1;
                q.push(he.to);
            }
    }
    return dist;
}

bool is_connected(const PortGraph& g) {
    if (g.n() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const PortGraph& g) {
    return is_connected(g) && g.edge_count() == g.n() - 1;
}

}  // namespace local
