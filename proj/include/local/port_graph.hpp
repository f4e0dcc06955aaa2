#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace local {

// Half-edge as seen from one endpoint: the neighbor and the port index
// (1-based) under which the neighbor sees this edge.
struct HalfEdge {
    int to = -1;
    int rev_port = 0;
};

// Bounded-degree undirected graph with a per-vertex port numbering and
// optional per-vertex input labels.  Ports at v are exactly 1..deg(v);
// if port p of u leads to v with reverse port q, then port q of v leads
// back to u with reverse port p.  Immutable after construction.
class PortGraph {
  public:
    PortGraph() = default;
    PortGraph(int n, int delta_cap);

    // Builds a graph from an edge list; ports are assigned in edge order.
    // delta_cap < 0 means "use the observed maximum degree".
    static PortGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                int delta_cap = -1);

    int n() const { return static_cast<int>(adj_.size()); }
    int delta() const { return delta_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // port is 1-based
    int neighbor(int v, int port) const { return adj_[v][port - 1].to; }
    int reverse_port(int v, int port) const { return adj_[v][port - 1].rev_port; }
    const std::vector<HalfEdge>& half_edges(int v) const { return adj_[v]; }

    // Port of the edge v->u, or 0 if not adjacent.
    int port_to(int v, int u) const;

    const std::string& input_label(int v) const { return inputs_[v]; }
    void set_input_label(int v, std::string s) { inputs_[v] = std::move(s); }
    bool has_input_labels() const;

    long long edge_count() const;

    // Throws std::runtime_error if any port-numbering or degree invariant
    // is violated.
    void validate() const;

    // Canonical text format.  Line 1: "n delta"; then per vertex
    // "v deg inlabel p1:u1 p2:u2 ..." with '-' for a missing input label.
    // Round-trips bit-exactly.
    std::string to_text() const;
    static PortGraph from_text(const std::string& text);

    // Swaps the port order at v according to perm (perm[i] = old 0-based slot
    // placed at new slot i).  Used by tests that scramble port numberings.
    void permute_ports(int v, const std::vector<int>& perm);

  private:
    void add_edge(int u, int v);
    std::vector<std::vector<HalfEdge>> adj_;
    std::vector<std::string> inputs_;
    int delta_ = 0;
};

// Distances from src, truncated at `cap` (vertices beyond get -1).
// cap < 0 means unbounded.
std::vector<int> bfs_distances(const PortGraph& g, int src, int cap = -1);

bool is_tree(const PortGraph& g);
bool is_connected(const PortGraph& g);

}  // namespace local
