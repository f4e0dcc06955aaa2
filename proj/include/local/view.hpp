#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "local/port_graph.hpp"

namespace local {

// Deterministic 64-bit mixers; the per-vertex random streams are
// counter-based so that any vertex's stream can be recomputed inside any
// other vertex's view without shared state.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

struct ViewEdge {
    int port = 0;      // 1-based port at this vertex
    int to = -1;       // local index of the neighbor inside the view
    int rev_port = 0;  // port of this edge at the neighbor
};

struct ViewVertex {
    int dist = 0;           // distance from the view's center
    int degree = 0;         // true degree in the host graph
    long long id = -1;      // unique ID, -1 when IDs are not attached
    std::string input;      // input label, "" = none
    int out = -1;           // output label index, -1 = unlabeled
    std::vector<ViewEdge> edges;  // induced edges, sorted by port
};

// Radius-t ball around a vertex: the induced labeled subgraph of N^t(v)
// plus whatever context (IDs, inputs, outputs, random bits) was attached.
// Local index 0 is the center.  Algorithms must treat local indices as
// arbitrary; scramble tests permute them.
class View {
  public:
    int radius = 0;
    double advertised_n = 0;
    int delta = 0;
    std::vector<ViewVertex> verts;

    bool has_bits() const { return bits_attached_; }
    // idx-th random bit of the view vertex `local`.
    int bit(int local, std::uint64_t idx) const;
    // 64 random bits at once (chunk c covers bits [64c, 64c+64)).
    std::uint64_t bit_chunk(int local, std::uint64_t chunk) const;

    int local_of_port(int local, int port) const;  // -1 if that edge left the view

    // Engine-side context; decide functions must not read these.
    struct Hidden {
        std::vector<int> orig;             // original vertex numbers
        std::vector<std::uint64_t> epoch;  // resampling epoch per vertex
        std::uint64_t seed = 0;
    } hidden;
    bool bits_attached_ = false;
};

// Context attachments for building views.
struct ViewContext {
    const std::vector<long long>* ids = nullptr;       // distinct IDs
    const std::vector<int>* outputs = nullptr;         // output labels (-1 = ⊥)
    bool attach_bits = false;
    std::uint64_t seed = 0;
    const std::vector<std::uint64_t>* epochs = nullptr;  // default all-zero
    double advertised_n = 0;                             // 0 = use g.n()
};

View make_view(const PortGraph& g, int v, int t, const ViewContext& ctx = {});

// Permutes the local indices of a view (center stays 0); used by purity
// tests.  perm[old_local] = new_local, perm[0] == 0.
View permute_view(const View& view, const std::vector<int>& perm);

}  // namespace local
