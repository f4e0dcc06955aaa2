#pragma once

// Small reference algorithms used by the engine tests and the speedup
// wrapper demos.

#include <cmath>

#include "local/sim.hpp"

namespace local {

// Outputs a fixed label after 0 rounds.
inline ViewAlgorithm const_algorithm(int label_index, const std::string& name = "const") {
    ViewAlgorithm alg;
    alg.name = name;
    alg.round_bound = [](double, int) { return 0; };
    alg.decide = [label_index](const View&) { return label_index; };
    return alg;
}

// 0-round coin flip between two labels.
inline ViewAlgorithm rand_two_coloring_guess() {
    ViewAlgorithm alg;
    alg.name = "rand-2col-guess";
    alg.round_bound = [](double, int) { return 0; };
    alg.decide = [](const View& view) { return view.bit(0, 0); };
    return alg;
}

// One-round sinkless-orientation guesser: every edge gets a fair coin that
// both endpoints compute identically by comparing the two private bit
// streams until they first differ; the endpoint holding the 1 points out.
// The output is the outgoing-port bitmask expected by
// make_sinkless_orientation.
inline ViewAlgorithm toy_sinkless_guesser() {
    ViewAlgorithm alg;
    alg.name = "sinkless-guess";
    alg.round_bound = [](double, int) { return 1; };
    alg.decide = [](const View& view) {
        constexpr std::uint64_t kSalt = 1u << 20;
        constexpr std::uint64_t kStride = 1u << 13;
        const ViewVertex& c = view.verts[0];
        unsigned mask = 0;
        for (const ViewEdge& e : c.edges) {
            std::uint64_t mine = kSalt + static_cast<std::uint64_t>(e.port) * kStride;
            std::uint64_t theirs = kSalt + static_cast<std::uint64_t>(e.rev_port) * kStride;
            for (std::uint64_t j = 0; j < 4096; ++j) {
                int b0 = view.bit(0, mine + j);
                int b1 = view.bit(e.to, theirs + j);
                if (b0 != b1) {
                    if (b0 == 1) mask |= 1u << (e.port - 1);
                    break;
                }
            }
        }
        return static_cast<int>(mask);
    };
    return alg;
}

// Randomized proper-q-coloring fixer (needs q >= delta+1): every vertex
// starts with a random color; for scale*ceil(log2 n)+2 rounds, a conflicted
// vertex flips a coin and, on heads, redraws uniformly from the colors its
// neighbors do not currently hold.  The coin breaks the symmetric livelock
// of two conflicted neighbors moving in lockstep.
inline ViewAlgorithm toy_coloring_fixer(int q, int scale = 4) {
    ViewAlgorithm alg;
    alg.name = "rand-fix:" + std::to_string(q);
    alg.round_bound = [scale](double n, int) {
        return scale * static_cast<long long>(std::ceil(std::log2(std::max(2.0, n)))) + 2;
    };
    alg.decide = [q](const View& view) {
        constexpr std::uint64_t kStall = 1u << 22;
        constexpr std::uint64_t kDraw = 1u << 23;
        const int m = static_cast<int>(view.verts.size());
        std::vector<int> col(m), nxt(m);
        for (int w = 0; w < m; ++w) col[w] = static_cast<int>(view.bit_chunk(w, kDraw) % q);
        for (int round = 1; round <= view.radius; ++round) {
            for (int w = 0; w < m; ++w) {
                nxt[w] = col[w];
                if (view.verts[w].dist > view.radius - round) continue;
                bool clash = false;
                std::vector<char> used(q, 0);
                for (const ViewEdge& e : view.verts[w].edges) {
                    if (col[e.to] == col[w]) clash = true;
                    if (col[e.to] < q) used[col[e.to]] = 1;
                }
                if (!clash || view.bit(w, kStall + round) == 0) continue;
                std::vector<int> free;
                for (int c = 0; c < q; ++c)
                    if (!used[c]) free.push_back(c);
                if (!free.empty())
                    nxt[w] = free[view.bit_chunk(w, kDraw + round) % free.size()];
            }
            col.swap(nxt);
        }
        return col[0];
    };
    return alg;
}

}  // namespace local
