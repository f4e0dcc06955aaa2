#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "local/generators.hpp"
#include "local/port_graph.hpp"
#include "local/view.hpp"

using namespace local;

namespace {

// Brute-force ball membership for cross-checking make_view.
std::set<int> brute_ball(const PortGraph& g, int v, int t) {
    auto d = bfs_distances(g, v);
    std::set<int> out;
    for (int u = 0; u < g.n(); ++u)
        if (d[u] >= 0 && d[u] <= t) out.insert(u);
    return out;
}

}  // namespace

TEST_CASE("ring generator") {
    CHECK_THROWS(gen_ring(2));
    PortGraph g = gen_ring(3);
    CHECK(g.n() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    g.validate();

    PortGraph g5 = gen_ring(5);
    auto d = bfs_distances(g5, 0);
    CHECK(d[2] == 2);
    CHECK(d[3] == 2);
    // port 1 is clockwise everywhere
    for (int v = 0; v < 5; ++v) CHECK(g5.neighbor(v, 1) == (v + 1) % 5);
}

TEST_CASE("ring views cover the graph at radius n/2") {
    PortGraph g = gen_ring(100);
    for (int v = 0; v < 100; v += 17) {
        View view = make_view(g, v, 50);
        CHECK(view.verts.size() == 100);
    }
}

TEST_CASE("random tree generator is deterministic and respects delta") {
    PortGraph a = gen_random_tree(1000, 3, 7);
    PortGraph b = gen_random_tree(1000, 3, 7);
    CHECK(a.to_text() == b.to_text());
    CHECK(is_tree(a));
    int dmax = 0;
    for (int v = 0; v < a.n(); ++v) dmax = std::max(dmax, a.degree(v));
    CHECK(dmax <= 3);

    PortGraph c = gen_random_tree(1000, 3, 8);
    CHECK(a.to_text() != c.to_text());

    CHECK(gen_random_tree(1, 2, 0).n() == 1);
    CHECK(gen_random_tree(2, 2, 0).edge_count() == 1);
    CHECK_THROWS(gen_random_tree(5, 1, 0));
}

TEST_CASE("hk construction matches the size recurrence") {
    CHECK_THROWS(gen_hk(1, 2));
    auto h1 = gen_hk(1, 7);
    CHECK(h1.graph.n() == 7);
    CHECK(is_tree(h1.graph));

    auto h2 = gen_hk(2, 3);
    CHECK(h2.graph.n() == 18);  // 3 backbone + 5 copies of a 3-path
    CHECK(hk_vertex_count(2, 3) == 18);
    CHECK(is_tree(h2.graph));
    int dmax = 0;
    for (int v = 0; v < h2.graph.n(); ++v) dmax = std::max(dmax, h2.graph.degree(v));
    CHECK(dmax == 3);

    for (int k = 1; k <= 3; ++k)
        for (int x : {3, 5, 8}) {
            auto h = gen_hk(k, x);
            CHECK(h.graph.n() == hk_vertex_count(k, x));
            CHECK(is_tree(h.graph));
            h.graph.validate();
            for (int v = 0; v < h.graph.n(); ++v) CHECK(h.graph.degree(v) <= 3);
        }
}

TEST_CASE("ball equals brute-force distance set") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        PortGraph g = gen_random_tree(50, 3, seed);
        for (int v = 0; v < g.n(); v += 7)
            for (int t : {0, 1, 2, 5}) {
                View view = make_view(g, v, t);
                std::set<int> got(view.hidden.orig.begin(), view.hidden.orig.end());
                CHECK(got == brute_ball(g, v, t));
                for (const ViewVertex& vv : view.verts) CHECK(vv.dist <= t);
            }
    }
    // t=0 keeps only the center, with its true degree
    PortGraph star = gen_star(3);
    View v0 = make_view(star, 0, 0);
    CHECK(v0.verts.size() == 1);
    CHECK(v0.verts[0].degree == 3);
    View v1 = make_view(star, 0, 1);
    CHECK(v1.verts.size() == 4);
}

TEST_CASE("graph text format round-trips bit-exactly") {
    auto h = gen_hk(2, 4);
    h.graph.set_input_label(3, "x");
    std::string text = h.graph.to_text();
    PortGraph back = PortGraph::from_text(text);
    CHECK(back.to_text() == text);
    CHECK(back.input_label(3) == "x");

    PortGraph r = gen_ring(9);
    CHECK(PortGraph::from_text(r.to_text()).to_text() == r.to_text());
}

TEST_CASE("validator rejects broken port numbering") {
    CHECK_THROWS(PortGraph::from_text("2 1\n0 1 - 1:1\n1 1 - 1:1\n"));  // self loop at 1? malformed
    CHECK_THROWS(PortGraph::from_text("2 1\n0 1 - 1:0\n1 1 - 1:0\n"));  // self loops
}

TEST_CASE("random regular graphs are simple and regular") {
    for (std::uint64_t seed : {1u, 5u}) {
        PortGraph g = gen_random_regular(60, 16, seed);
        g.validate();
        for (int v = 0; v < g.n(); ++v) {
            CHECK(g.degree(v) == 16);
            std::set<int> nbrs;
            for (const HalfEdge& he : g.half_edges(v)) {
                CHECK(he.to != v);
                CHECK(nbrs.insert(he.to).second);
            }
        }
    }
    CHECK(gen_random_regular(60, 16, 3).to_text() == gen_random_regular(60, 16, 3).to_text());
}
