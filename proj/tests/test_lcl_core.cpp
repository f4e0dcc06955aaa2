#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "local/generators.hpp"
#include "local/lcl.hpp"
#include "test_util.hpp"

using namespace local;

TEST_CASE("two-coloring local checks on a path") {
    LclSpec spec = make_two_coloring();
    PortGraph p3 = gen_path(3);
    Labeling aba(3);
    aba[0] = spec.out_index("A");
    aba[1] = spec.out_index("B");
    aba[2] = spec.out_index("A");
    CHECK(check_local(spec, p3, aba, 1) == LocalCheck::Ok);

    Labeling aab(3);
    aab[0] = spec.out_index("A");
    aab[1] = spec.out_index("A");
    aab[2] = spec.out_index("B");
    CHECK(check_local(spec, p3, aab, 1) == LocalCheck::Violated);

    Labeling hole = aba;
    hole[2] = -1;
    CHECK(check_local(spec, p3, hole, 1) == LocalCheck::Incomplete);
    CHECK(check_global(spec, p3, hole).kind == GlobalCheck::Kind::Incomplete);
}

TEST_CASE("all-sigma accepts any complete labeling") {
    LclSpec spec = make_all_sigma();
    PortGraph g = gen_random_tree(20, 3, 1);
    Labeling L(20);
    for (int v = 0; v < 20; ++v) L[v] = 0;
    CHECK(check_global(spec, g, L).legal());
}

TEST_CASE("two-coloring on an odd cycle is always illegal") {
    LclSpec spec = make_two_coloring();
    PortGraph c5 = gen_ring(5);
    testutil::for_each_labeling(5, 2, [&](const Labeling& L) {
        CHECK(check_global(spec, c5, L).kind == GlobalCheck::Kind::Illegal);
    });
    // even cycle: alternating labeling is legal
    PortGraph c6 = gen_ring(6);
    Labeling alt(6);
    for (int v = 0; v < 6; ++v) alt[v] = v % 2;
    CHECK(check_global(spec, c6, alt).legal());
}

TEST_CASE("check_global is the conjunction of check_local on small trees") {
    for (const char* name : {"all-sigma", "two-coloring", "proper-coloring:3"}) {
        LclSpec spec = builtin(name);
        for (int n = 1; n <= 5; ++n)
            for (const PortGraph& g : testutil::all_labeled_trees(n)) {
                testutil::for_each_labeling(
                    n, static_cast<int>(spec.sigma_out.size()), [&](const Labeling& L) {
                        bool all_ok = true;
                        for (int v = 0; v < n; ++v)
                            if (check_local(spec, g, L, v) != LocalCheck::Ok) all_ok = false;
                        CHECK(check_global(spec, g, L).legal() == all_ok);
                    });
            }
    }
}

TEST_CASE("hier(1) examples on a 3-path") {
    LclSpec spec = make_hier(1);
    PortGraph p3 = gen_path(3);
    Labeling vmv(3);
    vmv[0] = kVenus;
    vmv[1] = kMars;
    vmv[2] = kVenus;
    CHECK(check_global(spec, p3, vmv).legal());

    Labeling ccc(3);
    ccc[0] = ccc[1] = ccc[2] = kMercury;
    CHECK(check_global(spec, p3, ccc).kind == GlobalCheck::Kind::Illegal);
}

TEST_CASE("hier verifier agrees with the global-rule oracle") {
    std::vector<std::pair<PortGraph, int>> cases;
    cases.emplace_back(gen_path(4), 1);
    cases.emplace_back(gen_path(4), 2);
    cases.emplace_back(gen_ring(5), 1);
    cases.emplace_back(gen_star(3), 1);
    cases.emplace_back(gen_star(3), 2);
    cases.emplace_back(gen_random_tree(6, 3, 42), 2);
    cases.emplace_back(gen_random_tree(6, 4, 9), 2);
    for (auto& [g, k] : cases) {
        LclSpec spec = make_hier(k);
        testutil::for_each_labeling(g.n(), 4, [&, k = k](const Labeling& L) {
            bool oracle = testutil::hier_legal_oracle(g, k, L);
            bool engine = check_global(spec, g, L).legal();
            CHECK(oracle == engine);
        });
    }
}

TEST_CASE("hier levels satisfy the radius-1 reformulation") {
    for (auto [k, x] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 4}}) {
        auto inst = gen_hk(k, x);
        const PortGraph& g = inst.graph;
        std::vector<int> lvl = hier_levels(g, k);
        CHECK(lvl == inst.level_of);  // construction levels are the peeled levels
        for (int v = 0; v < g.n(); ++v) {
            if (lvl[v] == 1) {
                CHECK(g.degree(v) <= 2);
            } else {
                CHECK(g.degree(v) > 2);
                if (lvl[v] <= k) {
                    int high = 0;
                    for (const HalfEdge& he : g.half_edges(v))
                        if (lvl[he.to] >= lvl[v]) ++high;
                    CHECK(high <= 2);
                    // and not already eligible one level earlier
                    int high_prev = 0;
                    for (const HalfEdge& he : g.half_edges(v))
                        if (lvl[he.to] >= lvl[v] - 1) ++high_prev;
                    CHECK(high_prev > 2);
                }
            }
        }
    }
    // H_3: level sets are exactly the backbones, V_4 empty
    auto h3 = gen_hk(3, 7);
    std::vector<int> lvl = hier_levels(h3.graph, 3);
    for (int v = 0; v < h3.graph.n(); ++v) CHECK(lvl[v] <= 3);
    // K_{1,3} with k=1: leaves level 1, center level 2
    PortGraph star = gen_star(3);
    auto slvl = hier_levels(star, 1);
    CHECK(slvl[0] == 2);
    for (int v = 1; v <= 3; ++v) CHECK(slvl[v] == 1);
    // a path is all level 1 for any k
    auto plvl = hier_levels(gen_path(9), 2);
    for (int v = 0; v < 9; ++v) CHECK(plvl[v] == 1);
}

TEST_CASE("ell-orientation verifier") {
    LclSpec spec = make_ell_orientation(2);
    PortGraph c5 = gen_ring(5);
    Labeling clockwise(5);
    for (int v = 0; v < 5; ++v) clockwise[v] = spec.out_index("1");
    CHECK(check_global(spec, c5, clockwise).legal());

    // one vertex pointing against the flow breaks a run of length 1
    Labeling bad = clockwise;
    bad[2] = spec.out_index("2");
    CHECK(check_global(spec, c5, bad).kind == GlobalCheck::Kind::Illegal);
}

TEST_CASE("sinkless-orientation verifier") {
    LclSpec spec = make_sinkless_orientation(2);
    PortGraph c3 = gen_ring(3);
    // orient every edge clockwise: out-bit on port 1, in on port 2 -> mask 01
    Labeling L(3);
    for (int v = 0; v < 3; ++v) L[v] = spec.out_index("1");
    CHECK(check_global(spec, c3, L).legal());
    // make vertex 0 a sink: flip its mask to 0 (both edges in) -> neighbors inconsistent too
    Labeling S = L;
    S[0] = spec.out_index("0");
    CHECK(check_global(spec, c3, S).kind == GlobalCheck::Kind::Illegal);
}

TEST_CASE("labeling text round-trip") {
    LclSpec spec = make_hier(2);
    Labeling L(4);
    L[0] = kVenus;
    L[2] = kSaturn;
    std::string text = labeling_to_text(spec, L);
    Labeling back = labeling_from_text(spec, text);
    CHECK(back.lab == L.lab);
}
