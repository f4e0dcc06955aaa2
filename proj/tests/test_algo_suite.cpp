#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "local/decompose.hpp"
#include "local/generators.hpp"
#include "local/hier_coloring.hpp"
#include "local/orientation.hpp"
#include "local/sim.hpp"
#include "local/symmetry.hpp"

using namespace local;

namespace {

std::vector<long long> iota_ids(int n, long long base = 100) {
    std::vector<long long> ids(n);
    std::iota(ids.begin(), ids.end(), base);
    return ids;
}

// Components of mercury-labeled vertices with level <= i whose level-i
// members form a path must exceed 2*n^{i/k}; mirrors the solver's
// correctness argument.
void check_mercury_components(const PortGraph& g, int k, const Labeling& L) {
    std::vector<int> lvl = hier_levels(g, k);
    const double n = g.n();
    for (int i = 1; i <= k; ++i) {
        std::vector<char> in(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) in[v] = (L[v] == kMercury && lvl[v] <= i);
        std::vector<char> seen(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (!in[v] || seen[v]) continue;
            std::vector<int> comp, stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (const HalfEdge& he : g.half_edges(u))
                    if (in[he.to] && !seen[he.to]) {
                        seen[he.to] = 1;
                        stack.push_back(he.to);
                    }
            }
            // level-i members arranged in a path (not a cycle)?
            bool has_level_i = false;
            bool is_path = false;
            for (int u : comp)
                if (lvl[u] == i) {
                    has_level_i = true;
                    int same = 0;
                    for (const HalfEdge& he : g.half_edges(u))
                        if (in[he.to] && lvl[he.to] == i) ++same;
                    if (same <= 1) is_path = true;
                }
            if (has_level_i && is_path)
                CHECK(static_cast<double>(comp.size()) > 2.0 * std::pow(n, double(i) / k));
        }
    }
}

}  // namespace

TEST_CASE("hier threshold is the exact ceiling") {
    CHECK(hier_threshold(5, 1) == 10);
    CHECK(hier_threshold(9, 2) == 6);    // 2*3 = 6
    CHECK(hier_threshold(10, 2) == 7);   // 2*sqrt(10) = 6.32...
    CHECK(hier_threshold(27, 3) == 6);
    CHECK(hier_threshold(28, 3) == 7);
}

TEST_CASE("solve_hier k=1 on a short path alternates from the low-ID end") {
    PortGraph p5 = gen_path(5);
    Labeling L = solve_hier_centralized(p5, 1, iota_ids(5));
    CHECK(L[0] == kVenus);
    CHECK(L[1] == kMars);
    CHECK(L[2] == kVenus);
    CHECK(L[3] == kMars);
    CHECK(L[4] == kVenus);
    CHECK(check_global(make_hier(1), p5, L).legal());

    // low-ID endpoint on the other side flips the parity
    std::vector<long long> rev{50, 40, 30, 20, 10};
    Labeling R = solve_hier_centralized(p5, 1, rev);
    CHECK(R[4] == kVenus);
    CHECK(R[0] == kVenus);  // odd path: both endpoints get venus
}

TEST_CASE("solve_hier k=1 declines cycles with mercury") {
    PortGraph c7 = gen_ring(7);
    Labeling L = solve_hier_centralized(c7, 1, iota_ids(7));
    for (int v = 0; v < 7; ++v) CHECK(L[v] == kMercury);
    CHECK(check_global(make_hier(1), c7, L).legal());
}

TEST_CASE("solve_hier is legal on the hard family and never wastes mercury") {
    for (auto [k, xs] : std::vector<std::pair<int, std::vector<int>>>{
             {1, {5, 19}}, {2, {4, 12, 30}}, {3, {4, 7}}}) {
        for (int x : xs) {
            auto inst = gen_hk(k, x);
            LclSpec spec = make_hier(k);
            std::vector<long long> ids = random_ids(inst.graph.n(), 17 + x);
            Labeling L = solve_hier_centralized(inst.graph, k, ids);
            CHECK(check_global(spec, inst.graph, L).legal());
            check_mercury_components(inst.graph, k, L);
            // every vertex passes its local check (P_2-style example)
            for (int v = 0; v < inst.graph.n(); ++v)
                CHECK(check_local(spec, inst.graph, L, v) == LocalCheck::Ok);
        }
    }
    // general graphs too (the solver is not tree-specific)
    for (std::uint64_t seed : {3u, 4u}) {
        PortGraph g = gen_random_regular(40, 3, seed);
        Labeling L = solve_hier_centralized(g, 2, random_ids(40, seed));
        CHECK(check_global(make_hier(2), g, L).legal());
        check_mercury_components(g, 2, L);
    }
}

TEST_CASE("linial reduction yields a proper coloring with delta+1 colors") {
    // ring conflict graph
    const int n = 500;
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v].push_back((v + 1) % n);
        adj[v].push_back((v + n - 1) % n);
    }
    ColorReduction cr = linial_coloring(adj, random_ids(n, 9));
    CHECK(cr.num_colors <= 3);
    for (int v = 0; v < n; ++v)
        for (int u : adj[v]) CHECK(cr.colors[v] != cr.colors[u]);
    CHECK(cr.rounds < 600);  // log* phase plus palette retirement

    MisResult mis = mis_from_coloring(adj, cr.colors, cr.num_colors);
    for (int v = 0; v < n; ++v) {
        bool covered = mis.in_set[v];
        for (int u : adj[v]) {
            CHECK(!(mis.in_set[v] && mis.in_set[u]));
            covered = covered || mis.in_set[u];
        }
        CHECK(covered);
    }
}

TEST_CASE("independent_set_path examples and properties") {
    CHECK_THROWS(independent_set_path({1, 2, 3}, 4, 7));  // beta < 2*alpha

    CHECK(independent_set_path(iota_ids(3), 4, 8).members.empty());

    auto twelve = independent_set_path(iota_ids(12), 4, 8);
    CHECK(twelve.members.size() == 1);
    CHECK(valid_path_independent_set(12, 4, 8, twelve.members));

    auto hundred = independent_set_path(random_ids(100, 4), 4, 8);
    CHECK(valid_path_independent_set(100, 4, 8, hundred.members));

    for (int n : {9, 17, 33, 64, 301, 1000})
        for (int alpha : {2, 4, 8}) {
            auto isp = independent_set_path(random_ids(n, n + alpha), alpha, 2 * alpha);
            CHECK(valid_path_independent_set(n, alpha, 2 * alpha, isp.members));
        }
}

TEST_CASE("rc_decompose small examples") {
    // single vertex
    Decomposition d1 = rc_decompose(gen_path(1), 4);
    CHECK(d1.levels == 1);
    CHECK(d1.tag[0] == Decomposition::Tag::Rake);

    // star: leaves first, then the center
    Decomposition ds = rc_decompose(gen_star(3), 4);
    CHECK(ds.tag_iter[0] == 2);
    for (int v = 1; v <= 3; ++v) CHECK(ds.tag_iter[v] == 1);
    for (int v = 0; v <= 3; ++v) CHECK(ds.tag[v] == Decomposition::Tag::Rake);

    // path of 100, ell = 4: interior compressed in iteration 1, and after
    // promotion all level-1 paths have 4..8 vertices
    Decomposition dp = rc_decompose(gen_path(100), 4);
    for (int v = 2; v < 98; ++v) {
        CHECK(dp.tag[v] == Decomposition::Tag::Compress);
        CHECK(dp.tag_iter[v] == 1);
    }
    CHECK(validate_decomposition(gen_path(100), dp) == "");
    for (const auto& path : dp.level_paths[0]) {
        CHECK(path.size() >= 4);
        CHECK(path.size() <= 8);
    }
}

TEST_CASE("rc_decompose invariants on random trees and hard instances") {
    CHECK_THROWS(rc_decompose(gen_ring(8), 4));
    for (int ell : {4, 8}) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            int n = 1 + static_cast<int>(splitmix64(seed) % 3000);
            PortGraph g = gen_random_tree(n, 3, seed);
            std::vector<long long> ids = random_ids(n, seed * 7);
            Decomposition d = rc_decompose(g, ell, &ids);
            CHECK(validate_decomposition(g, d) == "");
        }
        for (auto [k, x] : std::vector<std::pair<int, int>>{{2, 8}, {3, 5}}) {
            auto inst = gen_hk(k, x);
            Decomposition d = rc_decompose(inst.graph, ell);
            CHECK(validate_decomposition(inst.graph, d) == "");
        }
    }
}

TEST_CASE("orientation: uniform cycles stay legal for every ell") {
    for (int n : {5, 40, 120}) {
        PortGraph g = gen_ring(n);
        for (int ell : {2, 4, 8}) {
            LclSpec spec = make_ell_orientation(ell);
            ViewAlgorithm alg = orient_cycle(ell);
            RunReport rep = run_det(g, spec, alg, iota_ids(n));
            CHECK(rep.outcome.legal());
        }
    }
}

TEST_CASE("orientation round bound does not depend on n") {
    ViewAlgorithm alg = orient_cycle(8);
    CHECK(alg.round_bound(100, 2) == alg.round_bound(10000, 2));
    CHECK(orient_round_bound(2) < orient_round_bound(8));
}

TEST_CASE("orientation: exhaustive port numberings on small cycles") {
    for (int n = 3; n <= 8; ++n) {
        for (int ell : {2, 4, 8}) {
            LclSpec spec = make_ell_orientation(ell);
            ViewAlgorithm alg = orient_cycle(ell);
            for (int mask = 0; mask < (1 << n); ++mask) {
                PortGraph g = gen_ring(n);
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) g.permute_ports(v, {1, 0});
                RunReport rep = run_det(g, spec, alg, iota_ids(n));
                CHECK(rep.outcome.legal());
            }
        }
    }
}

TEST_CASE("orientation: view form equals the centralized form past the wrap size") {
    for (int ell : {2, 4}) {
        ViewAlgorithm alg = orient_cycle(ell);
        LclSpec spec = make_ell_orientation(ell);
        int n = 2 * static_cast<int>(orient_round_bound(ell)) + 5;
        PortGraph g = gen_ring(n);
        for (int v = 0; v < n; v += 3) g.permute_ports(v, {1, 0});
        std::vector<long long> ids = random_ids(n, 21);
        RunOptions exact;
        exact.exact_views = true;
        RunReport r_exact = run_det(g, spec, alg, ids, exact);
        RunReport r_batch = run_det(g, spec, alg, ids);
        CHECK(r_exact.labeling.lab == r_batch.labeling.lab);
        CHECK(r_exact.outcome.legal());
    }
}

TEST_CASE("orientation: legality across a sweep of sizes with scrambled ports") {
    for (int ell : {2, 4, 8}) {
        LclSpec spec = make_ell_orientation(ell);
        ViewAlgorithm alg = orient_cycle(ell);
        for (int n : {9, 20, 45, 77, 78, 90, 130, 200}) {
            PortGraph g = gen_ring(n);
            for (int v = 0; v < n; ++v)
                if (splitmix64(v * 31 + n) & 1) g.permute_ports(v, {1, 0});
            RunReport rep = run_det(g, spec, alg, random_ids(n, n));
            INFO("ell=", ell, " n=", n);
            CHECK(rep.outcome.legal());
        }
    }
}
