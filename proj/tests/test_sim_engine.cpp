#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "local/generators.hpp"
#include "local/hier_coloring.hpp"
#include "local/sim.hpp"
#include "local/toy_algorithms.hpp"

using namespace local;

TEST_CASE("constant algorithm on all-sigma is legal with zero rounds") {
    LclSpec spec = make_all_sigma();
    PortGraph g = gen_random_tree(30, 3, 5);
    ViewAlgorithm alg = const_algorithm(0, "const-sigma");
    RunReport rep = run_det(g, spec, alg, random_ids(g.n(), 1));
    CHECK(rep.outcome.legal());
    CHECK(rep.rounds_used == 0);
    CHECK(rep.fail_local_max == 0);
}

TEST_CASE("duplicate ids are rejected") {
    PortGraph g = gen_path(3);
    std::vector<long long> ids{1, 1, 2};
    CHECK_THROWS(run_det(g, make_all_sigma(), const_algorithm(0), ids));
}

TEST_CASE("hier(2) solver is legal on H_2(8), exact views and batch agree") {
    auto inst = gen_hk(2, 8);
    LclSpec spec = make_hier(2);
    ViewAlgorithm alg = solve_hier(2);
    std::vector<long long> ids = random_ids(inst.graph.n(), 3);

    RunOptions exact;
    exact.exact_views = true;
    RunReport r_exact = run_det(inst.graph, spec, alg, ids, exact);
    RunReport r_batch = run_det(inst.graph, spec, alg, ids);
    CHECK(r_exact.outcome.legal());
    CHECK(r_batch.outcome.legal());
    CHECK(r_exact.labeling.lab == r_batch.labeling.lab);
    CHECK(r_exact.rounds_used == alg.round_bound(inst.graph.n(), 3));
}

TEST_CASE("order-invariant algorithm ignores an id permutation") {
    PortGraph g = gen_ring(12);
    LclSpec spec = make_all_sigma();
    ViewAlgorithm alg = const_algorithm(0);
    std::vector<long long> ids(12);
    std::iota(ids.begin(), ids.end(), 10);
    std::vector<long long> shuffled = ids;
    std::rotate(shuffled.begin(), shuffled.begin() + 5, shuffled.end());
    CHECK(run_det(g, spec, alg, ids).labeling.lab ==
          run_det(g, spec, alg, shuffled).labeling.lab);
}

TEST_CASE("run_rand is reproducible and advertised_n drives the radius") {
    PortGraph g = gen_path(200);
    LclSpec spec = make_hier(1);
    ViewAlgorithm alg = solve_hier(1);
    // Same seed -> identical reports; the advertised size, not |V|, sets t.
    RunOptions exact;
    exact.exact_views = true;
    RunReport a = run_rand(g, spec, alg, 7, 5, exact);
    RunReport b = run_rand(g, spec, alg, 7, 5, exact);
    CHECK(a.labeling.lab == b.labeling.lab);
    CHECK(a.rounds_used == alg.round_bound(5, 2));
    CHECK(a.rounds_used < 40);  // far below |V| = 200: views stay local
    // Lied-to vertices see a tiny threshold, so the whole level-1 path
    // declines with mercury.
    for (int v = 0; v < g.n(); ++v) CHECK(a.labeling[v] == kMercury);
    RunReport c = run_rand(g, spec, alg, 8, 5, exact);
    CHECK(c.labeling.lab == a.labeling.lab);  // deterministic given levels
}

TEST_CASE("full-information soundness: outputs agree on grafted graphs") {
    // Two paths agreeing within distance t of vertex 0 but different beyond.
    ViewAlgorithm alg = toy_coloring_fixer(3);
    const double pretend = 4;  // t = 4*2+2 = 10
    const int t = static_cast<int>(alg.round_bound(pretend, 3));
    std::vector<std::pair<int, int>> e1, e2;
    for (int v = 0; v + 1 < 30; ++v) e1.emplace_back(v, v + 1);
    e2 = e1;
    e2.emplace_back(29, 30);  // extra branch beyond distance t of the tested vertices
    e2.emplace_back(29, 31);
    PortGraph g1 = PortGraph::from_edges(30, e1, 3);
    PortGraph g2 = PortGraph::from_edges(32, e2, 3);
    for (int v = 0; v + t < 25; v += 3) {
        ViewContext ctx;
        ctx.attach_bits = true;
        ctx.seed = 99;
        ctx.advertised_n = pretend;
        CHECK(alg.decide(make_view(g1, v, t, ctx)) == alg.decide(make_view(g2, v, t, ctx)));
    }
}

TEST_CASE("decide is invariant under local-index scrambling") {
    auto inst = gen_hk(2, 4);
    ViewAlgorithm alg = solve_hier(2);
    std::vector<long long> ids = random_ids(inst.graph.n(), 11);
    ViewContext ctx;
    ctx.ids = &ids;
    int t = static_cast<int>(std::min<long long>(alg.round_bound(inst.graph.n(), 3),
                                                 inst.graph.n()));
    for (int v = 0; v < inst.graph.n(); v += 5) {
        View view = make_view(inst.graph, v, t, ctx);
        std::vector<int> perm(view.verts.size());
        std::iota(perm.begin(), perm.end(), 0);
        // deterministic scramble keeping the center fixed
        for (size_t i = 1; i + 1 < perm.size(); i += 2) std::swap(perm[i], perm[i + 1]);
        View scrambled = permute_view(view, perm);
        CHECK(alg.decide(view) == alg.decide(scrambled));
    }
}

TEST_CASE("estimate_failure matches exact probabilities") {
    LclSpec spec = make_two_coloring();
    PortGraph edge = gen_path(2);
    FailureEstimate est = estimate_failure(edge, spec, rand_two_coloring_guess(), 10000, 42);
    // exact global failure probability is 1/2; allow 3 sigma
    double sigma = std::sqrt(0.25 / 10000);
    CHECK(std::abs(est.global_rate - 0.5) <= 3 * sigma);

    // a deterministic legal algorithm never fails
    FailureEstimate zero =
        estimate_failure(edge, make_all_sigma(), const_algorithm(0), 50, 1);
    CHECK(zero.global_rate == 0);
    CHECK(zero.max_local_rate == 0);
}

TEST_CASE("randomized coloring fixer reaches the 1/n failure target") {
    PortGraph g = gen_random_tree(60, 3, 12);  // q = delta + 1
    LclSpec spec = make_proper_coloring(4);
    FailureEstimate est = estimate_failure(g, spec, toy_coloring_fixer(4), 300, 5);
    CHECK(est.global_rate <= 1.0 / g.n() + 0.02);

    PortGraph path = gen_random_tree(50, 2, 3);
    FailureEstimate est3 = estimate_failure(path, make_proper_coloring(3),
                                            toy_coloring_fixer(3), 300, 6);
    CHECK(est3.global_rate <= 1.0 / path.n() + 0.02);
}
