#include "local/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace local {

std::string RunReport::csv_header() {
    return "graph,n,delta,spec,alg,seed,rounds,outcome,fail_local_max";
}

std::string RunReport::csv_row() const {
    std::ostringstream out;
    out << graph_name << ',' << n << ',' << delta << ',' << spec_name << ',' << alg_name << ','
        << seed << ',' << rounds_used << ',' << outcome.str() << ',' << fail_local_max;
    return out.str();
}

namespace {

RunReport run_common(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                     const ViewContext& base_ctx, const RunOptions& opts) {
    RunReport rep;
    rep.graph_name = opts.graph_name.empty() ? "g" : opts.graph_name;
    rep.spec_name = spec.name;
    rep.alg_name = alg.name;
    rep.n = g.n();
    rep.delta = g.delta();
    rep.advertised_n = base_ctx.advertised_n > 0 ? base_ctx.advertised_n : g.n();
    rep.seed = base_ctx.seed;
    rep.rounds_used = alg.round_bound(rep.advertised_n, g.delta());
    rep.labeling = Labeling(g.n());

    if (alg.batch && !opts.exact_views) {
        rep.labeling.lab = alg.batch(g, base_ctx);
    } else {
        const int t = static_cast<int>(std::min<long long>(rep.rounds_used, g.n()));
        for (int v = 0; v < g.n(); ++v) {
            View view = make_view(g, v, t, base_ctx);
            rep.labeling[v] = alg.decide(view);
        }
    }

    rep.outcome = check_global(spec, g, rep.labeling);
    rep.failed.assign(g.n(), 0);
    int nfail = 0;
    for (int v = 0; v < g.n(); ++v)
        if (check_local(spec, g, rep.labeling, v) != LocalCheck::Ok) {
            rep.failed[v] = 1;
            ++nfail;
        }
    rep.fail_local_max = g.n() ? static_cast<double>(nfail) / g.n() : 0;
    return rep;
}

}  // namespace

RunReport run_det(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                  const std::vector<long long>& ids, const RunOptions& opts) {
    if (static_cast<int>(ids.size()) != g.n()) throw std::invalid_argument("run_det: ids size");
    std::set<long long> uniq(ids.begin(), ids.end());
    if (static_cast<int>(uniq.size()) != g.n())
        throw std::invalid_argument("run_det: duplicate IDs");
    ViewContext ctx;
    ctx.ids = &ids;
    return run_common(g, spec, alg, ctx, opts);
}

RunReport run_rand(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                   std::uint64_t seed, double advertised_n, const RunOptions& opts) {
    ViewContext ctx;
    ctx.attach_bits = true;
    ctx.seed = seed;
    ctx.advertised_n = advertised_n;
    return run_common(g, spec, alg, ctx, opts);
}

std::vector<long long> random_ids(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xabcdef1234567ULL);
    long long hi = 1;
    for (int i = 0; i < 3; ++i) hi *= std::max(2, n);
    std::set<long long> used;
    std::vector<long long> ids;
    std::uniform_int_distribution<long long> pick(1, hi);
    while (static_cast<int>(ids.size()) < n) {
        long long x = pick(rng);
        if (used.insert(x).second) ids.push_back(x);
    }
    return ids;
}

FailureEstimate estimate_failure(const PortGraph& g, const LclSpec& spec,
                                 const ViewAlgorithm& alg, int trials, std::uint64_t seed0,
                                 double advertised_n) {
    if (trials < 1) throw std::invalid_argument("estimate_failure: trials >= 1");
    FailureEstimate est;
    est.trials = trials;
    std::vector<long long> local_fail(g.n(), 0);
    int global_fail = 0;
    for (int tr = 0; tr < trials; ++tr) {
        RunReport rep = run_rand(g, spec, alg, seed0 + tr, advertised_n);
        if (!rep.outcome.legal()) ++global_fail;
        for (int v = 0; v < g.n(); ++v) local_fail[v] += rep.failed[v];
    }
    est.global_rate = static_cast<double>(global_fail) / trials;
    long long worst = 0;
    for (int v = 0; v < g.n(); ++v) worst = std::max(worst, local_fail[v]);
    est.max_local_rate = static_cast<double>(worst) / trials;
    return est;
}

}  // namespace local
