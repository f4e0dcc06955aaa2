#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "local/lcl.hpp"
#include "local/port_graph.hpp"
#include "local/view.hpp"

namespace local {

// A round-synchronous algorithm in full-information form: after
// round_bound(n, delta) rounds a vertex's output is a pure function of its
// radius-t view.  `decide` must depend only on view contents; the engine's
// scramble tests permute local indices to enforce this.
//
// `batch`, when set, is a whole-graph evaluator that must produce exactly
// the per-vertex decide outputs; the engine uses it as a fast path and the
// test suite cross-checks the two on small instances.
struct ViewAlgorithm {
    std::string name;
    std::function<long long(double advertised_n, int delta)> round_bound;
    std::function<int(const View&)> decide;
    std::function<std::vector<int>(const PortGraph&, const ViewContext&)> batch;
};

struct RunReport {
    std::string graph_name, spec_name, alg_name;
    int n = 0;
    int delta = 0;
    double advertised_n = 0;
    std::uint64_t seed = 0;
    long long rounds_used = 0;
    GlobalCheck outcome;
    std::vector<char> failed;  // per-vertex: check_local != Ok
    double fail_local_max = 0; // fraction of vertices with a local failure
    Labeling labeling;

    // graph,n,delta,spec,alg,seed,rounds,outcome,fail_local_max
    std::string csv_row() const;
    static std::string csv_header();
};

struct RunOptions {
    bool exact_views = false;  // ignore `batch` even when present
    std::string graph_name;
};

// Deterministic execution with unique IDs.  Throws on duplicate IDs.
RunReport run_det(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                  const std::vector<long long>& ids, const RunOptions& opts = {});

// Randomized execution: every vertex's bit stream is a pure function of
// (seed, vertex, epoch, index), and advertised_n is what the vertices are
// told "n" is.
RunReport run_rand(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                   std::uint64_t seed, double advertised_n = 0, const RunOptions& opts = {});

// Default ID assignment: distinct values in [1, n^3], seedable.
std::vector<long long> random_ids(int n, std::uint64_t seed);

struct FailureEstimate {
    double global_rate = 0;     // fraction of trials with a non-legal outcome
    double max_local_rate = 0;  // max over vertices of per-trial failure fraction
    int trials = 0;
};

FailureEstimate estimate_failure(const PortGraph& g, const LclSpec& spec,
                                 const ViewAlgorithm& alg, int trials,
                                 std::uint64_t seed0 = 1, double advertised_n = 0);

}  // namespace local
