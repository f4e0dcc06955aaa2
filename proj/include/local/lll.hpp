#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "local/lcl.hpp"
#include "local/sim.hpp"

namespace local {

// A variable is either a uniform draw from [0, range) or an opaque counter
// nonce (the value selects a fresh random-bit stream; resampling bumps it).
struct LllVariable {
    enum class Kind { Uniform, Counter } kind = Kind::Uniform;
    std::uint64_t range = 2;
};

struct LllEvent {
    long long id = 0;        // selection priority; distinct across events
    std::vector<int> scope;  // variable indices this event reads
    std::function<bool(const std::vector<std::uint64_t>&)> occurs;
};

struct BadEventSystem {
    std::vector<LllVariable> variables;
    std::vector<LllEvent> events;
    void validate() const;
};

struct DependencyGraph {
    std::vector<std::vector<int>> adj;  // edge iff the scopes intersect
    int max_degree = 0;
    double p = 0;  // max event probability, supplied or estimated

    static DependencyGraph build(const BadEventSystem& sys, double p);
};

// Symmetric polynomial criterion: p * d^c < 1 (evaluated in log space).
bool check_criterion(double p, double d, double c);

struct ResampleResult {
    std::vector<std::uint64_t> assignment;
    long long iterations = 0;
    bool converged = false;
    long long cap = 0;

    // n,delta,p,d,c,criterion,iterations,outcome
    std::string csv_row(int n, int delta, double p, int d, double c) const;
};

// Per-iteration observer: occurring events, the selected locally-minimal
// subset, and the assignment before/after the resampling writes.
struct ResampleTrace {
    std::vector<int> occurring;
    std::vector<int> selected;
    std::vector<int> resampled_vars;
    const std::vector<std::uint64_t>* before = nullptr;
    const std::vector<std::uint64_t>* after = nullptr;
};

// ID-priority parallel resampling: each iteration resamples the variables
// of every occurring event whose ID is smallest among the occurring events
// it shares a variable with.  cap <= 0 selects 100*log2(#events).
ResampleResult mt_resample(const BadEventSystem& sys, std::uint64_t seed, long long cap = 0,
                           const std::function<void(const ResampleTrace&)>& trace = nullptr);

// Monte Carlo upper estimate of the max event probability, times a safety
// factor of 2 (with a one-sample floor).
double estimate_event_probability(const BadEventSystem& sys, int samples, std::uint64_t seed);

// Sinkless-orientation bad-event system: one fair bit per edge, one event
// per vertex ("all incident edges point inward").  Event IDs are vertex
// numbers.  p = 2^-min_degree analytically.
struct SinklessSystem {
    BadEventSystem system;
    std::vector<std::pair<int, int>> edge_list;
    double p_analytic = 0;

    // Decode an assignment into labels for make_sinkless_orientation(delta).
    Labeling to_labeling(const PortGraph& g, const std::vector<std::uint64_t>& assignment) const;
};
SinklessSystem sinkless_system(const PortGraph& g);

// One bad event per vertex: "N^r(v) is labeled inconsistently when `alg`
// runs with advertised size n_star"; variables are the per-vertex stream
// nonces, scopes reach r + t_star.
struct AlgorithmEventSystem {
    BadEventSystem system;
    DependencyGraph dep;
    int r = 0;
    long long t_star = 0;
    double n_star = 0;
    double dep_degree_bound = 0;  // delta^(2(r+t_star)), in log-checked form
    std::function<Labeling(const std::vector<std::uint64_t>&)> labels_under;
};

AlgorithmEventSystem events_from_algorithm(const PortGraph& g, const LclSpec& spec,
                                           const ViewAlgorithm& alg, double n_star,
                                           std::uint64_t seed, double p_override = 0);

struct SpeedupConfig {
    double c = 3;
    long long t_star = 0;
    double n_star = 0;
    int r = 1;
};

// Smallest advertised size in a doubling sequence with
// t* = round_bound(n*) < (1/2c) log_delta(n*) - r; nullopt if none fits in
// double range.
std::optional<SpeedupConfig> find_speedup_config(const ViewAlgorithm& alg, const LclSpec& spec,
                                                 int delta, double c);

struct WrapOutcome {
    RunReport report;
    SpeedupConfig config;
    long long iterations = 0;
    long long simulated_rounds = 0;  // t* + 2(r+t*) per iteration + r
};

// Theorem-style wrapper: run `alg` pretending n = n*, then resample the
// failure events until none occurs, and output the labels under the final
// assignment.  Throws if no valid n* exists.
WrapOutcome speedup_wrap_run(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                             double c, std::uint64_t seed);

}  // namespace local
