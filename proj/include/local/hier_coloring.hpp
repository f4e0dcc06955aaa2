#pragma once

#include <vector>

#include "local/lcl.hpp"
#include "local/sim.hpp"

namespace local {

// ceil(2 * n^(1/k)) computed with exact integer arithmetic.
long long hier_threshold(long long n, int k);

// Deterministic round bound of the level-by-level solver.
long long solve_hier_round_bound(double advertised_n, int k);

// Level-by-level solver: exempt vertices take saturn, short paths of
// non-exempt same-level vertices 2-color themselves (venus at the
// lower-ID endpoint), long paths and all cycles take mercury.
Labeling solve_hier_centralized(const PortGraph& g, int k, const std::vector<long long>& ids,
                                long long advertised_n = 0);

// The same algorithm packaged for the simulator (decide + batch).
ViewAlgorithm solve_hier(int k);

}  // namespace local
