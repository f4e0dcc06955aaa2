#pragma once

#include <vector>

#include "local/lcl.hpp"
#include "local/sim.hpp"

namespace local {

// Constant-round cycle orientation: repeated run-merging doubles the
// guaranteed run length, starting from a 2-orientation.  The output label
// of a vertex is the port it points along ("1" or "2").
ViewAlgorithm orient_cycle(int ell);

// Dependency radius of the recursion; independent of n.
long long orient_round_bound(int ell);

// Whole-cycle reference implementation (also used as the batch fast path).
std::vector<int> orient_cycle_centralized(const PortGraph& g, int ell,
                                          const std::vector<long long>& ids);

}  // namespace local
