#pragma once

#include <cstdint>
#include <vector>

namespace local {

// Color reduction on an arbitrary bounded-degree conflict graph, starting
// from distinct initial colors (IDs).  The polynomial set-free-family step
// is iterated to a fixpoint (log* many rounds), then one color class is
// retired per round down to delta+1 colors.
struct ColorReduction {
    std::vector<int> colors;  // values in [0, num_colors)
    int num_colors = 0;
    long long rounds = 0;
};

ColorReduction linial_coloring(const std::vector<std::vector<int>>& adj,
                               const std::vector<long long>& ids);

// Greedy MIS by sweeping color classes; one round per color.
struct MisResult {
    std::vector<char> in_set;
    long long rounds = 0;
};

MisResult mis_from_coloring(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& colors, int num_colors);

// (alpha,beta)-independent set of a path, beta >= 2*alpha: an independent
// set avoiding the endpoints whose removal leaves components with sizes in
// [alpha, beta]; empty when |P| <= beta.  Positions are 0-based indices
// into the path; ids drive the symmetry breaking.  Rounds account for the
// Linial reduction run on the alpha-th power of the path.
struct PathIndependentSet {
    std::vector<int> members;
    long long simulated_rounds = 0;
};

PathIndependentSet independent_set_path(const std::vector<long long>& ids, int alpha, int beta);

// Validator used by tests and the decomposition: true iff `members` is a
// correct (alpha,beta)-independent set of a path with `n` vertices.
bool valid_path_independent_set(int n, int alpha, int beta, const std::vector<int>& members);

}  // namespace local
