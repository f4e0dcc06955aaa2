#pragma once

#include <functional>
#include <string>
#include <vector>

#include "local/port_graph.hpp"
#include "local/view.hpp"

namespace local {

// Per-vertex output labels as indices into an LclSpec's sigma_out;
// -1 encodes ⊥ (unlabeled).
struct Labeling {
    std::vector<int> lab;

    explicit Labeling(int n = 0) : lab(n, -1) {}
    int& operator[](int v) { return lab[v]; }
    int operator[](int v) const { return lab[v]; }
    int n() const { return static_cast<int>(lab.size()); }
    bool complete() const;
};

// Locally checkable labeling problem: a verification radius, finite
// alphabets, and a predicate over centered radius-r labeled balls.  The
// verifier must be deterministic and total on well-formed complete balls.
struct LclSpec {
    std::string name;
    int radius = 1;
    std::vector<std::string> sigma_in;   // empty = problem has no inputs
    std::vector<std::string> sigma_out;
    std::function<bool(const View&)> verifier;

    int out_index(const std::string& token) const;
    const std::string& out_token(int idx) const { return sigma_out[idx]; }
};

enum class LocalCheck { Ok, Violated, Incomplete };

// Verdict of the radius-r check at v.  A ⊥ anywhere in the ball yields
// Incomplete, never Violated.
LocalCheck check_local(const LclSpec& spec, const PortGraph& g, const Labeling& L, int v);

struct GlobalCheck {
    enum class Kind { Legal, Illegal, Incomplete } kind = Kind::Legal;
    int witness = -1;  // smallest-id vertex whose check is not Ok

    bool legal() const { return kind == Kind::Legal; }
    std::string str() const;
};

GlobalCheck check_global(const LclSpec& spec, const PortGraph& g, const Labeling& L);

// Labeling text format: one "v label" pair per line, '_' encodes ⊥.
std::string labeling_to_text(const LclSpec& spec, const Labeling& L);
Labeling labeling_from_text(const LclSpec& spec, const std::string& text);

// Built-in catalog ------------------------------------------------------

LclSpec make_all_sigma();
LclSpec make_proper_coloring(int q);
LclSpec make_two_coloring();
// k-level hierarchical coloring; radius k, alphabet {venus,mars,mercury,saturn}.
LclSpec make_hier(int k);
// Cycle orientations whose uniformly-directed runs have >= ell vertices.
LclSpec make_ell_orientation(int ell);
// Every vertex directs at least one incident edge outward; labels are
// bitmasks of outgoing ports, so the alphabet depends on delta.
LclSpec make_sinkless_orientation(int delta);

// Parses "name" or "name:param", e.g. "hier:2", "proper-coloring:3".
// delta_hint is needed by sinkless-orientation.
LclSpec builtin(const std::string& name, int delta_hint = 0);

// Vertex levels of the hierarchical coloring problem, computed globally:
// peel degree-<=2 vertices k times; survivors get level k+1.
std::vector<int> hier_levels(const PortGraph& g, int k);

// Labels for hierarchical coloring as indices into make_hier's alphabet.
enum HierLabel : int { kVenus = 0, kMars = 1, kMercury = 2, kSaturn = 3 };

}  // namespace local
