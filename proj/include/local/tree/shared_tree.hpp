#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "local/port_graph.hpp"

namespace local::tree {

// Immutable, hash-consed node of a partially labeled rooted tree.  Children
// are stored sorted by uid, so structurally equal trees are the same
// object and subtree sharing keeps the imaginary trees of the synthesis
// pipeline small in memory.
struct Node;
using NodeP = std::shared_ptr<const Node>;

struct Node {
    int out = -1;       // pre-set output label, -1 = ⊥
    std::string in;     // input label, "" = none
    std::vector<NodeP> children;
    std::uint64_t uid = 0;
    long long size = 1;     // expanded vertex count
};

// Interner for nodes; one per engine run.
class NodeStore {
  public:
    NodeP leaf(int out = -1, const std::string& in = "");
    NodeP node(int out, std::vector<NodeP> children, const std::string& in = "");
    // Same tree with a different root label (children shared).
    NodeP relabel_root(const NodeP& t, int out);

    long long interned() const { return static_cast<long long>(by_key_.size()); }

  private:
    struct Key {
        int out;
        std::string in;
        std::vector<const Node*> children;
        bool operator<(const Key& o) const;
    };
    std::map<Key, NodeP> by_key_;
    std::uint64_t next_uid_ = 1;
};

// Bipolar tree as the sequence of rooted trees along its core path; the
// poles are the first and last roots (equal when cores.size() == 1).
struct Bipolar {
    std::vector<NodeP> cores;

    int length() const { return static_cast<int>(cores.size()); }
    long long expanded_size() const;
};

// Offset of `child` inside the expansion of `parent` (root at 0, children
// blocks in stored order).
long long child_offset(const NodeP& parent, const Node* child);

// Expands a shared tree into an explicit PortGraph plus the pre-labels;
// node_of[i] reports which Node instance vertex i came from.  Vertex 0 is
// the root; children follow in stored order (preorder).
struct ExpandedTree {
    PortGraph graph;
    std::vector<int> prelabel;
    std::vector<const Node*> node_of;
};
ExpandedTree expand(const NodeP& root, int delta_cap);

// Unipolar view of a bipolar tree: chain the cores together starting from
// one pole.  chain[j] is the rewritten node whose children are core j's
// hangers plus chain[j+1].
struct ChainedBipolar {
    NodeP root;
    std::vector<NodeP> chain;  // chain[0] == root
};
ChainedBipolar chain_from_pole(NodeStore& store, const Bipolar& h, bool from_s);

}  // namespace local::tree
