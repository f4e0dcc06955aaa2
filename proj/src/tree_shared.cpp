#include "local/tree/shared_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace local::tree {

bool NodeStore::Key::operator<(const Key& o) const {
    if (out != o.out) return out < o.out;
    if (in != o.in) return in < o.in;
    return children < o.children;
}

NodeP NodeStore::leaf(int out, const std::string& in) { return node(out, {}, in); }

NodeP NodeStore::node(int out, std::vector<NodeP> children, const std::string& in) {
    std::sort(children.begin(), children.end(),
              [](const NodeP& a, const NodeP& b) { return a->uid < b->uid; });
    Key key;
    key.out = out;
    key.in = in;
    for (const NodeP& c : children) key.children.push_back(c.get());
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    auto n = std::make_shared<Node>();
    n->out = out;
    n->in = in;
    n->children = std::move(children);
    n->uid = next_uid_++;
    for (const NodeP& c : n->children) n->size += c->size;
    NodeP p = n;
    by_key_.emplace(std::move(key), p);
    return p;
}

NodeP NodeStore::relabel_root(const NodeP& t, int out) {
    return node(out, t->children, t->in);
}

long long Bipolar::expanded_size() const {
    long long s = 0;
    for (const NodeP& c : cores) s += c->size;
    return s;
}

long long child_offset(const NodeP& parent, const Node* child) {
    long long off = 1;
    for (const NodeP& c : parent->children) {
        if (c.get() == child) return off;
        off += c->size;
    }
    throw std::logic_error("child_offset: not a child");
}

namespace {

void expand_rec(const NodeP& node, int parent, ExpandedTree& out,
                std::vector<std::pair<int, int>>& edges) {
    int me = static_cast<int>(out.prelabel.size());
    out.prelabel.push_back(node->out);
    out.node_of.push_back(node.get());
    if (parent >= 0) edges.emplace_back(parent, me);
    for (const NodeP& c : node->children) expand_rec(c, me, out, edges);
}

}  // namespace

ExpandedTree expand(const NodeP& root, int delta_cap) {
    ExpandedTree out;
    std::vector<std::pair<int, int>> edges;
    expand_rec(root, -1, out, edges);
    out.graph = PortGraph::from_edges(static_cast<int>(out.prelabel.size()), edges, delta_cap);
    const Node* cursor = root.get();
    (void)cursor;
    std::vector<const Node*> stack;
    // carry input labels over
    for (size_t v = 0; v < out.node_of.size(); ++v)
        if (!out.node_of[v]->in.empty())
            out.graph.set_input_label(static_cast<int>(v), out.node_of[v]->in);
    return out;
}

ChainedBipolar chain_from_pole(NodeStore& store, const Bipolar& h, bool from_s) {
    ChainedBipolar out;
    const int x = h.length();
    out.chain.assign(x, nullptr);
    NodeP below = nullptr;
    for (int step = x - 1; step >= 0; --step) {
        int j = from_s ? step : x - 1 - step;
        const NodeP& core = h.cores[j];
        std::vector<NodeP> children = core->children;
        if (below) children.push_back(below);
        below = store.node(core->out, std::move(children), core->in);
        out.chain[step] = below;
    }
    out.root = below;
    return out;
}

}  // namespace local::tree
