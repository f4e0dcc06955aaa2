#pragma once

#include <string>
#include <vector>

#include "local/lcl.hpp"
#include "local/port_graph.hpp"

namespace local::tree {

// Boundary region of a poled tree: the subgraph induced by the vertices
// within distance 2r-1 of the poles, with the attributes that the
// equivalence relation compares (host-tree degrees, labels, pole marks).
struct QStruct {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> deg_h;     // degree in the host tree
    std::vector<int> out;       // pre-set output label, -1 = ⊥
    std::vector<std::string> in;
    std::vector<int> pole_mask;  // bit 0: first pole, bit 1: second pole

    void add_vertex(int deg, int out_label, std::string input, int mask);
    void add_edge(int a, int b);
};

// Canonical preorders of Q: vertices of the first pole's component rooted
// at that pole, then the second pole's component.  Sibling subtrees with
// equal encodings can be emitted in any order, so all such arrangements
// are returned; every one yields the same structure encoding.
std::vector<std::vector<int>> canonical_orders(const QStruct& q);

std::string encode_structure(const QStruct& q);

// Fingerprint of a poled tree: the canonical structure encoding plus the
// set of extendible boundary labelings, serialized under the canonical
// order that minimizes the code list.
struct Fingerprint {
    std::string structure;
    std::vector<std::uint32_t> ext;

    bool operator==(const Fingerprint& o) const {
        return structure == o.structure && ext == o.ext;
    }
    bool operator<(const Fingerprint& o) const {
        if (structure != o.structure) return structure < o.structure;
        return ext < o.ext;
    }
};

// Given per-vertex labels (by Q vertex id) and an order, the base-sigma
// code of the assignment.
std::uint32_t assignment_code(const std::vector<int>& order, const std::vector<int>& labels,
                              int sigma);
std::vector<int> assignment_decode(const std::vector<int>& order, std::uint32_t code, int sigma,
                                   int q_n);

// Re-serializes a raw extendible set (codes under a tentative vertex
// numbering) into the canonical minimum over the candidate orders; returns
// the chosen order via *chosen.
std::vector<std::uint32_t> canonical_ext(const QStruct& q,
                                         const std::vector<std::vector<int>>& orders,
                                         const std::vector<std::vector<int>>& raw_labelings,
                                         int sigma, std::vector<int>* chosen);

// Tripartition of a poled tree: D1 = vertices within r-1 of a pole,
// D2 = within r of D1 minus D1, D3 = the rest.
struct Tripartition {
    std::vector<int> d1, d2, d3;
    std::vector<int> region;  // 0,1,2 per vertex
};
Tripartition tripartition(const PortGraph& g, const std::vector<int>& poles, int r);

// Q of an explicit poled partially labeled tree (the oracle path).
QStruct q_of_explicit(const PortGraph& g, const Labeling& partial,
                      const std::vector<int>& poles, int r, std::vector<int>* q_vertices);

}  // namespace local::tree
