#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "local/lcl.hpp"
#include "local/tree/qstruct.hpp"
#include "local/tree/shared_tree.hpp"

namespace local::tree {

using ClassId = int;
using TypeId = int;

// Physical boundary entity of a fingerprint evaluation: which vertex of
// the evaluated tree a canonical position refers to.
struct QEntity {
    enum Kind { Root, Child, Core, Hang } kind = Root;
    int a = 0;  // Child: child index; Core: core index; Hang: core index
    int b = 0;  // Hang: hanger index within that core's children
};

struct ClassInfo {
    Fingerprint fp;
    NodeP rep;
    std::vector<QEntity> rep_order;  // canonical positions of the representative
    int root_degree = 0;
    bool good = false;
    long long good_code = -1;  // least extendible code consistent at the pole
};

struct TypeInfo {
    Fingerprint fp;
    Bipolar rep;
    std::vector<QEntity> rep_order;
};

// Equivalence-class engine for radius-1 LCLs on bounded-degree trees
// without input labels or port sensitivity.  All memo tables live here, so
// one engine instance must be used per problem.
class TreeEngine {
  public:
    TreeEngine(const LclSpec& spec, int delta);

    NodeStore& store() { return store_; }
    int sigma() const { return sigma_; }
    int delta() const { return delta_; }
    const LclSpec& spec() const { return spec_; }

    struct ClassEval {
        ClassId id;
        std::vector<QEntity> order;
    };
    struct TypeEval {
        TypeId id;
        std::vector<QEntity> order;
    };

    ClassEval class_of(const NodeP& t);
    TypeEval type_of(const Bipolar& h);
    TypeId type_single(ClassId c);
    TypeId delta_step(TypeId t, ClassId c);
    TypeId type_walk(const std::vector<ClassId>& word);

    const ClassInfo& cls(ClassId id) const { return classes_[id]; }
    const TypeInfo& type(TypeId id) const { return types_[id]; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int num_types() const { return static_cast<int>(types_.size()); }

    // Can the subtree at t be completed, consistently at every subtree
    // vertex, given t's label and its parent's label and degree?
    bool feasible_subtree(const NodeP& t, int sigma, int parent_sigma, int parent_deg);

    // Entity labels of an assignment code (aligned with `order`).
    std::vector<int> decode_entities(const std::vector<QEntity>& order, std::uint32_t code) const;
    std::uint32_t code_entities(const std::vector<QEntity>& order,
                                const std::function<int(const QEntity&)>& label_of) const;

    // Greedy deterministic completion of a unipolar tree under a boundary
    // assignment; returns labels in expansion (preorder) order.  The code
    // must be extendible.
    std::vector<int> complete_unipolar(const NodeP& t, std::uint32_t code,
                                       const std::vector<QEntity>& order);
    // Completion of a bipolar tree; returns one label vector per core.
    std::vector<std::vector<int>> complete_bipolar(const Bipolar& h, std::uint32_t code,
                                                   const std::vector<QEntity>& order);

    // Legal labeling of a whole unipolar tree (class must be good).
    std::vector<int> legal_labeling(const NodeP& t);

    // center's ball as the verifier sees it
    bool ball_ok(int center_sigma, int center_deg, const std::vector<std::pair<int, int>>& nbrs);

  private:
    struct Evaluated {
        Fingerprint fp;
        std::vector<std::vector<int>> raw;  // extendible labelings by Q vertex id
        std::vector<int> q_to_vertex;       // canonical order (Q vertex ids)
    };

    ClassId intern_class(const Fingerprint& fp, const NodeP& rep,
                         const std::vector<QEntity>& order, int root_degree);
    TypeId intern_type(const Fingerprint& fp, const Bipolar& rep,
                       const std::vector<QEntity>& order);
    void compute_goodness(ClassInfo& info);

    const LclSpec& spec_;
    int delta_;
    int sigma_;
    NodeStore store_;

    std::vector<ClassInfo> classes_;
    std::vector<TypeInfo> types_;
    std::map<Fingerprint, ClassId> class_ids_;
    std::map<Fingerprint, TypeId> type_ids_;

    std::unordered_map<std::uint64_t, ClassEval> class_memo_;  // by node uid
    std::map<std::pair<TypeId, ClassId>, TypeId> delta_memo_;
    std::map<ClassId, TypeId> single_memo_;
    std::unordered_map<std::uint64_t, char> feas_memo_;
    std::map<std::uint64_t, char> ball_memo_;
};

}  // namespace local::tree
