#include "local/tree/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace local::tree {

namespace {

constexpr int kMaxSigma = 15;

std::uint64_t pack_ball(int sigma, int deg, const std::vector<std::pair<int, int>>& nbrs) {
    std::uint64_t key = static_cast<std::uint64_t>(sigma) * 16 + deg;
    for (auto [s, d] : nbrs) key = key * 256 + static_cast<std::uint64_t>(s) * 16 + d;
    return key;
}

}  // namespace

TreeEngine::TreeEngine(const LclSpec& spec, int delta) : spec_(spec), delta_(delta) {
    if (spec.radius != 1)
        throw std::invalid_argument("TreeEngine: only radius-1 problems are supported");
    if (!spec.sigma_in.empty())
        throw std::invalid_argument("TreeEngine: input-labeled problems are not supported");
    sigma_ = static_cast<int>(spec.sigma_out.size());
    if (sigma_ > kMaxSigma) throw std::invalid_argument("TreeEngine: alphabet too large");
}

bool TreeEngine::ball_ok(int center_sigma, int center_deg,
                         const std::vector<std::pair<int, int>>& nbrs) {
    std::vector<std::pair<int, int>> sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t key = pack_ball(center_sigma, center_deg, sorted);
    auto it = ball_memo_.find(key);
    if (it != ball_memo_.end()) return it->second;

    View ball;
    ball.radius = 1;
    ball.delta = delta_;
    ball.advertised_n = center_deg + 1;
    ball.verts.resize(nbrs.size() + 1);
    ball.verts[0].dist = 0;
    ball.verts[0].degree = center_deg;
    ball.verts[0].out = center_sigma;
    for (size_t i = 0; i < sorted.size(); ++i) {
        ball.verts[i + 1].dist = 1;
        ball.verts[i + 1].out = sorted[i].first;
        ball.verts[i + 1].degree = sorted[i].second;
        ball.verts[0].edges.push_back(ViewEdge{static_cast<int>(i + 1), static_cast<int>(i + 1), 1});
        ball.verts[i + 1].edges.push_back(ViewEdge{1, 0, static_cast<int>(i + 1)});
    }
    bool ok = spec_.verifier(ball);
    ball_memo_[key] = ok;
    return ok;
}

bool TreeEngine::feasible_subtree(const NodeP& t, int sigma, int parent_sigma, int parent_deg) {
    if (t->out >= 0 && sigma != t->out) return false;
    std::uint64_t key = ((t->uid * kMaxSigma + sigma) * (kMaxSigma + 1) + parent_sigma + 1) *
                            (delta_ + 2) +
                        parent_deg;
    auto it = feas_memo_.find(key);
    if (it != feas_memo_.end()) return it->second;
    feas_memo_[key] = 0;  // cycle-safe default; trees have no cycles, but be defensive

    const int deg = static_cast<int>(t->children.size()) + 1;
    std::vector<std::vector<int>> cand(t->children.size());
    bool dead = false;
    for (size_t i = 0; i < t->children.size() && !dead; ++i) {
        for (int s = 0; s < sigma_; ++s)
            if (feasible_subtree(t->children[i], s, sigma, deg)) cand[i].push_back(s);
        if (cand[i].empty()) dead = true;
    }
    bool ok = false;
    if (!dead) {
        std::vector<std::pair<int, int>> nbrs;
        nbrs.reserve(t->children.size() + 1);
        nbrs.emplace_back(parent_sigma, parent_deg);
        std::vector<size_t> pick(t->children.size(), 0);
        while (true) {
            nbrs.resize(1);
            for (size_t i = 0; i < t->children.size(); ++i)
                nbrs.emplace_back(cand[i][pick[i]],
                                  static_cast<int>(t->children[i]->children.size()) + 1);
            if (ball_ok(sigma, deg, nbrs)) {
                ok = true;
                break;
            }
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            if (pick.empty()) break;
        }
        if (t->children.empty())
            ok = ball_ok(sigma, deg, {{parent_sigma, parent_deg}});
    }
    feas_memo_[key] = ok ? 1 : 0;
    return ok;
}

// ---------------------------------------------------------------- classes

ClassId TreeEngine::intern_class(const Fingerprint& fp, const NodeP& rep,
                                 const std::vector<QEntity>& order, int root_degree) {
    auto it = class_ids_.find(fp);
    if (it != class_ids_.end()) return it->second;
    ClassInfo info;
    info.fp = fp;
    info.rep = rep;
    info.rep_order = order;
    info.root_degree = root_degree;
    compute_goodness(info);
    ClassId id = static_cast<ClassId>(classes_.size());
    classes_.push_back(std::move(info));
    class_ids_.emplace(classes_.back().fp, id);
    return id;
}

void TreeEngine::compute_goodness(ClassInfo& info) {
    // good: some extendible boundary labeling is also consistent at the
    // pole itself (whose whole ball lies inside Q).
    const NodeP& t = info.rep;
    const int deg = static_cast<int>(t->children.size());
    for (std::uint32_t code : info.fp.ext) {
        std::vector<int> lab = decode_entities(info.rep_order, code);
        int root_sigma = -1;
        std::vector<std::pair<int, int>> nbrs;
        for (size_t i = 0; i < info.rep_order.size(); ++i) {
            const QEntity& e = info.rep_order[i];
            if (e.kind == QEntity::Root) root_sigma = lab[i];
            if (e.kind == QEntity::Child)
                nbrs.emplace_back(lab[i],
                                  static_cast<int>(t->children[e.a]->children.size()) + 1);
        }
        if (ball_ok(root_sigma, deg, nbrs)) {
            info.good = true;
            info.good_code = code;
            return;
        }
    }
    info.good = false;
}

TreeEngine::ClassEval TreeEngine::class_of(const NodeP& t) {
    auto it = class_memo_.find(t->uid);
    if (it != class_memo_.end()) return it->second;

    const int k = static_cast<int>(t->children.size());
    QStruct q;
    q.add_vertex(k, t->out, t->in, 1);
    std::vector<QEntity> entity_of_q{{QEntity::Root, 0, 0}};
    for (int i = 0; i < k; ++i) {
        q.add_vertex(static_cast<int>(t->children[i]->children.size()) + 1,
                     t->children[i]->out, t->children[i]->in, 0);
        q.add_edge(0, i + 1);
        entity_of_q.push_back({QEntity::Child, i, 0});
    }
    // raw extendible labelings by Q vertex id
    std::vector<std::vector<int>> raw;
    std::vector<int> lab(q.n, 0);
    std::function<void(int)> enumerate = [&](int v) {
        if (v == q.n) {
            for (int u = 0; u < q.n; ++u)
                if (q.out[u] >= 0 && lab[u] != q.out[u]) return;
            for (int i = 0; i < k; ++i)
                if (!feasible_subtree(t->children[i], lab[i + 1], lab[0], k)) return;
            raw.push_back(lab);
            return;
        }
        for (int s = 0; s < sigma_; ++s) {
            lab[v] = s;
            enumerate(v + 1);
        }
    };
    enumerate(0);

    auto orders = canonical_orders(q);
    Fingerprint fp;
    fp.structure = encode_structure(q);
    std::vector<int> chosen;
    fp.ext = canonical_ext(q, orders, raw, sigma_, &chosen);
    std::vector<QEntity> order;
    for (int qv : chosen) order.push_back(entity_of_q[qv]);

    ClassEval eval;
    eval.id = intern_class(fp, t, order, k);
    eval.order = order;
    class_memo_.emplace(t->uid, eval);
    return eval;
}

// ------------------------------------------------------------------ types

TypeId TreeEngine::intern_type(const Fingerprint& fp, const Bipolar& rep,
                               const std::vector<QEntity>& order) {
    auto it = type_ids_.find(fp);
    if (it != type_ids_.end()) return it->second;
    TypeInfo info;
    info.fp = fp;
    info.rep = rep;
    info.rep_order = order;
    TypeId id = static_cast<TypeId>(types_.size());
    types_.push_back(std::move(info));
    type_ids_.emplace(types_.back().fp, id);
    return id;
}

namespace {

struct ChainHelper {
    TreeEngine& eng;
    const Bipolar& h;
    int sigma;

    int core_degree(int j) const {
        int x = h.length();
        int nbrs = x == 1 ? 0 : (j == 0 || j == x - 1 ? 1 : 2);
        return static_cast<int>(h.cores[j]->children.size()) + nbrs;
    }

    // ball of interior core j with chain labels (a, b, c): some hanger
    // labeling must make it consistent, with every hanger subtree feasible
    bool valid(int j, int a, int b, int c) {
        const NodeP& core = h.cores[j];
        if (core->out >= 0 && b != core->out) return false;
        const int deg = core_degree(j);
        std::vector<std::vector<int>> cand(core->children.size());
        for (size_t i = 0; i < core->children.size(); ++i) {
            for (int s = 0; s < sigma; ++s)
                if (eng.feasible_subtree(core->children[i], s, b, deg)) cand[i].push_back(s);
            if (cand[i].empty()) return false;
        }
        std::vector<std::pair<int, int>> nbrs;
        std::vector<size_t> pick(core->children.size(), 0);
        while (true) {
            nbrs.clear();
            nbrs.emplace_back(a, core_degree(j - 1));
            nbrs.emplace_back(c, core_degree(j + 1));
            for (size_t i = 0; i < core->children.size(); ++i)
                nbrs.emplace_back(cand[i][pick[i]],
                                  static_cast<int>(core->children[i]->children.size()) + 1);
            if (eng.ball_ok(b, deg, nbrs)) return true;
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
            if (i == pick.size() || pick.empty()) break;
        }
        return false;
    }

    // pair-state relation from (sigma_0, sigma_1) to (sigma_{x-2}, sigma_{x-1})
    std::vector<std::vector<char>> chain_relation() {
        const int x = h.length();
        const int states = sigma * sigma;
        std::vector<std::vector<char>> reach(states, std::vector<char>(states, 0));
        for (int s = 0; s < states; ++s) reach[s][s] = 1;
        for (int j = 1; j <= x - 2; ++j) {
            // step j: (sigma_{j-1}, sigma_j) -> (sigma_j, sigma_{j+1})
            std::vector<std::vector<char>> step(states, std::vector<char>(states, 0));
            for (int a = 0; a < sigma; ++a)
                for (int b = 0; b < sigma; ++b)
                    for (int c = 0; c < sigma; ++c)
                        if (valid(j, a, b, c)) step[a * sigma + b][b * sigma + c] = 1;
            std::vector<std::vector<char>> next(states, std::vector<char>(states, 0));
            for (int s = 0; s < states; ++s)
                for (int m = 0; m < states; ++m)
                    if (reach[s][m])
                        for (int e = 0; e < states; ++e)
                            if (step[m][e]) next[s][e] = 1;
            reach = std::move(next);
        }
        return reach;
    }
};

}  // namespace

TreeEngine::TypeEval TreeEngine::type_of(const Bipolar& h) {
    const int x = h.length();
    if (x < 1) throw std::invalid_argument("type_of: empty bipolar tree");
    // physical Q: poles, their core neighbors, pole hangers
    std::vector<int> cores_in;
    for (int j : {0, 1, x - 2, x - 1})
        if (j >= 0 && j < x && (cores_in.empty() || cores_in.back() != j)) cores_in.push_back(j);
    std::sort(cores_in.begin(), cores_in.end());
    cores_in.erase(std::unique(cores_in.begin(), cores_in.end()), cores_in.end());

    ChainHelper helper{*this, h, sigma_};
    QStruct q;
    std::vector<QEntity> entity_of_q;
    std::map<int, int> qid_of_core;
    for (int j : cores_in) {
        int mask = (j == 0 ? 1 : 0) | (j == x - 1 ? 2 : 0);
        qid_of_core[j] = q.n;
        q.add_vertex(helper.core_degree(j), h.cores[j]->out, h.cores[j]->in, mask);
        entity_of_q.push_back({QEntity::Core, j, 0});
    }
    for (size_t i = 0; i + 1 < cores_in.size(); ++i)
        if (cores_in[i + 1] == cores_in[i] + 1)
            q.add_edge(qid_of_core[cores_in[i]], qid_of_core[cores_in[i + 1]]);
    for (int pole : {0, x - 1}) {
        if (pole == 0 && x == 1 && false) continue;
        if (pole != 0 && pole == 0) continue;
        const NodeP& core = h.cores[pole];
        for (size_t i = 0; i < core->children.size(); ++i) {
            q.add_vertex(static_cast<int>(core->children[i]->children.size()) + 1,
                         core->children[i]->out, core->children[i]->in, 0);
            q.add_edge(qid_of_core[pole], q.n - 1);
            entity_of_q.push_back({QEntity::Hang, pole, static_cast<int>(i)});
        }
        if (x == 1) break;  // s == t: hangers added once
    }

    auto reach = helper.chain_relation();
    // raw extendible labelings
    std::vector<std::vector<int>> raw;
    std::vector<int> lab(q.n, 0);
    std::function<void(int)> enumerate = [&](int v) {
        if (v == q.n) {
            for (int u = 0; u < q.n; ++u)
                if (q.out[u] >= 0 && lab[u] != q.out[u]) return;
            // pole hangers feasible
            for (int i = 0; i < q.n; ++i) {
                const QEntity& e = entity_of_q[i];
                if (e.kind != QEntity::Hang) continue;
                const NodeP& hang = h.cores[e.a]->children[e.b];
                if (!feasible_subtree(hang, lab[i], lab[qid_of_core.at(e.a)],
                                      helper.core_degree(e.a)))
                    return;
            }
            if (x >= 2) {
                int s0 = lab[qid_of_core.at(0)], s1 = lab[qid_of_core.at(1)];
                int e0 = lab[qid_of_core.at(x - 2)], e1 = lab[qid_of_core.at(x - 1)];
                if (!reach[s0 * sigma_ + s1][e0 * sigma_ + e1]) return;
            }
            raw.push_back(lab);
            return;
        }
        for (int s = 0; s < sigma_; ++s) {
            lab[v] = s;
            enumerate(v + 1);
        }
    };
    enumerate(0);

    auto orders = canonical_orders(q);
    Fingerprint fp;
    fp.structure = encode_structure(q);
    std::vector<int> chosen;
    fp.ext = canonical_ext(q, orders, raw, sigma_, &chosen);
    std::vector<QEntity> order;
    for (int qv : chosen) order.push_back(entity_of_q[qv]);

    TypeEval eval;
    eval.id = intern_type(fp, h, order);
    eval.order = order;
    return eval;
}

TypeId TreeEngine::type_single(ClassId c) {
    auto it = single_memo_.find(c);
    if (it != single_memo_.end()) return it->second;
    Bipolar b;
    b.cores.push_back(classes_[c].rep);
    TypeId t = type_of(b).id;
    single_memo_[c] = t;
    return t;
}

TypeId TreeEngine::delta_step(TypeId t, ClassId c) {
    auto key = std::make_pair(t, c);
    auto it = delta_memo_.find(key);
    if (it != delta_memo_.end()) return it->second;
    Bipolar b = types_[t].rep;
    b.cores.push_back(classes_[c].rep);
    TypeId out = type_of(b).id;
    delta_memo_[key] = out;
    return out;
}

TypeId TreeEngine::type_walk(const std::vector<ClassId>& word) {
    if (word.empty()) throw std::invalid_argument("type_walk: empty word");
    TypeId t = type_single(word[0]);
    for (size_t i = 1; i < word.size(); ++i) t = delta_step(t, word[i]);
    return t;
}

// ------------------------------------------------------------ assignments

std::vector<int> TreeEngine::decode_entities(const std::vector<QEntity>& order,
                                             std::uint32_t code) const {
    std::vector<int> lab(order.size());
    std::uint64_t c = code;
    for (size_t i = 0; i < order.size(); ++i) {
        lab[i] = static_cast<int>(c % sigma_);
        c /= sigma_;
    }
    return lab;
}

std::uint32_t TreeEngine::code_entities(const std::vector<QEntity>& order,
                                        const std::function<int(const QEntity&)>& label_of) const {
    std::uint64_t code = 0, mult = 1;
    for (const QEntity& e : order) {
        int s = label_of(e);
        if (s < 0 || s >= sigma_) throw std::invalid_argument("code_entities: label out of range");
        code += mult * static_cast<std::uint64_t>(s);
        mult *= sigma_;
    }
    return static_cast<std::uint32_t>(code);
}

// ------------------------------------------------------------- completion

namespace {

// recursive least completion of a subtree whose own label is fixed
void complete_sub(TreeEngine& eng, const NodeP& t, int sigma, int parent_sigma, int parent_deg,
                  std::vector<int>& out, long long off) {
    out[off] = sigma;
    const int deg = static_cast<int>(t->children.size()) + 1;
    if (t->children.empty()) return;
    std::vector<std::vector<int>> cand(t->children.size());
    for (size_t i = 0; i < t->children.size(); ++i) {
        for (int s = 0; s < eng.sigma(); ++s)
            if (eng.feasible_subtree(t->children[i], s, sigma, deg)) cand[i].push_back(s);
        if (cand[i].empty()) throw std::logic_error("complete_sub: infeasible subtree");
    }
    std::vector<size_t> pick(t->children.size(), 0);
    while (true) {
        std::vector<std::pair<int, int>> nbrs{{parent_sigma, parent_deg}};
        for (size_t i = 0; i < t->children.size(); ++i)
            nbrs.emplace_back(cand[i][pick[i]],
                              static_cast<int>(t->children[i]->children.size()) + 1);
        if (eng.ball_ok(sigma, deg, nbrs)) break;
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
        if (i == pick.size()) throw std::logic_error("complete_sub: no consistent tuple");
    }
    long long child_off = off + 1;
    for (size_t i = 0; i < t->children.size(); ++i) {
        complete_sub(eng, t->children[i], cand[i][pick[i]], sigma, deg, out, child_off);
        child_off += t->children[i]->size;
    }
}

}  // namespace

std::vector<int> TreeEngine::complete_unipolar(const NodeP& t, std::uint32_t code,
                                               const std::vector<QEntity>& order) {
    std::vector<int> lab = decode_entities(order, code);
    int root_sigma = -1;
    std::vector<int> child_sigma(t->children.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i].kind == QEntity::Root) root_sigma = lab[i];
        if (order[i].kind == QEntity::Child) child_sigma[order[i].a] = lab[i];
    }
    const int deg = static_cast<int>(t->children.size());
    std::vector<int> out(t->size, -1);
    out[0] = root_sigma;
    long long off = 1;
    for (size_t i = 0; i < t->children.size(); ++i) {
        complete_sub(*this, t->children[i], child_sigma[i], root_sigma, deg, out, off);
        off += t->children[i]->size;
    }
    return out;
}

std::vector<std::vector<int>> TreeEngine::complete_bipolar(const Bipolar& h, std::uint32_t code,
                                                           const std::vector<QEntity>& order) {
    const int x = h.length();
    ChainHelper helper{*this, h, sigma_};
    std::vector<int> lab = decode_entities(order, code);
    std::vector<int> forced(x, -1);
    std::map<std::pair<int, int>, int> hang_forced;  // (core, hang index) -> label
    for (size_t i = 0; i < order.size(); ++i) {
        const QEntity& e = order[i];
        if (e.kind == QEntity::Core) forced[e.a] = lab[i];
        if (e.kind == QEntity::Hang) hang_forced[{e.a, e.b}] = lab[i];
    }
    // chain labels
    std::vector<int> sig(x, -1);
    for (int j = 0; j < x; ++j) sig[j] = forced[j];
    if (x >= 5) {
        // suffix feasibility over pair states, then greedy forward choice
        const int states = sigma_ * sigma_;
        std::vector<std::vector<char>> suffix(x, std::vector<char>(states, 0));
        suffix[x - 1][forced[x - 2] * sigma_ + forced[x - 1]] = 1;
        for (int j = x - 2; j >= 2; --j) {
            // state (sigma_{j-1}, sigma_j) before checking ball j
            for (int a = 0; a < sigma_; ++a)
                for (int b = 0; b < sigma_; ++b) {
                    bool any = false;
                    for (int c = 0; c < sigma_ && !any; ++c)
                        if (suffix[j + 1][b * sigma_ + c] && helper.valid(j, a, b, c)) any = true;
                    suffix[j][a * sigma_ + b] = any;
                }
        }
        for (int j = 2; j <= x - 3; ++j) {
            int a = sig[j - 2], b = sig[j - 1];
            int choice = -1;
            for (int c = 0; c < sigma_ && choice < 0; ++c)
                if (helper.valid(j - 1, a, b, c) && suffix[j + 1][b * sigma_ + c]) choice = c;
            if (choice < 0) throw std::logic_error("complete_bipolar: chain stuck");
            sig[j] = choice;
        }
        // the two checks that straddle the forced tail
        if (!helper.valid(x - 3, sig[x - 4], sig[x - 3], sig[x - 2]))
            throw std::logic_error("complete_bipolar: tail check failed");
        if (!helper.valid(x - 2, sig[x - 3], sig[x - 2], sig[x - 1]))
            throw std::logic_error("complete_bipolar: tail check failed");
    } else {
        for (int j = 1; j <= x - 2; ++j)
            if (!helper.valid(j, sig[j - 1], sig[j], sig[j + 1]))
                throw std::logic_error("complete_bipolar: forced chain inconsistent");
    }

    // per-core completion
    std::vector<std::vector<int>> out(x);
    for (int j = 0; j < x; ++j) {
        const NodeP& core = h.cores[j];
        const int deg = helper.core_degree(j);
        out[j].assign(core->size, -1);
        out[j][0] = sig[j];
        // choose hanger labels
        std::vector<int> hang_sigma(core->children.size(), -1);
        bool pole = (j == 0 || j == x - 1);
        if (pole) {
            for (size_t i = 0; i < core->children.size(); ++i)
                hang_sigma[i] = hang_forced.at({j, static_cast<int>(i)});
        } else {
            std::vector<std::vector<int>> cand(core->children.size());
            for (size_t i = 0; i < core->children.size(); ++i) {
                for (int s = 0; s < sigma_; ++s)
                    if (feasible_subtree(core->children[i], s, sig[j], deg)) cand[i].push_back(s);
                if (cand[i].empty()) throw std::logic_error("complete_bipolar: hanger infeasible");
            }
            std::vector<size_t> pick(core->children.size(), 0);
            bool interior_ball = (x >= 3);
            while (true) {
                std::vector<std::pair<int, int>> nbrs;
                nbrs.emplace_back(sig[j - 1], helper.core_degree(j - 1));
                nbrs.emplace_back(sig[j + 1], helper.core_degree(j + 1));
                for (size_t i = 0; i < core->children.size(); ++i)
                    nbrs.emplace_back(cand[i][pick[i]],
                                      static_cast<int>(core->children[i]->children.size()) + 1);
                if (!interior_ball || ball_ok(sig[j], deg, nbrs)) break;
                size_t i = 0;
                while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
                if (i == pick.size()) throw std::logic_error("complete_bipolar: no hanger tuple");
            }
            for (size_t i = 0; i < core->children.size(); ++i) hang_sigma[i] = cand[i][pick[i]];
        }
        long long off = 1;
        for (size_t i = 0; i < core->children.size(); ++i) {
            complete_sub(*this, core->children[i], hang_sigma[i], sig[j], deg, out[j], off);
            off += core->children[i]->size;
        }
    }
    return out;
}

std::vector<int> TreeEngine::legal_labeling(const NodeP& t) {
    ClassEval eval = class_of(t);
    const ClassInfo& info = cls(eval.id);
    if (!info.good)
        throw std::runtime_error("legal_labeling: class " + std::to_string(eval.id) +
                                 " admits no legal labeling");
    return complete_unipolar(t, static_cast<std::uint32_t>(info.good_code), eval.order);
}

}  // namespace local::tree
