#include "local/lcl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace local {

bool Labeling::complete() const {
    return std::none_of(lab.begin(), lab.end(), [](int x) { return x < 0; });
}

int LclSpec::out_index(const std::string& token) const {
    for (size_t i = 0; i < sigma_out.size(); ++i)
        if (sigma_out[i] == token) return static_cast<int>(i);
    return -1;
}

LocalCheck check_local(const LclSpec& spec, const PortGraph& g, const Labeling& L, int v) {
    ViewContext ctx;
    ctx.outputs = &L.lab;
    View ball = make_view(g, v, spec.radius, ctx);
    for (const ViewVertex& vv : ball.verts)
        if (vv.out < 0) return LocalCheck::Incomplete;
    return spec.verifier(ball) ? LocalCheck::Ok : LocalCheck::Violated;
}

GlobalCheck check_global(const LclSpec& spec, const PortGraph& g, const Labeling& L) {
    if (L.n() != g.n()) throw std::invalid_argument("check_global: labeling size mismatch");
    for (int v = 0; v < g.n(); ++v) {
        LocalCheck c = check_local(spec, g, L, v);
        if (c == LocalCheck::Incomplete) return {GlobalCheck::Kind::Incomplete, v};
        if (c == LocalCheck::Violated) return {GlobalCheck::Kind::Illegal, v};
    }
    return {GlobalCheck::Kind::Legal, -1};
}

std::string GlobalCheck::str() const {
    switch (kind) {
        case Kind::Legal: return "legal";
        case Kind::Illegal: return "illegal(" + std::to_string(witness) + ")";
        default: return "incomplete(" + std::to_string(witness) + ")";
    }
}

std::string labeling_to_text(const LclSpec& spec, const Labeling& L) {
    std::ostringstream out;
    for (int v = 0; v < L.n(); ++v)
        out << v << ' ' << (L[v] < 0 ? "_" : spec.out_token(L[v])) << '\n';
    return out.str();
}

Labeling labeling_from_text(const LclSpec& spec, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> entries;
    int v;
    std::string tok;
    int maxv = -1;
    while (in >> v >> tok) {
        int idx = tok == "_" ? -1 : spec.out_index(tok);
        if (tok != "_" && idx < 0) throw std::runtime_error("labeling text: unknown label " + tok);
        entries.emplace_back(v, idx);
        maxv = std::max(maxv, v);
    }
    Labeling L(maxv + 1);
    for (auto [u, idx] : entries) L[u] = idx;
    return L;
}

// ----------------------------------------------------------------------
// Catalog

LclSpec make_all_sigma() {
    LclSpec s;
    s.name = "all-sigma";
    s.radius = 1;
    s.sigma_out = {"sigma"};
    s.verifier = [](const View&) { return true; };
    return s;
}

LclSpec make_proper_coloring(int q) {
    if (q < 1) throw std::invalid_argument("proper-coloring: q >= 1");
    LclSpec s;
    s.name = "proper-coloring:" + std::to_string(q);
    s.radius = 1;
    for (int i = 1; i <= q; ++i) s.sigma_out.push_back(std::to_string(i));
    s.verifier = [](const View& ball) {
        const ViewVertex& c = ball.verts[0];
        for (const ViewEdge& e : c.edges)
            if (ball.verts[e.to].out == c.out) return false;
        return true;
    };
    return s;
}

LclSpec make_two_coloring() {
    LclSpec s = make_proper_coloring(2);
    s.name = "two-coloring";
    s.sigma_out = {"A", "B"};
    return s;
}

std::vector<int> hier_levels(const PortGraph& g, int k) {
    std::vector<int> level(g.n(), 0);
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (int j = 1; j <= k; ++j) {
        std::vector<int> picked;
        for (int v = 0; v < g.n(); ++v)
            if (level[v] == 0 && deg[v] <= 2) picked.push_back(v);
        for (int v : picked) level[v] = j;
        for (int v : picked)
            for (const HalfEdge& he : g.half_edges(v))
                if (level[he.to] == 0) --deg[he.to];
    }
    for (int v = 0; v < g.n(); ++v)
        if (level[v] == 0) level[v] = k + 1;
    return level;
}

namespace {

// Levels computable inside a radius-R ball: membership in V_j is decided
// for vertices with dist + j <= R; 0 means "undetermined, level >= what
// was ruled out" (for a direct neighbor of the center at R = k this is
// exactly "level >= k").
std::vector<int> view_levels(const View& ball, int k) {
    const int m = static_cast<int>(ball.verts.size());
    std::vector<int> lvl(m, 0);
    std::vector<int> deg(m);
    for (int i = 0; i < m; ++i) deg[i] = ball.verts[i].degree;
    for (int j = 1; j <= k; ++j) {
        std::vector<int> picked;
        for (int i = 0; i < m; ++i)
            if (lvl[i] == 0 && ball.verts[i].dist + j <= ball.radius && deg[i] <= 2)
                picked.push_back(i);
        for (int i : picked) lvl[i] = j;
        for (int i : picked)
            for (const ViewEdge& e : ball.verts[i].edges)
                if (lvl[e.to] == 0) --deg[e.to];
    }
    for (int i = 0; i < m; ++i)
        if (lvl[i] == 0 && ball.verts[i].dist + k <= ball.radius) lvl[i] = k + 1;
    return lvl;
}

}  // namespace

LclSpec make_hier(int k) {
    if (k < 1) throw std::invalid_argument("hier: k >= 1");
    LclSpec s;
    s.name = "hier:" + std::to_string(k);
    s.radius = k;
    s.sigma_out = {"venus", "mars", "mercury", "saturn"};
    s.verifier = [k](const View& ball) {
        std::vector<int> lvl = view_levels(ball, k);
        const ViewVertex& c = ball.verts[0];
        const int lv = lvl[0];
        const int lab = c.out;
        if (lv == k + 1) return lab == kSaturn;
        // Exemption: a level-i vertex (i >= 2) is saturn iff some neighbor
        // at a strictly lower level carries venus, mars, or saturn.
        bool exempt = false;
        if (lv >= 2)
            for (const ViewEdge& e : c.edges) {
                int ul = lvl[e.to];  // 0 = "at least k", never below lv
                int uo = ball.verts[e.to].out;
                if (ul != 0 && ul < lv && (uo == kVenus || uo == kMars || uo == kSaturn))
                    exempt = true;
            }
        if (lab == kSaturn) return exempt;
        if (exempt) return false;
        // Same-level neighbors.  At the top level "level >= k" stands in
        // for "level == k": level-(k+1) neighbors must carry saturn, which
        // their own check enforces, so the two readings accept the same
        // global labelings.
        std::vector<int> same;
        for (const ViewEdge& e : c.edges) {
            int ul = lvl[e.to];
            if ((lv < k && ul == lv) || (lv == k && ul == 0)) same.push_back(e.to);
        }
        if (lab == kVenus || lab == kMars) {
            int clash = lab == kVenus ? kVenus : kMars;
            for (int u : same) {
                int uo = ball.verts[u].out;
                if (uo == clash || uo == kMercury) return false;
            }
        }
        if (lv == k) {
            int nonexempt = 0;
            for (int u : same)
                if (ball.verts[u].out != kSaturn) ++nonexempt;
            if (nonexempt <= 1 && lab != kVenus && lab != kMars) return false;
        }
        return true;
    };
    return s;
}

namespace {

// Direction helpers for cycle orientations; a vertex's label names the port
// it points along.
int pointee(const View& ball, int local) {
    const ViewVertex& vv = ball.verts[local];
    int port = vv.out + 1;  // labels are 0-based indices of tokens "1","2",..
    for (const ViewEdge& e : vv.edges)
        if (e.port == port) return e.to;
    return -1;  // points out of the view
}

}  // namespace

LclSpec make_ell_orientation(int ell) {
    if (ell < 1) throw std::invalid_argument("ell-orientation: ell >= 1");
    LclSpec s;
    s.name = "ell-orientation:" + std::to_string(ell);
    s.radius = ell + 1;
    s.sigma_out = {"1", "2"};
    s.verifier = [ell](const View& ball) {
        const ViewVertex& c = ball.verts[0];
        if (c.degree != 2) return false;  // defined on cycles
        for (const ViewVertex& vv : ball.verts)
            if (vv.out < 0 || vv.out >= vv.degree) return false;
        // Walk the run of same-direction vertices through the center.
        // Forward = the direction the center points.
        int run = 1;
        bool wrapped = false;
        int fwd = pointee(ball, 0);
        {
            int prev = 0, cur = fwd;
            while (cur >= 0 && cur != 0) {
                // same direction iff cur does not point back at prev
                if (pointee(ball, cur) == prev) break;
                ++run;
                int nxt = -1;
                for (const ViewEdge& e : ball.verts[cur].edges)
                    if (e.to != prev) nxt = e.to;
                prev = cur;
                cur = nxt;
            }
            if (cur == 0) wrapped = true;
        }
        if (!wrapped) {
            // Backward: predecessor must point at its successor to extend.
            int prev = 0;
            int cur = -1;
            for (const ViewEdge& e : c.edges)
                if (e.to != fwd) cur = e.to;
            while (cur >= 0 && cur != 0) {
                if (pointee(ball, cur) != prev) break;
                ++run;
                int nxt = -1;
                for (const ViewEdge& e : ball.verts[cur].edges)
                    if (e.to != prev) nxt = e.to;
                prev = cur;
                cur = nxt;
            }
        }
        return wrapped || run >= ell;
    };
    return s;
}

LclSpec make_sinkless_orientation(int delta) {
    if (delta < 1 || delta > 20)
        throw std::invalid_argument("sinkless-orientation: need 1 <= delta <= 20");
    LclSpec s;
    s.name = "sinkless-orientation:" + std::to_string(delta);
    s.radius = 1;
    s.sigma_out.reserve(1u << delta);
    for (int m = 0; m < (1 << delta); ++m) s.sigma_out.push_back(std::to_string(m));
    s.verifier = [](const View& ball) {
        const ViewVertex& c = ball.verts[0];
        unsigned mask = static_cast<unsigned>(c.out);
        if (mask >= (1u << c.degree)) return false;
        if (mask == 0) return false;  // sink
        for (const ViewEdge& e : c.edges) {
            unsigned other = static_cast<unsigned>(ball.verts[e.to].out);
            bool mine_out = (mask >> (e.port - 1)) & 1;
            bool theirs_out = (other >> (e.rev_port - 1)) & 1;
            if (mine_out == theirs_out) return false;  // inconsistent edge orientation
        }
        return true;
    };
    return s;
}

LclSpec builtin(const std::string& name, int delta_hint) {
    std::string base = name;
    int param = -1;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        base = name.substr(0, colon);
        param = std::stoi(name.substr(colon + 1));
    }
    if (base == "all-sigma") return make_all_sigma();
    if (base == "proper-coloring") return make_proper_coloring(param < 0 ? 3 : param);
    if (base == "two-coloring") return make_two_coloring();
    if (base == "hier") return make_hier(param < 0 ? 1 : param);
    if (base == "ell-orientation") return make_ell_orientation(param < 0 ? 2 : param);
    if (base == "sinkless-orientation")
        return make_sinkless_orientation(param < 0 ? delta_hint : param);
    throw std::invalid_argument("unknown LCL spec: " + name);
}

}  // namespace local
