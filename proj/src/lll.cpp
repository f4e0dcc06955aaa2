#include "local/lll.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace local {

void BadEventSystem::validate() const {
    std::set<long long> ids;
    for (const LllEvent& e : events) {
        if (!ids.insert(e.id).second) throw std::invalid_argument("event ids not distinct");
        for (int x : e.scope)
            if (x < 0 || x >= static_cast<int>(variables.size()))
                throw std::invalid_argument("event scope out of range");
    }
}

DependencyGraph DependencyGraph::build(const BadEventSystem& sys, double p) {
    DependencyGraph d;
    d.p = p;
    const int m = static_cast<int>(sys.events.size());
    d.adj.assign(m, {});
    std::vector<std::vector<int>> by_var(sys.variables.size());
    for (int e = 0; e < m; ++e)
        for (int x : sys.events[e].scope) by_var[x].push_back(e);
    std::vector<int> stamp(m, -1);
    for (int e = 0; e < m; ++e) {
        for (int x : sys.events[e].scope)
            for (int o : by_var[x])
                if (o != e && stamp[o] != e) {
                    stamp[o] = e;
                    d.adj[e].push_back(o);
                }
        std::sort(d.adj[e].begin(), d.adj[e].end());
        d.max_degree = std::max(d.max_degree, static_cast<int>(d.adj[e].size()));
    }
    return d;
}

bool check_criterion(double p, double d, double c) {
    if (p <= 0) return true;
    if (d < 1) d = 1;
    return std::log(p) + c * std::log(d) < 0;
}

namespace {

std::uint64_t draw_value(const LllVariable& var, std::uint64_t seed, int var_index,
                         long long iteration) {
    std::uint64_t raw = mix64(seed, 0x5e11aULL, static_cast<std::uint64_t>(var_index),
                              static_cast<std::uint64_t>(iteration));
    return var.range ? raw % var.range : raw;
}

}  // namespace

std::string ResampleResult::csv_row(int n, int delta, double p, int d, double c) const {
    std::ostringstream out;
    out << n << ',' << delta << ',' << p << ',' << d << ',' << c << ','
        << (check_criterion(p, d, c) ? "ok" : "violated") << ',' << iterations << ','
        << (converged ? "converged" : "cap-exceeded");
    return out.str();
}

ResampleResult mt_resample(const BadEventSystem& sys, std::uint64_t seed, long long cap,
                           const std::function<void(const ResampleTrace&)>& trace) {
    sys.validate();
    const int m = static_cast<int>(sys.events.size());
    ResampleResult res;
    if (cap <= 0)
        cap = 100 * static_cast<long long>(std::ceil(std::log2(std::max(2, m) + 0.0)) + 1);
    res.cap = cap;

    res.assignment.resize(sys.variables.size());
    for (size_t x = 0; x < sys.variables.size(); ++x) {
        const LllVariable& var = sys.variables[x];
        res.assignment[x] = var.kind == LllVariable::Kind::Counter
                                ? 0
                                : draw_value(var, seed, static_cast<int>(x), 0);
    }
    DependencyGraph dep = DependencyGraph::build(sys, 0);

    std::vector<char> occurring(m, 0);
    while (true) {
        bool any = false;
        for (int e = 0; e < m; ++e) {
            occurring[e] = sys.events[e].occurs(res.assignment) ? 1 : 0;
            any = any || occurring[e];
        }
        if (!any) {
            res.converged = true;
            return res;
        }
        if (res.iterations >= cap) return res;  // explicit nontermination report
        ++res.iterations;
        // Locally minimal IDs among occurring, conflicting events.
        ResampleTrace tr;
        std::set<int> vars;
        for (int e = 0; e < m; ++e) {
            if (!occurring[e]) continue;
            if (trace) tr.occurring.push_back(e);
            bool minimal = true;
            for (int o : dep.adj[e])
                if (occurring[o] && sys.events[o].id < sys.events[e].id) minimal = false;
            if (!minimal) continue;
            if (trace) tr.selected.push_back(e);
            for (int x : sys.events[e].scope) vars.insert(x);
        }
        std::vector<std::uint64_t> before;
        if (trace) before = res.assignment;
        for (int x : vars) {
            const LllVariable& var = sys.variables[x];
            res.assignment[x] = var.kind == LllVariable::Kind::Counter
                                    ? res.assignment[x] + 1
                                    : draw_value(var, seed, x, res.iterations);
        }
        if (trace) {
            tr.resampled_vars.assign(vars.begin(), vars.end());
            tr.before = &before;
            tr.after = &res.assignment;
            trace(tr);
        }
    }
}

double estimate_event_probability(const BadEventSystem& sys, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("estimate_event_probability: samples >= 1");
    std::vector<std::uint64_t> assignment(sys.variables.size());
    std::vector<long long> hits(sys.events.size(), 0);
    for (int s = 0; s < samples; ++s) {
        for (size_t x = 0; x < sys.variables.size(); ++x)
            assignment[x] = draw_value(sys.variables[x], seed ^ 0xe571ULL, static_cast<int>(x), s);
        for (size_t e = 0; e < sys.events.size(); ++e)
            if (sys.events[e].occurs(assignment)) ++hits[e];
    }
    long long worst = 0;
    for (long long h : hits) worst = std::max(worst, h);
    return 2.0 * std::max<double>(worst, 1.0) / samples;
}

SinklessSystem sinkless_system(const PortGraph& g) {
    SinklessSystem s;
    std::vector<std::vector<int>> edge_index(g.n());
    for (int v = 0; v < g.n(); ++v) edge_index[v].assign(g.degree(v), -1);
    for (int v = 0; v < g.n(); ++v)
        for (int p = 1; p <= g.degree(v); ++p) {
            int u = g.neighbor(v, p);
            if (u < v) continue;
            int idx = static_cast<int>(s.edge_list.size());
            s.edge_list.emplace_back(v, u);
            edge_index[v][p - 1] = idx;
            edge_index[u][g.reverse_port(v, p) - 1] = idx;
        }
    s.system.variables.assign(s.edge_list.size(), LllVariable{LllVariable::Kind::Uniform, 2});
    int min_deg = g.n() ? g.degree(0) : 0;
    for (int v = 0; v < g.n(); ++v) min_deg = std::min(min_deg, g.degree(v));
    s.p_analytic = std::pow(0.5, min_deg);
    for (int v = 0; v < g.n(); ++v) {
        LllEvent ev;
        ev.id = v;
        ev.scope = edge_index[v];
        std::vector<char> toward_me(g.degree(v));  // value that points at v
        for (int p = 1; p <= g.degree(v); ++p)
            toward_me[p - 1] = g.neighbor(v, p) < v ? 1 : 0;  // bit 1 = min->max
        ev.occurs = [scope = ev.scope, toward_me](const std::vector<std::uint64_t>& a) {
            for (size_t i = 0; i < scope.size(); ++i)
                if (a[scope[i]] != static_cast<std::uint64_t>(toward_me[i])) return false;
            return true;  // every edge points inward: sink
        };
        s.system.events.push_back(std::move(ev));
    }
    return s;
}

Labeling SinklessSystem::to_labeling(const PortGraph& g,
                                     const std::vector<std::uint64_t>& assignment) const {
    std::vector<std::vector<int>> edge_index(g.n());
    for (int v = 0; v < g.n(); ++v) edge_index[v].assign(g.degree(v), -1);
    for (size_t idx = 0; idx < edge_list.size(); ++idx) {
        auto [v, u] = edge_list[idx];
        edge_index[v][g.port_to(v, u) - 1] = static_cast<int>(idx);
        edge_index[u][g.port_to(u, v) - 1] = static_cast<int>(idx);
    }
    Labeling L(g.n());
    for (int v = 0; v < g.n(); ++v) {
        unsigned mask = 0;
        for (int p = 1; p <= g.degree(v); ++p) {
            int idx = edge_index[v][p - 1];
            bool out_of_me = (g.neighbor(v, p) > v) == (assignment[idx] == 1);
            if (out_of_me) mask |= 1u << (p - 1);
        }
        L[v] = static_cast<int>(mask);
    }
    return L;
}

AlgorithmEventSystem events_from_algorithm(const PortGraph& g, const LclSpec& spec,
                                           const ViewAlgorithm& alg, double n_star,
                                           std::uint64_t seed, double p_override) {
    AlgorithmEventSystem out;
    out.r = spec.radius;
    out.t_star = alg.round_bound(n_star, g.delta());
    out.n_star = n_star;

    const int reach = static_cast<int>(out.r + out.t_star);
    out.system.variables.assign(g.n(), LllVariable{LllVariable::Kind::Counter, 0});

    // Label of one vertex under the current assignment.
    auto label_of = [&g, &alg, n_star, seed, t = out.t_star](
                        int u, const std::vector<std::uint64_t>& a) {
        ViewContext ctx;
        ctx.attach_bits = true;
        ctx.seed = seed;
        ctx.advertised_n = n_star;
        ctx.epochs = &a;
        View view = make_view(g, u, static_cast<int>(std::min<long long>(t, g.n())), ctx);
        return alg.decide(view);
    };

    for (int v = 0; v < g.n(); ++v) {
        LllEvent ev;
        ev.id = v;
        auto dist = bfs_distances(g, v, reach);
        std::vector<int> ball_r;
        for (int u = 0; u < g.n(); ++u) {
            if (dist[u] >= 0 && dist[u] <= reach) ev.scope.push_back(u);
            if (dist[u] >= 0 && dist[u] <= out.r) ball_r.push_back(u);
        }
        ev.occurs = [&g, &spec, label_of, v, ball_r](const std::vector<std::uint64_t>& a) {
            Labeling L(g.n());
            for (int u : ball_r) L[u] = label_of(u, a);
            return check_local(spec, g, L, v) != LocalCheck::Ok;
        };
        out.system.events.push_back(std::move(ev));
    }

    double p = p_override > 0 ? p_override : 1.0 / n_star;
    out.dep = DependencyGraph::build(out.system, p);
    out.dep_degree_bound = 2.0 * reach * std::log(std::max(2, g.delta()));
    if (out.dep.max_degree > 0 &&
        std::log(static_cast<double>(out.dep.max_degree)) > out.dep_degree_bound + 1e-9)
        throw std::logic_error("events_from_algorithm: dependency degree exceeds delta^(2(r+t*))");

    out.labels_under = [&g, &alg, &spec, n_star, seed](const std::vector<std::uint64_t>& a) {
        ViewContext ctx;
        ctx.attach_bits = true;
        ctx.seed = seed;
        ctx.advertised_n = n_star;
        ctx.epochs = &a;
        Labeling L(g.n());
        if (alg.batch) {
            L.lab = alg.batch(g, ctx);
        } else {
            long long t = alg.round_bound(n_star, g.delta());
            for (int u = 0; u < g.n(); ++u)
                L[u] = alg.decide(make_view(g, u, static_cast<int>(std::min<long long>(t, g.n())), ctx));
        }
        return L;
    };
    return out;
}

std::optional<SpeedupConfig> find_speedup_config(const ViewAlgorithm& alg, const LclSpec& spec,
                                                 int delta, double c) {
    SpeedupConfig cfg;
    cfg.c = c;
    cfg.r = spec.radius;
    double log_delta = std::log(std::max(2, delta));
    for (int j = 1; j <= 1000; ++j) {
        double n_star = std::ldexp(1.0, j);  // 2^j
        long long t = alg.round_bound(n_star, delta);
        double bound = (1.0 / (2.0 * c)) * (j * std::log(2.0) / log_delta) - cfg.r;
        if (static_cast<double>(t) < bound) {
            cfg.t_star = t;
            cfg.n_star = n_star;
            return cfg;
        }
    }
    return std::nullopt;
}

WrapOutcome speedup_wrap_run(const PortGraph& g, const LclSpec& spec, const ViewAlgorithm& alg,
                             double c, std::uint64_t seed) {
    auto cfg = find_speedup_config(alg, spec, g.delta(), c);
    if (!cfg) throw std::runtime_error("speedup_wrap: no advertised size satisfies the criterion");
    WrapOutcome out;
    out.config = *cfg;

    AlgorithmEventSystem sys = events_from_algorithm(g, spec, alg, cfg->n_star, seed);
    ResampleResult res = mt_resample(sys.system, seed);
    if (!res.converged) throw std::runtime_error("speedup_wrap: resampling hit the iteration cap");
    out.iterations = res.iterations;
    out.simulated_rounds =
        cfg->t_star + 2 * (cfg->r + cfg->t_star) * res.iterations + cfg->r;

    Labeling L = sys.labels_under(res.assignment);
    out.report.graph_name = "g";
    out.report.spec_name = spec.name;
    out.report.alg_name = alg.name + "+lll";
    out.report.n = g.n();
    out.report.delta = g.delta();
    out.report.advertised_n = cfg->n_star;
    out.report.seed = seed;
    out.report.rounds_used = out.simulated_rounds;
    out.report.labeling = L;
    out.report.outcome = check_global(spec, g, L);
    out.report.failed.assign(g.n(), 0);
    int nfail = 0;
    for (int v = 0; v < g.n(); ++v)
        if (check_local(spec, g, L, v) != LocalCheck::Ok) {
            out.report.failed[v] = 1;
            ++nfail;
        }
    out.report.fail_local_max = g.n() ? static_cast<double>(nfail) / g.n() : 0;
    return out;
}

}  // namespace local
