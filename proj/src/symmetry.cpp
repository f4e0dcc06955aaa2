#include "local/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace local {

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

long long next_prime(long long q) {
    while (!is_prime(q)) ++q;
    return q;
}

// One polynomial reduction step: colors in [0, m) become colors in
// [0, q^2) with q ~ max(delta*d, m^{1/(d+1)}).  Returns the new color
// count, or m if no parameter choice shrinks the palette.
long long poly_step(const std::vector<std::vector<int>>& adj, std::vector<long long>& colors,
                    long long m, int delta) {
    long long best_q = -1;
    int best_d = 0;
    for (int d = 1; d <= 62; ++d) {
        // need q^(d+1) >= m and q > delta*d
        long long lo = static_cast<long long>(std::ceil(std::pow(static_cast<double>(m),
                                                                 1.0 / (d + 1)))) -
                       2;
        lo = std::max<long long>(lo, delta * static_cast<long long>(d) + 1);
        long long q = next_prime(std::max<long long>(2, lo));
        auto pow_ge = [&](long long base, int e, long long target) {
            long long acc = 1;
            for (int i = 0; i < e; ++i) {
                acc *= base;
                if (acc >= target) return true;
                if (acc > target / std::max<long long>(base, 1) + 1 && i + 1 < e) return true;
            }
            return acc >= target;
        };
        while (!pow_ge(q, d + 1, m)) q = next_prime(q + 1);
        if (q * q < m && (best_q < 0 || q * q < best_q * best_q)) {
            best_q = q;
            best_d = d;
        }
        if (static_cast<double>(delta) * d > std::sqrt(static_cast<double>(m))) break;
    }
    if (best_q < 0) return m;
    const long long q = best_q;
    const int d = best_d;
    // p_c(x) = sum of base-q digits of c times x^i; pick x with
    // p_me(x) != p_other(x) for every neighboring color.
    auto eval = [&](long long c, long long x) {
        long long val = 0, xp = 1;
        for (int i = 0; i <= d; ++i) {
            val = (val + (c % q) * xp) % q;
            c /= q;
            xp = (xp * x) % q;
        }
        return val;
    };
    std::vector<long long> next(colors.size());
    for (size_t v = 0; v < adj.size(); ++v) {
        long long chosen = -1;
        for (long long x = 0; x < q && chosen < 0; ++x) {
            bool ok = true;
            for (int u : adj[v]) {
                if (colors[u] == colors[v]) continue;  // distinct by invariant
                if (eval(colors[u], x) == eval(colors[v], x)) {
                    ok = false;
                    break;
                }
            }
            if (ok) chosen = x * q + eval(colors[v], x);
        }
        if (chosen < 0) throw std::logic_error("linial: no evaluation point found");
        next[v] = chosen;
    }
    colors.swap(next);
    return q * q;
}

}  // namespace

ColorReduction linial_coloring(const std::vector<std::vector<int>>& adj,
                               const std::vector<long long>& ids) {
    const int n = static_cast<int>(adj.size());
    int delta = 0;
    for (const auto& a : adj) delta = std::max(delta, static_cast<int>(a.size()));
    ColorReduction res;
    res.colors.assign(n, 0);
    if (n == 0) {
        res.num_colors = 0;
        return res;
    }
    std::vector<long long> colors(ids.begin(), ids.end());
    long long m = *std::max_element(colors.begin(), colors.end()) + 1;
    for (int v = 0; v < n; ++v)
        for (int u : adj[v])
            if (colors[u] == colors[v]) throw std::invalid_argument("linial: ids not distinct");

    while (true) {
        long long m2 = poly_step(adj, colors, m, std::max(delta, 1));
        if (m2 >= m) break;
        m = m2;
        ++res.rounds;
    }
    // Compact palette, then retire one class per round down to delta+1.
    std::vector<long long> palette(colors.begin(), colors.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v)
        c[v] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), colors[v]) -
                                palette.begin());
    int num = static_cast<int>(palette.size());
    std::vector<std::vector<int>> by_color(num);
    for (int v = 0; v < n; ++v) by_color[c[v]].push_back(v);
    for (int cls = num - 1; cls >= delta + 1; --cls) {
        for (int v : by_color[cls]) {
            std::vector<char> used(delta + 1, 0);
            for (int u : adj[v])
                if (c[u] <= delta) used[c[u]] = 1;
            int pick = 0;
            while (used[pick]) ++pick;
            c[v] = pick;
            by_color[pick].push_back(v);
        }
        ++res.rounds;
    }
    res.colors = std::move(c);
    res.num_colors = std::min(num, delta + 1);
    return res;
}

MisResult mis_from_coloring(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& colors, int num_colors) {
    MisResult res;
    res.in_set.assign(adj.size(), 0);
    std::vector<char> blocked(adj.size(), 0);
    for (int cls = 0; cls < num_colors; ++cls) {
        for (size_t v = 0; v < adj.size(); ++v)
            if (colors[v] == cls && !blocked[v]) {
                res.in_set[v] = 1;
                blocked[v] = 1;
                for (int u : adj[v]) blocked[u] = 1;
            }
        ++res.rounds;
    }
    return res;
}

bool valid_path_independent_set(int n, int alpha, int beta, const std::vector<int>& members) {
    if (n < alpha) return members.empty();
    std::vector<char> in(n, 0);
    for (int p : members) {
        if (p < 0 || p >= n) return false;
        if (p == 0 || p == n - 1) return false;  // endpoints excluded
        in[p] = 1;
    }
    for (int p = 0; p + 1 < n; ++p)
        if (in[p] && in[p + 1]) return false;  // independence
    int run = 0;
    for (int p = 0; p <= n; ++p) {
        if (p == n || in[p]) {
            if (run < alpha || run > beta) return false;
            run = 0;
        } else {
            ++run;
        }
    }
    return true;
}

PathIndependentSet independent_set_path(const std::vector<long long>& ids, int alpha, int beta) {
    if (alpha < 1 || beta < 2 * alpha)
        throw std::invalid_argument("independent_set_path: need beta >= 2*alpha >= 2");
    const int n = static_cast<int>(ids.size());
    PathIndependentSet out;
    if (n <= beta) return out;  // single component already fits (or |P| < alpha)

    // Candidates keep alpha positions clear of both endpoints; conflicts are
    // pairs within path distance alpha, i.e. an MIS of the alpha-th power.
    std::vector<int> cand;
    for (int p = alpha; p + alpha < n; ++p) cand.push_back(p);
    std::vector<std::vector<int>> adj(cand.size());
    for (size_t i = 0; i < cand.size(); ++i)
        for (size_t j = i + 1; j < cand.size() && cand[j] - cand[i] <= alpha; ++j) {
            adj[i].push_back(static_cast<int>(j));
            adj[j].push_back(static_cast<int>(i));
        }
    std::vector<long long> cand_ids(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) cand_ids[i] = ids[cand[i]];
    ColorReduction cr = linial_coloring(adj, cand_ids);
    MisResult mis = mis_from_coloring(adj, cr.colors, cr.num_colors);
    for (size_t i = 0; i < cand.size(); ++i)
        if (mis.in_set[i]) out.members.push_back(cand[i]);
    // Power-graph rounds cost a factor alpha on the path.
    out.simulated_rounds = (cr.rounds + mis.rounds) * alpha + 2;
    return out;
}

}  // namespace local
