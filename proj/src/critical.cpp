#include "starfactor/critical.hpp"

#include <algorithm>

#include "starfactor/edge_factor.hpp"
#include "starfactor/oracle.hpp"

namespace starfactor {

namespace {

// Backtracking k-edge-colorability. Edges in decreasing degree-sum order;
// color symmetry broken canonically: a color may be introduced only after
// all smaller colors appear (the first edge is thereby forced to color 0).
struct EdgeColorer {
    const Graph& g;
    int k;
    std::vector<Edge> order;
    std::vector<uint64_t> used;  // per-vertex color mask

    EdgeColorer(const Graph& graph, int colors) : g(graph), k(colors), used(g.order(), 0) {
        order = g.edges();
        std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
            return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
        });
    }

    bool solve(size_t i, int colors_used) {
        if (i == order.size()) return true;
        const Edge& e = order[i];
        uint64_t taken = used[e.u] | used[e.v];
        int limit = std::min(k, colors_used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1) continue;
            used[e.u] |= 1ull << c;
            used[e.v] |= 1ull << c;
            if (solve(i + 1, std::max(colors_used, c + 1))) return true;
            used[e.u] &= ~(1ull << c);
            used[e.v] &= ~(1ull << c);
        }
        return false;
    }
};

}  // namespace

bool edge_colorable(const Graph& g, int colors) {
    if (g.size() == 0) return true;
    if (colors <= 0) return false;
    if (colors < g.max_degree()) return false;
    if (colors > 63) throw_bound("edge colorer supports at most 63 colors");
    EdgeColorer ec(g, colors);
    return ec.solve(0, 0);
}

int chromatic_index(const Graph& g, int edge_bound) {
    if (g.size() > edge_bound)
        throw_bound("exact chromatic index limited to " + std::to_string(edge_bound) + " edges");
    if (g.size() == 0) return 0;
    int delta = g.max_degree();
    int chi = edge_colorable(g, delta) ? delta : delta + 1;
    check_internal(chi == delta || edge_colorable(g, delta + 1), "chromatic index above Delta+1");
    return chi;
}

CriticalityReport is_k_critical(const Graph& g, int edge_bound) {
    CriticalityReport r;
    r.delta = g.max_degree();
    r.chi_prime = chromatic_index(g, edge_bound);
    if (r.chi_prime != r.delta + 1 || r.delta < 2 || !is_connected(g)) return r;
    for (const Edge& e : g.edges()) {
        std::vector<Edge> rest;
        for (const Edge& f : g.edges())
            if (!(f == e)) rest.push_back(f);
        Graph ge = Graph::from_edges(g.order(), rest);
        if (!edge_colorable(ge, r.delta)) return r;
    }
    r.critical = true;
    r.k = r.delta;
    return r;
}

ValCheck vizing_adjacency_holds(const Graph& g) {
    int delta = g.max_degree();
    for (const Edge& e : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int x = flip ? e.v : e.u;
            int y = flip ? e.u : e.v;
            int need = delta - g.degree(y) + 1;
            int have = 0;
            for (int z : g.neighbors(x))
                if (z != y && g.degree(z) == delta) have++;
            if (have < need) return {false, e};
        }
    }
    return {true, std::nullopt};
}

SigmaProfile sigma_profile(const Graph& g) {
    int delta = g.max_degree();
    SigmaProfile sp;
    sp.sigma.resize(g.order());
    sp.p_min.assign(g.order(), 0);
    sp.p.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        sp.sigma[v].reserve(g.degree(v));
        for (int w : g.neighbors(v)) {
            int threshold = 2 * delta - g.degree(v) - g.degree(w) + 2;
            int count = 0;
            for (int z : g.neighbors(w))
                if (z != v && g.degree(z) >= threshold) count++;
            sp.sigma[v].push_back(count);
        }
        if (g.degree(v) == 0) {
            sp.p_min[v] = 0;
            sp.p[v] = -1;
            continue;
        }
        int smin = *std::min_element(sp.sigma[v].begin(), sp.sigma[v].end());
        sp.p_min[v] = smin - delta + g.degree(v) - 1;
        sp.p[v] = std::min(sp.p_min[v], g.degree(v) / 2 - 1);
    }
    return sp;
}

bool p_lemma_check(const Graph& g) {
    SigmaProfile sp = sigma_profile(g);
    int delta = g.max_degree();
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) continue;
        int p = sp.p[v];
        int good = 0;
        for (size_t i = 0; i < sp.sigma[v].size(); ++i)
            if (sp.sigma[v][i] >= delta - p - 1) good++;
        if (good < g.degree(v) - p - 1) return false;
    }
    return true;
}

IsoRatioCheck iso_ratio_bound_check(const Graph& g, int exhaustive_bound) {
    int n = g.order();
    if (n > exhaustive_bound)
        throw_bound("iso ratio check limited to " + std::to_string(exhaustive_bound) + " vertices");
    int delta = g.max_degree();
    std::vector<uint64_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1ull << e.v;
        nbr[e.v] |= 1ull << e.u;
    }
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        int iso = 0;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1) && (nbr[v] & ~mask) == 0) iso++;
        int s = __builtin_popcountll(mask);
        // iso < (3/2 - 1/Delta)|S|, in integers: 2*Delta*iso < (3*Delta - 2)|S|
        if (2ll * delta * iso >= (3ll * delta - 2) * s)
            return {false, VertexSet::from_mask(n, mask)};
    }
    return {true, std::nullopt};
}

MeredithResult meredith_extension(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.order()) throw_arg("meredith: vertex out of range");
    if (k < 2) throw_arg("meredith: k must be at least 2");
    int d = g.degree(v);
    if (d > k) throw_arg("meredith: vertex degree exceeds k");

    MeredithResult r;
    r.old_to_new.assign(g.order(), -1);
    int next = 0;
    for (int x = 0; x < g.order(); ++x)
        if (x != v) r.old_to_new[x] = next++;
    r.u_base = next;          // degree-(k-1) side, k vertices
    r.w_base = next + k;      // opposite side, k-1 vertices
    int total = next + 2 * k - 1;

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) edges.push_back(Edge(r.old_to_new[e.u], r.old_to_new[e.v]));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k - 1; ++j) edges.push_back(Edge(r.u_base + i, r.w_base + j));
    const auto& nv = g.neighbors(v);  // sorted, so the attachment is deterministic
    for (int i = 0; i < d; ++i) edges.push_back(Edge(r.old_to_new[nv[i]], r.u_base + i));
    r.graph = Graph::from_edges(total, edges);
    return r;
}

int k_deficiency(const Graph& g) { return g.max_degree() * g.order() - 2 * g.size(); }

ConjectureScan conjecture_scan(const Graph& g) { return conjecture_scan(g, is_k_critical(g)); }

ConjectureScan conjecture_scan(const Graph& g, const CriticalityReport& report, int exhaustive_bound) {
    if (!report.critical) throw_arg("conjecture scan requires an edge-chromatic critical graph");
    ConjectureScan scan;
    int n = g.order();
    int k = report.delta;
    auto add = [&](const std::string& name, bool holds, const std::string& severity, const std::string& witness) {
        scan.checks[name] = {holds, severity, holds ? "" : witness};
        if (!holds) {
            if (severity == "bug") scan.theorems_hold = false;
            else scan.conjectures_hold = false;
        }
    };

    // theorem checks (failures would mean an implementation bug)
    ValCheck val = vizing_adjacency_holds(g);
    add("vizing_adjacency", val.holds, "bug",
        val.violator ? std::to_string(val.violator->u) + "-" + std::to_string(val.violator->v) : "");

    SigmaProfile sp = sigma_profile(g);
    bool sigma_ok = true;
    std::string sigma_wit;
    for (int v = 0; v < n && sigma_ok; ++v)
        for (size_t i = 0; i < sp.sigma[v].size(); ++i)
            if (sp.sigma[v][i] < k - g.degree(v) + 1) {
                sigma_ok = false;
                sigma_wit = std::to_string(v) + "-" + std::to_string(g.neighbors(v)[i]);
                break;
            }
    add("sigma_inequality", sigma_ok, "bug", sigma_wit);
    add("p_lemma", p_lemma_check(g), "bug", "");

    if (n <= exhaustive_bound) {
        IsoRatioCheck ir = iso_ratio_bound_check(g, exhaustive_bound);
        std::string wit;
        if (ir.violator)
            for (int v : ir.violator->to_vector()) wit += std::to_string(v) + " ";
        add("iso_ratio_bound", ir.holds, "bug", wit);
    }

    auto mk = min_k12(g);
    add("min_k12_exists", mk.has_value(), "bug", "");
    if (mk) add("min_k12_le_n_over_5", 5 * *mk <= n, "bug", "min_k12 = " + std::to_string(*mk));

    int alpha = brute_independence_number(g);
    add("alpha_le_3n_over_5", 5 * alpha <= 3 * n, "bug", "alpha = " + std::to_string(alpha));

    bool all_edges = true;
    std::string edge_wit;
    for (const Edge& e : g.edges())
        if (!k12_factor_with_edge(g, e)) {
            all_edges = false;
            edge_wit = std::to_string(e.u) + "-" + std::to_string(e.v);
            break;
        }
    add("every_edge_in_k12_factor", all_edges, "bug", edge_wit);

    Rat mf = fractional_matching_number(g);
    int s = k_deficiency(g);
    int sk = s / k;
    bool sbounds = mf >= Rat(n - sk, 2) && (!mk || *mk <= sk) && 2 * alpha <= n + sk;
    add("k_deficiency_bounds", sbounds, "bug", "s(G) = " + std::to_string(s));

    // conjecture checks (failures would be counterexample candidates)
    add("fractional_perfect_matching", mf == Rat(n, 2), "counterexample-candidate", "mu_f = " + mf.str());
    add("alpha_le_half", 2 * alpha <= n, "counterexample-candidate", "alpha = " + std::to_string(alpha));
    add("two_factor", two_factor_exists(g), "counterexample-candidate", "");
    int mu = maximum_matching(g).size;
    bool one_factor = 2 * mu == n;
    add("mu_f_above_mu_without_one_factor", one_factor || mf > Rat(mu), "counterexample-candidate",
        "mu = " + std::to_string(mu) + ", mu_f = " + mf.str());
    return scan;
}

}  // namespace starfactor
