#include "starfactor/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace starfactor {

namespace {
constexpr long long kInfCost = std::numeric_limits<long long>::max() / 4;
}

namespace {

// Blossom search state for one augmentation phase.
struct BlossomSearch {
    const Graph& g;
    std::vector<int>& mate;
    std::vector<int> p, base;
    std::vector<bool> used, blossom;

    explicit BlossomSearch(const Graph& graph, std::vector<int>& m)
        : g(graph), mate(m), p(g.order()), base(g.order()), used(g.order()), blossom(g.order()) {}

    int lowest_common_base(int a, int b) {
        std::vector<bool> mark(g.order(), false);
        for (;;) {
            a = base[a];
            mark[a] = true;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = p[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    }

    // BFS for an augmenting path from root; returns the far endpoint or -1.
    int find_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < g.order(); ++i) base[i] = i;
        used[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int curbase = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < g.order(); ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = true;
                    q.push_back(mate[to]);
                }
            }
        }
        return -1;
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    int n = g.order();
    std::vector<int> mate(n, -1);
    // greedy initialization keeps the search deterministic and fast
    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        for (int u : g.neighbors(v))
            if (mate[u] == -1) {
                mate[v] = u;
                mate[u] = v;
                break;
            }
    }
    BlossomSearch search(g, mate);
    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        int end = search.find_path(v);
        if (end == -1) continue;
        // flip matching edges along the alternating path back to the root
        while (end != -1) {
            int pv = search.p[end], ppv = mate[pv];
            mate[end] = pv;
            mate[pv] = end;
            end = ppv;
        }
    }
    Matching m;
    m.mate = std::move(mate);
    for (int v = 0; v < n; ++v)
        if (m.mate[v] > v) m.size++;
    return m;
}

int deficiency(const Graph& g) { return g.order() - 2 * maximum_matching(g).size; }

// ---- bipartite max-weight matching via successive shortest paths ----

BipartiteMatching bipartite_max_weight_matching(const BipartiteInstance& inst, bool saturate_left) {
    // Nodes: 0 = source, 1..nl = left, nl+1..nl+nr = right, nl+nr+1 = sink.
    int nl = inst.n_left, nr = inst.n_right;
    int N = nl + nr + 2, src = 0, snk = N - 1;
    struct E {
        int to, cap;
        long long cost;
        int rev;
    };
    std::vector<std::vector<E>> adj(N);
    auto add = [&](int a, int b, int cap, long long cost) {
        adj[a].push_back({b, cap, cost, static_cast<int>(adj[b].size())});
        adj[b].push_back({a, 0, -cost, static_cast<int>(adj[a].size()) - 1});
    };
    for (int i = 0; i < nl; ++i) add(src, 1 + i, 1, 0);
    for (int j = 0; j < nr; ++j) add(1 + nl + j, snk, 1, 0);
    for (const auto& a : inst.arcs) {
        if (a.l < 0 || a.l >= nl || a.r < 0 || a.r >= nr) throw_arg("bipartite matching: endpoint out of range");
        if (a.w < 0) throw_arg("bipartite matching: negative weight");
        add(1 + a.l, 1 + nl + a.r, 1, -a.w);
    }
    // Bellman-Ford based successive shortest paths: maximizes flow, and for
    // each flow value minimizes cost, i.e. maximizes total weight.
    int flow = 0;
    long long cost = 0;
    for (;;) {
        std::vector<long long> dist(N, kInfCost);
        std::vector<int> pe(N, -1), pv(N, -1);
        std::vector<bool> inq(N, false);
        dist[src] = 0;
        std::deque<int> q{src};
        inq[src] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            inq[v] = false;
            for (size_t i = 0; i < adj[v].size(); ++i) {
                const E& e = adj[v][i];
                if (e.cap > 0 && dist[v] + e.cost < dist[e.to]) {
                    dist[e.to] = dist[v] + e.cost;
                    pv[e.to] = v;
                    pe[e.to] = static_cast<int>(i);
                    if (!inq[e.to]) {
                        inq[e.to] = true;
                        q.push_back(e.to);
                    }
                }
            }
        }
        if (dist[snk] == kInfCost) break;
        for (int v = snk; v != src; v = pv[v]) adj[pv[v]][pe[v]].cap--, adj[v][adj[pv[v]][pe[v]].rev].cap++;
        flow++;
        cost += dist[snk];
    }
    if (saturate_left && flow < nl) throw_arg("bipartite matching: left saturation infeasible");
    BipartiteMatching out;
    out.right_of_left.assign(nl, -1);
    out.size = flow;
    out.weight = -cost;
    for (int i = 0; i < nl; ++i)
        for (const E& e : adj[1 + i])
            if (e.to >= 1 + nl && e.to < 1 + nl + nr && e.cap == 0 && e.cost <= 0) out.right_of_left[i] = e.to - 1 - nl;
    return out;
}

// ---- (g,f)-factor via gadget reduction to perfect matching ----

void DegreeBounds::validate(int n) const {
    if (static_cast<int>(g.size()) != n || static_cast<int>(f.size()) != n) throw_arg("degree bounds: wrong size");
    for (int v = 0; v < n; ++v)
        if (g[v] < 0 || g[v] > f[v]) throw_arg("degree bounds: need 0 <= g(v) <= f(v)");
}

std::optional<std::vector<int>> gf_factor(const MultiGraph& h, const DegreeBounds& b) {
    int n = h.order();
    b.validate(n);
    int m = h.size();

    long long sum_g = 0, sum_slack = 0;
    for (int v = 0; v < n; ++v) {
        sum_g += b.g[v];
        sum_slack += b.f[v] - b.g[v];
    }

    // Quick infeasibility: g(v) > deg(v) cannot be met.
    for (int v = 0; v < n; ++v)
        if (b.g[v] > h.degree(v)) return std::nullopt;

    // Vertex layout: [0, 2m) stubs, then per-vertex cores, then slacks, then
    // an optional parity vertex in the slack pool.
    std::vector<int> core_base(n), slack_base(n);
    int next = 2 * m;
    for (int v = 0; v < n; ++v) {
        core_base[v] = next;
        next += b.f[v];
    }
    std::vector<int> pool;
    for (int v = 0; v < n; ++v) {
        slack_base[v] = next;
        for (int i = 0; i < b.f[v] - b.g[v]; ++i) pool.push_back(next + i);
        next += b.f[v] - b.g[v];
    }
    if (sum_g % 2 == 1) pool.push_back(next++);

    std::vector<Edge> gedges;
    for (int e = 0; e < m; ++e) {
        gedges.push_back(Edge(2 * e, 2 * e + 1));
        const Edge& he = h.edges()[e];
        for (int side = 0; side < 2; ++side) {
            int v = side == 0 ? he.u : he.v;
            int stub = 2 * e + side;
            for (int c = 0; c < b.f[v]; ++c) gedges.push_back(Edge(stub, core_base[v] + c));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < b.f[v]; ++c)
            for (int s = 0; s < b.f[v] - b.g[v]; ++s) gedges.push_back(Edge(core_base[v] + c, slack_base[v] + s));
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) gedges.push_back(Edge(pool[i], pool[j]));

    Graph gadget = Graph::from_edges(next, gedges);
    Matching pm = maximum_matching(gadget);
    if (2 * pm.size != next) return std::nullopt;

    std::vector<int> factor;
    for (int e = 0; e < m; ++e)
        if (pm.mate[2 * e] != 2 * e + 1) factor.push_back(e);

    // re-validate the decoded witness
    std::vector<int> deg(n, 0);
    for (int e : factor) {
        deg[h.edges()[e].u]++;
        deg[h.edges()[e].v]++;
    }
    for (int v = 0; v < n; ++v)
        check_internal(deg[v] >= b.g[v] && deg[v] <= b.f[v], "gf_factor: decoded witness violates bounds");
    return factor;
}

bool two_factor_exists(const Graph& g) {
    return gf_factor_exists(MultiGraph::from_graph(g), DegreeBounds::uniform(g.order(), 2, 2));
}

long long evaluate_gamma(const MultiGraph& h, const DegreeBounds& b, const VertexSet& S, const VertexSet& T) {
    int n = h.order();
    b.validate(n);
    if (S.intersects(T)) throw_arg("evaluate_gamma: S and T must be disjoint");

    long long gamma = 0;
    for (int v = 0; v < n; ++v) {
        if (S.test(v)) gamma += b.f[v];
        if (T.test(v)) gamma += h.degree(v) - b.g[v];
    }
    long long est = 0;  // |E(S,T)| with multiplicity
    for (const Edge& e : h.edges()) {
        if ((S.test(e.u) && T.test(e.v)) || (S.test(e.v) && T.test(e.u))) est++;
    }
    gamma -= est;

    // components of H - (S u T)
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1 || S.test(root) || T.test(root)) continue;
        std::vector<int> stack{root};
        comp[root] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : h.incident(v)) {
                if (comp[w] != -1 || S.test(w) || T.test(w)) continue;
                comp[w] = ncomp;
                stack.push_back(w);
            }
        }
        ncomp++;
    }
    std::vector<bool> gf_equal(ncomp, true);
    std::vector<long long> fsum(ncomp, 0), edges_to_T(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        if (comp[v] < 0) continue;
        if (b.g[v] != b.f[v]) gf_equal[comp[v]] = false;
        fsum[comp[v]] += b.f[v];
        for (auto [w, id] : h.incident(v))
            if (T.test(w)) edges_to_T[comp[v]]++;
    }
    long long qstar = 0;
    for (int c = 0; c < ncomp; ++c)
        if (gf_equal[c] && (fsum[c] + edges_to_T[c]) % 2 == 1) qstar++;
    return gamma - qstar;
}

}  // namespace starfactor
