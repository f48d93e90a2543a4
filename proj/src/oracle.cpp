#include "starfactor/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace starfactor {

int brute_max_matching(const Graph& g) {
    if (g.size() > 24) throw_bound("brute_max_matching limited to 24 edges");
    const auto& edges = g.edges();
    std::vector<bool> used(g.order(), false);
    int best = 0;
    auto rec = [&](auto&& self, size_t i, int size) -> void {
        best = std::max(best, size);
        if (i == edges.size()) return;
        if (size + static_cast<int>(edges.size() - i) <= best) return;
        const Edge& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            self(self, i + 1, size + 1);
            used[e.u] = used[e.v] = false;
        }
        self(self, i + 1, size);
    };
    rec(rec, 0, 0);
    return best;
}

Rat brute_fractional(const Graph& g) {
    if (g.size() > 18) throw_bound("brute_fractional limited to 18 edges");
    int m = g.size(), n = g.order();
    // optimum attained on supports that split into K11s and odd circuits
    long long best_half_units = 0;
    std::vector<int> deg(n);
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if ((mask >> i) & 1) {
                deg[g.edges()[i].u]++;
                deg[g.edges()[i].v]++;
                ok = deg[g.edges()[i].u] <= 2 && deg[g.edges()[i].v] <= 2;
            }
        if (!ok) continue;
        // decompose the chosen edge set into components, require K11 / odd circuit
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                adj[g.edges()[i].u].push_back(g.edges()[i].v);
                adj[g.edges()[i].v].push_back(g.edges()[i].u);
            }
        std::vector<bool> seen(n, false);
        long long half_units = 0;
        for (int v = 0; v < n && ok; ++v) {
            if (seen[v] || adj[v].empty()) continue;
            std::vector<int> comp;
            std::vector<int> stack{v};
            seen[v] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (int w : adj[x])
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            int edges_in = 0;
            for (int x : comp) edges_in += static_cast<int>(adj[x].size());
            edges_in /= 2;
            int sz = static_cast<int>(comp.size());
            if (sz == 2 && edges_in == 1) half_units += 2;                  // K11
            else if (edges_in == sz && sz % 2 == 1 && sz >= 3) half_units += sz;  // odd circuit
            else ok = false;
        }
        if (ok) best_half_units = std::max(best_half_units, half_units);
    }
    return Rat::half(best_half_units);
}

std::pair<int, VertexSet> brute_witness(const Graph& g) {
    int n = g.order();
    if (n > 16) throw_bound("brute_witness limited to 16 vertices");
    std::vector<uint64_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1ull << e.v;
        nbr[e.v] |= 1ull << e.u;
    }
    int best = 0;
    uint64_t best_mask = 0;  // S = empty achieves iso(G) - 0 >= 0 only if iso(G) counted
    {
        int iso0 = 0;
        for (int v = 0; v < n; ++v)
            if (nbr[v] == 0) iso0++;
        best = iso0;
    }
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        int iso = 0;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1) && (nbr[v] & ~mask) == 0) iso++;
        int val = iso - __builtin_popcountll(mask);
        if (val > best) {
            best = val;
            best_mask = mask;
        }
    }
    return {best, VertexSet::from_mask(n, best_mask)};
}

int brute_independence_number(const Graph& g) {
    int n = g.order();
    if (n > 20) throw_bound("brute_independence_number limited to 20 vertices");
    std::vector<uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    int best = 0;
    auto rec = [&](auto&& self, uint32_t avail, int size) -> void {
        if (size + __builtin_popcount(avail) <= best) return;
        if (!avail) {
            best = std::max(best, size);
            return;
        }
        // branch on the available vertex of maximum remaining degree
        int pick = -1, pd = -1;
        for (int v = 0; v < n; ++v)
            if ((avail >> v) & 1) {
                int d = __builtin_popcount(nbr[v] & avail);
                if (d > pd) {
                    pd = d;
                    pick = v;
                }
            }
        self(self, avail & ~(1u << pick) & ~nbr[pick], size + 1);
        self(self, avail & ~(1u << pick), size);
    };
    rec(rec, (1u << n) - 1, 0);
    return best;
}

long long brute_gamma_min(const MultiGraph& h, const DegreeBounds& b) {
    int n = h.order();
    if (n > 7) throw_bound("brute_gamma_min limited to 7 vertices");
    long long best = 0;  // S = T = empty gives gamma >= -q*(0 components...) evaluated below anyway
    bool first = true;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            VertexSet S(n), T(n);
            for (int i = 0; i < n; ++i) {
                if (assign[i] == 1) S.set(i);
                if (assign[i] == 2) T.set(i);
            }
            long long gamma = evaluate_gamma(h, b, S, T);
            if (first || gamma < best) {
                best = gamma;
                first = false;
            }
            return;
        }
        for (int c = 0; c < 3; ++c) {
            assign[v] = c;
            self(self, v + 1);
        }
        assign[v] = 0;
    };
    rec(rec, 0);
    return best;
}

int brute_chromatic_index(const Graph& g) {
    if (g.size() > 12) throw_bound("brute_chromatic_index limited to 12 edges");
    if (g.size() == 0) return 0;
    int m = g.size();
    std::vector<int> color(m, -1);
    // plain recursive enumeration in input edge order; colors introduced in
    // ascending order so permuted assignments are not retried
    auto colorable = [&](int k) {
        auto rec = [&](auto&& self, int i, int used) -> bool {
            if (i == m) return true;
            const Edge& e = g.edges()[i];
            for (int c = 0; c < std::min(k, used + 1); ++c) {
                bool clash = false;
                for (int j = 0; j < i && !clash; ++j) {
                    if (color[j] != c) continue;
                    const Edge& f = g.edges()[j];
                    clash = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
                }
                if (clash) continue;
                color[i] = c;
                if (self(self, i + 1, std::max(used, c + 1))) return true;
                color[i] = -1;
            }
            return false;
        };
        return rec(rec, 0, 0);
    };
    for (int k = 1; k <= m; ++k)
        if (colorable(k)) return k;
    throw_internal("brute_chromatic_index: no coloring found");
}

// ---- star-cycle factor enumeration (partition based) ----

namespace {

void hamiltonian_cycles(const Graph& g, const std::vector<int>& part, std::vector<std::vector<int>>& out) {
    // cycles within the part, anchored at its smallest vertex, reflection
    // killed by requiring second < last
    int k = static_cast<int>(part.size());
    if (k < 3) return;
    std::vector<int> path{part[0]};
    std::vector<bool> used(part.size(), false);
    used[0] = true;
    std::map<int, int> idx;
    for (int i = 0; i < k; ++i) idx[part[i]] = i;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == k) {
            if (g.adjacent(path.back(), path.front()) && path[1] < path.back()) out.push_back(path);
            return;
        }
        int cur = path.back();
        for (int w : g.neighbors(cur)) {
            auto it = idx.find(w);
            if (it == idx.end() || used[it->second]) continue;
            used[it->second] = true;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[it->second] = false;
        }
    };
    rec(rec);
}

void realize_part(const Graph& g, const std::vector<int>& part, std::optional<int> max_star,
                  std::vector<StarCycleFactor::Star>& star_opts, std::vector<std::vector<int>>& cycle_opts) {
    int k = static_cast<int>(part.size());
    if (k == 2) {
        if (g.adjacent(part[0], part[1])) star_opts.push_back({part[0], {part[1]}});
        return;
    }
    if (!max_star || *max_star >= k - 1) {
        for (int ci = 0; ci < k; ++ci) {
            int c = part[ci];
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (i != ci) ok = g.adjacent(c, part[i]);
            if (ok) {
                StarCycleFactor::Star s;
                s.center = c;
                for (int i = 0; i < k; ++i)
                    if (i != ci) s.leaves.push_back(part[i]);
                star_opts.push_back(std::move(s));
            }
        }
    }
    hamiltonian_cycles(g, part, cycle_opts);
}

}  // namespace

std::vector<StarCycleFactor> brute_factor_enum(const Graph& g, std::optional<int> max_star,
                                               std::optional<Edge> through_edge) {
    int n = g.order();
    if (n > 8) throw_bound("brute_factor_enum limited to 8 vertices");
    std::vector<StarCycleFactor> out;
    if (n == 0) {
        if (!through_edge) out.push_back({});
        return out;
    }

    std::vector<int> remaining_order(n);
    for (int i = 0; i < n; ++i) remaining_order[i] = i;

    StarCycleFactor current;
    auto rec = [&](auto&& self, uint32_t remaining) -> void {
        if (!remaining) {
            if (through_edge && !current.contains(*through_edge)) return;
            out.push_back(current);
            return;
        }
        int v = __builtin_ctz(remaining);
        uint32_t rest = remaining & ~(1u << v);
        // all subsets of rest, joined with v, of size >= 1
        for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (sub != 0) {
                std::vector<int> part{v};
                for (int i = 0; i < n; ++i)
                    if ((sub >> i) & 1) part.push_back(i);
                std::vector<StarCycleFactor::Star> stars;
                std::vector<std::vector<int>> cycles;
                realize_part(g, part, max_star, stars, cycles);
                uint32_t next = remaining & ~(1u << v) & ~sub;
                for (const auto& s : stars) {
                    current.stars.push_back(s);
                    self(self, next);
                    current.stars.pop_back();
                }
                for (const auto& c : cycles) {
                    current.cycles.push_back(c);
                    self(self, next);
                    current.cycles.pop_back();
                }
            }
            if (sub == 0) break;
        }
    };
    rec(rec, (1u << n) - 1);
    return out;
}

std::optional<int> brute_min_k12(const Graph& g) {
    auto factors = brute_factor_enum(g, 2);
    if (factors.empty()) return std::nullopt;
    int best = -1;
    for (const auto& f : factors) {
        auto t = f.t_counts();
        int t2 = t.count(2) ? t.at(2) : 0;
        if (best < 0 || t2 < best) best = t2;
    }
    return best;
}

// ---- small-graph enumeration with isomorphism dedup ----

namespace {

// canonical upper-triangle bitstring: minimum over permutations compatible
// with iterated-degree color classes
uint64_t canonical_key(int n, const std::vector<uint16_t>& adj) {
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (int w = 0; w < n; ++w)
                if ((adj[v] >> w) & 1) sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) break;
        color = next;
    }
    // vertices grouped by color class; permute within classes only
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });

    uint64_t best = ~0ull;
    std::vector<int> perm = order;
    auto key_of = [&](const std::vector<int>& p) {
        uint64_t key = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((adj[p[i]] >> p[j]) & 1) key |= 1ull << bit;
        return key;
    };
    // recursive product of per-class permutations
    std::vector<std::pair<int, int>> classes;  // [start, end) in order[]
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        classes.push_back({i, j});
        i = j;
    }
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            best = std::min(best, key_of(perm));
            return;
        }
        auto [lo, hi] = classes[ci];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            self(self, ci + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

Graph graph_from_key(int n, uint64_t key) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((key >> bit) & 1) edges.push_back(Edge(i, j));
    return Graph::from_edges(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_graphs(const CorpusSpec& spec) {
    if (spec.n_max < 0 || spec.n_max > 10) throw_bound("enumerate_graphs limited to 10 vertices");
    if (!spec.dedup && spec.n_max > 6) throw_bound("labeled enumeration limited to 6 vertices");
    std::vector<Graph> out;

    if (!spec.dedup) {
        for (int n = 1; n <= spec.n_max; ++n) {
            int bits = n * (n - 1) / 2;
            for (uint64_t key = 0; key < (1ull << bits); ++key) {
                Graph g = graph_from_key(n, key);
                if (spec.connected_only && !is_connected(g)) continue;
                out.push_back(std::move(g));
            }
        }
        return out;
    }

    std::vector<std::vector<uint16_t>> level = {{0}};  // adjacency rows of K1
    std::vector<uint64_t> level_keys = {0};
    if (spec.n_max >= 1) out.push_back(graph_from_key(1, 0));
    for (int n = 2; n <= spec.n_max; ++n) {
        std::set<uint64_t> keys;
        std::vector<std::vector<uint16_t>> next_level;
        for (const auto& parent : level) {
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<uint16_t> adj(parent);
                adj.push_back(0);
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) {
                        adj[v] |= 1u << (n - 1);
                        adj[n - 1] |= 1u << v;
                    }
                uint64_t key = canonical_key(n, adj);
                if (keys.insert(key).second) next_level.push_back(adj);
            }
        }
        level = std::move(next_level);
        for (uint64_t key : keys) {
            Graph g = graph_from_key(n, key);
            if (spec.connected_only && !is_connected(g)) continue;
            out.push_back(std::move(g));
        }
    }
    return out;
}

namespace {
// xorshift generator; identical across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t operator()() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
};
}  // namespace

std::vector<Graph> random_connected_graphs(int count, int n_min, int n_max, uint64_t seed) {
    if (n_min < 1 || n_min > n_max) throw_arg("random graphs: bad size range");
    Rng next(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = n_min + static_cast<int>(next() % (n_max - n_min + 1));
        std::set<Edge> edges;
        for (int v = 1; v < n; ++v) edges.insert(Edge(v, static_cast<int>(next() % v)));  // random tree
        int max_extra = n * (n - 1) / 2 - (n - 1);
        int extra = max_extra > 0 ? static_cast<int>(next() % (max_extra + 1)) : 0;
        for (int t = 0; t < extra; ++t) {
            int a = static_cast<int>(next() % n), b = static_cast<int>(next() % n);
            if (a != b) edges.insert(Edge(a, b));
        }
        out.push_back(Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end())));
    }
    return out;
}

std::vector<Graph> random_graphs(int count, int n_min, int n_max, uint64_t seed) {
    if (n_min < 1 || n_min > n_max) throw_arg("random graphs: bad size range");
    Rng next(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = n_min + static_cast<int>(next() % (n_max - n_min + 1));
        int denom = 2 + static_cast<int>(next() % 5);  // edge probability 1/denom
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (next() % denom == 0) edges.push_back(Edge(u, v));
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

}  // namespace starfactor
