#include "starfactor/factor.hpp"

#include <algorithm>
#include <deque>

namespace starfactor {

std::map<int, int> StarCycleFactor::t_counts() const {
    std::map<int, int> t;
    for (const Star& s : stars) t[static_cast<int>(s.leaves.size())]++;
    return t;
}

int StarCycleFactor::weight() const {
    int w = 0;
    for (const Star& s : stars) w += static_cast<int>(s.leaves.size()) - 1;
    return w;
}

int StarCycleFactor::max_star() const {
    int m = 0;
    for (const Star& s : stars) m = std::max(m, static_cast<int>(s.leaves.size()));
    return m;
}

std::vector<Edge> StarCycleFactor::edges() const {
    std::vector<Edge> out;
    for (const Star& s : stars)
        for (int l : s.leaves) out.push_back(Edge(s.center, l));
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) out.push_back(Edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

bool StarCycleFactor::contains(Edge e) const {
    auto es = edges();
    return std::binary_search(es.begin(), es.end(), e);
}

void validate_factor(const Graph& g, const StarCycleFactor& f) {
    std::vector<bool> covered(g.order(), false);
    auto claim = [&](int v) {
        if (v < 0 || v >= g.order()) throw_internal("factor: vertex out of range");
        if (covered[v]) throw_internal("factor: components not vertex-disjoint");
        covered[v] = true;
    };
    for (const auto& s : f.stars) {
        claim(s.center);
        if (s.leaves.empty()) throw_internal("factor: empty star");
        for (int l : s.leaves) {
            claim(l);
            if (!g.adjacent(s.center, l)) throw_internal("factor: star edge not in graph");
        }
        if (s.leaves.size() >= 2)
            for (size_t i = 0; i < s.leaves.size(); ++i)
                for (size_t j = i + 1; j < s.leaves.size(); ++j)
                    if (g.adjacent(s.leaves[i], s.leaves[j])) throw_internal("factor: star component not induced");
    }
    for (const auto& cyc : f.cycles) {
        if (cyc.size() < 3) throw_internal("factor: cycle shorter than 3");
        for (size_t i = 0; i < cyc.size(); ++i) {
            claim(cyc[i]);
            if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) throw_internal("factor: cycle edge not in graph");
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!covered[v]) throw_internal("factor: not spanning, vertex " + std::to_string(v) + " uncovered");
}

namespace {

void sort_factor(StarCycleFactor& f) {
    for (auto& s : f.stars) std::sort(s.leaves.begin(), s.leaves.end());
    for (auto& cyc : f.cycles) {
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
        if (cyc.size() >= 3 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    }
    std::sort(f.stars.begin(), f.stars.end(), [](const auto& a, const auto& b) {
        return std::min(a.center, a.leaves.front()) < std::min(b.center, b.leaves.front());
    });
    std::sort(f.cycles.begin(), f.cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Incremental factor state: stars grown from the canonical matching's K11s,
// one leaf added per D- vertex (Cases A and B of the construction).
struct Builder {
    const Graph& g;
    int cap;
    std::vector<int> center_of;                 // leaf -> center, -1 otherwise
    std::vector<std::vector<int>> leaves_of;    // center -> leaves
    std::vector<int> fdeg;
    VertexSet iso_d;

    Builder(const Graph& graph, const StructureReport& sr, int star_cap)
        : g(graph), cap(star_cap), center_of(g.order(), -1), leaves_of(g.order()), fdeg(g.order(), 0),
          iso_d(g.order()) {
        for (size_t c = 0; c < sr.ge.d_components.size(); ++c)
            if (sr.ge.d_trivial[c])
                for (int v : sr.ge.d_components[c].to_vector()) iso_d.set(v);
    }

    void seed_k11(int a, int b) {
        center_of[b] = a;
        leaves_of[a].push_back(b);
        fdeg[a] = fdeg[b] = 1;
    }

    void attach(int leaf, int center) {
        if (leaves_of[center].empty() && center_of[center] != -1) {
            // center currently sits as the leaf of a K11; flip the pair
            int partner = center_of[center];
            center_of[center] = -1;
            leaves_of[partner].clear();
            center_of[partner] = center;
            leaves_of[center].push_back(partner);
        }
        center_of[leaf] = center;
        leaves_of[center].push_back(leaf);
        fdeg[center]++;
        fdeg[leaf] = 1;
    }

    void detach(int leaf, int center) {
        auto& ls = leaves_of[center];
        ls.erase(std::find(ls.begin(), ls.end(), leaf));
        center_of[leaf] = -1;
        fdeg[center]--;
        fdeg[leaf] = 0;
    }

    // Returns a refusal witness T_A (all reachable A-vertices saturated at the
    // cap, so iso(G - T_A) >= cap|T_A| + 1) or nullopt on success.
    std::optional<VertexSet> add_vertex(int d) {
        int best = -1;
        for (int a : g.neighbors(d))
            if (fdeg[a] < cap && (best == -1 || fdeg[a] < fdeg[best])) best = a;
        if (best != -1) {
            attach(d, best);
            return std::nullopt;
        }
        // Case B: BFS over alternating paths d, a1, leaf1, a2, ... toward an
        // A-vertex below the cap; smallest-index tie-breaks via sorted adjacency.
        std::vector<int> parent_leaf(g.order(), -1), parent_a(g.order(), -1);
        std::vector<bool> seen(g.order(), false);
        std::deque<int> frontier;
        int found = -1;
        for (int a : g.neighbors(d)) {
            seen[a] = true;
            parent_a[a] = -1;
            frontier.push_back(a);
        }
        while (!frontier.empty()) {
            int a = frontier.front();
            frontier.pop_front();
            if (fdeg[a] < cap) {
                found = a;
                break;
            }
            for (int leaf : leaves_of[a]) {
                check_internal(iso_d.test(leaf), "factor: alternating path left Iso(G[D])");
                for (int a2 : g.neighbors(leaf)) {
                    if (seen[a2]) continue;
                    seen[a2] = true;
                    parent_leaf[a2] = leaf;
                    parent_a[a2] = a;
                    frontier.push_back(a2);
                }
            }
        }
        if (found == -1) {
            VertexSet ta(g.order());
            for (int v = 0; v < g.order(); ++v)
                if (seen[v]) ta.set(v);
            return ta;
        }
        for (int a = found; parent_leaf[a] != -1;) {
            int leaf = parent_leaf[a], prev = parent_a[a];
            detach(leaf, prev);
            attach(leaf, a);
            a = prev;
        }
        // the path's first A-vertex is adjacent to d and now has spare room
        int first = found;
        while (parent_leaf[first] != -1) first = parent_a[first];
        attach(d, first);
        return std::nullopt;
    }
};

// factor on one connected component with a given star-size cap
CappedBuild build_connected(const Graph& g, const StructureReport& sr, int cap) {
    CappedBuild out;
    HalfIntegralMatching canon = canonical_max_fractional_matching(g, sr);

    Builder b(g, sr, cap);
    for (int i = 0; i < g.size(); ++i)
        if (canon.units(i) == 2) b.seed_k11(g.edges()[i].u, g.edges()[i].v);

    std::vector<int> dminus = sr.d_minus.to_vector();
    std::sort(dminus.begin(), dminus.end(),
              [&](int x, int y) { return g.degree(x) != g.degree(y) ? g.degree(x) < g.degree(y) : x < y; });
    for (int d : dminus) {
        auto refusal = b.add_vertex(d);
        if (refusal) {
            out.refusal_witness = refusal;
            return out;
        }
    }

    StarCycleFactor f;
    for (int v = 0; v < g.order(); ++v)
        if (!b.leaves_of[v].empty()) f.stars.push_back({v, b.leaves_of[v]});
    // odd circuits of the canonical matching become cycle components
    std::vector<std::vector<int>> half_adj(g.order());
    for (int i = 0; i < g.size(); ++i)
        if (canon.units(i) == 1) {
            half_adj[g.edges()[i].u].push_back(g.edges()[i].v);
            half_adj[g.edges()[i].v].push_back(g.edges()[i].u);
        }
    std::vector<bool> on_cycle(g.order(), false);
    for (int start = 0; start < g.order(); ++start) {
        if (half_adj[start].empty() || on_cycle[start]) continue;
        check_internal(half_adj[start].size() == 2, "factor: half-weight support not a circuit");
        std::vector<int> cyc;
        int prev = -1, cur = start;
        do {
            cyc.push_back(cur);
            on_cycle[cur] = true;
            int nxt = half_adj[cur][0] != prev ? half_adj[cur][0] : half_adj[cur][1];
            prev = cur;
            cur = nxt;
        } while (cur != start);
        f.cycles.push_back(cyc);
    }
    sort_factor(f);
    validate_factor(g, f);
    check_internal(f.weight() == sr.n, "factor: sum (i-1) t_i != n");
    check_internal(f.max_star() <= cap, "factor: star cap exceeded");
    for (const auto& s : f.stars)
        if (s.leaves.size() >= 2) {
            check_internal(sr.witness.test(s.center), "factor: star center outside witness set");
            for (int l : s.leaves)
                check_internal(sr.d_plus.test(l) || sr.d_minus.test(l), "factor: star leaf outside D+ u D-");
        }
    out.factor = f;
    return out;
}

CappedBuild build_parts(const Graph& g, std::optional<int> forced_cap) {
    CappedBuild out;
    StarCycleFactor merged;
    for (const VertexSet& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        if (sub.graph.order() == 1) throw_arg("graph has an isolated vertex; no star-cycle factor exists");
        StructureReport sr = structure_report(sub.graph);
        int cap;
        if (forced_cap) cap = *forced_cap;
        else {
            int delta = sub.graph.min_degree();
            cap = std::max(2, delta > 0 ? (sr.n + delta - 1) / delta + 1 : 2);
        }
        CappedBuild part = build_connected(sub.graph, sr, cap);
        if (!part.factor) {
            VertexSet lifted(g.order());
            for (int v : part.refusal_witness->to_vector()) lifted.set(sub.new_to_old[v]);
            out.refusal_witness = lifted;
            return out;
        }
        for (auto s : part.factor->stars) {
            s.center = sub.new_to_old[s.center];
            for (int& l : s.leaves) l = sub.new_to_old[l];
            merged.stars.push_back(std::move(s));
        }
        for (auto cyc : part.factor->cycles) {
            for (int& v : cyc) v = sub.new_to_old[v];
            merged.cycles.push_back(std::move(cyc));
        }
    }
    sort_factor(merged);
    validate_factor(g, merged);
    out.factor = std::move(merged);
    return out;
}

}  // namespace

CappedBuild build_factor_capped(const Graph& g, int cap) {
    if (cap < 1) throw_arg("star cap must be >= 1");
    return build_parts(g, cap);
}

StarCycleFactor build_minimal_factor(const Graph& g) {
    CappedBuild out = build_parts(g, std::nullopt);
    check_internal(out.factor.has_value(), "minimal factor build failed below the guaranteed cap");
    return *out.factor;
}

std::optional<int> min_k12(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return std::nullopt;
    CappedBuild b = build_factor_capped(g, 2);
    if (!b.factor) return std::nullopt;
    Rat mf = fractional_matching_number(g);
    long long twice_mf = 2 * mf.num / mf.den;
    int value = g.order() - static_cast<int>(twice_mf);
    check_internal(value == b.factor->weight(), "min_k12: built factor weight mismatch");
    return value;
}

StarCycleFactor decompose_paths(const Graph& g, const std::vector<Edge>& f, std::optional<Edge> keep) {
    int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : f) {
        if (!g.adjacent(e.u, e.v)) throw_arg("decompose_paths: edge not in graph");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v) {
        if (adj[v].empty() || adj[v].size() > 2)
            throw_arg("decompose_paths: degree of " + std::to_string(v) + " not in {1,2}");
        std::sort(adj[v].begin(), adj[v].end());
    }

    StarCycleFactor out;
    std::vector<bool> seen(n, false);

    for (int v = 0; v < n; ++v) {
        if (seen[v] || adj[v].size() != 1) continue;
        std::vector<int> path{v};
        seen[v] = true;
        int prev = -1, cur = v;
        for (;;) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            if (nxt == -1) break;
            path.push_back(nxt);
            seen[nxt] = true;
            prev = cur;
            cur = nxt;
        }
        int m = static_cast<int>(path.size()) - 1;  // edges on the path
        int keep_pos = -1;
        if (keep)
            for (int i = 0; i < m; ++i)
                if (Edge(path[i], path[i + 1]) == *keep) keep_pos = i;
        if (m % 2 == 0) {
            // odd path: exactly one K12; place it over the kept edge
            int j = keep_pos < 0 ? 0 : keep_pos - (keep_pos % 2);
            for (int i = 0; i + 1 < j; i += 2) out.stars.push_back({path[i], {path[i + 1]}});
            out.stars.push_back({path[j + 1], {path[j], path[j + 2]}});
            for (size_t i = j + 3; i + 1 < path.size(); i += 2) out.stars.push_back({path[i], {path[i + 1]}});
        } else {
            // even path: unique split into K11s at even edge positions
            check_internal(keep_pos < 0 || keep_pos % 2 == 0, "decompose_paths: kept edge not coverable");
            for (size_t i = 0; i + 1 < path.size(); i += 2) out.stars.push_back({path[i], {path[i + 1]}});
        }
    }
    for (int v = 0; v < n; ++v) {
        if (seen[v] || adj[v].size() != 2) continue;
        std::vector<int> cyc;
        int prev = -1, cur = v;
        do {
            cyc.push_back(cur);
            seen[cur] = true;
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        } while (cur != v);
        out.cycles.push_back(cyc);
    }
    sort_factor(out);
    validate_factor(g, out);
    if (keep) check_internal(out.contains(*keep), "decompose_paths: kept edge lost");
    return out;
}

std::optional<StarCycleFactor> k12_factor_with_edge(const Graph& g, Edge e) {
    if (!g.adjacent(e.u, e.v)) throw_arg("edge not in graph");
    ContractionResult cr = contract_edge(g, e);
    int w = cr.merged;
    DegreeBounds b;
    b.g.assign(cr.graph.order(), 1);
    b.f.assign(cr.graph.order(), 2);
    b.g[w] = 0;
    b.f[w] = 1;
    auto factor_ids = gf_factor(cr.graph, b);
    if (!factor_ids) return std::nullopt;

    // lift back: each used G' edge maps to its origin, plus e itself; the
    // merged vertex has degree at most 1, so e ends up an end edge of a path
    std::vector<Edge> lifted;
    int w_degree = 0;
    for (int id : *factor_ids) {
        const Edge& ce = cr.graph.edges()[id];
        lifted.push_back(cr.edge_origin[id]);
        if (ce.u == w || ce.v == w) w_degree++;
    }
    check_internal(w_degree <= 1, "k12_factor_with_edge: contracted vertex degree above f'");
    lifted.push_back(e);
    return decompose_paths(g, lifted, e);
}

}  // namespace starfactor
