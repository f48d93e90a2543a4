#include "starfactor/fractional.hpp"

#include <algorithm>

namespace starfactor {

namespace {

// Double cover: vertex v maps to v (plus side) and n+v (minus side).
Graph double_cover(const Graph& g) {
    int n = g.order();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(Edge(e.u, n + e.v));
        edges.push_back(Edge(e.v, n + e.u));
    }
    return Graph::from_edges(2 * n, edges);
}

HalfIntegralMatching project_cover_matching(const Graph& g, const Matching& cover_m) {
    int n = g.order();
    HalfIntegralMatching h;
    h.half_units.assign(g.size(), 0);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (cover_m.mate[e.u] == n + e.v) h.half_units[i]++;
        if (cover_m.mate[e.v] == n + e.u) h.half_units[i]++;
    }
    return h;
}

}  // namespace

void validate_fractional(const Graph& g, const HalfIntegralMatching& h) {
    if (static_cast<int>(h.half_units.size()) != g.size()) throw_arg("fractional matching: size mismatch");
    std::vector<int> load(g.order(), 0);
    for (size_t i = 0; i < h.half_units.size(); ++i) {
        if (h.half_units[i] > 2) throw_arg("fractional matching: weight above 1");
        load[g.edges()[i].u] += h.half_units[i];
        load[g.edges()[i].v] += h.half_units[i];
    }
    for (int v = 0; v < g.order(); ++v)
        if (load[v] > 2) throw_arg("fractional matching: vertex load above 1 at " + std::to_string(v));
}

Rat fractional_matching_number(const Graph& g) {
    return Rat::half(maximum_matching(double_cover(g)).size);
}

HalfIntegralMatching canonical_max_fractional_matching(const Graph& g) {
    return canonical_max_fractional_matching(g, structure_report(g));
}

HalfIntegralMatching canonical_max_fractional_matching(const Graph& g, const StructureReport& sr) {
    int n = g.order();
    HalfIntegralMatching h;
    h.half_units.assign(g.size(), 0);
    auto set_units = [&](int u, int v, int units) {
        auto id = g.edge_index(u, v);
        check_internal(id.has_value(), "canonical: edge not in graph");
        h.half_units[*id] = static_cast<uint8_t>(units);
    };

    const Matching& M = sr.M;
    std::vector<bool> on_circuit_comp(n, false);

    // Each non-trivial D-component left unmatched into A carries one odd
    // circuit through its exposed vertex; everything else keeps M at weight 1.
    for (size_t c = 0; c < sr.ge.d_components.size(); ++c) {
        if (sr.ge.d_trivial[c]) continue;
        const VertexSet& comp = sr.ge.d_components[c];
        bool hooked = false;
        for (int v : comp.to_vector())
            if (M.covers(v) && !comp.test(M.mate[v])) hooked = true;
        if (hooked) continue;
        for (int v : comp.to_vector()) on_circuit_comp[v] = true;

        auto sub = induced_subgraph(g, comp);
        const Graph& K = sub.graph;
        int kn = K.order();
        // exposed vertex of the component under M
        int z = -1;
        for (int v = 0; v < kn; ++v)
            if (!M.covers(sub.new_to_old[v])) z = v;
        check_internal(z >= 0, "canonical: unmatched component has no exposed vertex");
        int w = K.neighbors(z).front();

        // Near-perfect matchings missing z and missing w differ in a single
        // alternating path from z to w; closing it with wz gives the circuit.
        VertexSet wset(kn);
        wset.set(w);
        auto wsub = delete_vertices(K, wset);
        Matching mw = maximum_matching(wsub.graph);
        check_internal(2 * mw.size == kn - 1, "canonical: component minus vertex not perfectly matchable");
        std::vector<int> mate_m(kn, -1), mate_w(kn, -1);
        for (int v = 0; v < kn; ++v) {
            int ov = sub.new_to_old[v];
            if (M.covers(ov) && comp.test(M.mate[ov])) mate_m[v] = sub.old_to_new[M.mate[ov]];
        }
        for (int v = 0; v < wsub.graph.order(); ++v)
            if (mw.mate[v] >= 0) mate_w[wsub.new_to_old[v]] = wsub.new_to_old[mw.mate[v]];

        std::vector<int> circuit{z};
        int cur = z;
        bool use_w = true;  // path alternates M_w, M, M_w, ...
        while (cur != w) {
            int nxt = use_w ? mate_w[cur] : mate_m[cur];
            check_internal(nxt >= 0, "canonical: alternating path broke");
            circuit.push_back(nxt);
            cur = nxt;
            use_w = !use_w;
        }
        check_internal(circuit.size() >= 3 && circuit.size() % 2 == 1, "canonical: circuit not odd");
        for (size_t i = 0; i < circuit.size(); ++i) {
            int a = sub.new_to_old[circuit[i]];
            int bvert = sub.new_to_old[circuit[(i + 1) % circuit.size()]];
            set_units(a, bvert, 1);
        }
        // matched edges of the component off the circuit keep weight 1
        std::vector<bool> on_circuit(kn, false);
        for (int v : circuit) on_circuit[v] = true;
        for (int v = 0; v < kn; ++v)
            if (mate_m[v] > v && !(on_circuit[v] && on_circuit[mate_m[v]]))
                set_units(sub.new_to_old[v], sub.new_to_old[mate_m[v]], 2);
    }

    for (const Edge& e : M.edges())
        if (!on_circuit_comp[e.u] && !on_circuit_comp[e.v]) set_units(e.u, e.v, 2);

    validate_fractional(g, h);
    check_internal(h.value() == fractional_matching_number(g), "canonical: value != mu_f");
    return h;
}

HalfIntegralMatching canonicalize(const Graph& g, const HalfIntegralMatching& h, std::optional<Edge> protected_edge) {
    validate_fractional(g, h);
    int protected_id = -1;
    if (protected_edge) {
        auto id = g.edge_index(protected_edge->u, protected_edge->v);
        if (!id) throw_arg("canonicalize: protected edge not in graph");
        if (h.half_units[*id] == 0) throw_arg("canonicalize: protected edge has weight 0");
        protected_id = *id;
    }

    // The support of a valid half-integral matching has degree <= 2
    // everywhere: weight-1 edges are isolated K_{1,1}s already, weight-1/2
    // edges split into disjoint paths and circuits.
    int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> half_adj(n);  // (neighbor, edge id)
    for (int i = 0; i < g.size(); ++i) {
        if (h.half_units[i] != 1) continue;
        const Edge& e = g.edges()[i];
        half_adj[e.u].push_back({e.v, i});
        half_adj[e.v].push_back({e.u, i});
    }
    for (int v = 0; v < n; ++v)
        check_internal(half_adj[v].size() <= 2, "canonicalize: support degree above 2");

    HalfIntegralMatching out = h;
    std::vector<bool> seen_edge(g.size(), false);

    auto apply_alternation = [&](const std::vector<int>& edge_ids, bool first_heavy) {
        for (size_t i = 0; i < edge_ids.size(); ++i)
            out.half_units[edge_ids[i]] = (i % 2 == (first_heavy ? 0u : 1u)) ? 2 : 0;
    };

    auto walk_from = [&](int start) {
        std::vector<int> ids;
        int cur = start;
        for (;;) {
            int nxt = -1, eid = -1;
            for (auto [w, id] : half_adj[cur])
                if (!seen_edge[id]) {
                    nxt = w;
                    eid = id;
                    break;
                }
            if (nxt == -1) break;
            seen_edge[eid] = true;
            ids.push_back(eid);
            cur = nxt;
        }
        return std::pair<std::vector<int>, int>(ids, cur);
    };

    for (int start = 0; start < n; ++start) {
        if (half_adj[start].size() != 1) continue;  // path endpoint
        auto [ids, endv] = walk_from(start);
        if (ids.empty()) continue;
        if (ids.size() % 2 == 1) {
            // odd number of half-edges: the alternation raising its value
            // exists, so the input was not a maximum fractional matching
            throw_arg("canonicalize: support contains an odd half-weight path; input is not maximum");
        }
        bool first_heavy = true;
        if (protected_id >= 0)
            for (size_t i = 0; i < ids.size(); ++i)
                if (ids[i] == protected_id) first_heavy = (i % 2 == 0);
        apply_alternation(ids, first_heavy);
    }
    // circuits: remaining unseen half-edges
    for (int start = 0; start < n; ++start) {
        if (half_adj[start].size() != 2) continue;
        bool fresh = false;
        for (auto [w, id] : half_adj[start]) fresh = fresh || !seen_edge[id];
        if (!fresh) continue;
        auto [ids, endv] = walk_from(start);
        check_internal(endv == start && !ids.empty(), "canonicalize: circuit walk did not close");
        if (ids.size() % 2 == 0) {
            // even circuit: alternate, keeping the protected edge heavy
            bool first_heavy = true;
            if (protected_id >= 0)
                for (size_t i = 0; i < ids.size(); ++i)
                    if (ids[i] == protected_id) first_heavy = (i % 2 == 0);
            apply_alternation(ids, first_heavy);
        }
        // odd circuits are already canonical components
    }

    validate_fractional(g, out);
    check_internal(out.value() == h.value(), "canonicalize: value changed");
    if (protected_id >= 0) check_internal(out.half_units[protected_id] != 0, "canonicalize: protected edge dropped");
    return out;
}

std::optional<HalfIntegralMatching> max_fractional_matching_with_edge(const Graph& g, Edge e) {
    auto eid = g.edge_index(e.u, e.v);
    if (!eid) throw_arg("edge not in graph");
    int n = g.order();
    Graph cover = double_cover(g);
    int full = maximum_matching(cover).size;

    // force the copy u+ v- : delete both endpoints, match the rest
    VertexSet del(2 * n);
    del.set(e.u);
    del.set(n + e.v);
    auto sub = delete_vertices(cover, del);
    Matching rest = maximum_matching(sub.graph);
    if (rest.size + 1 < full) return std::nullopt;  // e unusable in any maximum fractional matching

    std::vector<int> mate(2 * n, -1);
    mate[e.u] = n + e.v;
    mate[n + e.v] = e.u;
    for (int v = 0; v < sub.graph.order(); ++v)
        if (rest.mate[v] >= 0) mate[sub.new_to_old[v]] = sub.new_to_old[rest.mate[v]];
    Matching forced;
    forced.mate = std::move(mate);
    forced.size = rest.size + 1;

    HalfIntegralMatching h = project_cover_matching(g, forced);
    check_internal(h.half_units[*eid] > 0, "with-edge: forced copy lost in projection");
    return canonicalize(g, h, e);
}

}  // namespace starfactor
