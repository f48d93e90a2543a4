#include "starfactor/gallai.hpp"

#include <algorithm>
#include <deque>

namespace starfactor {

bool is_factor_critical(const Graph& g) {
    int n = g.order();
    if (n % 2 == 0) return false;
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        Graph h = delete_vertices(g, s).graph;
        if (maximum_matching(h).size * 2 != n - 1) return false;
    }
    return true;
}

GEDecomposition decompose(const Graph& g) {
    int n = g.order();
    GEDecomposition ge;
    ge.mu = maximum_matching(g).size;
    ge.D = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        if (maximum_matching(delete_vertices(g, s).graph).size == ge.mu) ge.D.set(v);
    }
    ge.A = VertexSet(n);
    ge.C = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        if (ge.D.test(v)) continue;
        bool adj_d = false;
        for (int w : g.neighbors(v)) adj_d = adj_d || ge.D.test(w);
        if (adj_d) ge.A.set(v);
        else ge.C.set(v);
    }

    Graph gd = induced_subgraph(g, ge.D).graph;
    auto sub = induced_subgraph(g, ge.D);
    for (const VertexSet& comp : connected_components(sub.graph)) {
        VertexSet lifted(n);
        for (int v : comp.to_vector()) lifted.set(sub.new_to_old[v]);
        ge.d_components.push_back(lifted);
        ge.d_trivial.push_back(comp.count() == 1);
    }

    // structural invariants from the decomposition theorem
    for (const VertexSet& comp : ge.d_components)
        check_internal(is_factor_critical(induced_subgraph(g, comp).graph), "GE: D-component not factor-critical");
    Graph gc = induced_subgraph(g, ge.C).graph;
    check_internal(2 * maximum_matching(gc).size == gc.order(), "GE: C not perfectly matchable");
    check_internal(2 * ge.mu == n - static_cast<int>(ge.d_components.size()) + ge.A.count(),
                   "GE: matching-number identity failed");
    return ge;
}

std::pair<int, Matching> compute_nc(const Graph& g, const GEDecomposition& ge) {
    int n = g.order();
    int ncomp = static_cast<int>(ge.d_components.size());
    std::vector<int> a_vertices = ge.A.to_vector();
    int na = static_cast<int>(a_vertices.size());

    // Every maximum matching assigns A-vertices to distinct D-components, and
    // every such assignment extends to one; maximizing the number of trivial
    // components used minimizes the matched non-trivial components.
    std::vector<int> comp_of(n, -1);
    for (int c = 0; c < ncomp; ++c)
        for (int v : ge.d_components[c].to_vector()) comp_of[v] = c;

    BipartiteInstance inst;
    inst.n_left = na;
    inst.n_right = ncomp;
    std::vector<std::vector<bool>> seen(na, std::vector<bool>(ncomp, false));
    for (int i = 0; i < na; ++i)
        for (int w : g.neighbors(a_vertices[i])) {
            int c = comp_of[w];
            if (c >= 0 && !seen[i][c]) {
                seen[i][c] = true;
                inst.arcs.push_back({i, c, ge.d_trivial[c] ? 1ll : 0ll});
            }
        }
    BipartiteMatching bm = bipartite_max_weight_matching(inst, true);

    int nontrivial = 0;
    for (int c = 0; c < ncomp; ++c)
        if (!ge.d_trivial[c]) nontrivial++;
    int matched_nontrivial = 0;
    for (int i = 0; i < na; ++i)
        if (bm.right_of_left[i] >= 0 && !ge.d_trivial[bm.right_of_left[i]]) matched_nontrivial++;
    int nc = nontrivial - matched_nontrivial;

    // materialize a maximum matching realizing this assignment
    std::vector<int> mate(n, -1);
    auto add_matching = [&](const Matching& m, const std::vector<int>& new_to_old) {
        for (int v = 0; v < static_cast<int>(m.mate.size()); ++v)
            if (m.mate[v] > v) {
                int a = new_to_old[v], b = new_to_old[m.mate[v]];
                mate[a] = b;
                mate[b] = a;
            }
    };
    auto csub = induced_subgraph(g, ge.C);
    add_matching(maximum_matching(csub.graph), csub.new_to_old);

    std::vector<int> root_of_comp(ncomp, -1);  // component vertex matched into A
    for (int i = 0; i < na; ++i) {
        int c = bm.right_of_left[i];
        if (c < 0) continue;
        int a = a_vertices[i];
        for (int w : g.neighbors(a))
            if (comp_of[w] == c) {
                mate[a] = w;
                mate[w] = a;
                root_of_comp[c] = w;
                break;  // sorted adjacency: smallest index
            }
    }
    for (int c = 0; c < ncomp; ++c) {
        VertexSet inner = ge.d_components[c];
        if (root_of_comp[c] >= 0) inner.reset(root_of_comp[c]);
        auto dsub = induced_subgraph(g, inner);
        Matching dm = maximum_matching(dsub.graph);
        if (root_of_comp[c] >= 0)
            check_internal(2 * dm.size == dsub.graph.order(), "nc: rooted component not perfectly matchable");
        add_matching(dm, dsub.new_to_old);
    }
    Matching M;
    M.mate = std::move(mate);
    for (int v = 0; v < n; ++v)
        if (M.mate[v] > v) M.size++;
    check_internal(M.size == ge.mu, "nc: materialized matching not maximum");
    return {nc, M};
}

StructureReport structure_report(const Graph& g) {
    StructureReport r;
    r.ge = decompose(g);
    auto [nc, M] = compute_nc(g, r.ge);
    r.nc = nc;
    r.M = M;
    int n = g.order();

    VertexSet iso_d(n);  // vertices of trivial D-components
    for (size_t c = 0; c < r.ge.d_components.size(); ++c)
        if (r.ge.d_trivial[c])
            for (int v : r.ge.d_components[c].to_vector()) iso_d.set(v);

    r.d_minus = VertexSet(n);
    for (int v : iso_d.to_vector())
        if (!r.M.covers(v)) r.d_minus.set(v);
    r.n = r.d_minus.count();

    // Alternating reachability from d_minus. For a matching with maximal
    // nc(M) these paths stay inside the Iso(G[D]) / A bipartition: an even
    // vertex is an isolated D-vertex, an odd vertex is an A-vertex whose
    // matched edge leads back into Iso(G[D]).
    std::vector<bool> even(n, false), odd(n, false);
    std::deque<int> q;
    for (int v : r.d_minus.to_vector()) {
        even[v] = true;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int a : g.neighbors(v)) {
            if (r.M.mate[v] == a || odd[a]) continue;
            odd[a] = true;
            int w = r.M.mate[a];
            check_internal(w != -1, "structure: reachable A-vertex unmatched");
            check_internal(iso_d.test(w), "structure: alternating path left Iso(G[D])");
            if (!even[w]) {
                even[w] = true;
                q.push_back(w);
            }
        }
    }
    r.d_plus = VertexSet(n);
    for (int v : iso_d.to_vector())
        if (even[v] && !r.d_minus.test(v)) r.d_plus.set(v);

    r.witness = VertexSet(n);
    for (int v : (r.d_plus | r.d_minus).to_vector())
        for (int w : g.neighbors(v)) r.witness.set(w);

    // invariants from the witness corollary
    check_internal(r.witness.count() == r.d_plus.count(), "structure: |N(D+ u D-)| != |D+|");
    for (int v : r.d_plus.to_vector())
        check_internal(r.M.covers(v) && r.witness.test(r.M.mate[v]), "structure: M not perfect on D+ side");
    for (int a : r.witness.to_vector())
        check_internal(r.M.covers(a) && r.d_plus.test(r.M.mate[a]), "structure: M not perfect on witness side");
    check_internal(isolated_count(g, r.witness).count == r.witness.count() + r.n,
                   "structure: witness identity iso(G-W) = |W| + n failed");
    return r;
}

}  // namespace starfactor
