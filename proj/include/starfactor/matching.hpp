#ifndef STARFACTOR_MATCHING_HPP
#define STARFACTOR_MATCHING_HPP

#include <optional>
#include <vector>

#include "starfactor/graph.hpp"

namespace starfactor {

struct Matching {
    std::vector<int> mate;  // -1 for exposed vertices
    int size = 0;

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < static_cast<int>(mate.size()); ++v)
            if (mate[v] > v) out.push_back(Edge(v, mate[v]));
        return out;
    }
    bool covers(int v) const { return mate[v] >= 0; }
};

// Edmonds' blossom algorithm with greedy initialization; deterministic for a
// fixed input (ties broken by smallest vertex index).
Matching maximum_matching(const Graph& g);

int deficiency(const Graph& g);

// Maximum-cardinality, then maximum-weight, matching of a bipartite instance.
// With saturate_left, every left vertex must be matched (error otherwise).
struct BipartiteInstance {
    int n_left = 0;
    int n_right = 0;
    struct Arc {
        int l, r;
        long long w;
    };
    std::vector<Arc> arcs;
};
struct BipartiteMatching {
    std::vector<int> right_of_left;  // -1 if unmatched
    long long weight = 0;
    int size = 0;
};
BipartiteMatching bipartite_max_weight_matching(const BipartiteInstance& inst, bool saturate_left);

struct DegreeBounds {
    std::vector<int> g, f;
    static DegreeBounds uniform(int n, int lo, int hi) {
        DegreeBounds b;
        b.g.assign(n, lo);
        b.f.assign(n, hi);
        return b;
    }
    void validate(int n) const;
};

// Degree-constrained spanning sub-multigraph existence, decided by reduction
// to perfect matching. Returns the edge ids (into h.edges()) of a witness
// subgraph when one exists; the witness is re-validated against the bounds.
//
// Gadget wiring, per vertex v with degree d, bounds g(v) <= f(v):
//   - each multigraph edge e=uv becomes two stub vertices s_e^u, s_e^v joined
//     by an edge; a stub is also joined to every core of its endpoint;
//   - vertex v owns f(v) "core" vertices and f(v)-g(v) "slack" vertices,
//     cores joined to all of v's stubs and to all of v's slacks;
//   - all slack vertices across the whole gadget form one clique (the pool),
//     plus one extra pool vertex when sum(g) is odd.
// In a perfect matching, edge e is selected iff its two stubs are matched
// into their vertices' cores; the count of core-matched stubs at v is then
// forced into [g(v), f(v)], and the pool absorbs the leftover slacks (their
// count is always even by the parity of sum(g)).
std::optional<std::vector<int>> gf_factor(const MultiGraph& h, const DegreeBounds& b);

inline bool gf_factor_exists(const MultiGraph& h, const DegreeBounds& b) { return gf_factor(h, b).has_value(); }

bool two_factor_exists(const Graph& g);

// gamma(S,T) = sum_{v in S} f(v) + sum_{v in T} (d(v) - g(v)) - |E(S,T)| - q*(S,T),
// where q* counts components C of H-(S u T) with g=f on C and
// sum_{v in C} f(v) + |E(C,T)| odd.
long long evaluate_gamma(const MultiGraph& h, const DegreeBounds& b, const VertexSet& S, const VertexSet& T);

}  // namespace starfactor

#endif
