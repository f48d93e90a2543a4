#ifndef STARFACTOR_FACTOR_HPP
#define STARFACTOR_FACTOR_HPP

#include <map>

#include "starfactor/fractional.hpp"

namespace starfactor {

struct StarCycleFactor {
    struct Star {
        int center = -1;
        std::vector<int> leaves;
    };
    std::vector<Star> stars;
    std::vector<std::vector<int>> cycles;  // vertex sequences, length >= 3

    std::map<int, int> t_counts() const;   // i -> number of K_{1,i} components
    int weight() const;                    // sum (i-1) t_i
    int max_star() const;
    std::vector<Edge> edges() const;
    bool contains(Edge e) const;
};

// Checks: components vertex-disjoint and spanning, all edges present in g,
// cycles of length >= 3, and for stars with >= 2 leaves the leaves pairwise
// non-adjacent in g (those components are induced subgraphs).
void validate_factor(const Graph& g, const StarCycleFactor& f);

// Minimal star-cycle factor: sum (i-1) t_i = |V| - 2 mu_f(G), star sizes
// capped by ceil(n/delta)+1. Errors on isolated vertices; disconnected input
// is handled per component.
StarCycleFactor build_minimal_factor(const Graph& g);

// Same construction with an explicit star-size cap. When no factor with this
// cap exists the refusal carries a witness S with iso(G-S) > cap * |S|.
struct CappedBuild {
    std::optional<StarCycleFactor> factor;
    std::optional<VertexSet> refusal_witness;
};
CappedBuild build_factor_capped(const Graph& g, int cap);

// min(G, K_{1,2}): |V| - 2 mu_f(G) when a {K11,K12,Cm}-factor exists, else none.
std::optional<int> min_k12(const Graph& g);

// Split a spanning [1,2]-factor (given as an edge set) into K11/K12/cycle
// components; each odd path yields exactly one K12. When keep is given and
// lies on a path, the split keeps it inside a single component.
StarCycleFactor decompose_paths(const Graph& g, const std::vector<Edge>& f, std::optional<Edge> keep = {});

// A {K11,K12,Cm}-factor through e, via contraction and the (g',f')-factor
// criterion; nullopt when e lies in no such factor.
std::optional<StarCycleFactor> k12_factor_with_edge(const Graph& g, Edge e);

}  // namespace starfactor

#endif
