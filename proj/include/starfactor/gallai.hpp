#ifndef STARFACTOR_GALLAI_HPP
#define STARFACTOR_GALLAI_HPP

#include "starfactor/matching.hpp"

namespace starfactor {

struct GEDecomposition {
    VertexSet D, A, C;
    std::vector<VertexSet> d_components;  // components of G[D], as subsets of V(G)
    std::vector<bool> d_trivial;          // aligned with d_components
    int mu = 0;
};

// (D,A,C) with D = vertices missed by some maximum matching, A = N(D)-D.
// Computed by the definitional per-vertex matching loop; all structural
// invariants (factor-critical D-components, perfectly matchable C, the mu
// identity) are verified before returning.
GEDecomposition decompose(const Graph& g);

bool is_factor_critical(const Graph& g);

// nc(G) = max number of non-trivial D-components left unmatched into A over
// all maximum matchings, together with a maximum matching achieving it.
std::pair<int, Matching> compute_nc(const Graph& g, const GEDecomposition& ge);

struct StructureReport {
    GEDecomposition ge;
    Matching M;      // maximum matching with nc(M) = nc(G)
    int nc = 0;
    VertexSet d_minus;   // unmatched isolated D-vertices, |d_minus| = n
    VertexSet d_plus;    // isolated D-vertices on alternating paths from d_minus
    VertexSet witness;   // N(d_plus u d_minus); iso(G-witness) = |witness| + n
    int n = 0;           // |V| - 2 mu_f(G)
};

StructureReport structure_report(const Graph& g);

}  // namespace starfactor

#endif
