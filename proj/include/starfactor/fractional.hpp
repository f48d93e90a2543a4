#ifndef STARFACTOR_FRACTIONAL_HPP
#define STARFACTOR_FRACTIONAL_HPP

#include "starfactor/gallai.hpp"

namespace starfactor {

// Half-integral fractional matching; weights live in {0, 1/2, 1} and are
// stored in half-units indexed by the host graph's edge list.
struct HalfIntegralMatching {
    std::vector<uint8_t> half_units;  // 0, 1, or 2 per edge

    Rat value() const {
        long long twice = 0;
        for (uint8_t u : half_units) twice += u;
        return Rat::half(twice);
    }
    int units(int edge_id) const { return half_units[edge_id]; }
    bool in_support(int edge_id) const { return half_units[edge_id] != 0; }
};

// Throws if loads exceed 1 somewhere or sizes mismatch.
void validate_fractional(const Graph& g, const HalfIntegralMatching& h);

// Exact mu_f(G), computed as half the matching number of the bipartite
// double cover (vertices v+, v-; each edge uv yields u+v- and v+u-).
Rat fractional_matching_number(const Graph& g);

// Canonical maximum fractional matching with respect to the nc-maximal
// maximum matching M of structure_report: supp contains M, weight-1 edges
// are K_{1,1} components, weight-1/2 edges form vertex-disjoint odd circuits
// (one per unmatched non-trivial D-component).
HalfIntegralMatching canonical_max_fractional_matching(const Graph& g);
HalfIntegralMatching canonical_max_fractional_matching(const Graph& g, const StructureReport& sr);

// Normalize a valid half-integral fractional matching to canonical form:
// even circuits and even half-paths in the support are replaced by
// alternating weight-1 edges (value preserved); odd circuits and weight-1
// edges stay. When protected_edge is given its weight stays nonzero.
// An odd half-path in the support witnesses that the input is not maximum
// and cannot be canonicalized at equal value; that is rejected.
HalfIntegralMatching canonicalize(const Graph& g, const HalfIntegralMatching& h, std::optional<Edge> protected_edge = {});

// A canonical maximum fractional matching with nonzero weight on e, when one
// exists. Decided by forcing e's double-cover copy into the matching and
// comparing the completion against mu_f(G).
std::optional<HalfIntegralMatching> max_fractional_matching_with_edge(const Graph& g, Edge e);

}  // namespace starfactor

#endif
