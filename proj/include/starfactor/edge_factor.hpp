#ifndef STARFACTOR_EDGE_FACTOR_HPP
#define STARFACTOR_EDGE_FACTOR_HPP

#include "starfactor/factor.hpp"

namespace starfactor {

// Witness that edge uv lies in no {K11,K12,Cm}-factor:
// u,v in S and 2|S|-2 <= iso(G-S) <= 2|S|.
struct ExclusionCertificate {
    VertexSet S;
    int iso_count = 0;
    Edge edge;
};

void validate_certificate(const Graph& g, const ExclusionCertificate& c);

// Polynomial decision via contraction; errors when G has no {K11,K12,Cm}-factor at all.
bool edge_in_some_k12_factor(const Graph& g, Edge e);

// Exhaustive search for a certificate, smallest |S| first, lexicographic
// within a size class. Bounded by n <= exhaustive_bound.
std::optional<ExclusionCertificate> find_exclusion_certificate(const Graph& g, Edge e, int exhaustive_bound = 16);

// f(e) = 0 for every maximum fractional matching of G.
bool forced_zero_weight(const Graph& g, Edge e);

}  // namespace starfactor

#endif
