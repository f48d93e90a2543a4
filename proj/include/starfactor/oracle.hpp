#ifndef STARFACTOR_ORACLE_HPP
#define STARFACTOR_ORACLE_HPP

#include "starfactor/factor.hpp"

namespace starfactor {

// Brute-force references, deliberately naive and independent of the
// polynomial algorithms they check. Each is bounded; exceeding the bound is
// an error, not silent degradation.

int brute_max_matching(const Graph& g);                       // |E| <= 24
Rat brute_fractional(const Graph& g);                         // |E| <= 18
std::pair<int, VertexSet> brute_witness(const Graph& g);      // n <= 16
int brute_independence_number(const Graph& g);                // n <= 20
long long brute_gamma_min(const MultiGraph& h, const DegreeBounds& b);  // n <= 7
int brute_chromatic_index(const Graph& g);                    // |E| <= 12

// All star-cycle factors (as edge-set-distinct realizations), optionally with
// a star-size cap and/or a required edge. n <= 8.
std::vector<StarCycleFactor> brute_factor_enum(const Graph& g, std::optional<int> max_star = {},
                                               std::optional<Edge> through_edge = {});
std::optional<int> brute_min_k12(const Graph& g);             // n <= 8

struct CorpusSpec {
    int n_max = 6;
    bool connected_only = true;
    bool dedup = true;  // one representative per isomorphism class
};
// All graphs up to n_max vertices, deterministic order. Non-deduped
// (labeled) enumeration is supported only for n_max <= 6.
std::vector<Graph> enumerate_graphs(const CorpusSpec& spec);

// Seeded, platform-independent random connected graphs.
std::vector<Graph> random_connected_graphs(int count, int n_min, int n_max, uint64_t seed);

// Seeded random graphs without a connectivity guarantee.
std::vector<Graph> random_graphs(int count, int n_min, int n_max, uint64_t seed);

}  // namespace starfactor

#endif
