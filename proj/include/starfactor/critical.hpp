#ifndef STARFACTOR_CRITICAL_HPP
#define STARFACTOR_CRITICAL_HPP

#include <map>
#include <string>

#include "starfactor/factor.hpp"

namespace starfactor {

// Exact chromatic index by branch-and-bound edge coloring (class membership
// only: try Delta colors, fall back to Delta+1). Bounded by edge count.
int chromatic_index(const Graph& g, int edge_bound = 40);
bool edge_colorable(const Graph& g, int colors);

struct CriticalityReport {
    int delta = 0;
    int chi_prime = 0;
    bool critical = false;
    std::optional<int> k;  // = delta when critical
};
// Critical: connected, chi' = Delta+1, and every single-edge deletion is
// Delta-edge-colorable.
CriticalityReport is_k_critical(const Graph& g, int edge_bound = 40);

struct ValCheck {
    bool holds = true;
    std::optional<Edge> violator;
};
// Vizing's adjacency lemma at every edge in both orientations.
ValCheck vizing_adjacency_holds(const Graph& g);

struct SigmaProfile {
    // sigma[v][i] for neighbors(v)[i]: vertices of N(w)\{v} with degree at
    // least 2*Delta - d(v) - d(w) + 2, for w = neighbors(v)[i]
    std::vector<std::vector<int>> sigma;
    std::vector<int> p_min, p;
};
SigmaProfile sigma_profile(const Graph& g);

bool p_lemma_check(const Graph& g);

struct IsoRatioCheck {
    bool holds = true;
    std::optional<VertexSet> violator;
};
// iso(G-S) < (3/2 - 1/Delta)|S| for every nonempty S, exhaustively.
IsoRatioCheck iso_ratio_bound_check(const Graph& g, int exhaustive_bound = 16);

struct MeredithResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for the replaced vertex
    int u_base = 0;  // first of the k degree-(k-1) vertices of the inserted K_{k,k-1}
    int w_base = 0;  // first of the k-1 opposite-side vertices
};
// Replace v by K_{k,k-1}, joining v's former neighbors to distinct
// degree-(k-1) vertices of the inserted block.
MeredithResult meredith_extension(const Graph& g, int v, int k);

int k_deficiency(const Graph& g);

struct CheckOutcome {
    bool holds = true;
    std::string severity;  // "bug" for theorem checks, "counterexample-candidate" for conjectures
    std::string witness;   // empty when holding
};
struct ConjectureScan {
    std::map<std::string, CheckOutcome> checks;
    bool theorems_hold = true;
    bool conjectures_hold = true;
};
// Per-claim audit of a certified critical graph; errors when g is not critical.
ConjectureScan conjecture_scan(const Graph& g, const CriticalityReport& report, int exhaustive_bound = 16);
ConjectureScan conjecture_scan(const Graph& g);

}  // namespace starfactor

#endif
