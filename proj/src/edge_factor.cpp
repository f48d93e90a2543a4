#include "starfactor/edge_factor.hpp"

#include <algorithm>

namespace starfactor {

void validate_certificate(const Graph& g, const ExclusionCertificate& c) {
    check_internal(c.S.test(c.edge.u) && c.S.test(c.edge.v), "certificate: edge endpoints not in S");
    int iso = isolated_count(g, c.S).count;
    check_internal(iso == c.iso_count, "certificate: stale iso count");
    int s = c.S.count();
    check_internal(2 * s - 2 <= iso && iso <= 2 * s, "certificate: iso(G-S) outside [2|S|-2, 2|S|]");
}

bool edge_in_some_k12_factor(const Graph& g, Edge e) {
    if (!g.adjacent(e.u, e.v)) throw_arg("edge not in graph");
    if (!min_k12(g).has_value()) throw_arg("graph has no {K11,K12,Cm}-factor at all");
    return k12_factor_with_edge(g, e).has_value();
}

std::optional<ExclusionCertificate> find_exclusion_certificate(const Graph& g, Edge e, int exhaustive_bound) {
    if (!g.adjacent(e.u, e.v)) throw_arg("edge not in graph");
    int n = g.order();
    if (n > exhaustive_bound)
        throw_bound("certificate search limited to " + std::to_string(exhaustive_bound) + " vertices");
    // subsets containing both endpoints, by increasing size then lexicographic
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != e.u && v != e.v) others.push_back(v);
    int k = static_cast<int>(others.size());
    std::vector<uint64_t> masks;
    for (uint64_t m = 0; m < (1ull << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](uint64_t a, uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
    for (uint64_t m : masks) {
        VertexSet S(n);
        S.set(e.u);
        S.set(e.v);
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1) S.set(others[i]);
        int iso = isolated_count(g, S).count;
        int s = S.count();
        if (2 * s - 2 <= iso && iso <= 2 * s) {
            ExclusionCertificate c{S, iso, e};
            validate_certificate(g, c);
            return c;
        }
    }
    return std::nullopt;
}

bool forced_zero_weight(const Graph& g, Edge e) {
    return !max_fractional_matching_with_edge(g, e).has_value();
}

}  // namespace starfactor
