#include "starfactor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "starfactor/critical.hpp"
#include "starfactor/edge_factor.hpp"

namespace starfactor {

void parallel_for(long n_items, int n_threads, const std::function<void(long)>& fn) {
    if (n_threads <= 1 || n_items <= 1) {
        for (long i = 0; i < n_items; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= n_items) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<long>(n_threads, n_items);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

// iso(G-S) for every subset via neighbor masks; n <= 16
bool exists_iso_above(const Graph& g, int factor_num, int factor_den) {
    // true iff some S has factor_den * iso(G-S) > factor_num * |S|
    int n = g.order();
    std::vector<uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int iso = 0;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1) && (nbr[v] & ~mask) == 0) iso++;
        if (factor_den * iso > factor_num * __builtin_popcount(mask)) return true;
    }
    return false;
}

bool canonical_shape_ok(const Graph& g, const HalfIntegralMatching& h, std::string& why) {
    int n = g.order();
    std::vector<int> half_deg(n, 0), one_deg(n, 0);
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        if (h.units(i) == 1) {
            half_deg[e.u]++;
            half_deg[e.v]++;
        } else if (h.units(i) == 2) {
            one_deg[e.u]++;
            one_deg[e.v]++;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (one_deg[v] > 1 || (one_deg[v] == 1 && half_deg[v] > 0)) {
            why = "weight-1 edge not isolated at " + std::to_string(v);
            return false;
        }
        if (half_deg[v] != 0 && half_deg[v] != 2) {
            why = "half-weight degree not 0 or 2 at " + std::to_string(v);
            return false;
        }
    }
    // half edges form circuits (degree two everywhere); check odd length
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < g.size(); ++i)
        if (h.units(i) == 1) {
            adj[g.edges()[i].u].push_back(g.edges()[i].v);
            adj[g.edges()[i].v].push_back(g.edges()[i].u);
        }
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (adj[v].empty() || seen[v]) continue;
        int len = 0, prev = -1, cur = v;
        do {
            seen[cur] = true;
            len++;
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        } while (cur != v);
        if (len % 2 == 0 || len < 3) {
            why = "half-weight circuit of even or short length " + std::to_string(len);
            return false;
        }
    }
    return true;
}

}  // namespace

GraphCheckResult check_identities(const Graph& g, bool with_brute_factor_arms, bool critical_audit) {
    GraphCheckResult r;
    std::string g6 = emit_graph6(g);
    auto fail = [&](const std::string& item, const std::string& detail) {
        r.failures.push_back({item, g6 + ": " + detail});
    };
    auto tally = [&](const std::string& item, long k) { r.counts.push_back({item, k}); };
    int n = g.order();

    try {
        Rat mf = fractional_matching_number(g);
        long long n_mf = n - 2 * mf.num / mf.den;
        StructureReport sr = structure_report(g);
        int def = n - 2 * sr.ge.mu;
        bool has_iso_vertex = false;
        for (int v = 0; v < n; ++v) has_iso_vertex = has_iso_vertex || g.degree(v) == 0;

        // Theorem 9 chain + minimal factor weight
        tally("theorem9_identity_chain", 1);
        auto [bw_val, bw_set] = brute_witness(g);
        if (bw_val != n_mf) fail("theorem9_identity_chain", "max(iso-|S|) != |V| - 2 mu_f");
        if (def - sr.nc != n_mf) fail("theorem9_identity_chain", "def - nc != |V| - 2 mu_f");
        if (sr.n != n_mf) fail("theorem9_identity_chain", "structure n != |V| - 2 mu_f");
        if (!has_iso_vertex && n > 0) {
            StarCycleFactor f = build_minimal_factor(g);
            if (f.weight() != n_mf) fail("theorem9_identity_chain", "minimal factor weight != |V| - 2 mu_f");
        }

        // Theorem 3: fractional perfect matching criterion
        tally("theorem3_fpm_criterion", 1);
        if ((mf == Rat(n, 2)) != (bw_val == 0)) fail("theorem3_fpm_criterion", "iso-condition mismatch");

        // canonical form + idempotence
        tally("canonical_form", 1);
        HalfIntegralMatching canon = canonical_max_fractional_matching(g, sr);
        std::string why;
        if (!canonical_shape_ok(g, canon, why)) fail("canonical_form", why);
        if (canonicalize(g, canon).half_units != canon.half_units) fail("canonical_form", "not a fixed point");

        // Theorem 16 / Theorem 4 criterion
        tally("theorem16_min_k12", 1);
        auto mk = min_k12(g);
        if (n <= 16) {
            bool violated = exists_iso_above(g, 2, 1);
            if (mk.has_value() != !violated) fail("theorem16_min_k12", "existence != iso(G-S) <= 2|S| criterion");
        }
        if (mk && *mk != n_mf) fail("theorem16_min_k12", "min_k12 != |V| - 2 mu_f");
        if (with_brute_factor_arms && n <= 8) {
            auto bmk = brute_min_k12(g);
            if (bmk != mk) fail("theorem16_min_k12", "brute arm disagrees");
        }

        int alpha = n <= 20 ? brute_independence_number(g) : -1;

        // Corollary 13: alpha <= (|V| + l - nc) / 2
        if (alpha >= 0) {
            tally("corollary13_alpha_bound", 1);
            if (2ll * alpha > n + n_mf - sr.nc) fail("corollary13_alpha_bound", "bound violated");
        }

        // Corollary 17 ratio bounds for (m,n) in {(3,2),(2,1),(5,4)}
        if (n <= 16 && alpha >= 0) {
            tally("corollary17_ratio_bounds", 1);
            const int pairs[3][2] = {{3, 2}, {2, 1}, {5, 4}};
            for (auto& p : pairs) {
                int pm = p[0], pn = p[1];
                if (exists_iso_above(g, pm, pn)) continue;  // hypothesis fails
                if (!mk) {
                    fail("corollary17_ratio_bounds", "hypothesis holds but no {K11,K12,Cm}-factor");
                    continue;
                }
                if ((pm + pn) * static_cast<long long>(*mk) > (pm - pn) * static_cast<long long>(n))
                    fail("corollary17_ratio_bounds", "min_k12 bound violated");
                if ((pm + pn) * static_cast<long long>(alpha) > pm * static_cast<long long>(n))
                    fail("corollary17_ratio_bounds", "alpha bound violated");
            }
        }

        // per-edge equivalences
        std::vector<StarCycleFactor> all_factors;
        bool factors_enumerated = false;
        if (with_brute_factor_arms && n <= 8 && !has_iso_vertex) {
            all_factors = brute_factor_enum(g);
            factors_enumerated = true;
        }
        if (mk.has_value() && g.size() > 0) {
            tally("theorem19_threeway", g.size());
            for (const Edge& e : g.edges()) {
                bool poly = k12_factor_with_edge(g, e).has_value();
                if (n <= 16) {
                    auto cert = find_exclusion_certificate(g, e);
                    if (poly == cert.has_value())
                        fail("theorem19_threeway",
                             "certificate existence disagrees at " + std::to_string(e.u) + "-" + std::to_string(e.v));
                }
                if (factors_enumerated) {
                    bool brute_has = false;
                    for (const auto& f : all_factors)
                        if (f.max_star() <= 2 && f.contains(e)) brute_has = true;
                    if (poly != brute_has)
                        fail("theorem19_threeway",
                             "brute enumeration disagrees at " + std::to_string(e.u) + "-" + std::to_string(e.v));
                }
                // Corollary 20: excluded from all factors => zero in every maximum fractional matching
                if (!poly) {
                    tally("corollary20_forced_zero", 1);
                    if (!forced_zero_weight(g, e))
                        fail("corollary20_forced_zero",
                             "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not forced to zero");
                }
            }
        }

        // Corollary 15: nonzero weight possible <=> edge of a minimal star-cycle factor
        if (factors_enumerated && g.size() > 0) {
            tally("corollary15_minimal_factor_edges", g.size());
            long long lmin = -1;
            for (const auto& f : all_factors)
                if (lmin < 0 || f.weight() < lmin) lmin = f.weight();
            if (!all_factors.empty() && lmin != n_mf) fail("corollary15_minimal_factor_edges", "l(G) != |V| - 2 mu_f");
            std::set<Edge> minimal_edges;
            for (const auto& f : all_factors)
                if (f.weight() == lmin)
                    for (const Edge& e : f.edges()) minimal_edges.insert(e);
            for (const Edge& e : g.edges()) {
                bool frac = max_fractional_matching_with_edge(g, e).has_value();
                bool mini = minimal_edges.count(e) > 0;
                if (frac != mini)
                    fail("corollary15_minimal_factor_edges",
                         "mismatch at " + std::to_string(e.u) + "-" + std::to_string(e.v));
            }
        }

        // Theorem 18: gadget decision == gamma criterion
        if (n <= 7) {
            tally("theorem18_gamma_criterion", 6);
            MultiGraph mg = MultiGraph::from_graph(g);
            const int fams[6][2] = {{1, 1}, {1, 2}, {2, 2}, {0, 1}, {1, 3}, {2, 3}};
            for (auto& fam : fams) {
                DegreeBounds b = DegreeBounds::uniform(n, fam[0], fam[1]);
                bool via_gadget = gf_factor_exists(mg, b);
                bool via_gamma = brute_gamma_min(mg, b) >= 0;
                if (via_gadget != via_gamma)
                    fail("theorem18_gamma_criterion",
                         "(" + std::to_string(fam[0]) + "," + std::to_string(fam[1]) + ") disagrees");
            }
        }

        // critical battery
        if (critical_audit && g.size() <= 40 && g.size() > 0) {
            CriticalityReport rep = is_k_critical(g);
            if (rep.critical) {
                tally("critical_audit", 1);
                ConjectureScan scan = conjecture_scan(g, rep);
                for (const auto& [name, chk] : scan.checks) {
                    if (chk.holds) continue;
                    if (chk.severity == "bug") fail("critical_audit", name + " failed: " + chk.witness);
                    else fail("critical_conjectures", name + " counterexample candidate: " + chk.witness);
                }
            }
        }
    } catch (const Error& e) {
        fail("internal_invariants", e.what());
    }
    return r;
}

VerifyReport run_verify_suite(const VerifyOptions& opt) {
    std::vector<Graph> corpus;
    if (opt.cache_path) {
        std::ifstream in(*opt.cache_path);
        if (!in) throw_parse("cannot open corpus cache " + *opt.cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            corpus.push_back(parse_graph6(line));
        }
    } else {
        CorpusSpec spec;
        spec.n_max = opt.n_max;
        spec.connected_only = true;
        corpus = enumerate_graphs(spec);
    }
    if (opt.random_count > 0) {
        auto extra = random_connected_graphs(opt.random_count, opt.random_n_min, opt.random_n_max, opt.seed);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
    }

    std::vector<GraphCheckResult> slots(corpus.size());
    parallel_for(static_cast<long>(corpus.size()), opt.threads, [&](long i) {
        const Graph& g = corpus[i];
        slots[i] = check_identities(g, g.order() <= 8, opt.critical_audit);
    });

    std::map<std::string, VerifyItem> items;
    const char* order[] = {"theorem9_identity_chain", "theorem3_fpm_criterion",  "canonical_form",
                           "theorem16_min_k12",       "theorem19_threeway",      "corollary15_minimal_factor_edges",
                           "corollary13_alpha_bound", "corollary17_ratio_bounds", "corollary20_forced_zero",
                           "theorem18_gamma_criterion", "critical_audit",         "critical_conjectures",
                           "internal_invariants"};
    for (const char* name : order) items[name] = VerifyItem{name, 0, 0, ""};
    for (const auto& slot : slots) {
        for (const auto& [name, k] : slot.counts) items[name].checked += k;
        for (const auto& [name, detail] : slot.failures) {
            items[name].failed++;
            if (items[name].detail.empty()) items[name].detail = detail;
        }
    }
    VerifyReport rep;
    rep.corpus_size = static_cast<long>(corpus.size());
    for (const char* name : order) rep.items.push_back(items[name]);
    return rep;
}

}  // namespace starfactor
