#include "starfactor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "starfactor/json_io.hpp"

using namespace starfactor;

struct sf_graph {
    Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return SF_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SF_ERR_INTERNAL;
    }
}

Edge checked_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw_arg("edge endpoint out of range");
    return Edge(u, v);
}

}  // namespace

extern "C" {

int sf_parse(const char* text, const char* format, sf_graph** out) {
    if (!text || !format || !out) return SF_ERR_ARG;
    return guarded([&] {
        std::string fmt(format);
        Graph g;
        if (fmt == "graph6") g = parse_graph6(text);
        else if (fmt == "edgelist") g = parse_edge_list(text);
        else if (fmt == "dimacs") g = parse_dimacs(text);
        else throw_arg("unknown format '" + fmt + "'");
        *out = new sf_graph{std::move(g)};
    });
}

void sf_graph_free(sf_graph* g) { delete g; }

int sf_graph_order(const sf_graph* g) { return g ? g->g.order() : -1; }
int sf_graph_size(const sf_graph* g) { return g ? g->g.size() : -1; }

int sf_graph_to_graph6(const sf_graph* g, char** out) {
    if (!g || !out) return SF_ERR_ARG;
    return guarded([&] { *out = dup_string(emit_graph6(g->g)); });
}

int sf_analyze(const sf_graph* g, char** out_json) {
    if (!g || !out_json) return SF_ERR_ARG;
    return guarded([&] { *out_json = dup_string(analyze_to_json(g->g)); });
}

int sf_build_factor(const sf_graph* g, int max_star, char** out_json) {
    if (!g || !out_json) return SF_ERR_ARG;
    return guarded([&] {
        if (max_star == 0) {
            StarCycleFactor f = build_minimal_factor(g->g);
            *out_json = dup_string(factor_to_json(g->g, f));
        } else {
            CappedBuild b = build_factor_capped(g->g, max_star);
            *out_json = dup_string(capped_build_to_json(g->g, b, max_star));
        }
    });
}

int sf_factor_with_edge(const sf_graph* g, int u, int v, int cert_bound, char** out_json) {
    if (!g || !out_json) return SF_ERR_ARG;
    return guarded([&] {
        *out_json = dup_string(factor_with_edge_to_json(g->g, checked_edge(g->g, u, v), cert_bound));
    });
}

int sf_edge_test(const sf_graph* g, int u, int v, int cert_bound, char** out_json) {
    if (!g || !out_json) return SF_ERR_ARG;
    return guarded([&] { *out_json = dup_string(edge_test_to_json(g->g, checked_edge(g->g, u, v), cert_bound)); });
}

int sf_critical_report(const sf_graph* g, int color_edge_bound, char** out_json) {
    if (!g || !out_json) return SF_ERR_ARG;
    return guarded([&] { *out_json = dup_string(critical_to_json(g->g, color_edge_bound, 16)); });
}

int sf_critical_scan(int n_max, int color_edge_bound, int threads, char** out_json) {
    if (!out_json) return SF_ERR_ARG;
    return guarded([&] {
        if (n_max < 1 || n_max > 10) throw_bound("critical scan limited to 10 vertices");
        *out_json = dup_string(critical_scan_to_json(n_max, color_edge_bound, threads));
    });
}

int sf_verify(int n_max, const char* cache_path_or_null, int random_count, unsigned long long seed,
              int threads, char** out_json) {
    if (!out_json) return SF_ERR_ARG;
    return guarded([&] {
        VerifyOptions opt;
        opt.n_max = n_max;
        if (cache_path_or_null) opt.cache_path = std::string(cache_path_or_null);
        opt.random_count = random_count;
        opt.seed = seed;
        opt.threads = threads;
        VerifyReport rep = run_verify_suite(opt);
        *out_json = dup_string(verify_to_json(rep));
        if (!rep.all_pass()) {
            t_last_error = "verification failures present";
            // report content still returned; caller inspects all_pass
        }
    });
}

void sf_free_string(char* s) { std::free(s); }

const char* sf_last_error(void) { return t_last_error.c_str(); }

}  // extern "C"
