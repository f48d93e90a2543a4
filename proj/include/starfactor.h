/* C API for the starfactor graph-factor engine.
 *
 * All analysis entry points return JSON documents as heap strings owned by
 * the caller (release with sf_free_string). Functions return SF_OK or an
 * error code; sf_last_error() describes the most recent failure on the
 * calling thread. Graph handles are opaque and immutable.
 */
#ifndef STARFACTOR_H
#define STARFACTOR_H

#ifdef __cplusplus
extern "C" {
#endif

#define SF_OK 0
#define SF_ERR_PARSE 1    /* malformed input */
#define SF_ERR_BOUND 2    /* configured size bound exceeded */
#define SF_ERR_INTERNAL 3 /* internal invariant violated */
#define SF_ERR_ARG 4      /* bad argument */

typedef struct sf_graph sf_graph;

/* format: "graph6", "edgelist", or "dimacs" */
int sf_parse(const char* text, const char* format, sf_graph** out);
void sf_graph_free(sf_graph* g);
int sf_graph_order(const sf_graph* g);
int sf_graph_size(const sf_graph* g);
int sf_graph_to_graph6(const sf_graph* g, char** out);

/* Gallai-Edmonds structure, matching numbers, witness set. */
int sf_analyze(const sf_graph* g, char** out_json);

/* Minimal star-cycle factor; max_star 0 picks the guaranteed cap. */
int sf_build_factor(const sf_graph* g, int max_star, char** out_json);

/* {K11,K12,Cm}-factor through edge u-v, or the exclusion certificate. */
int sf_factor_with_edge(const sf_graph* g, int u, int v, int cert_bound, char** out_json);

/* Edge membership decision plus forced-zero test and certificate. */
int sf_edge_test(const sf_graph* g, int u, int v, int cert_bound, char** out_json);

/* Criticality report with the conjecture/theorem audit when critical. */
int sf_critical_report(const sf_graph* g, int color_edge_bound, char** out_json);

/* Audit every critical graph among connected graphs up to n_max vertices. */
int sf_critical_scan(int n_max, int color_edge_bound, int threads, char** out_json);

/* Oracle-equivalence suite over the exhaustive corpus (plus random arm). */
int sf_verify(int n_max, const char* cache_path_or_null, int random_count, unsigned long long seed,
              int threads, char** out_json);

void sf_free_string(char* s);
const char* sf_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
