/* C interface to the modularity-density column-generation solver.
 *
 * Conventions:
 *   - Every fallible call returns a modcg_status; MODCG_OK means success.
 *   - On failure, modcg_last_error() describes what went wrong. The string
 *     is thread-local and valid until the next failing call on the thread.
 *   - Output strings (char**) are heap-allocated; release them with
 *     modcg_string_free. Output handles are released with their _free call.
 *   - Structured inputs and outputs are JSON documents, so the surface
 *     stays stable as options grow.
 */
#ifndef MODCG_H
#define MODCG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modcg_status {
  MODCG_OK = 0,
  MODCG_ERROR_ARGUMENT = 1,  /* unusable option or parameter value */
  MODCG_ERROR_PARSE = 2,     /* malformed input text */
  MODCG_ERROR_IO = 3,        /* file could not be read */
  MODCG_ERROR_TOO_LARGE = 4, /* instance exceeds a hard size guard */
  MODCG_ERROR_LIMIT = 5,     /* a work budget ran out before any result */
  MODCG_ERROR_INTERNAL = 6   /* internal consistency check failed */
} modcg_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* modcg_version(void);

/* Message of the most recent failure on this thread; never NULL. */
const char* modcg_last_error(void);

/* Releases any char* produced by this library. NULL is allowed. */
void modcg_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

typedef struct modcg_graph modcg_graph;

/* Parses edge-list text: one "u v" pair per line, '#' comments, blank lines
 * ignored, a lone token declares an isolated vertex. Tokens are labels.
 * With one_indexed nonzero, tokens must be integers >= 1. */
modcg_status modcg_graph_parse(const char* text, int one_indexed,
                               modcg_graph** out);

/* Reads a file and parses it with the same rules. */
modcg_status modcg_graph_read_file(const char* path, int one_indexed,
                                   modcg_graph** out);

void modcg_graph_free(modcg_graph* g);

int modcg_graph_vertex_count(const modcg_graph* g);
long long modcg_graph_edge_count(const modcg_graph* g);

/* Label of vertex v (0-based internal id). Owned by the graph; NULL when v
 * is out of range. */
const char* modcg_graph_vertex_label(const modcg_graph* g, int v);

/* Canonical edge-list text of the graph (internal ids, sorted). */
modcg_status modcg_graph_edge_list(const modcg_graph* g, char** out);

/* ---- solving ----------------------------------------------------------- */

/* Runs the column-generation solver. options_json may be NULL or "{}";
 * recognized keys (all optional):
 *   name             instance name echoed into the report   (string)
 *   epsilon          pricing violation threshold, > 0       (default 1e-6)
 *   p_grid, q_grid   peeling blend grids                    (arrays of reals)
 *   time_limit_s     wall-clock budget in seconds           (default 1800)
 *   max_iterations   pricing-round cap, 0 = unlimited       (default 0)
 *   column_cap       columns accepted per round, 0 = all    (default 0)
 *   skip_k1          skip size-1 subproblems                (default true)
 *   early_exit_exact stop the exact sweep on first find     (default false)
 * The report JSON documents the run: instance, config, result (dual bound,
 * status, clusters, objective value, certificate flag), per-round trace,
 * and totals. */
modcg_status modcg_solve(const modcg_graph* g, const char* options_json,
                         char** report_json);

/* One pass of the peeling pricing heuristic against supplied multipliers.
 * options_json keys: lambda (array of n reals, required), epsilon,
 * p_grid, q_grid. Output: {"sets": [[label, ...], ...], "violations":
 * [...]}, both ordered by decreasing violation. */
modcg_status modcg_peel(const modcg_graph* g, const char* options_json,
                        char** out_json);

/* Exhaustive pricing reference over all nonempty vertex subsets (n <= 25).
 * options_json keys: lambda (required). Output: {"pricing_objective": best
 * violation value, "set": [label, ...]}. */
modcg_status modcg_enumerate_pricing(const modcg_graph* g,
                                     const char* options_json,
                                     char** out_json);

/* Brute-force references. options_json keys: mode (required; one of
 * "partition", "maxcut", "densest", "pricing"), min_clusters (partition
 * mode), lambda (pricing mode). Outputs:
 *   partition: {"value": D, "clusters": [[label, ...], ...]}
 *   maxcut:    {"value": count, "sides": [[...], [...]]}
 *   densest:   {"value": density, "set": [...]}
 *   pricing:   {"value": violation, "set": [...]}                      */
modcg_status modcg_oracle(const modcg_graph* g, const char* options_json,
                          char** out_json);

/* Hardness-instance generators. options_json keys: kind (required; "md"
 * builds the cut blow-up from a 3-regular source, "ap" the clique pricing
 * instance from an (n-4)-regular graph), k (required), m_override (md only).
 * edge_list_out receives the solver-facing instance; metadata_json its
 * parameters (block size, thresholds, multipliers, regularity, and whether
 * the instance certifies the reduction). */
modcg_status modcg_gadget(const modcg_graph* g, const char* options_json,
                          char** edge_list_out, char** metadata_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MODCG_H */
