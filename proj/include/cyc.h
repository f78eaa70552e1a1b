#ifndef CYC_H
#define CYC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CYC_API __declspec(dllexport)
#else
#define CYC_API __attribute__((visibility("default")))
#endif

/* Every call returns a status; on failure cyc_last_error() describes it.
   Strings returned through char** are owned by the caller and released with
   cyc_string_free. Boolean outputs are 0 or 1. */
typedef enum cyc_status {
    CYC_OK = 0,
    CYC_ERR_DEGREE,
    CYC_ERR_LOOP,
    CYC_ERR_SIZE,
    CYC_ERR_PARAMETER,
    CYC_ERR_FORMAT,
    CYC_ERR_INVALID_DECOMPOSITION,
    CYC_ERR_BAG_MISMATCH,
    CYC_ERR_OVERLAP,
    CYC_ERR_BUDGET,
    CYC_ERR_EDGE_NOT_FOUND,
    CYC_ERR_EMBEDDING,
    CYC_ERR_NOT_PLANAR,
    CYC_ERR_PRECONDITION,
    CYC_ERR_BACKEND,
    CYC_ERR_PARITY,
    CYC_ERR_SIZE_MISMATCH,
    CYC_ERR_NOT_CUBIC_PLANAR,
    CYC_ERR_UNKNOWN_NAME,
    CYC_ERR_IO,
    CYC_ERR_NULL_ARGUMENT,
    CYC_ERR_INTERNAL
} cyc_status;

typedef struct cyc_graph cyc_graph;
typedef struct cyc_embedding cyc_embedding;
typedef struct cyc_dp_context cyc_dp_context;

CYC_API const char* cyc_status_name(cyc_status status);
/* Message of the last failing call on this thread; "" after a success. */
CYC_API const char* cyc_last_error(void);
CYC_API void cyc_string_free(char* s);

/* ---- graphs: a multigraph plus its annotated set R ---- */

/* Vertices 0..n-1, no edges, R empty. */
CYC_API cyc_status cyc_graph_create(int n, cyc_graph** out);
/* Graph file text: `p cyc <n> <m>`, `e <u> <v>`, `r <v...>`, `c ...`. */
CYC_API cyc_status cyc_graph_parse(const char* text, cyc_graph** out);
CYC_API cyc_status cyc_graph_read_file(const char* path, cyc_graph** out);
CYC_API void cyc_graph_destroy(cyc_graph* g);
CYC_API cyc_status cyc_graph_add_edge(cyc_graph* g, int u, int v);
CYC_API int cyc_graph_num_vertices(const cyc_graph* g);
CYC_API int cyc_graph_num_edges(const cyc_graph* g);
/* Replaces R. Vertices must exist. */
CYC_API cyc_status cyc_graph_set_annotated(cyc_graph* g, const int* vertices, size_t count);
/* Writes up to `capacity` members of R and the full size to *count. */
CYC_API cyc_status cyc_graph_annotated(const cyc_graph* g, int* out, size_t capacity, size_t* count);
/* Canonical graph file text with sorted edges. */
CYC_API cyc_status cyc_graph_serialize(const cyc_graph* g, char** out);

/* ---- embeddings: rotation systems over the graph's edge ids ---- */

/* `rot <v>: <e...>` and `outer <f>`. With file_edge_order set, edge ids count
   `e` lines of the graph file the handle was parsed from. */
CYC_API cyc_status cyc_embedding_parse(const cyc_graph* g, const char* text, int file_edge_order, cyc_embedding** out);
CYC_API cyc_status cyc_embedding_read_file(const cyc_graph* g, const char* path, int file_edge_order,
                                          cyc_embedding** out);
/* *out is NULL and *planar 0 when the graph has no planar embedding. */
CYC_API cyc_status cyc_embedding_planar(const cyc_graph* g, cyc_embedding** out, int* planar);
CYC_API cyc_status cyc_embedding_serialize(const cyc_embedding* emb, char** out);
/* Checks the rotation system against the graph and counts faces. */
CYC_API cyc_status cyc_embedding_num_faces(const cyc_graph* g, const cyc_embedding* emb, int* faces);
CYC_API void cyc_embedding_destroy(cyc_embedding* emb);

/* ---- brute-force oracle ---- */

typedef struct cyc_budget {
    int max_vertices;
    int64_t max_subsets;
    int64_t time_limit_ms;
} cyc_budget;

CYC_API void cyc_budget_default(cyc_budget* budget);

/* Every k-subset of R lies on a cycle. A NULL budget means the defaults. */
CYC_API cyc_status cyc_oracle_pac(const cyc_graph* g, int k, const cyc_budget* budget, int* answer);
/* A k-subset of R on no cycle; *found is 0 when none exists. */
CYC_API cyc_status cyc_oracle_uncyclable_subset(const cyc_graph* g, int k, const cyc_budget* budget, int* found,
                                                int* out, size_t capacity, size_t* count);
CYC_API cyc_status cyc_oracle_cyclability(const cyc_graph* g, const cyc_budget* budget, int* value);
CYC_API cyc_status cyc_oracle_hamiltonian(const cyc_graph* g, const cyc_budget* budget, int* answer);
CYC_API cyc_status cyc_oracle_hamiltonian_with_edge(const cyc_graph* g, int u, int v, const cyc_budget* budget,
                                                    int* answer);
CYC_API cyc_status cyc_oracle_hypohamiltonian(const cyc_graph* g, const cyc_budget* budget, int* answer);
/* A cycle through the given vertices, written in order. */
CYC_API cyc_status cyc_oracle_cycle_through(const cyc_graph* g, const int* vertices, size_t count,
                                            const cyc_budget* budget, int* found, int* out, size_t capacity,
                                            size_t* length);

/* ---- treewidth DP ---- */

typedef struct cyc_dp_options {
    int width_cap;
    int lift_as_printed; /* insert-time lifts as printed; unsound, for demonstration */
    int join_as_printed; /* join any K1, K2 instead of K1 = K2 */
    int prune;
    int audit;
    int trace;
} cyc_dp_options;

CYC_API void cyc_dp_options_default(cyc_dp_options* options);
CYC_API cyc_status cyc_dp_context_create(cyc_dp_context** out);
CYC_API void cyc_dp_context_destroy(cyc_dp_context* ctx);

/* Decides PAC(g, R, k). td_text is a .td decomposition or NULL for exact
   treewidth. ctx may be NULL. The JSON report (schema 1) holds the answer,
   width, table statistics and the trace when requested. */
CYC_API cyc_status cyc_dp_solve(const cyc_graph* g, int k, const char* td_text, const cyc_dp_options* options,
                                cyc_dp_context* ctx, int* answer, char** report_json);

/* Exact treewidth up to 32 vertices, else the min-fill bound (*exact = 0).
   td_text receives the decomposition in .td format when non-NULL. */
CYC_API cyc_status cyc_treewidth(const cyc_graph* g, int* width, int* exact, char** td_text);
/* Validates a .td decomposition; violations are newline separated. */
CYC_API cyc_status cyc_td_validate(const cyc_graph* g, const char* td_text, int* ok, char** violations);

/* ---- planar certificates and pipeline ---- */

CYC_API cyc_status cyc_verify_concentric(const cyc_graph* g, const cyc_embedding* emb, const char* cert_json, int* ok,
                                         char** violations);
CYC_API cyc_status cyc_verify_annulus(const cyc_graph* g, const cyc_embedding* emb, const char* cert_json, int* ok,
                                      char** violations);

typedef struct cyc_pipeline_options {
    const char* constants; /* `key=value,...` overrides or NULL */
    int reduced;           /* start from the reduced constants instead of the published ones */
    int dp_width_cap;
    int fallback_non_planar; /* oracle instead of CYC_ERR_NOT_PLANAR */
    cyc_budget oracle;
} cyc_pipeline_options;

CYC_API void cyc_pipeline_options_default(cyc_pipeline_options* options);
/* emb may be NULL; a planar embedding is then computed when needed. The JSON
   report holds the answer, constants, step counters and the trace. */
CYC_API cyc_status cyc_pipeline_solve(const cyc_graph* g, const cyc_embedding* emb, int k,
                                      const cyc_pipeline_options* options, int* answer, char** report_json);

/* ---- generators ---- */

/* Catalog graph by name. *emb is NULL for non-plane graphs and *cert_json
   NULL when the entry has no railed-annulus certificate. emb, description and
   cert_json may each be NULL when not wanted. */
CYC_API cyc_status cyc_generate(const char* name, const int64_t* params, size_t count, uint64_t seed, cyc_graph** out,
                                cyc_embedding** emb, char** description, char** cert_json);
/* Split graph with k' = k(k-1)/2+1; roles_json lists every vertex role. */
CYC_API cyc_status cyc_clique_reduction(const cyc_graph* g, int k, cyc_graph** out, int* k_prime, char** roles_json);
/* edges holds 2·count endpoints, one chosen edge per instance. */
CYC_API cyc_status cyc_cross_composition(const cyc_graph* const* graphs, const int* edges, size_t count,
                                         int require_cubic_planar, cyc_graph** out, int* k);

/* ---- acceptance suite ---- */

typedef void (*cyc_line_callback)(const char* line, void* user);

/* criterion 0 runs all eight. One line per criterion goes to the callback. */
CYC_API cyc_status cyc_suite_run(int quick, int criterion, cyc_line_callback callback, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
