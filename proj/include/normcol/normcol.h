#ifndef NORMCOL_H
#define NORMCOL_H

#include <stddef.h>

#if defined(NORMCOL_BUILDING_LIBRARY)
#define NORMCOL_API __attribute__((visibility("default")))
#else
#define NORMCOL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. Every handle returned through an out-parameter is owned by
 * the caller and released with the matching *_free function. */
typedef struct normcol_graph normcol_graph;
typedef struct normcol_coloring normcol_coloring;
typedef struct normcol_enum normcol_enum;

typedef enum {
  NORMCOL_OK = 0,
  NORMCOL_E_PARSE = 1,
  NORMCOL_E_DEGREE = 2,
  NORMCOL_E_LOOP = 3,
  NORMCOL_E_INVALID_ARGUMENT = 4,
  NORMCOL_E_VERIFICATION = 5,
  NORMCOL_E_LIMIT = 6,
  NORMCOL_E_IO = 7,
  NORMCOL_E_INTERNAL = 8
} normcol_status;

typedef enum {
  NORMCOL_FORMAT_AUTO = 0,
  NORMCOL_FORMAT_EDGE_LIST = 1,
  NORMCOL_FORMAT_SPARSE6 = 2
} normcol_format;

typedef enum { NORMCOL_OUT_TSV = 0, NORMCOL_OUT_JSON = 1 } normcol_output;

typedef enum { NORMCOL_POOR = 0, NORMCOL_RICH = 1, NORMCOL_ABNORMAL = 2 } normcol_edge_class;

typedef enum {
  NORMCOL_SOLVE_OPTIMAL = 0,
  NORMCOL_SOLVE_INFEASIBLE = 1,
  NORMCOL_SOLVE_LIMIT = 2
} normcol_solve_status;

typedef struct {
  int colors;              /* default 5 */
  int abnormal_budget;     /* < 0: none */
  long long node_limit;    /* < 0: none */
  int deterministic;       /* default 1 */
} normcol_search_config;

/* Message of the last failed call on this thread; "" after a success. */
NORMCOL_API const char* normcol_last_error(void);
NORMCOL_API const char* normcol_status_name(normcol_status status);
/* Releases strings returned through char** out-parameters. */
NORMCOL_API void normcol_string_free(char* s);

/* ---- graphs ---- */

NORMCOL_API normcol_status normcol_graph_parse(const char* text, size_t length, normcol_format format,
                                               normcol_graph** out);
NORMCOL_API normcol_status normcol_graph_catalog(const char* name, const int* params, size_t param_count,
                                                 normcol_graph** out);
/* endpoints holds 2 * edge_count vertex ids. */
NORMCOL_API normcol_status normcol_graph_from_edges(int vertex_count, const int* endpoints, size_t edge_count,
                                                    normcol_graph** out);
NORMCOL_API void normcol_graph_free(normcol_graph* g);
NORMCOL_API int normcol_graph_vertex_count(const normcol_graph* g);
NORMCOL_API int normcol_graph_edge_count(const normcol_graph* g);
NORMCOL_API normcol_status normcol_graph_edge(const normcol_graph* g, int edge, int* u, int* v);
NORMCOL_API normcol_status normcol_graph_write(const normcol_graph* g, normcol_format format, char** out);
NORMCOL_API normcol_status normcol_graph_connectivity(const normcol_graph* g, int* bridgeless,
                                                      int* edge_connectivity_capped_at_4,
                                                      int* cyclically_4_edge_connected);

/* ---- enumeration of connected simple cubic graphs ---- */

NORMCOL_API normcol_status normcol_enum_create(int n, int deduplicate, normcol_enum** out);
/* Sets *out to NULL once the stream is exhausted. */
NORMCOL_API normcol_status normcol_enum_next(normcol_enum* it, normcol_graph** out);
NORMCOL_API void normcol_enum_free(normcol_enum* it);

/* ---- colorings ---- */

NORMCOL_API normcol_status normcol_coloring_create(int k, const int* colors, size_t edge_count, normcol_coloring** out);
NORMCOL_API normcol_status normcol_coloring_parse(const normcol_graph* g, const char* text, size_t length,
                                                  normcol_coloring** out);
NORMCOL_API void normcol_coloring_free(normcol_coloring* c);
NORMCOL_API int normcol_coloring_k(const normcol_coloring* c);
NORMCOL_API int normcol_coloring_size(const normcol_coloring* c);
/* Copies min(capacity, size) colors. */
NORMCOL_API normcol_status normcol_coloring_colors(const normcol_coloring* c, int* out, size_t capacity);
NORMCOL_API normcol_status normcol_coloring_write(const normcol_coloring* c, char** out);

/* classes receives edge_count normcol_edge_class values; either out may be NULL. */
NORMCOL_API normcol_status normcol_classify(const normcol_graph* g, const normcol_coloring* c, int* classes,
                                            int* abnormal_count);

/* ---- solver ---- */

NORMCOL_API void normcol_search_config_default(normcol_search_config* cfg);
/* cfg may be NULL for the defaults; witness may be NULL. best is -1 when no
 * coloring was found. */
NORMCOL_API normcol_status normcol_min_abnormal(const normcol_graph* g, const normcol_search_config* cfg,
                                                normcol_solve_status* status, int* best, long long* nodes,
                                                normcol_coloring** witness);
NORMCOL_API normcol_status normcol_exhaustive_oracle(const normcol_graph* g, int k, normcol_solve_status* status,
                                                     int* best, normcol_coloring** witness);
/* node_limit < 0 for none. *exists is 0 or 1; witness may be NULL. */
NORMCOL_API normcol_status normcol_has_normal_k(const normcol_graph* g, int k, long long node_limit, int* exists,
                                                normcol_coloring** witness);
NORMCOL_API normcol_status normcol_chi_n(const normcol_graph* g, int max_colors, int* out);

/* ---- Petersen-colorings; phi arrays have one entry per edge, -1 = unmapped ---- */

NORMCOL_API normcol_status normcol_p_coloring(const normcol_graph* g, const normcol_coloring* c, int allow_abnormal,
                                              int* phi);
NORMCOL_API normcol_status normcol_verify_p_coloring(const normcol_graph* g, const int* phi, size_t edge_count,
                                                     int* ok);
NORMCOL_API normcol_status normcol_pullback(const normcol_graph* g, const int* phi, size_t edge_count,
                                            normcol_coloring** out);
/* degrees receives vertex_count entries. */
NORMCOL_API normcol_status normcol_preimage_degrees(const normcol_graph* g, const normcol_coloring* c,
                                                    const int* petersen_edges, size_t count, int* degrees);

/* ---- constructions ---- */

/* variant: disjoint, cyclic1, cyclic2, vertex_replacement, two_cut, k4_gadget.
 * second, edges, coloring and out_coloring may be NULL where unused; vertex < 0
 * picks the default. */
NORMCOL_API normcol_status normcol_construct(const char* variant, const normcol_graph* source,
                                             const normcol_graph* second, const int* edges, size_t edge_count,
                                             int vertex, int t, const normcol_coloring* coloring,
                                             normcol_graph** out_graph, normcol_coloring** out_coloring);
NORMCOL_API normcol_status normcol_k_abnormal_example(int k, normcol_graph** out_graph,
                                                      normcol_coloring** out_coloring);
/* The composite graph the demo colors for (g, variant, t). */
NORMCOL_API normcol_status normcol_demo_host(const normcol_graph* g, const char* variant, int t, normcol_graph** out);

/* ---- reports; *verified receives the re-checked verdict ---- */

NORMCOL_API normcol_status normcol_report_classify(const normcol_graph* g, const normcol_coloring* c,
                                                   normcol_output out, char** text, int* verified);
NORMCOL_API normcol_status normcol_report_solve(const normcol_graph* g, const normcol_search_config* cfg,
                                                normcol_output out, char** text, int* verified);
NORMCOL_API normcol_status normcol_report_chi_n(const normcol_graph* g, int max_colors, normcol_output out,
                                                char** text, int* verified);
NORMCOL_API normcol_status normcol_report_scan(int n, const normcol_search_config* cfg, int jobs, int timing,
                                               normcol_output out, char** text, int* verified);
/* c may be NULL to let the solver find a normal coloring. */
NORMCOL_API normcol_status normcol_report_jaeger(const normcol_graph* g, const normcol_coloring* c,
                                                 normcol_output out, char** text, int* verified);
NORMCOL_API normcol_status normcol_report_demo(const normcol_graph* g, const char* variant, int t,
                                               const normcol_coloring* coloring_of_h,
                                               const normcol_search_config* cfg, normcol_output out, char** text,
                                               int* verified);
NORMCOL_API normcol_status normcol_report_question31(const normcol_graph* const* graphs, size_t count,
                                                     const normcol_search_config* cfg, normcol_output out,
                                                     char** text, int* verified);
NORMCOL_API normcol_status normcol_plot_svg(const normcol_graph* g, const normcol_coloring* c, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* NORMCOL_H */
