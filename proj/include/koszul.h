/* C interface to the Koszul binomial-edge-ideal toolkit.
 *
 * Every function returns a koszul_status; outputs are passed back through
 * pointer arguments. Strings returned through char** are heap-allocated
 * and must be released with koszul_string_free. On any failure the
 * thread-local message from koszul_last_error() describes the problem.
 */
#ifndef KOSZUL_H
#define KOSZUL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum koszul_status {
  KOSZUL_OK = 0,
  KOSZUL_ERR_PARSE = 1,    /* malformed input text */
  KOSZUL_ERR_ARG = 2,      /* invalid argument or handle */
  KOSZUL_ERR_GUARD = 3,    /* cost guard tripped (size or time limit) */
  KOSZUL_ERR_CHECK = 4,    /* a mathematical check failed */
  KOSZUL_ERR_INTERNAL = 5  /* internal invariant violated; report a bug */
} koszul_status;

typedef struct koszul_graph koszul_graph;

const char* koszul_last_error(void);
void koszul_string_free(char* s);

/* Construction and inspection. */
koszul_status koszul_graph_from_edge_list(const char* text,
                                          koszul_graph** out);
koszul_status koszul_graph_from_graph6(const char* text, koszul_graph** out);
koszul_status koszul_graph_named(const char* name, int param,
                                 koszul_graph** out);
void koszul_graph_free(koszul_graph* g);
koszul_status koszul_graph_vertex_count(const koszul_graph* g, int* out);
koszul_status koszul_graph_edge_count(const koszul_graph* g, int* out);
koszul_status koszul_graph_to_graph6(const koszul_graph* g, char** out);

/* Full classification with certificates and witnesses, as JSON. */
koszul_status koszul_classify_json(const koszul_graph* g, char** json_out);

/* Reduced lex Groebner basis of the binomial edge ideal under the vertex
 * order given by `order` (a permutation of 1..n, length n; NULL means
 * identity). JSON carries the basis, the initial ideal, and the maximum
 * generator degree. */
koszul_status koszul_groebner_json(const koszul_graph* g, const int* order,
                                   int len, char** json_out);

/* Betti table of the initial ideal from the same data, as JSON. */
koszul_status koszul_betti_json(const koszul_graph* g, const int* order,
                                int len, char** json_out);

/* Reduced basis of J_{G\e} : f_e for the edge e = {u, v}, as JSON. */
koszul_status koszul_colon_json(const koszul_graph* g, int u, int v,
                                char** json_out);

/* Colon-ideal identity for the edge {u, v}: compares the independently
 * computed colon with its combinatorial description. KOSZUL_ERR_CHECK on
 * mismatch. */
koszul_status koszul_colon_check(const koszul_graph* g, int u, int v);

/* Named self-contained checks: "plucker", "tent", "betti_c4".
 * KOSZUL_OK iff the check passes; detail_out (optional) gets a JSON
 * report either way. */
koszul_status koszul_check_suite(const char* name, char** detail_out);

/* Exhaustive survey of connected graphs with at most max_n vertices
 * (max_n <= 8). format is "json" or "csv". With algebraic != 0, closedness
 * is also cross-checked against a quadratic-basis search for n <= 5. */
koszul_status koszul_survey(int max_n, int algebraic, const char* format,
                            char** out);

#ifdef __cplusplus
}
#endif

#endif
