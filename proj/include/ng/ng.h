/*
 * ng.h: C interface to the Nordhaus-Gaddum spectral toolkit.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an ng_status; on
 * failure ng_last_error() describes the problem for the calling thread until
 * the next failing call on that thread. Vertex and eigenvalue indices are
 * 1-based throughout.
 */
#ifndef NG_NG_H
#define NG_NG_H

#include <stddef.h>
#include <stdint.h>

#if defined(NG_BUILDING_LIBRARY)
#define NG_API __attribute__((visibility("default")))
#else
#define NG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ng_status {
  NG_OK = 0,
  NG_ERR_INVALID_ARGUMENT = 1,
  NG_ERR_PARSE = 2,
  NG_ERR_SIZE_CAP = 3,
  NG_ERR_INTERNAL = 4,
  NG_ERR_BUFFER_TOO_SMALL = 5
} ng_status;

typedef enum ng_blowup_variant { NG_BLOWUP_INDEPENDENT = 0, NG_BLOWUP_CLIQUE = 1 } ng_blowup_variant;

typedef enum ng_family { NG_FAMILY_TOP = 0, NG_FAMILY_BOTTOM = 1 } ng_family;

typedef enum ng_method { NG_METHOD_EXHAUSTIVE = 0, NG_METHOD_LOCAL_SEARCH = 1 } ng_method;

typedef struct ng_graph ng_graph;
typedef struct ng_matrix01 ng_matrix01;
typedef struct ng_report_list ng_report_list;
typedef struct ng_record ng_record;
typedef struct ng_ratio_table ng_ratio_table;

NG_API const char* ng_last_error(void);
NG_API const char* ng_version(void);

/* Size cap applied to every graph and matrix (default 4096, or NG_MAX_ORDER). */
NG_API size_t ng_get_max_order(void);
NG_API ng_status ng_set_max_order(size_t cap);

/* ---- graphs ------------------------------------------------------------ */

NG_API ng_status ng_graph_parse_graph6(const char* text, ng_graph** out);

/* Generator text as "kind:args", e.g. "cycle:5", "complete_bipartite:2:3",
 * "erdos_renyi:20:0.5[:seed]". `seed` is used when the text has none and
 * has_seed is nonzero. */
NG_API ng_status ng_graph_generate(const char* spec, int has_seed, uint64_t seed, ng_graph** out);

/* Edges as a flat array of 2*edge_count 1-based endpoints. */
NG_API ng_status ng_graph_from_edges(size_t n, const size_t* endpoints, size_t edge_count, ng_graph** out);

NG_API void ng_graph_free(ng_graph* g);

NG_API size_t ng_graph_order(const ng_graph* g);
NG_API size_t ng_graph_edge_count(const ng_graph* g);
/* 1 if adjacent, 0 if not, -1 on bad arguments. */
NG_API int ng_graph_adjacent(const ng_graph* g, size_t u, size_t v);
NG_API int ng_graph_equal(const ng_graph* a, const ng_graph* b);

NG_API ng_status ng_graph_complement(const ng_graph* g, ng_graph** out);
NG_API ng_status ng_graph_blowup(const ng_graph* g, size_t t, ng_blowup_variant variant, ng_graph** out);
NG_API ng_status ng_graph_induced(const ng_graph* g, const size_t* vertices, size_t count, ng_graph** out);

/* Writes a NUL-terminated graph6 string. *needed receives the required
 * buffer size including the terminator; NG_ERR_BUFFER_TOO_SMALL when
 * capacity is insufficient (buf may be NULL to query). */
NG_API ng_status ng_graph_to_graph6(const ng_graph* g, char* buf, size_t capacity, size_t* needed);

/* ---- spectra ----------------------------------------------------------- */

/* Adjacency eigenvalues, descending, into out[0..n-1]; capacity >= n. */
NG_API ng_status ng_graph_spectrum(const ng_graph* g, double* out, size_t capacity);

/* Eigenvalues (descending) of the symmetric n x n row-major matrix `a`. */
NG_API ng_status ng_symmetric_eigenvalues(const double* a, size_t n, double* out);

NG_API ng_status ng_blowup_spectrum(const double* spectrum, size_t n, size_t t, ng_blowup_variant variant,
                                    double* out, size_t capacity);

NG_API ng_status ng_regular_shift_spectrum(const double* spectrum, size_t n, double r, double a, double b,
                                           double tol, double* out);

/* ---- constructions ----------------------------------------------------- */

NG_API ng_status ng_construct_a(size_t k, ng_matrix01** out);
NG_API void ng_matrix01_free(ng_matrix01* m);
NG_API size_t ng_matrix01_order(const ng_matrix01* m);
/* 0-based entry access; returns -1 when out of range. */
NG_API int ng_matrix01_entry(const ng_matrix01* m, size_t i, size_t j);

NG_API ng_status ng_a_spectrum_closed_form(size_t k, double* out, size_t capacity);
NG_API ng_status ng_extremal_graph(size_t k, size_t t, ng_graph** out);

/* ---- bound reports ----------------------------------------------------- */

typedef struct ng_bound_report {
  const char* bound_id;  /* static string */
  int applicable;
  int strict;
  double lhs;
  double rhs;
  double margin;
  int satisfied;
  double tol;
  size_t n;
  int has_param;
  long long param;   /* s or k */
  int has_index;
  size_t index;      /* eigenvalue index i (witness checks) */
  const size_t* index_set;  /* X for partial_square_sum; owned by the list */
  size_t index_set_size;
  const char* note;  /* owned by the list; empty when none */
} ng_bound_report;

NG_API ng_status ng_run_battery(const ng_graph* g, long long s_max, double tol, ng_report_list** out);
NG_API ng_status ng_witness_check(size_t k, size_t t, double tol, ng_report_list** out);
NG_API size_t ng_report_list_size(const ng_report_list* list);
NG_API ng_status ng_report_list_get(const ng_report_list* list, size_t i, ng_bound_report* out);
/* Number of reports with applicable && !satisfied. */
NG_API size_t ng_report_list_violations(const ng_report_list* list);
NG_API void ng_report_list_free(ng_report_list* list);

typedef struct ng_ramsey_certificate {
  int found;
  int is_clique; /* 1: clique in G, 0: independent set in G */
  int precondition_met;
  size_t size;
  size_t vertices[12];
} ng_ramsey_certificate;

NG_API ng_status ng_find_ramsey_certificate(const ng_graph* g, long long k, ng_ramsey_certificate* out);

/* ---- extremal search --------------------------------------------------- */

typedef struct ng_record_view {
  size_t n;
  size_t s;
  ng_family family;
  double value;
  const char* witness; /* graph6, owned by the record */
  ng_method method;
  int exact;
  uint64_t evaluations;
  int has_seed;
  uint64_t seed;
} ng_record_view;

NG_API ng_status ng_exhaustive_f(size_t n, size_t s, ng_family family, int allow_override, unsigned threads,
                                 ng_record** out);
NG_API ng_status ng_local_search_f(size_t n, size_t s, ng_family family, uint64_t seed, size_t iterations,
                                   size_t restarts, unsigned threads, ng_record** out);
NG_API void ng_record_view_get(const ng_record* rec, ng_record_view* out);
NG_API void ng_record_free(ng_record* rec);

typedef struct ng_ratio_row {
  size_t n;
  double value;
  double ratio;
  double target;
  double gap;
  ng_method method;
  const char* witness;
} ng_ratio_row;

NG_API ng_status ng_compute_ratio_table(size_t s, ng_family family, const size_t* orders, size_t count, uint64_t seed,
                                size_t iterations, size_t restarts, int allow_override, ng_ratio_table** out);
NG_API size_t ng_ratio_table_size(const ng_ratio_table* t);
NG_API ng_status ng_ratio_table_get(const ng_ratio_table* t, size_t i, ng_ratio_row* out);
NG_API void ng_ratio_table_free(ng_ratio_table* t);

#ifdef __cplusplus
}
#endif

#endif /* NG_NG_H */
