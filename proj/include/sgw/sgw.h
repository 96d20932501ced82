/* C interface to the signed graph library.
 *
 * Objects are opaque handles released with their matching free function.
 * Every call returns an sgw_status; on failure sgw_last_error() describes the
 * problem (the message is per thread and valid until the next failing call).
 * Strings returned through char** are owned by the caller and released with
 * sgw_string_free(). Vertices are 0-based, signs are +1 or -1.
 */
#ifndef SGW_SGW_H
#define SGW_SGW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SGW_BUILDING_LIBRARY)
#define SGW_API __attribute__((visibility("default")))
#else
#define SGW_API
#endif

typedef struct sgw_graph sgw_graph;
typedef struct sgw_decomposition sgw_decomposition;

typedef enum sgw_status {
  SGW_OK = 0,
  SGW_ERR_ARGUMENT = 1,       /* null pointer, unknown name, bad parameter */
  SGW_ERR_PARSE = 2,          /* malformed graph text or JSON */
  SGW_ERR_INVALID_GRAPH = 3,  /* loop, duplicate edge, vertex out of range, bad sign */
  SGW_ERR_PRECONDITION = 4,   /* disconnected, no edges, different underlying graphs, ... */
  SGW_ERR_BOUND_EXCEEDED = 5, /* chromatic search passed its bound */
  SGW_ERR_GUARD_EXCEEDED = 6, /* verification guard refused part of the request */
  SGW_ERR_TOO_LARGE = 7,      /* input beyond a documented size cap */
  SGW_ERR_INTERNAL = 8,       /* an internal consistency check failed */
  SGW_ERR_ALLOC = 9
} sgw_status;

SGW_API const char* sgw_status_string(sgw_status status);
SGW_API const char* sgw_last_error(void);
SGW_API void sgw_string_free(char* s);

/* Graphs */
SGW_API sgw_status sgw_graph_parse(const char* text, sgw_graph** out);
SGW_API sgw_status sgw_graph_from_edges(int order, const int* u, const int* v, const int* sign, size_t count,
                                        sgw_graph** out);
SGW_API sgw_status sgw_make(const char* spec, sgw_graph** out); /* "UC(5)", "SPal5_star", ... */
SGW_API void sgw_graph_free(sgw_graph* g);
SGW_API int sgw_graph_order(const sgw_graph* g);
SGW_API size_t sgw_graph_size(const sgw_graph* g);
SGW_API sgw_status sgw_graph_edge(const sgw_graph* g, size_t index, int* u, int* v, int* sign);
SGW_API sgw_status sgw_graph_to_text(const sgw_graph* g, char** out);
SGW_API sgw_status sgw_graph_to_json(const sgw_graph* g, char** out);

/* Products and decomposition. coords_json may be NULL. */
SGW_API sgw_status sgw_product(const sgw_graph* const* graphs, size_t count, sgw_graph** out, char** coords_json);
SGW_API sgw_status sgw_decompose(const sgw_graph* g, sgw_decomposition** out);
SGW_API size_t sgw_decomposition_factor_count(const sgw_decomposition* d);
SGW_API sgw_status sgw_decomposition_factor(const sgw_decomposition* d, size_t index, sgw_graph** out);
SGW_API sgw_status sgw_decomposition_to_json(const sgw_decomposition* d, char** out);
SGW_API void sgw_decomposition_free(sgw_decomposition* d);
SGW_API sgw_status sgw_is_s_prime(const sgw_graph* g, int* s_prime);

/* Switching */
SGW_API sgw_status sgw_equivalent(const sgw_graph* a, const sgw_graph* b, int* equivalent, char** switch_set_json);
SGW_API sgw_status sgw_balance(const sgw_graph* g, int* balanced, char** witness_json);

/* Signed chromatic number. lo and hi <= 0 mean "no bound". On
 * SGW_ERR_BOUND_EXCEEDED the known interval is stored in interval_lo and
 * interval_hi (either may be NULL). certificate_json may be NULL. */
SGW_API sgw_status sgw_chromatic_number(const sgw_graph* g, int lo, int hi, int* k, char** certificate_json,
                                        int* interval_lo, int* interval_hi);
SGW_API sgw_status sgw_check_certificate(const sgw_graph* g, const char* certificate_json, int* valid);

/* Verification suites: "cycle_table" [max_len], "kpq" [max_p max_q],
 * "uc_bc_gap" [max_q max_r], "grid_fig1c", "k4_classes", "k18" (needs
 * unbounded != 0), "all". On SGW_ERR_GUARD_EXCEEDED the outputs hold the
 * completed part of the report. */
SGW_API sgw_status sgw_verify(const char* suite, const int* params, size_t param_count, int unbounded, char** text,
                              char** json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SGW_SGW_H */
