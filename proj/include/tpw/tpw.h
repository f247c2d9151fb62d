/* C interface to the tree-partition library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * call returns a tpw_status; on anything but TPW_OK, tpw_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * allocated by the library and released with tpw_string_free. Vertex indices
 * are 0-based here; the text formats use 1-based ids.
 */
#ifndef TPW_H
#define TPW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TPW_API __declspec(dllexport)
#else
#define TPW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpw_status {
  TPW_OK = 0,
  TPW_VIOLATION = 1,     /* an asserted invariant or verification failed */
  TPW_ERR_INPUT = 2,     /* malformed input or violated precondition */
  TPW_ERR_CAPACITY = 3,  /* instance too large for an exact oracle */
  TPW_ERR_CONTRACT = 4,  /* internal postcondition failed */
  TPW_ERR_INTERNAL = 5
} tpw_status;

typedef enum tpw_format { TPW_FORMAT_TEXT = 0, TPW_FORMAT_DOT = 1 } tpw_format;

typedef struct tpw_graph tpw_graph;
typedef struct tpw_td tpw_td;
typedef struct tpw_tp tpw_tp;

typedef struct tpw_exact_options {
  int max_n;               /* unbudgeted searches refuse graphs above this */
  uint64_t node_limit;     /* 0: unlimited */
  uint64_t time_budget_ms; /* 0: unlimited */
  int chordal_pruning;     /* nonzero: connected bags only, chordal graphs */
} tpw_exact_options;

typedef struct tpw_exact_result {
  int lower_bound; /* certified; the optimum when complete */
  int upper_bound; /* width of the returned witness */
  int complete;
  uint64_t nodes;
} tpw_exact_result;

TPW_API const char* tpw_last_error(void);
TPW_API void tpw_string_free(char* s);
TPW_API const char* tpw_version(void);

/* Graphs. edges holds m pairs (u0,v0,u1,v1,...). */
TPW_API tpw_status tpw_graph_create(int n, const int* edges, size_t m, tpw_graph** out);
TPW_API tpw_status tpw_graph_read(const char* text, tpw_graph** out);
TPW_API tpw_status tpw_graph_write(const tpw_graph* g, tpw_format format, char** out);
/* params: whitespace-separated key=value pairs, e.g. "k=2 delta=7 n=3". */
TPW_API tpw_status tpw_graph_generate(const char* family, const char* params, uint64_t seed, tpw_graph** out);
TPW_API int tpw_graph_vertex_count(const tpw_graph* g);
TPW_API size_t tpw_graph_edge_count(const tpw_graph* g);
TPW_API int tpw_graph_max_degree(const tpw_graph* g);
TPW_API tpw_status tpw_graph_is_chordal(const tpw_graph* g, int* out);
TPW_API void tpw_graph_free(tpw_graph* g);

/* Tree decompositions. */
TPW_API tpw_status tpw_td_read(const char* text, tpw_td** out);
TPW_API tpw_status tpw_td_write(const tpw_td* td, char** out);
TPW_API int tpw_td_width(const tpw_td* td);
TPW_API tpw_status tpw_td_exact(const tpw_graph* g, tpw_td** out);
TPW_API tpw_status tpw_td_heuristic(const tpw_graph* g, tpw_td** out);
/* TPW_OK if valid for g, TPW_VIOLATION with the failed axiom otherwise. */
TPW_API tpw_status tpw_td_verify(const tpw_graph* g, const tpw_td* td);
TPW_API void tpw_td_free(tpw_td* td);

/* Tree-partitions. */
TPW_API tpw_status tpw_tp_read(const char* text, tpw_tp** out);
TPW_API tpw_status tpw_tp_write(const tpw_tp* tp, char** out);
TPW_API int tpw_tp_width(const tpw_tp* tp);
TPW_API int tpw_tp_bag_count(const tpw_tp* tp);
TPW_API tpw_status tpw_tp_verify(const tpw_graph* g, const tpw_tp* tp);
TPW_API void tpw_tp_free(tpw_tp* tp);

/* Bounded-width construction from a decomposition. delta 0 means the
 * maximum degree of g. trace may be NULL; otherwise it receives JSON lines. */
TPW_API tpw_status tpw_construct(const tpw_graph* g, const tpw_td* td, int delta, tpw_tp** out, char** trace);

TPW_API void tpw_exact_options_init(tpw_exact_options* opts);
/* Exact tree-partition-width, component by component. An exhausted budget
 * still returns TPW_OK with complete = 0. witness may be NULL. */
TPW_API tpw_status tpw_exact(const tpw_graph* g, const tpw_exact_options* opts, tpw_exact_result* result,
                             tpw_tp** witness);

/* Splits bags into connected pieces; g must be chordal. */
TPW_API tpw_status tpw_refine(const tpw_graph* g, const tpw_tp* tp, tpw_tp** out);

/* Audit rows use the CSV header from tpw_csv_header. Returns TPW_VIOLATION
 * when an asserted inequality fails; messages then lists them. */
TPW_API const char* tpw_csv_header(void);
TPW_API tpw_status tpw_audit(const tpw_graph* g, const tpw_exact_options* opts, char** csv_row, char** messages);

/* Runs a plan given as text, or a built-in suite when plan_text is NULL.
 * Nonzero fields of overrides replace the plan's budget. */
TPW_API tpw_status tpw_experiment(const char* plan_text, const char* suite, const tpw_exact_options* overrides,
                                  int jobs, char** csv, char** messages);

/* gamma(k+1)(3 gamma delta - 1) as "a+b*sqrt2", and its ceiling. */
TPW_API tpw_status tpw_lemma3_bound(int k, int delta, char** exact_text, int64_t* ceiling);

#ifdef __cplusplus
}
#endif

#endif
