#ifndef DBSEQ_DBSEQ_H
#define DBSEQ_DBSEQ_H

/*
 * C interface to libdbseq: de Bruijn graphs of languages with forbidden
 * factors, de Bruijn sequences, the greedy minimal walk and its Eulerian
 * criteria, exact Eulerian-circuit counts, and brute-force certification.
 *
 * Handles are opaque. Every fallible call returns a dbs_status; on failure
 * dbs_last_error() holds a message for the calling thread until its next
 * call into the library. Strings handed out through char** parameters are
 * owned by the caller and released with dbs_string_free.
 *
 * Words and vertex labels are the concatenation of their symbol
 * characters, e.g. "01010". Structured results are JSON documents.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DBSEQ_BUILDING)
#    define DBS_API __declspec(dllexport)
#  else
#    define DBS_API __declspec(dllimport)
#  endif
#else
#  define DBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dbs_status {
  DBS_OK = 0,
  DBS_ERROR_INVALID_ARGUMENT = 1,
  DBS_ERROR_NOT_IRREDUCIBLE = 2,
  DBS_ERROR_AMBIGUOUS_SCC = 3,
  DBS_ERROR_EMPTY_GRAPH = 4,
  DBS_ERROR_NOT_EULERIAN = 5,
  DBS_ERROR_WORD_NOT_IN_LANGUAGE = 6,
  DBS_ERROR_VERTEX_NOT_IN_GRAPH = 7,
  DBS_ERROR_NO_SUCH_WALK = 8,
  DBS_ERROR_TOO_LARGE = 9,
  DBS_ERROR_INTERNAL_INCONSISTENCY = 10,
  DBS_ERROR_IO = 11,
  DBS_ERROR_INTERNAL = 12
} dbs_status;

typedef struct dbs_language dbs_language;
typedef struct dbs_graph dbs_graph;

DBS_API const char* dbs_version(void);
DBS_API const char* dbs_status_name(dbs_status status);
DBS_API const char* dbs_last_error(void);
DBS_API void dbs_string_free(char* s);

/* Languages. `alphabet` lists the symbols in order, one character each. */
DBS_API dbs_status dbs_language_create(const char* alphabet, const char* const* forbidden, size_t forbidden_count,
                                       dbs_language** out);
/* Reads the text format (alphabet on line 1, one forbidden word per
 * following nonempty line) and appends `extra` forbidden words. */
DBS_API dbs_status dbs_language_load(const char* path, const char* const* extra, size_t extra_count,
                                     dbs_language** out);
DBS_API void dbs_language_destroy(dbs_language* lang);

DBS_API dbs_status dbs_language_alphabet(const dbs_language* lang, char** out);
DBS_API dbs_status dbs_language_is_circular_word(const dbs_language* lang, const char* word, int* out);
/* JSON array of the words of length n, lexicographic. */
DBS_API dbs_status dbs_language_words(const dbs_language* lang, size_t n, char** out_json);
DBS_API dbs_status dbs_language_count_words(const dbs_language* lang, size_t n, uint64_t* out);
DBS_API dbs_status dbs_language_growth_rate(const dbs_language* lang, size_t nmax, double* out);
/* {irreducible, span, components, excluded:[words], diagnostic} */
DBS_API dbs_status dbs_language_check_irreducible(const dbs_language* lang, size_t n, int* out, char** out_json);

/* Graphs. The graph keeps its own copy of the language. */
DBS_API dbs_status dbs_graph_build(const dbs_language* lang, size_t span, dbs_graph** out);
DBS_API void dbs_graph_destroy(dbs_graph* g);

DBS_API size_t dbs_graph_span(const dbs_graph* g);
DBS_API size_t dbs_graph_vertex_count(const dbs_graph* g);
DBS_API size_t dbs_graph_arc_count(const dbs_graph* g);
DBS_API dbs_status dbs_graph_max_vertex(const dbs_graph* g, char** out);
/* Borrowed; NULL when the build raised no warning. */
DBS_API const char* dbs_graph_warning(const dbs_graph* g);

DBS_API dbs_status dbs_graph_to_json(const dbs_graph* g, char** out_json);
/* highlight_t != 0 styles the max-label subgraph. */
DBS_API dbs_status dbs_graph_to_dot(const dbs_graph* g, int highlight_t, char** out_dot);
/* Vertex reached by reading `word` from `start`. */
DBS_API dbs_status dbs_graph_walk_target(const dbs_graph* g, const char* start, const char* word, char** out);

/* Walk documents {start, label, arcCount, eulerian}. start may be NULL for m. */
DBS_API dbs_status dbs_graph_eulerian_cycle(const dbs_graph* g, const char* start, char** out_json);
DBS_API dbs_status dbs_graph_minimal_walk(const dbs_graph* g, char** out_json);

/* Analysis document; fails with DBS_ERROR_INTERNAL_INCONSISTENCY if the
 * decision criteria disagree. `answer` receives the decision. */
DBS_API dbs_status dbs_graph_decide(const dbs_graph* g, int* answer, char** out_json);

/* Eulerian circuits from a fixed starting arc, as a decimal string. */
DBS_API dbs_status dbs_graph_count_eulerian(const dbs_graph* g, char** out_decimal);
DBS_API dbs_status dbs_graph_count_trees(const dbs_graph* g, const char* root, char** out_decimal);
DBS_API dbs_status dbs_graph_count_report(const dbs_graph* g, char** out_json);

/* Oracle entry points refuse graphs with more than max_arcs arcs
 * (0 selects the default of 24). */
DBS_API dbs_status dbs_graph_certify(const dbs_graph* g, size_t max_arcs, int* pass, char** out_json);
/* {start, label, root, rootLabel} */
DBS_API dbs_status dbs_graph_global_minimal(const dbs_graph* g, size_t max_arcs, char** out_json);
DBS_API dbs_status dbs_graph_count_circuits_brute(const dbs_graph* g, size_t max_arcs, uint64_t* out);

/* Runs every verifier; `violations` receives the total count. */
DBS_API dbs_status dbs_graph_verify(const dbs_graph* g, size_t* violations, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DBSEQ_DBSEQ_H */
