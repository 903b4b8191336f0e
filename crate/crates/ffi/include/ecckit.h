#ifndef ECCKIT_H
#define ECCKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  ECCKIT_STATUS_OK = 0,
  ECCKIT_STATUS_NULL_POINTER = 1,
  ECCKIT_STATUS_INVALID_INPUT = 2,
  ECCKIT_STATUS_PARSE = 3,
  ECCKIT_STATUS_CAPACITY = 4,
  ECCKIT_STATUS_PRECONDITION = 5,
  ECCKIT_STATUS_BUDGET = 6,
  ECCKIT_STATUS_UNSUPPORTED = 7,
  /**
   * Hypothesis violation, stalled elimination or a bound counterexample.
   */
  ECCKIT_STATUS_CONSTRUCTION = 8,
  ECCKIT_STATUS_IO = 9,
  ECCKIT_STATUS_OUT_OF_RANGE = 10,
  ECCKIT_STATUS_PANIC = 11,
} EcckitStatus;

/**
 * Cover construction selector, mirroring `ecckit cover --method`.
 */
typedef enum {
  ECCKIT_METHOD_AUTO = 0,
  ECCKIT_METHOD_NO_DOMINATING = 1,
  ECCKIT_METHOD_DIAM3 = 2,
  ECCKIT_METHOD_THEOREM1 = 3,
  ECCKIT_METHOD_THEOREM8 = 4,
  ECCKIT_METHOD_FALLBACK = 5,
} EcckitMethod;

/**
 * Opaque cover handle: the cliques plus the report they came with.
 */
typedef struct EcckitCover EcckitCover;

/**
 * Opaque graph handle.
 */
typedef struct EcckitGraph EcckitGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next ecckit call on the same thread.
 */
const char *ecckit_last_error(void);

/**
 * Static, NUL-terminated library version.
 */
const char *ecckit_version(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`). `edges` may be null when `edge_count` is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values and `out` must be writable.
 */
EcckitStatus ecckit_graph_new(size_t n, const size_t *edges, size_t edge_count, EcckitGraph **out);

/**
 * Parses an edge list (`dimacs` false) or DIMACS text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
EcckitStatus ecckit_graph_parse(const char *text, bool dimacs, EcckitGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from `ecckit_graph_new`/`ecckit_graph_parse` not yet freed.
 */
void ecckit_graph_free(EcckitGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t ecckit_graph_order(const EcckitGraph *g);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t ecckit_graph_edge_count(const EcckitGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
EcckitStatus ecckit_is_alpha_two(const EcckitGraph *g, bool *out);

/**
 * Structure report as JSON; release with `ecckit_string_free`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
EcckitStatus ecckit_classify_json(const EcckitGraph *g, char **out);

/**
 * Builds a cover. `edge_u`/`edge_v` pick the dominating edge for
 * `Theorem1`; pass `SIZE_MAX` for both to let the library choose.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
EcckitStatus ecckit_cover(const EcckitGraph *g,
                          EcckitMethod method,
                          size_t edge_u,
                          size_t edge_v,
                          EcckitCover **out);

/**
 * # Safety
 * `c` must be null or a live cover handle.
 */
void ecckit_cover_free(EcckitCover *c);

/**
 * Number of cliques, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
size_t ecckit_cover_len(const EcckitCover *c);

/**
 * Size bound the cover was built against.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
size_t ecckit_cover_bound(const EcckitCover *c);

/**
 * Whether every edge is covered and every set is a clique.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
bool ecckit_cover_is_valid(const EcckitCover *c);

/**
 * Borrowed view of clique `index`: sorted vertices, valid while `c` lives.
 *
 * # Safety
 * `c` must be a live cover handle; `vertices` and `len` must be writable.
 */
EcckitStatus ecckit_cover_clique(const EcckitCover *c,
                                 size_t index,
                                 const size_t **vertices,
                                 size_t *len);

/**
 * Full cover report as JSON; release with `ecckit_string_free`.
 *
 * # Safety
 * `c` must be a live cover handle and `out` writable.
 */
EcckitStatus ecckit_cover_json(const EcckitCover *c, char **out);

/**
 * Exact minimum cover size. Zero for `max_n` or `node_budget` selects the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
EcckitStatus ecckit_exact_ecc(const EcckitGraph *g,
                              size_t max_n,
                              uint64_t node_budget,
                              size_t *out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from an ecckit `_json` call, not yet freed.
 */
void ecckit_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ECCKIT_H */
