#ifndef LEAFSPAN_H
#define LEAFSPAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LeafspanStatus {
  LEAFSPAN_STATUS_OK = 0,
  LEAFSPAN_STATUS_NULL_POINTER = 1,
  LEAFSPAN_STATUS_PARSE = 2,
  LEAFSPAN_STATUS_INVALID_ARGUMENT = 3,
  LEAFSPAN_STATUS_DISCONNECTED = 4,
  LEAFSPAN_STATUS_TOO_SMALL = 5,
  LEAFSPAN_STATUS_CAPACITY = 6,
  LEAFSPAN_STATUS_INTERNAL = 7,
} LeafspanStatus;

typedef struct LeafspanGraph LeafspanGraph;

typedef struct LeafspanTree LeafspanTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph in the DIMACS-like text format (`p n m`, then `e u v` with 1-based ids).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LeafspanStatus leafspan_graph_parse(const char *text, struct LeafspanGraph **out);

/**
 * A graph with `n` isolated vertices `0..n`.
 */
struct LeafspanGraph *leafspan_graph_new(size_t n);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. Null is ignored.
 */
void leafspan_graph_free(struct LeafspanGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
enum LeafspanStatus leafspan_graph_add_edge(struct LeafspanGraph *g, size_t u, size_t v);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t leafspan_graph_vertex_count(const struct LeafspanGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t leafspan_graph_edge_count(const struct LeafspanGraph *g);

/**
 * Exact maximum leaf count for graphs with at most `cap` vertices (`cap` ≤ 64).
 * When `tree` is non-null it receives an optimal tree.
 *
 * # Safety
 * `g` and `leaves` must be valid pointers; `tree` may be null.
 */
enum LeafspanStatus leafspan_max_leaves_exact(const struct LeafspanGraph *g,
                                              size_t cap,
                                              size_t *leaves,
                                              struct LeafspanTree **tree);

/**
 * Heuristic spanning tree with many leaves.
 *
 * # Safety
 * `g` and `leaves` must be valid pointers; `tree` may be null.
 */
enum LeafspanStatus leafspan_max_leaves_heuristic(const struct LeafspanGraph *g,
                                                  size_t *leaves,
                                                  struct LeafspanTree **tree);

/**
 * Decides whether `g` has a spanning tree with at least `k` leaves.
 * `threads` = 0 uses the default pool. `answer` is set to 1 for yes and 0 for no;
 * `subsets` (optional) receives the number of enumerated candidate sets and
 * `witness` (optional) a tree when the answer is yes.
 *
 * # Safety
 * `g` and `answer` must be valid pointers; `subsets` and `witness` may be null.
 */
enum LeafspanStatus leafspan_fpt_decide(const struct LeafspanGraph *g,
                                        size_t k,
                                        size_t threads,
                                        int32_t *answer,
                                        uint64_t *subsets,
                                        struct LeafspanTree **witness);

/**
 * # Safety
 * `t` must be null or a live tree handle.
 */
size_t leafspan_tree_edge_count(const struct LeafspanTree *t);

/**
 * Endpoints of the `i`-th tree edge.
 *
 * # Safety
 * `t` must be a live tree handle; `u` and `v` valid pointers.
 */
enum LeafspanStatus leafspan_tree_edge(const struct LeafspanTree *t,
                                       size_t i,
                                       size_t *u,
                                       size_t *v);

/**
 * # Safety
 * `t` must come from this library and not be used afterwards. Null is ignored.
 */
void leafspan_tree_free(struct LeafspanTree *t);

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`). Returns the full message length without the NUL.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t leafspan_last_error(char *buf, size_t len);

/**
 * Static description of a status code.
 */
const char *leafspan_status_str(enum LeafspanStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEAFSPAN_H */
