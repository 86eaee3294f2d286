/* paleytype — C API for Paley-type graphs over Z_n and their clique counts.
 *
 * All functions return a pt_status; results come back through out-parameters.
 * Handles are opaque and must be released with the matching _destroy call.
 * Counts are returned as decimal strings (they outgrow uint64 quickly);
 * free them with pt_string_free.  On any error, pt_last_error() returns a
 * message describing what went wrong (thread-local, valid until the next
 * failing call on the same thread).
 */
#ifndef PALEYTYPE_H
#define PALEYTYPE_H

#include <stdint.h>
#include <stddef.h>

#if defined(_WIN32)
#  define PT_API __declspec(dllexport)
#else
#  define PT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pt_status {
    PT_OK = 0,
    PT_ERR_INVALID_INPUT = 1, /* n not admissible, bad order, bad argument */
    PT_ERR_LIMIT = 2,         /* refused: input exceeds a configured ceiling */
    PT_ERR_INTERNAL = 3,      /* invariant violation; indicates a bug */
    PT_ERR_IO = 4             /* stream/allocation failure */
} pt_status;

typedef struct pt_modulus pt_modulus; /* factored admissible modulus */
typedef struct pt_graph pt_graph;     /* Paley-type graph G_n */

/* Library version, e.g. "0.1.0".  Static storage; do not free. */
PT_API const char *pt_version(void);

/* Message for the most recent failure on this thread ("" if none). */
PT_API const char *pt_last_error(void);

/* Frees strings returned via char** out-parameters.  NULL is a no-op. */
PT_API void pt_string_free(char *s);

/* ---- modulus ----------------------------------------------------------- */

/* Factors n and checks admissibility: n = 2^s * p1^a1 * ... * pk^ak with
 * s <= 1, k >= 1, and every pi = 1 (mod 4). */
PT_API pt_status pt_modulus_create(uint64_t n, pt_modulus **out);
PT_API void pt_modulus_destroy(pt_modulus *m);

PT_API pt_status pt_modulus_n(const pt_modulus *m, uint64_t *out);
PT_API pt_status pt_modulus_s(const pt_modulus *m, uint32_t *out);      /* 0 or 1 */
PT_API pt_status pt_modulus_k(const pt_modulus *m, uint32_t *out);      /* #odd primes */
PT_API pt_status pt_modulus_phi(const pt_modulus *m, uint64_t *out);    /* Euler phi */
PT_API pt_status pt_modulus_factor(const pt_modulus *m, uint32_t index,
                                   uint64_t *p, uint32_t *alpha);

/* ---- graph ------------------------------------------------------------- */

/* Builds G_n: vertices Z_n, edge ab iff a-b is a square of a unit.
 * row_cache_limit: largest n for which all adjacency rows are materialised
 * (0 picks the built-in default). */
PT_API pt_status pt_graph_create(const pt_modulus *m, uint64_t row_cache_limit,
                                 pt_graph **out);
PT_API void pt_graph_destroy(pt_graph *g);

PT_API pt_status pt_graph_order(const pt_graph *g, uint64_t *out);   /* n */
PT_API pt_status pt_graph_degree(const pt_graph *g, uint64_t *out);  /* |R_n| */
PT_API pt_status pt_graph_adjacent(const pt_graph *g, uint64_t u, uint64_t v,
                                   int *out);

/* Writes "u v\n" per edge (u < v) to a malloc'd buffer.  Intended for small
 * graphs; refuses n above the K3 bruteforce ceiling. */
PT_API pt_status pt_graph_edges(const pt_graph *g, char **out);

/* ---- clique counts ----------------------------------------------------- */

/* order must be 3 or 4.  threads: 0 = hardware concurrency.
 * ceiling: largest admitted n (0 picks the method default); exceeding it
 * yields PT_ERR_LIMIT.  *out receives a decimal string. */
PT_API pt_status pt_count_bruteforce(const pt_graph *g, uint32_t order,
                                     uint32_t threads, uint64_t ceiling,
                                     char **out);

/* Vertex-transitivity reduction: counts rooted (order-1)-cliques in the
 * induced subgraph H_n at vertex 1, then rescales.  Odd n only. */
PT_API pt_status pt_count_reduction(const pt_graph *g, uint32_t order,
                                    char **out);

/* Closed-form count from the factorisation alone (no graph needed). */
PT_API pt_status pt_count_formula(const pt_modulus *m, uint32_t order,
                                  char **out);

/* Rooted counts in H_n at vertex 1 (odd n only): edges through the root and
 * triangles through the root. */
PT_API pt_status pt_rooted_degree(const pt_graph *g, uint64_t *out);
PT_API pt_status pt_rooted_triangles(const pt_graph *g, uint64_t *out);

/* ---- arithmetic --------------------------------------------------------- */

/* p = a^2 + b^2 with a even, b odd, both positive.  p must be 1 (mod 4). */
PT_API pt_status pt_two_squares(uint64_t p, uint64_t *a, uint64_t *b);

/* Jacobi sum J(psi, chi) = x + yi for the canonical quartic character psi
 * (psi(g) = i at the smallest primitive root g) and chi = psi^2 mod p^alpha. */
PT_API pt_status pt_jacobi_sum(uint64_t p, uint32_t alpha,
                               int64_t *x, int64_t *y);

typedef struct pt_jacobi_report {
    int64_t x, y;           /* J(psi, chi) = x + yi */
    int64_t x2_minus_y2;    /* left side of the identity */
    int64_t rhs;            /* p^(2a-2) * (p - 2a^2) */
    int64_t norm;           /* x^2 + y^2 */
    int64_t norm_expected;  /* p^(2a-1) */
    int ok;                 /* both identities hold */
} pt_jacobi_report;

/* Checks x^2 - y^2 = p^(2a-2) (p - 2a^2) and |J|^2 = p^(2a-1). */
PT_API pt_status pt_jacobi_verify(uint64_t p, uint32_t alpha,
                                  pt_jacobi_report *out);

/* ---- clique-number classification -------------------------------------- */

/* *out = 1 iff K4(G_n) = 0 (odd admissible n only). */
PT_API pt_status pt_k4_zero(const pt_modulus *m, int *out);

/* Clique number class for odd admissible n: 2, 3, or 4 (4 means ">= 4"). */
PT_API pt_status pt_clique_number_class(const pt_modulus *m, uint32_t *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PALEYTYPE_H */
