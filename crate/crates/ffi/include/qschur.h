#ifndef QSCHUR_H
#define QSCHUR_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_POINTER = 1,
  QS_STATUS_INVALID_ARGUMENT = 2,
  QS_STATUS_INVALID_CARTAN = 3,
  QS_STATUS_INVALID_WEIGHTS = 4,
  QS_STATUS_NOT_SATURATED = 5,
  QS_STATUS_BUDGET_EXCEEDED = 6,
  QS_STATUS_UNSTABILIZED = 7,
  QS_STATUS_INTERNAL = 8,
  QS_STATUS_PANIC = 9,
} QsStatus;

/**
 * Validated Cartan data.
 */
typedef struct QsCartan QsCartan;

/**
 * Assembled representation of a generalized q-Schur algebra.
 */
typedef struct QsRep QsRep;

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library.
 */
const char *qschur_last_error(void);

/**
 * Built-in Cartan matrix of `family` (`'A'` to `'G'`) and `rank`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QsStatus qschur_cartan_builtin(char family, size_t rank, struct QsCartan **out);

/**
 * Cartan data from `n * n` row-major entries.
 *
 * # Safety
 * `entries` must point to `n * n` integers and `out` must be valid.
 */
enum QsStatus qschur_cartan_from_matrix(const int64_t *entries, size_t n, struct QsCartan **out);

/**
 * # Safety
 * `c` must come from this library or be null.
 */
void qschur_cartan_free(struct QsCartan *c);

/**
 * Rank of the Cartan matrix.
 *
 * # Safety
 * `c` and `out` must be valid.
 */
enum QsStatus qschur_cartan_rank(const struct QsCartan *c, size_t *out);

/**
 * Assemble the representation for the weight set `pi` (e.g. `"0;2"`),
 * with module dimensions capped by `budget`.
 *
 * # Safety
 * `c`, `pi` and `out` must be valid; `pi` must be nul-terminated.
 */
enum QsStatus qschur_rep_assemble(const struct QsCartan *c,
                                  const char *pi,
                                  size_t budget,
                                  struct QsRep **out);

/**
 * # Safety
 * `r` must come from this library or be null.
 */
void qschur_rep_free(struct QsRep *r);

/**
 * Dimension of the representation space.
 *
 * # Safety
 * `r` and `out` must be valid.
 */
enum QsStatus qschur_rep_space_dim(const struct QsRep *r, size_t *out);

/**
 * Dimension of the algebra spanned by the generators.
 *
 * # Safety
 * `r` and `out` must be valid.
 */
enum QsStatus qschur_rep_algebra_dim(const struct QsRep *r, size_t *out);

/**
 * Check every defining relation; `passed` receives the verdict and
 * `failures` the number of failed checks.
 *
 * # Safety
 * All pointers must be valid.
 */
enum QsStatus qschur_rep_verify(const struct QsRep *r, bool *passed, size_t *failures);

/**
 * Text dump of the representation. Release with [`qschur_string_free`].
 *
 * # Safety
 * `r` and `out` must be valid.
 */
enum QsStatus qschur_rep_dump(const struct QsRep *r, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void qschur_string_free(char *s);

/**
 * Dimension of the algebra defined by generators and relations, found by
 * completing the relations up to `degree_bound`. Returns
 * `QS_STATUS_UNSTABILIZED` when the bound does not suffice.
 *
 * # Safety
 * `c`, `pi` and `out` must be valid.
 */
enum QsStatus qschur_presented_dim(const struct QsCartan *c,
                                   const char *pi,
                                   bool classical,
                                   size_t degree_bound,
                                   size_t *out);

#endif /* QSCHUR_H */
