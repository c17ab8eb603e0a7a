#ifndef QSTRING_H
#define QSTRING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QsLcsAlgo {
  QS_LCS_ALGO_EXACT = 0,
  QS_LCS_ALGO_APPROX = 1,
  QS_LCS_ALGO_NONREP_EXACT = 2,
  QS_LCS_ALGO_NONREP_APPROX = 3,
} QsLcsAlgo;

/**
 * Result code of every fallible call.
 */
typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_POINTER = 1,
  QS_STATUS_INVALID_UTF8 = 2,
  QS_STATUS_INVALID_INPUT = 3,
  QS_STATUS_NOT_NON_REPETITIVE = 4,
  QS_STATUS_LENGTH_MISMATCH = 5,
  QS_STATUS_PRECONDITION_BREACH = 6,
  QS_STATUS_INTERNAL = 7,
} QsStatus;

/**
 * The record of one algorithm run.
 */
typedef struct QsRun QsRun;

/**
 * An immutable input string.
 */
typedef struct QsText QsText;

/**
 * Plain-data view of a run's witness. Positions are 1-based; zero when
 * unused.
 */
typedef struct QsWitness {
  size_t pos_a;
  size_t pos_b;
  size_t length;
  double value;
} QsWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *qs_last_error(void);

/**
 * Builds a string from `len` integer symbols below `alphabet`.
 *
 * # Safety
 * `symbols` points to `len` readable values; `out` is writable.
 */
enum QsStatus qs_text_from_symbols(const uint32_t *symbols,
                                   size_t len,
                                   uint64_t alphabet,
                                   bool non_repetitive,
                                   struct QsText **out);

/**
 * Builds a string from NUL-terminated UTF-8; symbols are code points.
 *
 * # Safety
 * `s` is a valid C string; `out` is writable.
 */
enum QsStatus qs_text_from_utf8(const char *s, bool non_repetitive, struct QsText **out);

/**
 * Length of `t`, or 0 for null.
 *
 * # Safety
 * `t` is null or a live handle.
 */
size_t qs_text_len(const struct QsText *t);

/**
 * # Safety
 * `t` is null or a handle not yet freed.
 */
void qs_text_free(struct QsText *t);

/**
 * Longest common substring. `epsilon` is read only by the approximate
 * algorithms. With `check`, the run is compared against the exact oracle.
 *
 * # Safety
 * `a`, `b` are live handles; `out` is writable.
 */
enum QsStatus qs_lcs(const struct QsText *a,
                     const struct QsText *b,
                     enum QsLcsAlgo algo,
                     double epsilon,
                     uint64_t seed,
                     bool check,
                     struct QsRun **out);

/**
 * Longest palindromic substring.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum QsStatus qs_lps(const struct QsText *a, uint64_t seed, bool check, struct QsRun **out);

/**
 * `(1 +- epsilon)` estimate of the Ulam distance of two non-repetitive
 * strings.
 *
 * # Safety
 * `a`, `b` are live handles; `out` is writable.
 */
enum QsStatus qs_ulam(const struct QsText *a,
                      const struct QsText *b,
                      double epsilon,
                      uint64_t seed,
                      bool check,
                      struct QsRun **out);

/**
 * The numeric answer: a length, or the distance estimate.
 *
 * # Safety
 * `r` is a live handle.
 */
double qs_run_answer(const struct QsRun *r);

/**
 * # Safety
 * `r` is a live handle; `out` is writable.
 */
enum QsStatus qs_run_witness(const struct QsRun *r, struct QsWitness *out);

/**
 * Model cost charged by the run.
 *
 * # Safety
 * `r` is a live handle.
 */
double qs_run_charged_cost(const struct QsRun *r);

/**
 * Characters the simulation actually read.
 *
 * # Safety
 * `r` is a live handle.
 */
uint64_t qs_run_sim_reads(const struct QsRun *r);

/**
 * 1 when checked and within contract, 0 when checked and not, -1 when
 * unchecked.
 *
 * # Safety
 * `r` is a live handle.
 */
int32_t qs_run_success(const struct QsRun *r);

/**
 * The full run record as JSON; release with [`qs_string_free`]. Null on
 * a null handle.
 *
 * # Safety
 * `r` is null or a live handle.
 */
char *qs_run_json(const struct QsRun *r);

/**
 * # Safety
 * `r` is null or a handle not yet freed.
 */
void qs_run_free(struct QsRun *r);

/**
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void qs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSTRING_H */
