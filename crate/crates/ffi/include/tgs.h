#ifndef TGS_H
#define TGS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TgsIdealKind {
  TGS_IDEAL_KIND_REACTION_CLOSED = 0,
  TGS_IDEAL_KIND_CHEMICAL = 1,
  TGS_IDEAL_KIND_LEFT_GAMMA = 2,
  TGS_IDEAL_KIND_RIGHT_GAMMA = 3,
  TGS_IDEAL_KIND_MIDDLE_GAMMA = 4,
  TGS_IDEAL_KIND_TWO_SIDED_GAMMA = 5,
} TgsIdealKind;

typedef enum TgsStatus {
  TGS_STATUS_OK = 0,
  TGS_STATUS_NULL_POINTER = 1,
  TGS_STATUS_INVALID_ARGUMENT = 2,
  TGS_STATUS_PARSE_ERROR = 3,
  TGS_STATUS_EMPTY_SUBSET = 4,
  TGS_STATUS_TOO_LARGE = 5,
  TGS_STATUS_BUDGET_EXHAUSTED = 6,
  TGS_STATUS_MEDIATOR_MISMATCH = 7,
  TGS_STATUS_NOT_AN_IDEAL = 8,
  TGS_STATUS_PANIC = 9,
} TgsStatus;

/**
 * Opaque system handle.
 */
typedef struct TgsSystem TgsSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *tgs_last_error(void);

/**
 * Parses a `tgs v1` document.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TgsStatus tgs_system_parse(const char *text, struct TgsSystem **out);

/**
 * Builds a named reference system (`left:5,3`, `modular:6`, `catalysis`, ...).
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TgsStatus tgs_system_fixture(const char *name, struct TgsSystem **out);

/**
 * # Safety
 * `sys` must be null or a handle from this library that was not freed yet.
 */
void tgs_system_free(struct TgsSystem *sys);

/**
 * Number of states, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t tgs_system_state_count(const struct TgsSystem *sys);

/**
 * Number of mediators, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t tgs_system_mediator_count(const struct TgsSystem *sys);

/**
 * Canonical text of the system; release with [`tgs_string_free`].
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum TgsStatus tgs_system_serialize(const struct TgsSystem *sys, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not freed yet.
 */
void tgs_string_free(char *s);

/**
 * `[a, alpha, b, beta, c]`.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum TgsStatus tgs_evaluate(const struct TgsSystem *sys,
                            uint32_t a,
                            uint32_t alpha,
                            uint32_t b,
                            uint32_t beta,
                            uint32_t c,
                            uint32_t *out);

/**
 * Writes the verdicts for T1, T3a and T3b to `out[0..3]`.
 *
 * # Safety
 * `sys` must be a live handle and `out` must point to three writable bools.
 */
enum TgsStatus tgs_check_axioms(const struct TgsSystem *sys, bool *out);

/**
 * Decides whether `members` satisfies the law of `kind`.
 *
 * # Safety
 * `sys` must be a live handle, `members` must hold `len` bytes, `out` valid.
 */
enum TgsStatus tgs_satisfies(const struct TgsSystem *sys,
                             const uint8_t *members,
                             size_t len,
                             enum TgsIdealKind kind,
                             bool *out);

/**
 * Smallest `kind`-ideal containing `seed`, written to `out` (`len` bytes).
 *
 * # Safety
 * `seed` and `out` must each hold `len` bytes; `sys` must be live.
 */
enum TgsStatus tgs_generate_ideal(const struct TgsSystem *sys,
                                  const uint8_t *seed,
                                  size_t len,
                                  enum TgsIdealKind kind,
                                  uint8_t *out);

/**
 * # Safety
 * As [`tgs_satisfies`].
 */
enum TgsStatus tgs_is_prime(const struct TgsSystem *sys,
                            const uint8_t *members,
                            size_t len,
                            bool *out);

/**
 * Fails with `NotAnIdeal` when `members` is not a chemical ideal.
 *
 * # Safety
 * As [`tgs_satisfies`].
 */
enum TgsStatus tgs_is_semiprime(const struct TgsSystem *sys,
                                const uint8_t *members,
                                size_t len,
                                bool *out);

/**
 * States reachable from `sources`, written to `out`.
 *
 * # Safety
 * `sources` and `out` must each hold `len` bytes; `sys` must be live.
 */
enum TgsStatus tgs_reachable(const struct TgsSystem *sys,
                             const uint8_t *sources,
                             size_t len,
                             uint8_t *out);

/**
 * Length of a shortest pathway from `source` to `target` of at most
 * `max_len` steps; `*out_len` is 0 when there is none.
 *
 * # Safety
 * `sys` must be live and `out_len` valid.
 */
enum TgsStatus tgs_find_pathway(const struct TgsSystem *sys,
                                uint32_t source,
                                uint32_t target,
                                size_t max_len,
                                size_t *out_len);

/**
 * Checks the homomorphism identity for `images` (one codomain index per
 * domain state).
 *
 * # Safety
 * Both handles must be live, `images` must hold `len` values, `out` valid.
 */
enum TgsStatus tgs_is_homomorphism(const struct TgsSystem *domain,
                                   const struct TgsSystem *codomain,
                                   const uint32_t *images,
                                   size_t len,
                                   bool *out);

/**
 * Number of homomorphisms from `domain` to `codomain`.
 *
 * # Safety
 * Both handles must be live and `out` valid.
 */
enum TgsStatus tgs_count_homomorphisms(const struct TgsSystem *domain,
                                       const struct TgsSystem *codomain,
                                       uint64_t budget,
                                       uint64_t *out);

/**
 * Number of labeled models with `states` states and `mediators` mediators.
 *
 * # Safety
 * `out` must be valid.
 */
enum TgsStatus tgs_count_models(size_t states, size_t mediators, uint64_t budget, uint64_t *out);

/**
 * Seeded model sample; `*out` is null when none was found within budget.
 *
 * # Safety
 * `out` must be valid.
 */
enum TgsStatus tgs_sample_model(size_t states,
                                size_t mediators,
                                uint64_t seed,
                                uint64_t budget,
                                struct TgsSystem **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TGS_H */
