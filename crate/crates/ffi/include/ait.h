#ifndef AIT_H
#define AIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes. Machine outcomes share their values with the CLI exit codes.
 */
typedef enum AitStatus {
  AIT_STATUS_OK = 0,
  AIT_STATUS_INVALID_ARGUMENT = 2,
  AIT_STATUS_NULL_POINTER = 3,
  AIT_STATUS_INTERNAL = 4,
  AIT_STATUS_UNDERFLOW = 10,
  AIT_STATUS_OVERFLOW = 11,
  AIT_STATUS_SYNTAX_ERROR = 12,
  AIT_STATUS_STEP_LIMIT = 13,
} AitStatus;

/*
 The result of one run.
 */
typedef struct AitOutcome AitOutcome;

/*
 A lambda/combinator term.
 */
typedef struct AitTerm AitTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copy of the calling thread's last error message, or null. Free with [`ait_string_free`].
 */
char *ait_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void ait_string_free(char *s);

/*
 Parses backtick curried syntax into a new term handle.

 # Safety
 `source` must be a nul-terminated string; `out` must be writable.
 */
enum AitStatus ait_term_parse(const char *source, struct AitTerm **out);

/*
 Canonical text of a term. Free with [`ait_string_free`].

 # Safety
 `term` must be a live handle; `out` must be writable.
 */
enum AitStatus ait_term_print(const struct AitTerm *term, char **out);

/*
 Writes 1 to `out` when both terms have the same normal form after
 expanding S, K and I, else 0.

 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
enum AitStatus ait_term_equivalent(const struct AitTerm *a,
                                   const struct AitTerm *b,
                                   uint64_t steps,
                                   int32_t *out);

/*
 # Safety
 `term` must be null or a live handle from this library.
 */
void ait_term_free(struct AitTerm *term);

/*
 Runs `bits` in language `lang` (iota, fokker, simple, ext, zot, blc,
 keraia, pf-keraia). A halting or diverging run both return `Ok`; inspect
 the outcome with [`ait_outcome_status`].

 # Safety
 `lang` and `bits` must be nul-terminated strings; `out` must be writable.
 */
enum AitStatus ait_run(const char *lang, const char *bits, uint64_t steps, struct AitOutcome **out);

/*
 Runs `bits` through the endmarker eliminator for `machine` (keraia, zot,
 blc, fixed3, parity or echo).

 # Safety
 As for [`ait_run`].
 */
enum AitStatus ait_eliminate(const char *machine,
                             const char *bits,
                             uint64_t steps,
                             struct AitOutcome **out);

/*
 `Ok` for a halted run, otherwise the divergence reason. Null yields `NullPointer`.

 # Safety
 `outcome` must be null or a live handle.
 */
enum AitStatus ait_outcome_status(const struct AitOutcome *outcome);

/*
 New handle for the output term of a halted run.

 # Safety
 `outcome` must be a live handle; `out` must be writable.
 */
enum AitStatus ait_outcome_term(const struct AitOutcome *outcome, struct AitTerm **out);

/*
 Output of a halted run decoded as a boolean list, as `0`/`1` text.

 # Safety
 `outcome` must be a live handle; `out` must be writable.
 */
enum AitStatus ait_outcome_bits(const struct AitOutcome *outcome, char **out);

/*
 Reduction steps used by a halted run.

 # Safety
 `outcome` must be a live handle; `out` must be writable.
 */
enum AitStatus ait_outcome_steps(const struct AitOutcome *outcome, uint64_t *out);

/*
 # Safety
 `outcome` must be null or a live handle from this library.
 */
void ait_outcome_free(struct AitOutcome *outcome);

/*
 Exact halting-probability lower bound over all codewords up to `max_len`
 bits, written as `numerator/2^k`. `machine` is simple, ext, pf-keraia or
 `elim-<bem>`.

 # Safety
 `machine` must be a nul-terminated string; `out` must be writable.
 */
enum AitStatus ait_omega_lower_bound(const char *machine,
                                     uint32_t max_len,
                                     uint64_t steps,
                                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AIT_H */
