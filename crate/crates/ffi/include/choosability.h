#ifndef CHOOSABILITY_H
#define CHOOSABILITY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CH_MODE_STANDARD = 0,
  CH_MODE_EXTENDED = 1,
  CH_MODE_PIPELINE = 2,
} ChMode;

typedef enum {
  CH_HEURISTIC_INPUT = 0,
  CH_HEURISTIC_VSEP = 1,
  CH_HEURISTIC_MD = 2,
  CH_HEURISTIC_MD_PROC = 3,
  CH_HEURISTIC_OVER = 4,
  CH_HEURISTIC_LIST = 5,
  CH_HEURISTIC_LIST_DEG = 6,
  CH_HEURISTIC_MDR = 7,
} ChHeuristic;

/**
 * Status codes. Zero is success.
 */
typedef enum {
  CH_ERROR_OK = 0,
  CH_ERROR_NULL_POINTER = 1,
  CH_ERROR_INVALID_UTF8 = 2,
  CH_ERROR_PARSE = 3,
  CH_ERROR_INVALID_ARGUMENT = 4,
  CH_ERROR_LIMIT_EXCEEDED = 5,
  CH_ERROR_PANIC = 6,
} ChError;

/**
 * Verdict codes, equal to the command-line exit codes.
 */
typedef enum {
  CH_VERDICT_CHOOSABLE = 0,
  CH_VERDICT_NOT_CHOOSABLE = 1,
  CH_VERDICT_UNKNOWN = 2,
} ChVerdict;

/**
 * Opaque decision handle.
 */
typedef struct ChDecision ChDecision;

/**
 * Opaque problem handle.
 */
typedef struct ChProblem ChProblem;

typedef struct {
  ChMode mode;
  ChHeuristic heuristic;
  size_t branch_limit;
  size_t pattern_cap;
  size_t feasible_cap;
  bool prune_matching;
} ChOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into the library from this thread.
 */
const char *ch_last_error_message(void);

/**
 * Default options: pipeline mode, MD+PROC ordering.
 */
ChOptions ch_options_default(void);

/**
 * Parses a problem in the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
ChError ch_problem_parse(const char *text, ChProblem **out);

/**
 * Builds a problem from a named test family, e.g. `"glued-cliques"` with
 * parameters `{2, 3}`.
 *
 * # Safety
 * `family` must be a NUL-terminated string, `params` must point to `len`
 * readable values (or be NULL when `len` is 0), and `out` must be valid.
 */
ChError ch_problem_generate(const char *family, const size_t *params, size_t len, ChProblem **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void ch_problem_free(ChProblem *p);

/**
 * # Safety
 * `p` must be a valid problem handle.
 */
size_t ch_problem_vertex_count(const ChProblem *p);

/**
 * # Safety
 * `p` must be a valid problem handle.
 */
size_t ch_problem_edge_count(const ChProblem *p);

/**
 * Decides choosability of `p` with the given options.
 *
 * # Safety
 * `p` must be a valid problem handle, `options` NULL (for defaults) or
 * valid, and `out` a valid pointer.
 */
ChError ch_decide(const ChProblem *p, const ChOptions *options, ChDecision **out);

/**
 * Decides by exhaustive search over list assignments (tiny problems only).
 *
 * # Safety
 * `p` must be a valid problem handle and `out` a valid pointer.
 */
ChError ch_oracle_decide(const ChProblem *p, ChDecision **out);

/**
 * # Safety
 * `d` must be a valid decision handle.
 */
ChVerdict ch_decision_verdict(const ChDecision *d);

/**
 * The decision as JSON; release with [`ch_string_free`]. NULL on failure.
 *
 * # Safety
 * `d` must be a valid decision handle.
 */
char *ch_decision_to_json(const ChDecision *d);

/**
 * One-line human-readable verdict; release with [`ch_string_free`].
 *
 * # Safety
 * `d` must be a valid decision handle.
 */
char *ch_decision_summary(const ChDecision *d);

/**
 * # Safety
 * `d` must be NULL or a handle from this library not yet freed.
 */
void ch_decision_free(ChDecision *d);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void ch_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHOOSABILITY_H */
