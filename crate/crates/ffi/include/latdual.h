#ifndef LATDUAL_H
#define LATDUAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LdStatus {
  LD_STATUS_OK = 0,
  LD_STATUS_NULL_POINTER = 1,
  LD_STATUS_INVALID_UTF8 = 2,
  LD_STATUS_INVALID_INPUT = 3,
  LD_STATUS_GUARD_EXCEEDED = 4,
  LD_STATUS_INTERNAL = 5,
  LD_STATUS_PANIC = 6,
} LdStatus;

typedef struct LdContext LdContext;

typedef struct LdPoset LdPoset;

typedef struct LdTraining LdTraining;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call into this library on the thread.
 */
const char *ld_last_error(void);

void ld_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *ld_version(void);

/**
 * Parses a Burmeister `.cxt` document.
 */
enum LdStatus ld_context_from_cxt(const char *cxt, struct LdContext **out);

void ld_context_free(struct LdContext *ctx);

enum LdStatus ld_context_size(const struct LdContext *ctx, size_t *objects, size_t *attributes);

/**
 * The context as `.cxt` text.
 */
enum LdStatus ld_context_to_cxt(const struct LdContext *ctx, char **out);

/**
 * All concepts as `[{"extent": [...], "intent": [...]}, ...]`.
 */
enum LdStatus ld_context_concepts(const struct LdContext *ctx, char **out);

/**
 * Closure `X''` of an attribute set given as a JSON list of names.
 */
enum LdStatus ld_context_close(const struct LdContext *ctx, const char *set, char **out);

/**
 * Parses a poset from `{"elements": [...], "less_than": [[a, b], ...]}`.
 */
enum LdStatus ld_poset_from_json(const char *json, struct LdPoset **out);

void ld_poset_free(struct LdPoset *p);

enum LdStatus ld_poset_len(const struct LdPoset *p, size_t *out);

enum LdStatus ld_poset_downsets(const struct LdPoset *p, char **out);

/**
 * Decides whether two families of downsets, each a JSON list of name
 * lists, are dual. Answers through `dual`.
 */
enum LdStatus ld_duality_test(const struct LdPoset *p,
                              const char *a,
                              const char *b,
                              bool parallel,
                              bool *dual);

/**
 * The dual of a family of downsets, by enumeration.
 */
enum LdStatus ld_duality_dualize(const struct LdPoset *p, const char *a, char **out);

enum LdStatus ld_training_from_json(const char *json, struct LdTraining **out);

/**
 * Builds a training context from copies of two contexts over the same
 * attributes.
 */
enum LdStatus ld_training_from_contexts(const struct LdContext *positive,
                                        const struct LdContext *negative,
                                        struct LdTraining **out);

void ld_training_free(struct LdTraining *t);

enum LdStatus ld_training_to_json(const struct LdTraining *t, char **out);

/**
 * Minimal k-weak hypotheses as a JSON family; `[M]` when there are none.
 */
enum LdStatus ld_training_minimal_hypotheses(const struct LdTraining *t, size_t k, char **out);

/**
 * Whether a minimal hypothesis exists outside `known` (a JSON family).
 */
enum LdStatus ld_training_decide_amh(const struct LdTraining *t,
                                     const char *known,
                                     bool *additional);

/**
 * A minimal hypothesis outside `known`. Fails with `InvalidInput` when
 * there is none.
 */
enum LdStatus ld_training_find_new_min_h(const struct LdTraining *t, const char *known, char **out);

/**
 * Reduces a DIMACS CNF to a training context plus its known minimal
 * hypotheses (a JSON family).
 */
enum LdStatus ld_sat_to_amh(const char *dimacs, struct LdTraining **training, char **known);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATDUAL_H */
