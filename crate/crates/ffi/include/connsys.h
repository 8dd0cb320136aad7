#ifndef CONNSYS_H
#define CONNSYS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum ConnsysStatus {
  CONNSYS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CONNSYS_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not UTF-8.
   */
  CONNSYS_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, unknown labels, or a function that fails validation.
   */
  CONNSYS_STATUS_INVALID_INPUT = 3,
  /**
   * The instance is above a size gate.
   */
  CONNSYS_STATUS_SIZE_LIMIT = 4,
  /**
   * The call succeeded and found a violation or counterexample.
   */
  CONNSYS_STATUS_VIOLATION = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  CONNSYS_STATUS_PANIC = 6,
} ConnsysStatus;

/**
 * Opaque connectivity system.
 */
typedef struct ConnsysSystem ConnsysSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses instance JSON and validates it. On success `*out` owns a new handle.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ConnsysStatus connsys_system_from_json(const char *json, struct ConnsysSystem **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `sys` must be null or a handle from `connsys_system_from_json` not yet freed.
 */
void connsys_system_free(struct ConnsysSystem *sys);

/**
 * Number of ground-set elements, 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t connsys_system_size(const struct ConnsysSystem *sys);

/**
 * `f` of the subset whose bit `i` marks element `i`.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum ConnsysStatus connsys_evaluate(const struct ConnsysSystem *sys,
                                    uint32_t subset,
                                    uint32_t *out);

/**
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum ConnsysStatus connsys_branch_width(const struct ConnsysSystem *sys, uint32_t *out);

/**
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum ConnsysStatus connsys_linear_width(const struct ConnsysSystem *sys, uint32_t *out);

/**
 * Checks family JSON against a kind such as `"ultrafilter"`. Returns `Ok` when
 * the axioms hold and `Violation` when one fails. If `verdict_json` is not
 * null it receives the verdict as JSON, to be freed with `connsys_string_free`.
 *
 * # Safety
 * `sys` must be a live handle, `kind` and `family_json` NUL-terminated strings,
 * and `verdict_json` null or a valid pointer.
 */
enum ConnsysStatus connsys_check_family(const struct ConnsysSystem *sys,
                                        const char *kind,
                                        const char *family_json,
                                        char **verdict_json);

/**
 * Runs theorem audits (`"all"`, a group name or comma-separated ids) at bound
 * `k`. `*report_json` receives a JSON array of reports. Returns `Violation`
 * when any audit found a counterexample.
 *
 * # Safety
 * `sys` must be a live handle, `theorems` a NUL-terminated string and
 * `report_json` a valid pointer.
 */
enum ConnsysStatus connsys_run_audit(const struct ConnsysSystem *sys,
                                     const char *theorems,
                                     uint32_t k,
                                     char **report_json);

/**
 * The last error on this thread as a new string, or null if the last call
 * succeeded. Free with `connsys_string_free`.
 */
char *connsys_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void connsys_string_free(char *s);

/**
 * Library version, statically allocated.
 */
const char *connsys_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONNSYS_H */
