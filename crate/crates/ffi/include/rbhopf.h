#ifndef RBHOPF_H
#define RBHOPF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call.
 */
typedef enum rbhopf_status {
  RBHOPF_STATUS_OK = 0,
  /**
   * A checked identity does not hold.
   */
  RBHOPF_STATUS_IDENTITY_FAILED = 1,
  /**
   * Malformed or out-of-range input.
   */
  RBHOPF_STATUS_INVALID_INPUT = 2,
  /**
   * The map given is not a Rota-Baxter operator.
   */
  RBHOPF_STATUS_INVALID_OPERATOR = 3,
  /**
   * A size limit was exceeded.
   */
  RBHOPF_STATUS_CAP_EXCEEDED = 4,
  RBHOPF_STATUS_NULL_POINTER = 5,
  /**
   * The output buffer is too small; the needed length was written.
   */
  RBHOPF_STATUS_BUFFER_TOO_SMALL = 6,
  RBHOPF_STATUS_PANIC = 7,
} rbhopf_status;

/**
 * A finite group given by its Cayley table.
 */
typedef struct rbhopf_group rbhopf_group;

/**
 * An enumerated list of operators.
 */
typedef struct rbhopf_operators rbhopf_operators;

/**
 * The result of running the pipeline on one operator.
 */
typedef struct rbhopf_report rbhopf_report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *rbhopf_last_error(void);

/**
 * Library version as a static string.
 */
const char *rbhopf_version(void);

/**
 * Looks up a catalog group such as `"S3"` or `"Z2xZ4"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer.
 */
enum rbhopf_status rbhopf_group_from_name(const char *name, struct rbhopf_group **out);

/**
 * Parses a Cayley table: `order n` followed by n rows of n indices.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum rbhopf_status rbhopf_group_from_table(const char *text, struct rbhopf_group **out);

/**
 * # Safety
 * `group` must be NULL or a handle from this library not yet freed.
 */
void rbhopf_group_free(struct rbhopf_group *group);

/**
 * Order of the group, 0 for NULL.
 *
 * # Safety
 * `group` must be NULL or a live handle.
 */
size_t rbhopf_group_order(const struct rbhopf_group *group);

/**
 * Checks the operator identity on group elements. Returns
 * `InvalidOperator` with the failing pair in the error message.
 *
 * # Safety
 * `group` must be a live handle and `images` must point to `len` values.
 */
enum rbhopf_status rbhopf_check_operator(const struct rbhopf_group *group,
                                         const size_t *images,
                                         size_t len);

/**
 * Every operator on the group, refusing orders above `cap`.
 *
 * # Safety
 * `group` must be a live handle and `out` a writable pointer.
 */
enum rbhopf_status rbhopf_enumerate(const struct rbhopf_group *group,
                                    size_t cap,
                                    struct rbhopf_operators **out);

/**
 * # Safety
 * `ops` must be NULL or a live handle.
 */
size_t rbhopf_operators_count(const struct rbhopf_operators *ops);

/**
 * Copies the images of operator `index` into `buf`. `len` is the buffer
 * length on input; the group order is always written to `needed`.
 *
 * # Safety
 * `ops` must be a live handle, `buf` must hold `len` values and `needed`
 * must be writable or NULL.
 */
enum rbhopf_status rbhopf_operators_get(const struct rbhopf_operators *ops,
                                        size_t index,
                                        size_t *buf,
                                        size_t len,
                                        size_t *needed);

/**
 * # Safety
 * `ops` must be NULL or a handle from this library not yet freed.
 */
void rbhopf_operators_free(struct rbhopf_operators *ops);

/**
 * Runs the pipeline. `stages` is a comma-separated list or NULL for all.
 * A report is produced even when identities fail; check
 * [`rbhopf_report_passed`].
 *
 * # Safety
 * `group` must be a live handle, `images` must point to `len` values,
 * `stages` must be NULL or NUL-terminated and `out` writable.
 */
enum rbhopf_status rbhopf_verify(const struct rbhopf_group *group,
                                 const size_t *images,
                                 size_t len,
                                 const char *stages,
                                 struct rbhopf_report **out);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
bool rbhopf_report_passed(const struct rbhopf_report *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
size_t rbhopf_report_checks(const struct rbhopf_report *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
size_t rbhopf_report_failures(const struct rbhopf_report *report);

/**
 * The report as JSON. Free the string with [`rbhopf_string_free`].
 * With `include_timing` false the output is deterministic.
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum rbhopf_status rbhopf_report_json(const struct rbhopf_report *report,
                                      bool include_timing,
                                      char **out);

/**
 * # Safety
 * `report` must be NULL or a handle from this library not yet freed.
 */
void rbhopf_report_free(struct rbhopf_report *report);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void rbhopf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RBHOPF_H */
