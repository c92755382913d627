#ifndef GDLAB_H
#define GDLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum GdStatus {
  GD_STATUS_OK = 0,
  GD_STATUS_NULL_ARGUMENT = 1,
  GD_STATUS_INVALID_UTF8 = 2,
  GD_STATUS_PARSE = 3,
  GD_STATUS_DIMENSION = 4,
  GD_STATUS_PRECONDITION = 5,
  GD_STATUS_CONFIG = 6,
  GD_STATUS_IO = 7,
  GD_STATUS_PANIC = 8,
} GdStatus;

// The outcome of a check.
typedef struct GdReport GdReport;

// A parsed structure file.
typedef struct GdStructure GdStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty if none. Valid until the next failing call.
const char *gd_last_error(void);

// Library version as a static NUL-terminated string.
const char *gd_version(void);

// Parses a structure file given as JSON text.
//
// # Safety
// `json` must be NUL-terminated; `out` must be writable.
enum GdStatus gd_structure_parse(const char *json, struct GdStructure **out);

// # Safety
// `s` must come from [`gd_structure_parse`] and not be used afterwards. Null is ignored.
void gd_structure_free(struct GdStructure *s);

// Dimension of the underlying space, 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
size_t gd_structure_dim(const struct GdStructure *s);

// Canonical JSON with sorted tuples.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum GdStatus gd_structure_to_json(const struct GdStructure *s, char **out);

// λ-brackets of the affinized algebra, followed by the conformal cobracket built from the file's coalgebra tables.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum GdStatus gd_conformal_text(const struct GdStructure *s,
                                char **out);

// Runs the check named by `kind` (the names accepted by `gdlab check --kind`).
// A failing verdict is reported through the report, not the status.
//
// # Safety
// `s` must be a live handle, `kind` NUL-terminated, `out` writable.
enum GdStatus gd_check(const struct GdStructure *s, const char *kind, struct GdReport **out);

// # Safety
// `r` must be null or a live handle.
bool gd_report_passed(const struct GdReport *r);

// # Safety
// `r` must be null or a live handle.
size_t gd_report_violation_count(const struct GdReport *r);

// The report as printed by `gdlab check`.
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum GdStatus gd_report_text(const struct GdReport *r, char **out);

// # Safety
// `r` must come from [`gd_check`] and not be used afterwards. Null is ignored.
void gd_report_free(struct GdReport *r);

// # Safety
// `p` must come from this library and not be used afterwards. Null is ignored.
void gd_string_free(char *p);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GDLAB_H */
