#ifndef HALLKIT_H
#define HALLKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HkStatus {
  HK_STATUS_OK = 0,
  HK_STATUS_NULL_POINTER = 1,
  HK_STATUS_INVALID_UTF8 = 2,
  HK_STATUS_PARSE = 3,
  HK_STATUS_BOUND = 4,
  HK_STATUS_DOMAIN = 5,
  HK_STATUS_CONSISTENCY = 6,
  HK_STATUS_BUDGET = 7,
  HK_STATUS_PANIC = 8,
  HK_STATUS_OTHER = 9,
} HkStatus;

typedef enum HkAlgebra {
  HK_ALGEBRA_CF = 0,
  HK_ALGEBRA_SF = 1,
  HK_ALGEBRA_A = 2,
  HK_ALGEBRA_B = 3,
  HK_ALGEBRA_C = 4,
} HkAlgebra;

// A bilinear form on dimension vectors.
typedef struct HkForm HkForm;

// A Hall table.
typedef struct HkTable HkTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Owned by the
// library; valid until the next failing call on the same thread.
const char *hk_last_error(void);

const char *hk_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void hk_string_free(char *s);

// Build a table from quiver text (`vertices N` / `arrow S T` lines) and a
// dimension bound such as `"2,2"`. `max_total == 0` means no cap.
//
// # Safety
// String arguments must be valid NUL-terminated strings; `out` must be
// writable.
enum HkStatus hk_table_build(const char *quiver,
                             const char *max_dim,
                             size_t max_total,
                             struct HkTable **out);

// # Safety
// `json` must be a valid NUL-terminated string; `out` must be writable.
enum HkStatus hk_table_from_json(const char *json, struct HkTable **out);

// # Safety
// `t` must be a live table handle; `out` must be writable.
enum HkStatus hk_table_to_json(const struct HkTable *t, char **out);

// # Safety
// `t` must be null or a table handle not yet freed.
void hk_table_free(struct HkTable *t);

// Number of classes, or 0 for a null handle.
//
// # Safety
// `t` must be null or a live table handle.
size_t hk_table_class_count(const struct HkTable *t);

// # Safety
// `t` must be null or a live table handle.
size_t hk_table_indecomposable_count(const struct HkTable *t);

// Count of violated polynomial identities (0 for a consistent table); the
// first violation, if any, is left in [`hk_last_error`].
//
// # Safety
// `t` must be a live table handle; `out` must be writable.
enum HkStatus hk_table_verify(const struct HkTable *t, size_t *out);

// Parse a form written as rows, e.g. `"1,-1;0,1"`.
//
// # Safety
// `s` must be a valid NUL-terminated string; `out` must be writable.
enum HkStatus hk_form_parse(const char *s, struct HkForm **out);

// The Euler form of the table's quiver.
//
// # Safety
// `t` must be a live table handle; `out` must be writable.
enum HkStatus hk_form_of_table(const struct HkTable *t, struct HkForm **out);

// # Safety
// `f` must be null or a form handle not yet freed.
void hk_form_free(struct HkForm *f);

// Multiply two elements written in the element grammar and return the
// canonical rendering of the product. `CF` and `SF` need a table; `A`, `B`
// and `C` need a form. `graph_mode` selects the connected-graph form of the
// `B` product (otherwise the partition sum).
//
// # Safety
// Handles must be null or live; strings valid; `out` writable.
enum HkStatus hk_mult(enum HkAlgebra algebra,
                      const struct HkTable *table,
                      const struct HkForm *form,
                      const char *lhs,
                      const char *rhs,
                      bool graph_mode,
                      char **out);

// Run a named suite. Table suites need `table`; the others use `seed` and
// `trials`. `passed` receives whether every check passed and `report` the
// JSON records, one per line.
//
// # Safety
// `suite` must be a valid string; `table` null or live; outputs writable.
enum HkStatus hk_verify(const char *suite,
                        const struct HkTable *table,
                        uint64_t seed,
                        size_t trials,
                        bool *passed,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HALLKIT_H */
