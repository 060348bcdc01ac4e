#ifndef ISOPROJ_H
#define ISOPROJ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IsoFormat {
  ISO_FORMAT_JSON = 0,
  ISO_FORMAT_CSV = 1,
} IsoFormat;

typedef enum IsoStatus {
  ISO_STATUS_OK = 0,
  ISO_STATUS_NULL_POINTER = 1,
  ISO_STATUS_INVALID_STRING = 2,
  ISO_STATUS_UNKNOWN_LABEL = 3,
  ISO_STATUS_ILLEGAL_PARAMETERS = 4,
  ISO_STATUS_NOT_FKM = 5,
  ISO_STATUS_SPLIT_SHAPE = 6,
  ISO_STATUS_OUT_OF_SCOPE = 7,
  ISO_STATUS_UNKNOWN_FORMAT = 8,
  ISO_STATUS_INVARIANT = 9,
  ISO_STATUS_OTHER = 10,
  ISO_STATUS_PANIC = 11,
} IsoStatus;

// The census rows for one n.
typedef struct IsoCensus IsoCensus;

// An FKM family with its congruence classes.
typedef struct IsoFkm IsoFkm;

// A catalog record with its congruence classes.
typedef struct IsoPair IsoPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code. Never null; do not free.
const char *iso_status_message(enum IsoStatus status);

// Detail of the last failure on this thread, or null if none. Free with
// `iso_string_free`.
char *iso_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library.
void iso_string_free(char *s);

// # Safety
// `label` must be a NUL-terminated string; `out` must be writable.
enum IsoStatus iso_pair_new(const char *label, size_t p, size_t nu, struct IsoPair **out);

// # Safety
// `pair` must be null or a handle from `iso_pair_new` not yet freed.
void iso_pair_free(struct IsoPair *pair);

// Number N of congruence classes.
//
// # Safety
// `pair` must be a live handle; `out` must be writable.
enum IsoStatus iso_pair_class_count(const struct IsoPair *pair, size_t *out);

// # Safety
// `pair` must be a live handle; `out` must be writable.
enum IsoStatus iso_pair_admissible_count(const struct IsoPair *pair, size_t *out);

// # Safety
// `pair` must be a live handle; `out` must be writable.
enum IsoStatus iso_pair_is_hermitian(const struct IsoPair *pair, bool *out);

// Ambient CP^n and codimension of the projected foliations.
//
// # Safety
// `pair` must be a live handle; both outs must be writable.
enum IsoStatus iso_pair_dimensions(const struct IsoPair *pair, uint64_t *n, size_t *codim);

// Orbit representatives, one per line, in the h-basis.
//
// # Safety
// `pair` must be a live handle; `out` must be writable.
enum IsoStatus iso_pair_representatives(const struct IsoPair *pair, char **out);

// Family with a single multiplicity k (m not divisible by 4).
//
// # Safety
// `out` must be writable.
enum IsoStatus iso_fkm_new(size_t m, size_t k, struct IsoFkm **out);

// Family with split (k+, k-) (m divisible by 4).
//
// # Safety
// `out` must be writable.
enum IsoStatus iso_fkm_new_split(size_t m, size_t kplus, size_t kminus, struct IsoFkm **out);

// # Safety
// `f` must be null or a handle from `iso_fkm_new*` not yet freed.
void iso_fkm_free(struct IsoFkm *f);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum IsoStatus iso_fkm_class_count(const struct IsoFkm *f, size_t *out);

// # Safety
// `f` must be a live handle; all outs must be writable.
enum IsoStatus iso_fkm_multiplicities(const struct IsoFkm *f,
                                      uint64_t *n,
                                      int64_t *m1,
                                      int64_t *m2);

// Orbit representatives, one per line, in the ε-basis.
//
// # Safety
// `f` must be a live handle; `out` must be writable.
enum IsoStatus iso_fkm_representatives(const struct IsoFkm *f, char **out);

// # Safety
// `out` must be writable.
enum IsoStatus iso_census_new(uint64_t n, struct IsoCensus **out);

// # Safety
// `c` must be null or a handle from `iso_census_new` not yet freed.
void iso_census_free(struct IsoCensus *c);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum IsoStatus iso_census_len(const struct IsoCensus *c, size_t *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum IsoStatus iso_census_export(const struct IsoCensus *c, enum IsoFormat format, char **out);

// Whether every irreducible isoparametric foliation on CP^n is homogeneous.
//
// # Safety
// `out` must be writable.
enum IsoStatus iso_all_homogeneous(uint64_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOPROJ_H */
