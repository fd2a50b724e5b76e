#ifndef CYCLOTILE_H
#define CYCLOTILE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Passing this as a budget removes the node limit.
#define CT_BUDGET_UNLIMITED UINT64_MAX

typedef enum CtStatus {
  CT_OK = 0,
  // A search finished without a witness.
  CT_NOT_FOUND = 1,
  // A search ran out of nodes before deciding.
  CT_BUDGET_EXHAUSTED = 2,
  CT_INVALID_ARGUMENT = 3,
  CT_PARSE_ERROR = 4,
  CT_NULL_POINTER = 5,
  CT_INTERNAL_ERROR = 6,
} CtStatus;

// A subset (or multiset) of `Z_n`.
typedef struct CtSet CtSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *ct_last_error(void);

// Library version as a static nul-terminated string.
const char *ct_version(void);

// Parses `n=<order>:<e>,<e>,...` (multiplicities as `<e>^<m>`).
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum CtStatus ct_set_parse(const char *text, struct CtSet **out);

// Builds a set from `len` elements of `Z_n`. Repeated elements give a
// multiset.
//
// # Safety
// `elems` must point to `len` readable values (it may be null when
// `len` is 0) and `out` must be valid.
enum CtStatus ct_set_from_elements(size_t n, const size_t *elems, size_t len, struct CtSet **out);

// Releases a handle. Null is accepted and ignored.
//
// # Safety
// `set` must come from this library and must not be used afterwards.
void ct_set_free(struct CtSet *set);

// The group order `n`, or 0 for a null handle.
//
// # Safety
// `set` must be null or a live handle.
size_t ct_set_order(const struct CtSet *set);

// Number of elements counted with multiplicity, or 0 for a null handle.
//
// # Safety
// `set` must be null or a live handle.
size_t ct_set_len(const struct CtSet *set);

// Writes the elements, increasing and repeated by multiplicity.
//
// # Safety
// `buf` must have room for `cap` values; `len` must be valid.
enum CtStatus ct_set_elements(const struct CtSet *set, size_t *buf, size_t cap, size_t *len);

// The set in the `n=...:...` text form, or null for a null handle. Free
// with `ct_string_free`.
//
// # Safety
// `set` must be null or a live handle.
char *ct_set_to_string(const struct CtSet *set);

// # Safety
// `s` must be null or a string returned by this library.
void ct_string_free(char *s);

// The divisors `d > 1` of `n` with `Φ_d` dividing the mask polynomial.
//
// # Safety
// `buf` must have room for `cap` values; `len` must be valid.
enum CtStatus ct_zero_divisor_set(const struct CtSet *set, size_t *buf, size_t cap, size_t *len);

// # Safety
// Handles must be live; `out` must be valid.
enum CtStatus ct_verify_spectral_pair(const struct CtSet *set,
                                      const struct CtSet *spectrum,
                                      bool *out);

// # Safety
// Handles must be live; `out` must be valid.
enum CtStatus ct_verify_tiling(const struct CtSet *set, const struct CtSet *complement, bool *out);

// Searches for a spectrum containing 0. On `CT_OK` a new handle is stored
// in `*out`; otherwise `*out` is null. `nodes_out` may be null.
//
// # Safety
// `set` must be live; `out` must be valid.
enum CtStatus ct_find_spectrum(const struct CtSet *set,
                               uint64_t budget,
                               struct CtSet **out,
                               uint64_t *nodes_out);

// Searches for a tiling complement containing 0. Same conventions as
// `ct_find_spectrum`.
//
// # Safety
// `set` must be live; `out` must be valid.
enum CtStatus ct_find_tiling_complement(const struct CtSet *set,
                                        uint64_t budget,
                                        struct CtSet **out,
                                        uint64_t *nodes_out);

// # Safety
// `set` must be live; `out` must be valid.
enum CtStatus ct_t1_check(const struct CtSet *set, bool *out);

// # Safety
// `set` must be live; `out` must be valid.
enum CtStatus ct_t2_check(const struct CtSet *set, bool *out);

// The lexicographically smallest affine image `aS + b`, `gcd(a, n) = 1`.
//
// # Safety
// `set` must be live; `out` must be valid.
enum CtStatus ct_affine_canonical(const struct CtSet *set, struct CtSet **out);

// Runs a campaign and returns its JSON report in `*json_out` (free with
// `ct_string_free`). `strategy` is `"clique"` or `"exhaustive"`; `sizes`
// may be null for the default range, or a list such as `"1-6,12"`.
//
// # Safety
// Strings must be nul-terminated or null where allowed; `json_out` must
// be valid.
enum CtStatus ct_run_campaign_json(size_t n,
                                   const char *strategy,
                                   const char *sizes,
                                   uint64_t budget,
                                   size_t workers,
                                   uint64_t seed,
                                   char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOTILE_H */
