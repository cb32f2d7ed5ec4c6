#ifndef PARAHORIC_H
#define PARAHORIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum PhStatus {
  PH_STATUS_OK = 0,
  PH_STATUS_NULL_POINTER = 1,
  PH_STATUS_INVALID_UTF8 = 2,
  PH_STATUS_INVALID_SPEC = 3,
  PH_STATUS_INDEX_OUT_OF_RANGE = 4,
  PH_STATUS_GROUP_TOO_LARGE = 5,
  PH_STATUS_RANK_TOO_LARGE = 6,
  PH_STATUS_NOT_ADMISSIBLE = 7,
  PH_STATUS_BUFFER_TOO_SMALL = 8,
  PH_STATUS_OVERFLOW = 9,
  PH_STATUS_VERIFICATION_FAILED = 10,
  PH_STATUS_INTERNAL = 11,
} PhStatus;

/**
 * Opaque root system handle, with its Weyl group generated on first use.
 */
typedef struct PhRootSystem PhRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ph_last_error(void);

/**
 * Builds a root system from a spec such as `"B3"` or `"A1xA2"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PhStatus ph_root_system_new(const char *spec, struct PhRootSystem **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `h` must come from [`ph_root_system_new`] and not be used afterwards.
 */
void ph_root_system_free(struct PhRootSystem *h);

/**
 * Rank `l`, or 0 for a NULL handle.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
uint32_t ph_rank(const struct PhRootSystem *h);

/**
 * `|Φ⁺|`, or 0 for a NULL handle.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
uint32_t ph_num_positive_roots(const struct PhRootSystem *h);

/**
 * `|W|` from the classical order formula; no enumeration.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_weyl_order(const struct PhRootSystem *h, uint64_t *out);

/**
 * Whether every positive root supported on `mask` has coefficients ≤ 1.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_is_admissible(const struct PhRootSystem *h, uint32_t mask, bool *out);

/**
 * Whether `ω_j + 𝔠_I ⊆ cl(C ∪ 𝔠_I)` holds for every `j ∈ I`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_kernel_inclusion(const struct PhRootSystem *h, uint32_t mask, bool *out);

/**
 * Whether the convex closure of `C ∪ 𝔠_I` has the expected half-space
 * description.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_closure_lemma(const struct PhRootSystem *h, uint32_t mask, bool *out);

/**
 * Writes the coefficients of `Σ_{w ∈ W^I} q^{ℓ(w)}`, constant term first.
 * `*len` always receives the required length; `PH_STATUS_BUFFER_TOO_SMALL`
 * is returned when `capacity` is insufficient.
 *
 * # Safety
 * `coeffs` must have room for `capacity` values; `h` and `len` must be valid.
 */
enum PhStatus ph_coset_polynomial(const struct PhRootSystem *h,
                                  uint32_t mask,
                                  int64_t *coeffs,
                                  size_t capacity,
                                  size_t *len);

/**
 * Writes the Steinberg polynomial of `I`; same buffer protocol as
 * [`ph_coset_polynomial`].
 *
 * # Safety
 * `coeffs` must have room for `capacity` values; `h` and `len` must be valid.
 */
enum PhStatus ph_steinberg_polynomial(const struct PhRootSystem *h,
                                      uint32_t mask,
                                      int64_t *coeffs,
                                      size_t capacity,
                                      size_t *len);

/**
 * `#{w ∈ W : D_R(w) = Δ∖I}`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_descent_count(const struct PhRootSystem *h, uint32_t mask, uint64_t *out);

/**
 * Number of double cosets `W_{I1}\W/W_{I2}`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum PhStatus ph_double_coset_count(const struct PhRootSystem *h,
                                    uint32_t left,
                                    uint32_t right,
                                    uint64_t *out);

/**
 * Produces the JSON report of `parahoric verify <spec> all`. The string is
 * written even when a check fails, in which case
 * `PH_STATUS_VERIFICATION_FAILED` is returned.
 *
 * # Safety
 * `spec` must be NUL-terminated; `out_json` must be a valid pointer.
 */
enum PhStatus ph_verify_json(const char *spec, char **out_json);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void ph_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARAHORIC_H */
