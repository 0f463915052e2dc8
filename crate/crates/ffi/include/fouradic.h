#ifndef FOURADIC_H
#define FOURADIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Result codes. The first four match the command-line exit codes.
typedef enum FaStatus {
  FA_STATUS_OK = 0,
  FA_STATUS_MISMATCH = 1,
  FA_STATUS_INVALID_ARGUMENT = 2,
  FA_STATUS_IO = 3,
  FA_STATUS_PARSE = 4,
  FA_STATUS_NULL_POINTER = 5,
  FA_STATUS_INTERNAL = 6,
  FA_STATUS_PANIC = 7,
} FaStatus;

// Binary sequence of odd period with its provenance tag.
typedef struct FaBinary FaBinary;

// Quaternary sequence.
typedef struct FaQuaternary FaQuaternary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string.
const char *fa_version(void);

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next `fa_*` call on the same thread.
const char *fa_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void fa_string_free(char *s);

// Builds a sequence from a provenance tag such as `legendre:p=7,variant=ell+L2`.
//
// # Safety
// `tag` must be a NUL-terminated string; `out` must be writable.
enum FaStatus fa_binary_from_tag(const char *tag, struct FaBinary **out);

// Builds a sequence from `len` bits, each 0 or 1.
//
// # Safety
// `bits` must point to `len` readable bytes; `out` must be writable.
enum FaStatus fa_binary_from_bits(const uint8_t *bits, size_t len, struct FaBinary **out);

// # Safety
// `s` must be NULL or a handle from this library, not yet freed.
void fa_binary_free(struct FaBinary *s);

// Period of `s`, or 0 for NULL.
//
// # Safety
// `s` must be NULL or a live handle.
size_t fa_binary_period(const struct FaBinary *s);

// Copies the bits into `buf`. `*len_out` always receives the period; a
// short buffer gives `InvalidArgument`.
//
// # Safety
// `buf` must have room for `cap` bytes; `len_out` must be writable.
enum FaStatus fa_binary_bits(const struct FaBinary *s, uint8_t *buf, size_t cap, size_t *len_out);

// Provenance tag as a new string.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum FaStatus fa_binary_provenance(const struct FaBinary *s, char **out);

// `Ok` if `s` has ideal autocorrelation, `Mismatch` otherwise.
//
// # Safety
// `s` must be a live handle.
enum FaStatus fa_binary_is_ideal(const struct FaBinary *s);

// Applies one transform step `C`, `L<e>` or `M<r>` into a new handle.
//
// # Safety
// `s` must be a live handle, `step` a NUL-terminated string, `out` writable.
enum FaStatus fa_binary_transform(const struct FaBinary *s,
                                  const char *step,
                                  struct FaBinary **out);

// `QSEQ` text of `s` (alphabet 2).
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum FaStatus fa_binary_to_qseq(const struct FaBinary *s, char **out);

// Parses `QSEQ` text with alphabet 2.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum FaStatus fa_binary_from_qseq(const char *text, struct FaBinary **out);

// Interleaves two binary sequences of equal period.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum FaStatus fa_interleave(const struct FaBinary *a,
                            const struct FaBinary *b,
                            struct FaQuaternary **out);

// Builds a quaternary sequence from `len` digits in `0..=3`.
//
// # Safety
// `digits` must point to `len` readable bytes; `out` must be writable.
enum FaStatus fa_quaternary_from_digits(const uint8_t *digits,
                                        size_t len,
                                        struct FaQuaternary **out);

// # Safety
// `q` must be NULL or a handle from this library, not yet freed.
void fa_quaternary_free(struct FaQuaternary *q);

// Period of `q`, or 0 for NULL.
//
// # Safety
// `q` must be NULL or a live handle.
size_t fa_quaternary_period(const struct FaQuaternary *q);

// Copies the digits into `buf`; see [`fa_binary_bits`].
//
// # Safety
// `buf` must have room for `cap` bytes; `len_out` must be writable.
enum FaStatus fa_quaternary_digits(const struct FaQuaternary *q,
                                   uint8_t *buf,
                                   size_t cap,
                                   size_t *len_out);

// JSON analysis record: `S(4)`, `d`, `d_+`, `d_-`, ratio, `log4`, thresholds, spectrum.
//
// # Safety
// `q` must be a live handle; `out` must be writable.
enum FaStatus fa_quaternary_analyze_json(const struct FaQuaternary *q, char **out);

// `QSEQ` text of `q` (alphabet 4).
//
// # Safety
// `q` must be a live handle; `out` must be writable.
enum FaStatus fa_quaternary_to_qseq(const struct FaQuaternary *q, char **out);

// Parses `QSEQ` text with alphabet 4.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum FaStatus fa_quaternary_from_qseq(const char *text, struct FaQuaternary **out);

// Runs a JSON verification request, e.g. `{"theorem":"thm8","k":3,"l":2}`.
// Returns `Ok` on a match and `Mismatch` otherwise; in both cases
// `*report_out` receives the JSON report.
//
// # Safety
// `request` must be a NUL-terminated string; `report_out` must be writable.
enum FaStatus fa_verify_json(const char *request, char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FOURADIC_H */
