#ifndef SPECLAB_H
#define SPECLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define SPECLAB_API __declspec(dllexport)
#else
#define SPECLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum speclab_status {
  SPECLAB_OK = 0,
  SPECLAB_E_INVALID_ARGUMENT = 1,
  SPECLAB_E_DIMENSION_MISMATCH = 2,
  SPECLAB_E_INDEX_OUT_OF_RANGE = 3,
  SPECLAB_E_NOT_EIGENFUNCTION = 4,
  SPECLAB_E_NEGATIVE_DISCRIMINANT = 5,
  SPECLAB_E_NOT_IN_FIELD = 6,
  SPECLAB_E_ON_SPECTRUM = 7,
  SPECLAB_E_BELOW_BOUND = 8,
  SPECLAB_E_PARSE = 9,
  SPECLAB_E_COST_GUARD = 10,
  SPECLAB_E_INTERNAL = 11,
  SPECLAB_E_NULL_POINTER = 12
} speclab_status;

typedef enum speclab_format { SPECLAB_FORMAT_JSON = 0, SPECLAB_FORMAT_CSV = 1, SPECLAB_FORMAT_TEXT = 2 } speclab_format;

/* Rendered document plus a verdict. Produced by the command entry points below. */
typedef struct speclab_output speclab_output;

/* Exact polynomial function on S^n (normal form). */
typedef struct speclab_poly speclab_poly;

SPECLAB_API const char* speclab_version(void);
/* Message of the last failed call on this thread; empty after a successful call. */
SPECLAB_API const char* speclab_last_error(void);
SPECLAB_API const char* speclab_status_name(speclab_status s);

SPECLAB_API const char* speclab_output_text(const speclab_output* out);
SPECLAB_API size_t speclab_output_size(const speclab_output* out);
/* 1 when every check in the document passed (always 1 for pure computations). */
SPECLAB_API int speclab_output_passed(const speclab_output* out);
SPECLAB_API void speclab_output_free(speclab_output* out);

/* kind: "scalar" or "dirac"; op: "conformal" or "laplacian" (scalar only, NULL = conformal). */
SPECLAB_API speclab_status speclab_spectrum(const char* kind, int n, int count, const char* op, speclab_format fmt,
                                            speclab_output** out);

/* Exact spectrum of the Dirac model on the truncation V_N. With matrices != 0 the output is the
   JSON matrix dump instead. */
SPECLAB_API speclab_status speclab_truncation(int n, int N, int matrices, speclab_format fmt, speclab_output** out);

/* family: scalar, scalar-B, residue, mu-prime, diff-product, A1, dirac, dirac-odd, dirac-half,
   cubic. param is r, k, or j0 as text ("p/q" or a decimal). Scalar families use rows j = 0..jmax;
   Dirac families use λ = ±(n/2+j) for j = 0..jmax, or λ = ±1..±jmax when n = 0. */
SPECLAB_API speclab_status speclab_intertwinor(const char* family, int n, const char* param, int jmax,
                                               speclab_format fmt, speclab_output** out);

/* scope: scalar, spinor, entropy, all. cap bounds the scalar sweep degree, N the truncation. */
SPECLAB_API speclab_status speclab_verify(const char* scope, int n, int cap, int N, int jobs, speclab_format fmt,
                                          speclab_output** out);

/* op: "scalar" or "dirac". A candidate on the spectrum produces a document naming its level. */
SPECLAB_API speclab_status speclab_refute(const char* op, int n, const char* lambda, speclab_format fmt,
                                          speclab_output** out);

SPECLAB_API speclab_status speclab_entropy(int order, int cutoff, int jobs, speclab_format fmt, speclab_output** out);

SPECLAB_API speclab_status speclab_poly_parse(int n, const char* text, speclab_poly** out);
SPECLAB_API void speclab_poly_free(speclab_poly* p);
/* op: "laplacian", "conformal_D", "T<i>", "U<i>", "x<i>". */
SPECLAB_API speclab_status speclab_poly_apply(const speclab_poly* p, const char* op, speclab_poly** out);
SPECLAB_API speclab_status speclab_poly_integrate(const speclab_poly* p, speclab_output** out);
/* Canonical text; caller frees with speclab_output_free. */
SPECLAB_API speclab_status speclab_poly_to_string(const speclab_poly* p, speclab_output** out);
SPECLAB_API int speclab_poly_equal(const speclab_poly* a, const speclab_poly* b);

#ifdef __cplusplus
}
#endif

#endif
