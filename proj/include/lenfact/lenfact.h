#ifndef LENFACT_H
#define LENFACT_H

/* C interface to liblenfact. Handles are opaque; every call that can fail
 * returns an lf_status and leaves a message for lf_last_error() (per thread).
 * Strings returned by the library stay valid until the owning handle is
 * freed; lf_last_error() is valid until the next failing call. */

#include <stddef.h>
#include <stdint.h>

#if defined(LENFACT_BUILDING_LIBRARY)
#define LF_API __attribute__((visibility("default")))
#else
#define LF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_INVALID_INPUT = 1,
  LF_EMPTY_GENERATORS = 2,
  LF_NON_POSITIVE_PUISEUX_GENERATOR = 3,
  LF_NOT_POINTED = 4,
  LF_ELEMENT_NOT_IN_MONOID = 5,
  LF_NOT_PLS = 6,
  LF_BOUND_REQUIRED_FOR_INFINITE_GROUP = 7,
  LF_OVERFLOW = 8,
  LF_ASSERTION_FAILED = 9,
  LF_INTERNAL = 100
} lf_status;

typedef struct lf_monoid lf_monoid;
typedef struct lf_report lf_report;

typedef struct lf_options {
  int64_t bound;        /* < 0: default (4 x max atom grading) */
  const char* strategy; /* "lattice", "brute", "all"; NULL = "all" */
  const char* format;   /* "text", "json"; NULL = "text" */
  const char* element;  /* JSON element for factorize/lengths/catenary; may be NULL */
} lf_options;

LF_API const char* lf_version(void);
LF_API const char* lf_status_name(lf_status status);
LF_API const char* lf_last_error(void);
LF_API void lf_options_init(lf_options* options);

/* Monoid handles built from an input document. */
LF_API lf_status lf_monoid_from_json(const char* json, lf_monoid** out);
LF_API void lf_monoid_free(lf_monoid* monoid);
LF_API size_t lf_monoid_atom_count(const lf_monoid* monoid);
LF_API size_t lf_monoid_dim(const lf_monoid* monoid);
/* Copies atom i (lf_monoid_dim entries) into out. */
LF_API lf_status lf_monoid_atom(const lf_monoid* monoid, size_t i, int64_t* out, size_t out_len);
LF_API lf_status lf_monoid_rank(const lf_monoid* monoid, size_t* out);

LF_API lf_status lf_is_factorial(const lf_monoid* monoid, int* out);
LF_API lf_status lf_is_half_factorial(const lf_monoid* monoid, int* out);
LF_API lf_status lf_is_length_factorial(const lf_monoid* monoid, int* out);
LF_API lf_status lf_is_pls(const lf_monoid* monoid, int* out);
/* Number of factorizations of x (lf_monoid_dim entries); 0 if x is not in the monoid. */
LF_API lf_status lf_factorization_count(const lf_monoid* monoid, const int64_t* x, size_t x_len, size_t* out);

/* Runs a CLI command. input may be NULL for paper-suite. A report is
 * produced even when the command fails; its exit code says how. */
LF_API lf_status lf_run(const char* command, const char* input, const lf_options* options, lf_report** out);
LF_API const char* lf_report_text(const lf_report* report);
LF_API int lf_report_exit_code(const lf_report* report);
LF_API void lf_report_free(lf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LENFACT_H */
