/* bundlezeta C interface. Every handle is opaque and owned by the caller
   once returned; release it with the matching _free. Functions returning
   bz_status leave a message in bz_last_error() when they fail. */
#ifndef BUNDLEZETA_H
#define BUNDLEZETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BZ_API __declspec(dllexport)
#else
#define BZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Also the process exit codes of the command line tool. */
typedef enum bz_status {
  BZ_OK = 0,
  BZ_VERIFY_FAILED = 1,
  BZ_USAGE = 2,
  BZ_SCHEMA = 3,
  BZ_PRECONDITION = 4,
  BZ_INTEGRALITY = 5,
  BZ_INTERNAL = 6
} bz_status;

typedef enum bz_format { BZ_FORMAT_TEXT = 0, BZ_FORMAT_JSON = 1 } bz_format;

typedef struct bz_job bz_job;
typedef struct bz_result bz_result;
typedef struct bz_series bz_series;

BZ_API const char* bz_version(void);
/* Message of the last failure on this thread; "" when none. */
BZ_API const char* bz_last_error(void);

/* Names of the job commands and verification suites; NULL past the end. */
BZ_API const char* bz_command_name(size_t i);
BZ_API const char* bz_suite_name(size_t i);

/* Job document, JSON or TOML. */
BZ_API bz_status bz_job_parse(const char* text, bz_job** out);
/* The "command" field of the document, or NULL. */
BZ_API const char* bz_job_command(const bz_job* job);
/* Overrides of the document's own fields. */
BZ_API bz_status bz_job_set_n(bz_job* job, int n);
BZ_API bz_status bz_job_set_seed(bz_job* job, uint64_t seed);
BZ_API bz_status bz_job_set_format(bz_job* job, bz_format format);
/* Used when neither the document nor bz_job_set_n gives a truncation. */
BZ_API bz_status bz_job_set_default_n(bz_job* job, int n);
BZ_API void bz_job_free(bz_job* job);

/* Always produces a result unless out is NULL; the return value equals
   bz_result_status(*out). */
BZ_API bz_status bz_job_run(const bz_job* job, bz_result** out);
BZ_API bz_status bz_result_status(const bz_result* result);
BZ_API const char* bz_result_output(const bz_result* result);
BZ_API const char* bz_result_error(const bz_result* result);
BZ_API void bz_result_free(bz_result* result);

/* Plain zeta function of a closed surface map given on H_1 as a row-major
   dim x dim integer matrix, expanded to t^n. */
BZ_API bz_status bz_zeta_plain(const int64_t* matrix, size_t dim, int n, bz_series** out);
BZ_API int bz_series_truncation(const bz_series* s);
/* Integer coefficient of t^k of a series over Z. */
BZ_API bz_status bz_series_coefficient(const bz_series* s, int k, int64_t* out);
/* Writes at most cap bytes including the terminator; returns the full length. */
BZ_API size_t bz_series_render(const bz_series* s, char* buf, size_t cap);
BZ_API void bz_series_free(bz_series* s);

#ifdef __cplusplus
}
#endif

#endif
