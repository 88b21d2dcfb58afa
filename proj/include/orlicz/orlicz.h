#ifndef ORLICZ_ORLICZ_H
#define ORLICZ_ORLICZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(ORLICZ_BUILDING_LIBRARY)
#define ORLICZ_API __attribute__((visibility("default")))
#else
#define ORLICZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values mirror the library's error categories. */
typedef enum orlicz_status {
  ORLICZ_OK = 0,
  ORLICZ_INVALID_ARGUMENT = 1,
  ORLICZ_CONFIG = 2,
  ORLICZ_OVERFLOW = 3,
  ORLICZ_OUT_OF_BRACKET = 4,
  ORLICZ_CONJUGATE_INFINITE = 5,
  ORLICZ_DEGENERATE = 6,
  ORLICZ_INDETERMINATE = 7,
  ORLICZ_NOT_ESTIMABLE = 8,
  ORLICZ_CONDITION_VIOLATED = 9,
  ORLICZ_TAIL_INCONCLUSIVE = 10,
  ORLICZ_DOMAIN_EMPTY = 11,
  ORLICZ_NONCONVERGENT = 12,
  ORLICZ_IO = 13,
  ORLICZ_INTERNAL = 100
} orlicz_status;

typedef struct orlicz_young orlicz_young;
typedef struct orlicz_report orlicz_report;

typedef struct orlicz_run_options {
  int has_seed;  /* nonzero: seed overrides the config seed */
  uint64_t seed;
  int timestamp; /* nonzero: stamp reports with generation time */
} orlicz_run_options;

ORLICZ_API const char* orlicz_version(void);
ORLICZ_API const char* orlicz_status_string(orlicz_status status);
/* Message of the most recent failure on the calling thread. */
ORLICZ_API const char* orlicz_last_error(void);

/* Young functions from a JSON spec such as {"kind":"p_q","p":2,"q":3}. */
ORLICZ_API orlicz_status orlicz_young_create(const char* spec_json, orlicz_young** out);
ORLICZ_API void orlicz_young_destroy(orlicz_young* f);
ORLICZ_API orlicz_status orlicz_young_name(const orlicz_young* f, const char** out);
/* which = 0 evaluates A, which = 1 its derivative a. */
ORLICZ_API orlicz_status orlicz_young_eval(const orlicz_young* f, double t, int which, double* out);
ORLICZ_API orlicz_status orlicz_young_inverse(const orlicz_young* f, double y, double* out);
ORLICZ_API orlicz_status orlicz_young_conjugate(const orlicz_young* f, orlicz_young** out);
/* Infinite values are returned as +HUGE_VAL. */
ORLICZ_API orlicz_status orlicz_matuszewska_sup(const orlicz_young* f, double t, double* out);
ORLICZ_API orlicz_status orlicz_matuszewska_index(const orlicz_young* f, int which, double* out);

/* subcommand: "analyze", "bound", "solve" or "verify". Relative paths inside
   the config resolve against base_dir (NULL means "."). A report is produced
   whenever the run itself completes, including nonconvergent solves. */
ORLICZ_API orlicz_status orlicz_run(const char* subcommand, const char* config_json, const char* base_dir,
                                    const orlicz_run_options* options, orlicz_report** out);
ORLICZ_API void orlicz_report_destroy(orlicz_report* report);
/* 0 ok, 1 failed checks, 3 solver nonconvergence. */
ORLICZ_API int orlicz_report_exit_code(const orlicz_report* report);
ORLICZ_API const char* orlicz_report_summary(const orlicz_report* report);
ORLICZ_API size_t orlicz_report_file_count(const orlicz_report* report);
ORLICZ_API const char* orlicz_report_file_name(const orlicz_report* report, size_t index);
ORLICZ_API const char* orlicz_report_file_content(const orlicz_report* report, size_t index, size_t* length);

#ifdef __cplusplus
}
#endif

#endif
