#ifndef GALKIT_H
#define GALKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GALKIT_API __declspec(dllexport)
#else
#define GALKIT_API __attribute__((visibility("default")))
#endif

typedef enum galkit_status {
  GALKIT_OK = 0,
  GALKIT_INVALID_ARGUMENT = 1,
  GALKIT_PARSE_ERROR = 2,
  GALKIT_DEGREE_MISMATCH = 3,
  GALKIT_BUDGET_EXCEEDED = 4,
  GALKIT_PRECONDITION = 5,
  GALKIT_INTERNAL = 6
} galkit_status;

typedef enum galkit_format { GALKIT_FORMAT_TEXT = 0, GALKIT_FORMAT_JSON = 1 } galkit_format;

typedef enum galkit_check_status {
  GALKIT_CHECK_PASS = 0,
  GALKIT_CHECK_FAIL = 1,
  GALKIT_CHECK_SKIPPED = 2
} galkit_check_status;

typedef struct galkit_reports galkit_reports;
typedef struct galkit_group galkit_group;

/* Message of the last failure on this thread; empty after success. */
GALKIT_API const char *galkit_last_error(void);

/* Strings returned through char** are owned by the caller. */
GALKIT_API void galkit_string_free(char *s);

/* Newline-separated check names in registry order. */
GALKIT_API galkit_status galkit_check_names(char **out);

/* config_json: {"checks": "all" | [name | {"name", "params"}], "subgroup_bound",
   "degree_budget", "seed"}. */
GALKIT_API galkit_status galkit_suite_run(const char *config_json, galkit_reports **out);
GALKIT_API galkit_status galkit_reports_parse(const char *json, galkit_reports **out);
GALKIT_API galkit_status galkit_reports_emit(const galkit_reports *reports, galkit_format format,
                                             int timings, char **out);
GALKIT_API size_t galkit_reports_count(const galkit_reports *reports);
GALKIT_API galkit_check_status galkit_reports_status(const galkit_reports *reports, size_t index);
/* 0 when nothing failed, 1 otherwise. */
GALKIT_API int galkit_reports_exit_code(const galkit_reports *reports);
GALKIT_API void galkit_reports_free(galkit_reports *reports);

GALKIT_API galkit_status galkit_construct(const char *family, const char *params_json,
                                          galkit_format format, char **out);

/* JSON {"degree", "generators"} or cycle text separated by ';'. degree 0 infers it. */
GALKIT_API galkit_status galkit_group_parse(const char *text, size_t degree, galkit_group **out);
GALKIT_API size_t galkit_group_degree(const galkit_group *g);
GALKIT_API galkit_status galkit_group_order(const galkit_group *g, char **out);
GALKIT_API galkit_status galkit_group_to_json(const galkit_group *g, char **out);
GALKIT_API void galkit_group_free(galkit_group *g);

#ifdef __cplusplus
}
#endif

#endif
