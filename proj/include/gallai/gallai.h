/*
Copyright 2026 The gallai Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef GALLAI_GALLAI_H
#define GALLAI_GALLAI_H

/*
 * C interface to libgallai.
 *
 * Every function returns a gallai_status. On failure the thread-local
 * message is available from gallai_last_error() until the next call on the
 * same thread. Strings returned through `char**` are owned by the caller
 * and released with gallai_string_free(). Counts travel as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GALLAI_BUILDING_LIBRARY)
#define GALLAI_API __declspec(dllexport)
#else
#define GALLAI_API __declspec(dllimport)
#endif
#else
#define GALLAI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gallai_status {
  GALLAI_OK = 0,
  GALLAI_INVALID_ARGUMENT = 1,
  GALLAI_PARSE_ERROR = 2,
  GALLAI_NOT_GALLAI = 3,
  GALLAI_INCOMPLETE = 4,
  GALLAI_BUDGET_EXCEEDED = 5,
  GALLAI_IO_ERROR = 6,
  GALLAI_INTERNAL_ERROR = 7
} gallai_status;

typedef enum gallai_method {
  GALLAI_METHOD_DFS = 0,
  GALLAI_METHOD_EXACT = 1,
  GALLAI_METHOD_FORMULA = 2
} gallai_method;

typedef struct gallai_coloring gallai_coloring;

typedef struct gallai_options {
  uint64_t budget;          /* search size limit; 0 means the default */
  unsigned threads;         /* 0 selects the hardware concurrency */
  const char* checkpoint;   /* NULL disables checkpointing */
  uint64_t seed;            /* randomized verification suites */
  unsigned samples;         /* random colorings per verification cell */
} gallai_options;

GALLAI_API const char* gallai_version(void);
GALLAI_API const char* gallai_last_error(void);
GALLAI_API void gallai_string_free(char* text);
GALLAI_API void gallai_options_init(gallai_options* options);
GALLAI_API uint64_t gallai_default_budget(void);

/* Colorings ------------------------------------------------------------- */

GALLAI_API gallai_status gallai_coloring_parse(const char* text, gallai_coloring** out);
GALLAI_API gallai_status gallai_coloring_load(const char* path, gallai_coloring** out);
/* `colors` lists all C(n,2) edges in the order {0,1},{0,2},{1,2},{0,3},... */
GALLAI_API gallai_status gallai_coloring_create(unsigned n, uint32_t k, const uint32_t* colors, size_t count,
                                                gallai_coloring** out);
GALLAI_API void gallai_coloring_free(gallai_coloring* coloring);
GALLAI_API unsigned gallai_coloring_n(const gallai_coloring* coloring);
GALLAI_API uint32_t gallai_coloring_k(const gallai_coloring* coloring);
GALLAI_API gallai_status gallai_coloring_format(const gallai_coloring* coloring, char** out);
/* *out is 1 for a Gallai coloring. *triangle receives "{a,b,c}" for the
   first rainbow triangle otherwise (pass NULL to skip). */
GALLAI_API gallai_status gallai_coloring_is_gallai(const gallai_coloring* coloring, int* out, char** triangle);

/* Counting -------------------------------------------------------------- */

/* c(n,k). `k` is decimal or "pow2:e"; huge k needs the exact method. */
GALLAI_API gallai_status gallai_count(unsigned n, const char* k, gallai_method method,
                                      const gallai_options* options, char** out);
/* g(n,j): colorings using exactly the colors [j]. */
GALLAI_API gallai_status gallai_count_exact_colors(unsigned n, unsigned j, const gallai_options* options,
                                                   char** out);
/* JSON object with count, two_color_count and the reduced ratio. */
GALLAI_API gallai_status gallai_dominance_report(unsigned n, unsigned k, const gallai_options* options,
                                                 char** out_json);
/* JSON object mapping each class label to its count. */
GALLAI_API gallai_status gallai_classify_all(unsigned n, unsigned k, const gallai_options* options,
                                             char** out_json);

/* Extensions ------------------------------------------------------------ */

GALLAI_API gallai_status gallai_extensions_count(const gallai_coloring* coloring, const char* k, char** out);
/* Return nonzero from the callback to continue, zero to stop. */
typedef int (*gallai_fan_callback)(const uint32_t* fan, size_t length, void* user);
GALLAI_API gallai_status gallai_extensions_enumerate(const gallai_coloring* coloring, uint32_t k,
                                                     gallai_fan_callback callback, void* user,
                                                     uint64_t* delivered);

/* Structure ------------------------------------------------------------- */

/* JSON structure report. GALLAI_NOT_GALLAI names the rainbow triangle. */
GALLAI_API gallai_status gallai_analyze(const gallai_coloring* coloring, char** out_json);

/* Bounds and verification ---------------------------------------------- */

/* `m` and `t` are ignored unless the expression uses them (pass 0). */
GALLAI_API gallai_status gallai_bound_eval(const char* tag, unsigned n, const char* k, unsigned m, unsigned t,
                                           char** out_json);
/* *ordering receives -1, 0 or 1 for value <, =, > the bound. */
GALLAI_API gallai_status gallai_bound_compare(const char* value, const char* tag, unsigned n, const char* k,
                                              unsigned m, unsigned t, int* ordering);
/* Space-separated suite names. */
GALLAI_API const char* gallai_suite_names(void);
GALLAI_API gallai_status gallai_verify(const char* suite, unsigned n_min, unsigned n_max, unsigned k_min,
                                       unsigned k_max, const gallai_options* options, char** out_json,
                                       int* passed);

#ifdef __cplusplus
}
#endif

#endif /* GALLAI_GALLAI_H */
