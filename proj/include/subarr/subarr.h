/*
 * Copyright 2026 The subarr Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUBARR_SUBARR_H
#define SUBARR_SUBARR_H

/* C interface to the subspace arrangement analyzer.
 *
 * Every call returns a status code. On failure the message is available
 * from subarr_last_error() on the calling thread until its next call.
 * Strings returned through char** are owned by the caller and released
 * with subarr_string_free; strings returned by report accessors live as
 * long as the report.
 */

#include <stddef.h>

#if defined(_WIN32)
#  define SUBARR_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define SUBARR_API __attribute__((visibility("default")))
#else
#  define SUBARR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subarr_status {
  SUBARR_OK = 0,
  SUBARR_ERR_INVARIANT = 1, /* an identity that must hold failed */
  SUBARR_ERR_INPUT = 2,     /* bad input file or violated hypothesis */
  SUBARR_ERR_ARGUMENT = 3,  /* bad argument to this interface */
  SUBARR_ERR_INTERNAL = 4
} subarr_status;

typedef struct subarr_options {
  int max_degree;       /* N, at least 2 */
  size_t generator_cap; /* abort when the model needs more generators */
} subarr_options;

typedef struct subarr_report subarr_report;

SUBARR_API void subarr_options_init(subarr_options* options);

SUBARR_API subarr_status subarr_analyze_file(const char* path, const subarr_options* options, subarr_report** out);
/* source names the text in error messages; may be NULL. */
SUBARR_API subarr_status subarr_analyze_json(const char* text, const char* source, const subarr_options* options,
                                             subarr_report** out);

SUBARR_API const char* subarr_report_json(const subarr_report* report);
SUBARR_API const char* subarr_report_text(const subarr_report* report);
/* "elliptic" or "hyperbolic". */
SUBARR_API const char* subarr_report_verdict(const subarr_report* report);
/* "A", "B", or NULL for elliptic inputs. */
SUBARR_API const char* subarr_report_case(const subarr_report* report);
/* -1 when phi is injective. */
SUBARR_API int subarr_report_r(const subarr_report* report);
SUBARR_API void subarr_report_free(subarr_report* report);

enum { SUBARR_FORMAT_TEXT = 0, SUBARR_FORMAT_JSON = 1 };

/* Ranks of the free graded Lie algebra on generators of the given degrees,
 * degrees 1..max_degree, nonzero entries. */
SUBARR_API subarr_status subarr_free_lie_ranks(const int* degrees, size_t count, int max_degree, int format,
                                               char** out);

/* Runs the invariant suite over every .json file in corpus_dir. *passed is
 * set to 1 when every case passed. */
SUBARR_API subarr_status subarr_selftest(const char* corpus_dir, int max_degree, int inject_sign_fault, char** summary,
                                         int* passed);

SUBARR_API void subarr_string_free(char* s);
SUBARR_API const char* subarr_last_error(void);
SUBARR_API const char* subarr_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SUBARR_SUBARR_H */
