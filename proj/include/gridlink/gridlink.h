// Copyright 2026 The Gridlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to gridlink. Objects are opaque handles released with their
 * _free function; strings returned through char** are released with
 * gl_string_free. Every call returning gl_error leaves a message for
 * gl_last_error() on failure (per thread). */

#ifndef GRIDLINK_GRIDLINK_H_
#define GRIDLINK_GRIDLINK_H_

#include <stdint.h>

#if defined(_WIN32)
#  define GL_API __declspec(dllexport)
#else
#  define GL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl_error {
  GL_OK = 0,
  GL_ERR_NULL_ARGUMENT = 1,
  GL_ERR_PARSE = 2,   /* instance text; message carries the line number */
  GL_ERR_INPUT = 3,   /* invalid instance, unknown name, unsupported size */
  GL_ERR_REFUSED = 4, /* e.g. rendering an invalid linkage */
  GL_ERR_INTERNAL = 5
} gl_error;

/* Values double as the CLI's exit codes. */
typedef enum gl_status { GL_SAT = 0, GL_UNSAT = 1, GL_TIMEOUT = 2 } gl_status;

typedef enum gl_method {
  GL_METHOD_ORACLE = 0,
  GL_METHOD_CONSTRUCTIVE = 1,
  GL_METHOD_BOTH = 2 /* campaigns only */
} gl_method;

typedef enum gl_format {
  GL_FORMAT_TEXT = 0, /* instance format plus '#' comment lines */
  GL_FORMAT_JSON = 1,
  GL_FORMAT_ASCII = 2,
  GL_FORMAT_SVG = 3
} gl_format;

typedef struct gl_instance gl_instance;
typedef struct gl_result gl_result;

/* Zero means the library default. */
typedef struct gl_limits {
  uint64_t node_limit;
  double time_limit; /* seconds */
} gl_limits;

typedef struct gl_campaign_options {
  int exhaustive; /* otherwise sampled */
  uint64_t samples;
  uint64_t seed;
  int jobs; /* 0: GRIDLINK_JOBS, then hardware concurrency */
  gl_method method;
  gl_limits limits;
} gl_campaign_options;

GL_API const char* gl_version(void);
GL_API const char* gl_last_error(void);
GL_API void gl_string_free(char* s);

GL_API void gl_limits_init(gl_limits* l);
GL_API void gl_campaign_options_init(gl_campaign_options* o);

/* Instances ------------------------------------------------------------- */

GL_API gl_error gl_instance_parse(const char* text, gl_instance** out);
GL_API gl_error gl_instance_new(int rows, int cols, gl_instance** out);
GL_API gl_error gl_instance_add_pair(gl_instance* inst, int s_row, int s_col, int t_row, int t_col);
/* The five-pair corner instance with the given t1 and t5. */
GL_API gl_error gl_instance_counterexample(int t1_row, int t1_col, int t5_row, int t5_col,
                                           gl_instance** out);
GL_API int gl_instance_rows(const gl_instance* inst);
GL_API int gl_instance_cols(const gl_instance* inst);
GL_API int gl_instance_pair_count(const gl_instance* inst);
GL_API int gl_instance_has_paths(const gl_instance* inst);
GL_API gl_error gl_instance_text(const gl_instance* inst, char** out);
GL_API void gl_instance_free(gl_instance* inst);

/* Checks the instance's own paths. *valid is 1 or 0; *report lists the
 * violations, one per line. */
GL_API gl_error gl_instance_validate(const gl_instance* inst, int* valid, char** report);

/* Draws the instance's own paths (GL_FORMAT_ASCII or GL_FORMAT_SVG). */
GL_API gl_error gl_instance_render(const gl_instance* inst, gl_format fmt, int show_grid, char** out);

/* Solving ---------------------------------------------------------------- */

GL_API gl_error gl_solve(const gl_instance* inst, gl_method method, const gl_limits* limits,
                         gl_result** out);
GL_API gl_status gl_result_status(const gl_result* res);
GL_API int gl_result_path_length(const gl_result* res, int pair); /* vertices; -1 if none */
GL_API gl_error gl_result_path_vertex(const gl_result* res, int pair, int index, int* row, int* col);
GL_API int gl_result_fallback(const gl_result* res);
/* GL_FORMAT_TEXT, GL_FORMAT_JSON, or a drawing of the linkage. */
GL_API gl_error gl_result_report(const gl_result* res, gl_format fmt, char** out);
GL_API void gl_result_free(gl_result* res);

/* Campaigns and certificates ---------------------------------------------- */

/* JSON campaign report; *holds is 1 when every instance is SAT, 0 when some
 * instance is UNSAT, and -1 when a budget ran out first. */
GL_API gl_error gl_pp(int rows, int cols, int k, const gl_campaign_options* opt, char** json, int* holds);

/* Newline-separated claim ids (pp22 ... prop32, lemma-<name>). */
GL_API gl_error gl_claim_ids(char** out);
/* Certificate text for a claim; *holds as for gl_pp. Uses samples, seed,
 * jobs, method and limits from opt. */
GL_API gl_error gl_certify(const char* claim_id, const gl_campaign_options* opt, char** text, int* holds);
GL_API gl_error gl_certify_counterexample(int t1_row, int t1_col, int t5_row, int t5_col,
                                          const gl_limits* limits, char** text, gl_status* status);

#ifdef __cplusplus
}
#endif

#endif /* GRIDLINK_GRIDLINK_H_ */
