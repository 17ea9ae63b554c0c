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

/* Compiles the public header as C and drives a minimal solve. */

#include <stdio.h>
#include <string.h>

#include "gridlink/gridlink.h"

int main(void) {
  gl_instance* inst = NULL;
  gl_result* res = NULL;
  char* text = NULL;
  int failures = 0;

  if (gl_instance_new(4, 4, &inst) != GL_OK) return 1;
  gl_instance_add_pair(inst, 1, 1, 4, 4);
  gl_instance_add_pair(inst, 1, 4, 4, 1);
  if (gl_solve(inst, GL_METHOD_ORACLE, NULL, &res) != GL_OK) {
    fprintf(stderr, "solve: %s\n", gl_last_error());
    return 1;
  }
  if (gl_result_status(res) != GL_SAT) ++failures;
  if (gl_result_report(res, GL_FORMAT_ASCII, &text) != GL_OK) ++failures;
  if (text == NULL || strchr(text, '1') == NULL) ++failures;
  gl_string_free(text);
  gl_result_free(res);
  gl_instance_free(inst);

  if (gl_instance_parse("grid 2\n", &inst) != GL_ERR_PARSE) ++failures;
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
