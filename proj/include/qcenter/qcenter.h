// Copyright 2026 The qcenter Authors
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

#ifndef QCENTER_QCENTER_H_
#define QCENTER_QCENTER_H_

/* C interface to libqcenter. All strings are UTF-8 and NUL-terminated.
 * Strings returned by the library are owned by the handle they came from
 * and stay valid until that handle is freed. */

#include <stddef.h>

#if defined(QCENTER_BUILDING_LIBRARY)
#define QC_API __attribute__((visibility("default")))
#else
#define QC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the values are also the CLI exit codes. */
typedef enum qc_status {
  QC_OK = 0,
  QC_CHECK_FAILED = 1,
  QC_INPUT_ERROR = 2,
  QC_BOUND_ERROR = 3,
  QC_INTERNAL_ERROR = 4
} qc_status;

typedef struct qc_options qc_options;
typedef struct qc_report qc_report;
typedef struct qc_algebra qc_algebra;

QC_API const char* qc_version(void);

/* Message for the most recent error on the calling thread, "" if none. */
QC_API const char* qc_last_error(void);

QC_API qc_options* qc_options_new(void);
QC_API void qc_options_free(qc_options* opts);
/* Integer keys: degree, hbar, hexagon_sign (+1 or -1), seed, jobs, even, timing. */
QC_API qc_status qc_options_set_int(qc_options* opts, const char* key, long value);
/* String keys: associator (path to a solution file). */
QC_API qc_status qc_options_set_string(qc_options* opts, const char* key, const char* value);

/* Runs one command: check, double, poisson-center, duflo, solve-associator
 * or ek-verify. `input` is an algebra file path; it may be NULL for
 * solve-associator. `opts` may be NULL. On QC_OK or QC_CHECK_FAILED a
 * report is stored in *out; otherwise *out is NULL and qc_last_error()
 * explains. */
QC_API qc_status qc_run(const char* command, const char* input, const qc_options* opts, qc_report** out);

QC_API const char* qc_report_json(const qc_report* report);
/* 0 if every record passed, else 1. */
QC_API int qc_report_exit_code(const qc_report* report);
QC_API size_t qc_report_artifact_count(const qc_report* report);
QC_API const char* qc_report_artifact_name(const qc_report* report, size_t i);
QC_API const char* qc_report_artifact_content(const qc_report* report, size_t i);
QC_API void qc_report_free(qc_report* report);

/* Parses an algebra file; axioms are checked by the "check" command. */
QC_API qc_status qc_algebra_open(const char* path, qc_algebra** out);
QC_API size_t qc_algebra_dim(const qc_algebra* a);
QC_API const char* qc_algebra_name(const qc_algebra* a);
/* Canonical serialization. */
QC_API const char* qc_algebra_serialize(const qc_algebra* a);
QC_API void qc_algebra_free(qc_algebra* a);

#ifdef __cplusplus
}
#endif

#endif  /* QCENTER_QCENTER_H_ */
