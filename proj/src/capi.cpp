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

#include "qcenter/qcenter.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qcenter/algebra_file.hpp"
#include "qcenter/error.hpp"
#include "qcenter/suites.hpp"

struct qc_options {
  qcenter::SuiteOptions opt;
};

struct qc_report {
  std::string json;
  int exit_code = 0;
  std::vector<qcenter::Artifact> artifacts;
};

struct qc_algebra {
  qcenter::AlgebraFile file;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

qc_status fail(qc_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
qc_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const qcenter::Error& e) {
    return fail(static_cast<qc_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QC_BOUND_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(QC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(QC_INTERNAL_ERROR, "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* qc_version(void) { return QCENTER_VERSION_STRING; }

const char* qc_last_error(void) { return g_last_error.c_str(); }

qc_options* qc_options_new(void) { return new (std::nothrow) qc_options; }

void qc_options_free(qc_options* opts) { delete opts; }

qc_status qc_options_set_int(qc_options* opts, const char* key, long value) {
  if (!opts || !key) return fail(QC_INPUT_ERROR, "null argument");
  auto& o = opts->opt;
  const std::string k = key;
  if (k == "degree") {
    if (value < 0) return fail(QC_INPUT_ERROR, "degree must be nonnegative");
    o.degree = static_cast<int>(value);
  } else if (k == "hbar") {
    if (value < 0) return fail(QC_INPUT_ERROR, "hbar bound must be nonnegative");
    o.hbar = static_cast<int>(value);
  } else if (k == "hexagon_sign") {
    if (value != 1 && value != -1) return fail(QC_INPUT_ERROR, "hexagon_sign must be +1 or -1");
    o.hexagon_sign = static_cast<int>(value);
  } else if (k == "seed") {
    o.seed = static_cast<unsigned>(value);
  } else if (k == "jobs") {
    if (value < 1) return fail(QC_INPUT_ERROR, "jobs must be positive");
    o.jobs = static_cast<int>(value);
  } else if (k == "even") {
    o.even = value != 0;
  } else if (k == "timing") {
    o.timing = value != 0;
  } else {
    return fail(QC_INPUT_ERROR, "unknown option '" + k + "'");
  }
  return QC_OK;
}

qc_status qc_options_set_string(qc_options* opts, const char* key, const char* value) {
  if (!opts || !key || !value) return fail(QC_INPUT_ERROR, "null argument");
  if (std::strcmp(key, "associator") != 0) return fail(QC_INPUT_ERROR, std::string("unknown option '") + key + "'");
  opts->opt.associator_path = value;
  return QC_OK;
}

qc_status qc_run(const char* command, const char* input, const qc_options* opts, qc_report** out) {
  if (!out) return fail(QC_INPUT_ERROR, "null argument");
  *out = nullptr;
  if (!command) return fail(QC_INPUT_ERROR, "null command");
  return guarded([&] {
    const qcenter::SuiteOptions o = opts ? opts->opt : qcenter::SuiteOptions{};
    qcenter::SuiteResult r = qcenter::run_command(command, input ? input : "", o);
    auto* rep = new qc_report;
    rep->json = r.report.to_json();
    rep->exit_code = r.exit_code();
    rep->artifacts = std::move(r.artifacts);
    *out = rep;
    return rep->exit_code == 0 ? QC_OK : QC_CHECK_FAILED;
  });
}

const char* qc_report_json(const qc_report* report) { return report ? report->json.c_str() : ""; }

int qc_report_exit_code(const qc_report* report) { return report ? report->exit_code : QC_INTERNAL_ERROR; }

size_t qc_report_artifact_count(const qc_report* report) { return report ? report->artifacts.size() : 0; }

const char* qc_report_artifact_name(const qc_report* report, size_t i) {
  return report && i < report->artifacts.size() ? report->artifacts[i].name.c_str() : nullptr;
}

const char* qc_report_artifact_content(const qc_report* report, size_t i) {
  return report && i < report->artifacts.size() ? report->artifacts[i].content.c_str() : nullptr;
}

void qc_report_free(qc_report* report) { delete report; }

qc_status qc_algebra_open(const char* path, qc_algebra** out) {
  if (!out) return fail(QC_INPUT_ERROR, "null argument");
  *out = nullptr;
  if (!path) return fail(QC_INPUT_ERROR, "null path");
  return guarded([&] {
    auto* a = new qc_algebra;
    try {
      a->file = qcenter::read_algebra_file(path);
      a->text = qcenter::serialize(a->file);
    } catch (...) {
      delete a;
      throw;
    }
    *out = a;
    return QC_OK;
  });
}

size_t qc_algebra_dim(const qc_algebra* a) { return a ? a->file.dim() : 0; }

const char* qc_algebra_name(const qc_algebra* a) { return a ? a->file.name.c_str() : ""; }

const char* qc_algebra_serialize(const qc_algebra* a) { return a ? a->text.c_str() : ""; }

void qc_algebra_free(qc_algebra* a) { delete a; }

}  // extern "C"
