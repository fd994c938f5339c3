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

// qcenter command-line driver. Prints the JSON report on stdout; with --out
// (or QCENTER_OUT_DIR) the report and any artifacts are also written there.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcenter/qcenter.h"

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string input;
  int degree = -1;
  int hbar = 2;
  bool even = false;
  std::string hexagon_sign = "+";
  std::string associator;
  std::string out;
  long seed = 0;
  int jobs = 1;
  bool timing = false;
};

int die(int code, const std::string& msg) {
  std::cerr << "qcenter: error: " << msg << "\n";
  return code;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1" || s == "plus") return 1;
  if (s == "-" || s == "-1" || s == "minus") return -1;
  return 0;
}

bool write_file(const fs::path& p, const char* content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
  return static_cast<bool>(f);
}

int run(const std::string& command, const Flags& fl) {
  qc_options* opts = qc_options_new();
  if (!opts) return die(QC_INTERNAL_ERROR, "out of memory");
  auto set = [&](const char* key, long v) {
    if (qc_options_set_int(opts, key, v) != QC_OK) throw CLI::ValidationError(key, qc_last_error());
  };
  try {
    if (fl.degree >= 0) set("degree", fl.degree);
    set("hbar", fl.hbar);
    set("even", fl.even);
    const int sign = parse_sign(fl.hexagon_sign);
    if (sign == 0) throw CLI::ValidationError("--hexagon-sign", "expected + or -");
    set("hexagon_sign", sign);
    set("seed", fl.seed);
    set("jobs", fl.jobs);
    set("timing", fl.timing);
    if (!fl.associator.empty()) qc_options_set_string(opts, "associator", fl.associator.c_str());
  } catch (const CLI::Error& e) {
    qc_options_free(opts);
    return die(QC_INPUT_ERROR, e.what());
  }

  qc_report* report = nullptr;
  const qc_status st = qc_run(command.c_str(), fl.input.empty() ? nullptr : fl.input.c_str(), opts, &report);
  qc_options_free(opts);
  if (!report) return die(st, qc_last_error());

  std::fputs(qc_report_json(report), stdout);
  std::fflush(stdout);

  std::string out = fl.out;
  if (out.empty())
    if (const char* env = std::getenv("QCENTER_OUT_DIR")) out = env;
  int code = qc_report_exit_code(report);
  if (!out.empty()) {
    std::error_code ec;
    fs::create_directories(out, ec);
    bool ok = !ec && write_file(fs::path(out) / (command + "-report.json"), qc_report_json(report));
    for (size_t i = 0; ok && i < qc_report_artifact_count(report); ++i)
      ok = write_file(fs::path(out) / qc_report_artifact_name(report, i), qc_report_artifact_content(report, i));
    if (!ok) code = die(QC_INPUT_ERROR, "cannot write to output directory '" + out + "'");
  }
  qc_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantized Poisson centers"};
  app.set_version_flag("--version", std::string(qc_version()));
  app.require_subcommand(1);
  Flags fl;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", fl.out, "Directory for the report and artifacts (default: $QCENTER_OUT_DIR)");
    sub->add_option("--seed", fl.seed, "Seed for randomized property sampling");
    sub->add_option("--jobs", fl.jobs, "Parallelism width")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", fl.timing, "Record wall time in the report (breaks byte determinism)");
  };
  auto with_file = [&](CLI::App* sub) { sub->add_option("file", fl.input, "Algebra file")->required(); };

  CLI::App* check = app.add_subcommand("check", "Validate Lie and bialgebra axioms");
  with_file(check);
  common(check);

  CLI::App* dbl = app.add_subcommand("double", "Build the Drinfeld double and check pairing and t");
  with_file(dbl);
  common(dbl);

  CLI::App* pc = app.add_subcommand("poisson-center", "Graded basis of the Poisson center");
  with_file(pc);
  pc->add_option("--degree", fl.degree, "Maximal polynomial degree")->check(CLI::NonNegativeNumber);
  common(pc);

  CLI::App* duflo = app.add_subcommand("duflo", "Duflo isomorphism on invariants");
  with_file(duflo);
  duflo->add_option("--degree", fl.degree, "Maximal polynomial degree")->check(CLI::NonNegativeNumber);
  common(duflo);

  CLI::App* sa = app.add_subcommand("solve-associator", "Solve pentagon and hexagon degree by degree");
  sa->add_option("file", fl.input, "Optional bialgebra file for the specialization checks");
  sa->add_option("--degree", fl.degree, "Maximal degree")->check(CLI::NonNegativeNumber);
  sa->add_flag("--even", fl.even, "Impose Φ(−X,−Y) = Φ(X,Y)");
  sa->add_option("--hexagon-sign", fl.hexagon_sign, "+ or -");
  common(sa);

  CLI::App* ek = app.add_subcommand("ek-verify", "Star product and quantized center checks");
  with_file(ek);
  ek->add_option("--degree", fl.degree, "Maximal function degree")->check(CLI::NonNegativeNumber);
  ek->add_option("--hbar", fl.hbar, "Bound on the power of hbar")->check(CLI::NonNegativeNumber);
  ek->add_option("--associator", fl.associator, "Associator solution file (solved on the fly if absent)");
  ek->add_option("--hexagon-sign", fl.hexagon_sign, "+ or -");
  common(ek);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return QC_INPUT_ERROR;
  }
  return run(app.get_subcommands().front()->get_name(), fl);
}
