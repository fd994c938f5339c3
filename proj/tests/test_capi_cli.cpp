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

// Exercises the shared library through its C header and the CLI binary.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "qcenter/qcenter.h"

namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(QCENTER_DATA_DIR) + "/" + name + ".json"; }

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + QCENTER_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("qcenter_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

const char* kCorruptJacobi = R"({
  "format": "qcenter-algebra",
  "version": 1,
  "name": "broken",
  "dim": 3,
  "basis": ["x", "y", "z"],
  "bracket": [
    {"left": "x", "right": "y", "value": {"x": "1"}},
    {"left": "y", "right": "z", "value": {"y": "1"}}
  ]
}
)";

TEST(CApi, VersionAndAlgebraHandle) {
  EXPECT_STREQ(qc_version(), "0.3.0");
  qc_algebra* a = nullptr;
  ASSERT_EQ(qc_algebra_open(data("sl2-standard").c_str(), &a), QC_OK);
  EXPECT_EQ(qc_algebra_dim(a), 3u);
  EXPECT_STREQ(qc_algebra_name(a), "sl2-standard");
  std::ifstream in(data("sl2-standard"), std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(std::string(qc_algebra_serialize(a)), ss.str());
  qc_algebra_free(a);
  EXPECT_EQ(qc_algebra_open("/nonexistent.json", &a), QC_INPUT_ERROR);
  EXPECT_EQ(a, nullptr);
  EXPECT_STRNE(qc_last_error(), "");
}

TEST(CApi, RunCheckAndOptions) {
  qc_options* o = qc_options_new();
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(qc_options_set_int(o, "degree", 2), QC_OK);
  EXPECT_EQ(qc_options_set_int(o, "hexagon_sign", 0), QC_INPUT_ERROR);
  EXPECT_EQ(qc_options_set_int(o, "bogus", 1), QC_INPUT_ERROR);
  EXPECT_EQ(qc_options_set_string(o, "bogus", "x"), QC_INPUT_ERROR);
  qc_report* r = nullptr;
  ASSERT_EQ(qc_run("poisson-center", data("sl2-kks").c_str(), o, &r), QC_OK);
  EXPECT_EQ(qc_report_exit_code(r), 0);
  const auto j = nlohmann::json::parse(qc_report_json(r));
  EXPECT_EQ(j["results"]["dims"], nlohmann::json::parse("[1, 0, 1]"));
  qc_report_free(r);

  ASSERT_EQ(qc_run("double", data("sl2-standard").c_str(), nullptr, &r), QC_OK);
  ASSERT_EQ(qc_report_artifact_count(r), 1u);
  EXPECT_STREQ(qc_report_artifact_name(r, 0), "sl2-standard-double.json");
  EXPECT_EQ(qc_report_artifact_name(r, 1), nullptr);
  qc_report_free(r);

  EXPECT_EQ(qc_run("nope", nullptr, o, &r), QC_INPUT_ERROR);
  EXPECT_EQ(r, nullptr);
  qc_options_free(o);
}

TEST(CApi, FailedChecksStillReturnAReport) {
  const fs::path dir = scratch("capi_fail");
  write(dir / "broken.json", kCorruptJacobi);
  qc_report* r = nullptr;
  ASSERT_EQ(qc_run("check", (dir / "broken.json").c_str(), nullptr, &r), QC_CHECK_FAILED);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(qc_report_exit_code(r), 1);
  qc_report_free(r);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("check " + data("sl2")).code, 0);
  EXPECT_EQ(run_cli("check /nonexistent.json").code, 2);
  EXPECT_EQ(run_cli("check").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("solve-associator --degree 1").code, 2);
  EXPECT_EQ(run_cli("solve-associator --degree 2 --hexagon-sign x").code, 2);
  EXPECT_EQ(run_cli("--version").code, 0);
}

TEST(Cli, CorruptedJacobiFailsWithWitness) {
  const fs::path dir = scratch("cli_jacobi");
  write(dir / "broken.json", kCorruptJacobi);
  const CliRun r = run_cli("check " + (dir / "broken.json").string());
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "lie.jacobi") {
      found = true;
      EXPECT_EQ(c["status"], "fail");
      EXPECT_EQ(c["witness"]["at"].size(), 3u);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["summary"]["verdict"], "fail");
}

TEST(Cli, BoundInsufficiencyExitsThree) {
  const fs::path dir = scratch("cli_bound");
  const CliRun sa = run_cli("solve-associator --degree 2 --even --out " + dir.string());
  ASSERT_EQ(sa.code, 0);
  const fs::path assoc = dir / "associator-d2-even-plus.json";
  ASSERT_TRUE(fs::exists(assoc));
  EXPECT_EQ(run_cli("ek-verify " + data("sl2-kks") + " --hbar 3 --associator " + assoc.string()).code, 3);
  // The same file suffices at ħ bound 2.
  EXPECT_EQ(run_cli("ek-verify " + data("abelian1-kks") + " --degree 2 --associator " + assoc.string()).code, 0);
}

TEST(Cli, OutputDirectoryFlagAndEnvironment) {
  const fs::path a = scratch("cli_out_flag"), b = scratch("cli_out_env");
  const CliRun r1 = run_cli("double " + data("sl2-standard") + " --out " + a.string());
  EXPECT_EQ(r1.code, 0);
  EXPECT_TRUE(fs::exists(a / "double-report.json"));
  EXPECT_TRUE(fs::exists(a / "sl2-standard-double.json"));
  const CliRun r2 = run_cli("double " + data("sl2-standard"), "QCENTER_OUT_DIR=" + b.string());
  EXPECT_EQ(r2.code, 0);
  EXPECT_TRUE(fs::exists(b / "sl2-standard-double.json"));
  EXPECT_EQ(r1.out, r2.out);
  // Pipeline closure: the emitted double checks clean.
  EXPECT_EQ(run_cli("check " + (a / "sl2-standard-double.json").string()).code, 0);
}

TEST(Cli, EkVerifyAbelianAndDeterminism) {
  const CliRun a = run_cli("ek-verify " + data("abelian1-kks"));
  EXPECT_EQ(a.code, 0);
  const CliRun b = run_cli("ek-verify " + data("abelian1-kks"));
  EXPECT_EQ(a.out, b.out);
  const CliRun t = run_cli("ek-verify " + data("abelian1-kks") + " --timing");
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(t.out).contains("timing_seconds"));
}

TEST(Cli, DufloAndSolveAssociatorPass) {
  EXPECT_EQ(run_cli("duflo " + data("so3") + " --degree 4").code, 0);
  const CliRun s = run_cli("solve-associator --degree 3 --hexagon-sign -");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["parameters"]["hexagon_sign"], -1);
}

}  // namespace
