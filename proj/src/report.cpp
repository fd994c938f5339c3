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

#include "qcenter/report.hpp"

#include <cstdint>
#include <cstdio>

namespace qcenter {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn: return "warn";
    case Status::skip: return "skip";
  }
  return "unknown";
}

Report::Report(std::string command, std::string input_digest)
    : command_(std::move(command)), digest_(std::move(input_digest)) {}

void Report::add(std::vector<CheckRecord> rs) {
  for (auto& r : rs) checks_.push_back(std::move(r));
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (c.status == Status::fail) return false;
  return true;
}

std::string Report::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = QCENTER_VERSION_STRING;
  j["command"] = command_;
  j["input_digest"] = digest_;
  j["parameters"] = parameters_;
  Json checks = Json::array();
  std::size_t pass = 0, fail = 0, warn = 0, skip = 0;
  for (const auto& c : checks_) {
    Json r;
    r["name"] = c.name;
    r["status"] = qcenter::to_string(c.status);
    r["witness"] = c.witness;
    checks.push_back(std::move(r));
    switch (c.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::warn: ++warn; break;
      case Status::skip: ++skip; break;
    }
  }
  j["checks"] = std::move(checks);
  if (!results_.empty()) j["results"] = results_;
  j["summary"] = Json{{"passed", pass}, {"failed", fail}, {"warnings", warn}, {"skipped", skip},
                      {"verdict", fail == 0 ? "pass" : "fail"}};
  if (timing_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *timing_);
    j["timing_seconds"] = std::string(buf);
  }
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const Rational& q) { return qcenter::to_string(q); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(qcenter::to_string(q));
  return a;
}

std::string monomial_name(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string word_name(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += " ";
    s += l < names.size() ? names[l] : "v" + std::to_string(l);
  }
  return s.empty() ? "1" : s;
}

Json to_json(const Combination<Monomial, MonomialOrder>& s, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (const auto& [m, c] : s) j[monomial_name(m, names)] = qcenter::to_string(c);
  return j;
}

Json to_json(const Combination<Word, WordOrder>& u, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (const auto& [w, c] : u) j[word_name(w, names)] = qcenter::to_string(c);
  return j;
}

}  // namespace qcenter
