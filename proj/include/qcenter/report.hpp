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

#pragma once

// Verdict records and the JSON report emitted by every command.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qcenter/combination.hpp"

namespace qcenter {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, warn, skip };
std::string to_string(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::pass;
  Json witness = Json::object();
};

inline CheckRecord check(std::string name, bool ok, Json witness = Json::object()) {
  return CheckRecord{std::move(name), ok ? Status::pass : Status::fail, std::move(witness)};
}

class Report {
 public:
  static constexpr const char* kSchema = "qcenter-report/1";

  Report(std::string command, std::string input_digest);

  Json& parameters() { return parameters_; }
  const Json& parameters() const { return parameters_; }
  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  void add(std::vector<CheckRecord> rs);
  const std::vector<CheckRecord>& checks() const { return checks_; }
  /// Extra payload (bases, solutions, artifacts) emitted after the checks.
  Json& results() { return results_; }
  void set_timing(double seconds) { timing_ = seconds; }

  /// No record has status fail.
  bool passed() const;
  /// Deterministic serialization (2-space indent, trailing newline).
  std::string to_json() const;

 private:
  std::string command_;
  std::string digest_;
  Json parameters_ = Json::object();
  std::vector<CheckRecord> checks_;
  Json results_ = Json::object();
  std::optional<double> timing_;
};

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Exact witness encoders.
Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& v);
/// Polynomial as {"monomial": "coeff"} with monomials written as
/// space-separated powers of basis names, e.g. "e f^2"; "1" for the constant.
Json to_json(const Combination<Monomial, MonomialOrder>& s, const std::vector<std::string>& names);
Json to_json(const Combination<Word, WordOrder>& u, const std::vector<std::string>& names);
std::string monomial_name(const Monomial& m, const std::vector<std::string>& names);
std::string word_name(const Word& w, const std::vector<std::string>& names);

}  // namespace qcenter
