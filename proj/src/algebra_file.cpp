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

#include "qcenter/algebra_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qcenter/report.hpp"

namespace qcenter {

namespace {

constexpr const char* kFormat = "qcenter-algebra";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("algebra file: " + where + ": " + what);
}

Rational rational_at(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a rational string such as \"-3/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(where + "/" + k, "unknown field");
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

StructureTable AlgebraFile::cobracket() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> w;
  const Rational scale = cobracket_scalar * (wedge_convention == "half" ? Rational(1, 2) : Rational(1));
  for (const auto& e : wedges) w.emplace_back(e.of, e.left, e.right, e.coefficient * scale);
  return cobracket_from_wedges(dim(), w);
}

AlgebraFile parse_algebra_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("algebra file: parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("/", "expected an object");
  only_keys(j, {"format", "version", "name", "description", "dim", "basis", "bracket", "cobracket", "metadata"}, "");
  if (member(j, "format", "/") != kFormat) fail("/format", std::string("expected \"") + kFormat + "\"");
  if (member(j, "version", "/") != 1) fail("/version", "unsupported version");

  AlgebraFile f;
  const Json& name = member(j, "name", "/");
  if (!name.is_string()) fail("/name", "expected a string");
  f.name = name.get<std::string>();
  if (auto it = j.find("description"); it != j.end()) {
    if (!it->is_string()) fail("/description", "expected a string");
    f.description = it->get<std::string>();
  }
  const Json& basis = member(j, "basis", "/");
  if (!basis.is_array() || basis.empty()) fail("/basis", "expected a nonempty array of names");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "/basis/" + std::to_string(i);
    if (!basis[i].is_string() || basis[i].get<std::string>().empty()) fail(where, "expected a nonempty name");
    const std::string s = basis[i].get<std::string>();
    if (s.find_first_of(" ^") != std::string::npos) fail(where, "names may not contain spaces or '^'");
    if (!index.emplace(s, i).second) fail(where, "duplicate basis name \"" + s + "\"");
    f.basis.push_back(s);
  }
  const Json& dim = member(j, "dim", "/");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() != f.basis.size())
    fail("/dim", "must equal the number of basis names (" + std::to_string(f.basis.size()) + ")");
  const std::size_t n = f.basis.size();
  auto lookup = [&](const Json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a basis name");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) fail(where, "unknown basis name \"" + v.get<std::string>() + "\"");
    return it->second;
  };

  f.bracket = StructureTable(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const Json& bracket = member(j, "bracket", "/");
  if (!bracket.is_array()) fail("/bracket", "expected an array");
  for (std::size_t e = 0; e < bracket.size(); ++e) {
    const std::string where = "/bracket/" + std::to_string(e);
    const Json& entry = bracket[e];
    if (!entry.is_object()) fail(where, "expected an object");
    only_keys(entry, {"left", "right", "value"}, where);
    const std::size_t l = lookup(member(entry, "left", where), where + "/left");
    const std::size_t r = lookup(member(entry, "right", where), where + "/right");
    if (!seen.emplace(l, r).second) fail(where, "duplicate entry");
    const Json& value = member(entry, "value", where);
    if (!value.is_object()) fail(where + "/value", "expected an object of coefficients");
    std::vector<Rational> v(n);
    for (const auto& [k, q] : value.items()) v[lookup(Json(k), where + "/value/" + k)] = rational_at(q, where + "/value/" + k);
    if (l == r) {
      for (const auto& q : v)
        if (q != 0) fail(where, "[x, x] must vanish");
      continue;
    }
    const bool counterpart = seen.count({r, l}) != 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (counterpart) {
        if (f.bracket(r, l, k) != -v[k]) fail(where, "conflicts with the entry for the swapped pair");
        continue;
      }
      f.bracket.at(l, r, k) = v[k];
      f.bracket.at(r, l, k) = -v[k];
    }
  }

  if (auto it = j.find("cobracket"); it != j.end()) {
    if (!it->is_array()) fail("/cobracket", "expected an array");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<Rational, bool>> acc;
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string where = "/cobracket/" + std::to_string(e);
      const Json& entry = (*it)[e];
      if (!entry.is_object()) fail(where, "expected an object");
      only_keys(entry, {"of", "wedge", "coefficient"}, where);
      const std::size_t of = lookup(member(entry, "of", where), where + "/of");
      const Json& w = member(entry, "wedge", where);
      if (!w.is_array() || w.size() != 2) fail(where + "/wedge", "expected two basis names");
      std::size_t a = lookup(w[0], where + "/wedge/0"), b = lookup(w[1], where + "/wedge/1");
      Rational c = rational_at(member(entry, "coefficient", where), where + "/coefficient");
      if (a == b) {
        if (c != 0) fail(where, "x∧x must vanish");
        continue;
      }
      const bool flipped = a > b;
      if (flipped) {
        std::swap(a, b);
        c = -c;
      }
      auto [slot, inserted] = acc.try_emplace({of, a, b}, c, flipped);
      if (!inserted) {
        if (slot->second.second == flipped) fail(where, "duplicate entry");
        if (slot->second.first != c) fail(where, "conflicts with the entry for the swapped wedge");
      }
    }
    for (const auto& [key, v] : acc)
      if (v.first != 0) f.wedges.push_back(Wedge{std::get<0>(key), std::get<1>(key), std::get<2>(key), v.first});
  }

  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("/metadata", "expected an object");
    only_keys(*it, {"wedge", "cobracket_scalar"}, "/metadata");
    if (auto w = it->find("wedge"); w != it->end()) {
      if (*w != "difference" && *w != "half") fail("/metadata/wedge", "expected \"difference\" or \"half\"");
      f.wedge_convention = w->get<std::string>();
    }
    if (auto s = it->find("cobracket_scalar"); s != it->end())
      f.cobracket_scalar = rational_at(*s, "/metadata/cobracket_scalar");
  }
  return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read algebra file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

std::string serialize(const AlgebraFile& f) {
  const std::size_t n = f.dim();
  Json j;
  j["format"] = kFormat;
  j["version"] = 1;
  j["name"] = f.name;
  if (!f.description.empty()) j["description"] = f.description;
  j["dim"] = n;
  j["basis"] = f.basis;
  Json bracket = Json::array();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = l + 1; r < n; ++r) {
      Json value = Json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (f.bracket(l, r, k) != 0) value[f.basis[k]] = qcenter::to_string(f.bracket(l, r, k));
      if (value.empty()) continue;
      bracket.push_back(Json{{"left", f.basis[l]}, {"right", f.basis[r]}, {"value", value}});
    }
  j["bracket"] = bracket;
  if (f.has_cobracket()) {
    Json co = Json::array();
    for (const auto& w : f.wedges)
      co.push_back(Json{{"of", f.basis[w.of]},
                        {"wedge", Json::array({f.basis[w.left], f.basis[w.right]})},
                        {"coefficient", qcenter::to_string(w.coefficient)}});
    j["cobracket"] = co;
  }
  j["metadata"] = Json{{"wedge", f.wedge_convention}, {"cobracket_scalar", qcenter::to_string(f.cobracket_scalar)}};
  return j.dump(2) + "\n";
}

AlgebraFile algebra_file(const std::string& name, const LieAlgebra& a, const StructureTable* cobracket) {
  AlgebraFile f;
  f.name = name;
  f.basis = a.basis_names();
  f.bracket = a.table();
  if (cobracket) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = l + 1; r < n; ++r)
          if ((*cobracket)(i, l, r) != 0) f.wedges.push_back(Wedge{i, l, r, (*cobracket)(i, l, r)});
  }
  return f;
}

StructureTable double_cobracket(const DoubleAlgebra& d) {
  const std::size_t n = d.half_dim(), dim = d.dim();
  const LieAlgebra& a = d.algebra();
  StructureTable out(dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.bracket(x, i)) out.at(x, k, n + i) += c;
      for (const auto& [k, c] : a.bracket(x, n + i)) out.at(x, i, k) += c;
    }
  return out;
}

}  // namespace qcenter
