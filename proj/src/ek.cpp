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

#include "qcenter/ek.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <thread>
#include <tuple>

namespace qcenter {

// --- shapes --------------------------------------------------------------

struct Shape::Node {
  Leaf kind = Leaf::functions;
  std::vector<Shape> children;  // empty for a leaf, else {left, right}
  std::size_t count = 1;
  std::string text;
};

Shape Shape::leaf(Leaf k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->text = std::string(1, static_cast<char>(k));
  return Shape(std::move(n));
}

Shape Shape::join(const Shape& a, const Shape& b) {
  auto n = std::make_shared<Node>();
  n->children = {a, b};
  n->count = a.leaf_count() + b.leaf_count();
  n->text = "(" + a.node_->text + b.node_->text + ")";
  return Shape(std::move(n));
}

namespace {

Shape parse_at(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw InputError("shape: unexpected end of text");
  const char c = s[pos];
  if (c == 'P' || c == 'M' || c == 'O') {
    ++pos;
    return Shape::leaf(static_cast<Leaf>(c));
  }
  if (c != '(') throw InputError(std::string("shape: unexpected character '") + c + "'");
  ++pos;
  Shape a = parse_at(s, pos);
  Shape b = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw InputError("shape: expected ')'");
  ++pos;
  return Shape::join(a, b);
}

}  // namespace

Shape Shape::parse(std::string_view text) {
  std::size_t pos = 0;
  Shape s = parse_at(text, pos);
  if (pos != text.size()) throw InputError("shape: trailing characters");
  return s;
}

bool Shape::is_leaf() const { return node_->children.empty(); }

Leaf Shape::kind() const {
  if (!is_leaf()) throw InputError("shape: kind of an inner node");
  return node_->kind;
}

const Shape& Shape::left() const {
  if (is_leaf()) throw InputError("shape: a leaf has no children");
  return node_->children[0];
}

const Shape& Shape::right() const {
  if (is_leaf()) throw InputError("shape: a leaf has no children");
  return node_->children[1];
}

std::size_t Shape::leaf_count() const { return node_->count; }

std::string Shape::leaves() const {
  std::string s;
  for (char c : node_->text)
    if (c != '(' && c != ')') s += c;
  return s;
}

std::string Shape::to_string() const { return node_->text; }

const Shape& Shape::at(std::string_view path) const {
  const Shape* cur = this;
  for (char step : path) {
    if (step == 'l') cur = &cur->left();
    else if (step == 'r') cur = &cur->right();
    else throw InputError("shape: path steps must be 'l' or 'r'");
  }
  return *cur;
}

std::pair<std::size_t, std::size_t> Shape::span(std::string_view path) const {
  std::size_t first = 0;
  const Shape* cur = this;
  for (char step : path) {
    if (step == 'r') first += cur->left().leaf_count();
    cur = &cur->at(std::string_view(&step, 1));
  }
  return {first, cur->leaf_count()};
}

Shape Shape::replace(std::string_view path, const Shape& s) const {
  if (path.empty()) return s;
  if (path[0] == 'l') return join(left().replace(path.substr(1), s), right());
  if (path[0] == 'r') return join(left(), right().replace(path.substr(1), s));
  throw InputError("shape: path steps must be 'l' or 'r'");
}

std::vector<Shape> all_shapes(std::string_view leaves) {
  if (leaves.empty()) throw InputError("shape: no leaves");
  if (leaves.size() == 1) return {Shape::parse(leaves)};
  std::vector<Shape> out;
  for (std::size_t split = 1; split < leaves.size(); ++split)
    for (const auto& a : all_shapes(leaves.substr(0, split)))
      for (const auto& b : all_shapes(leaves.substr(split))) out.push_back(Shape::join(a, b));
  return out;
}

Shape right_comb(std::string_view leaves) {
  if (leaves.empty()) throw InputError("shape: no leaves");
  if (leaves.size() == 1) return Shape::parse(leaves);
  return Shape::join(Shape::parse(leaves.substr(0, 1)), right_comb(leaves.substr(1)));
}

// --- context -------------------------------------------------------------

struct EKContext::Impl {
  Impl(const DoubleAlgebra& d, int cap)
      : dressing(d, cap), plus(VermaSide::plus, d), minus(VermaSide::minus, d) {}

  DressingAction dressing;
  VermaModule plus;
  VermaModule minus;
  NCSeries phi{2, 0};
  NCSeries phi_inverse{2, 0};

  mutable std::mutex mutex;
  mutable std::map<std::tuple<char, Letter, Word>, std::unique_ptr<Combination<Word>>> leaf_memo;
  mutable std::map<std::pair<Word, Word>, std::unique_ptr<DoubleWords>> lifts;
  mutable std::unique_ptr<TensorElement> vacuum;
};

EKContext::EKContext(const DoubleAlgebra& d, const AssociatorSolution& phi, int hbar_bound, int cap, Crossing crossing)
    : hbar_(hbar_bound), cap_(cap), crossing_(crossing) {
  if (hbar_bound < 0) throw InputError("hbar bound must be nonnegative");
  if (hbar_bound > phi.degree)
    throw BoundError("associator degree below the hbar bound", hbar_bound);
  impl_ = std::make_unique<Impl>(d, cap);
  impl_->phi = nc_exp(phi.phi_log.to_nc().truncated(hbar_bound));
  impl_->phi_inverse = nc_exp((phi.phi_log.to_nc() * Rational(-1)).truncated(hbar_bound));
}

EKContext::~EKContext() = default;

const DoubleAlgebra& EKContext::double_algebra() const { return impl_->dressing.double_algebra(); }
const DressingAction& EKContext::dressing() const { return impl_->dressing; }
const VermaModule& EKContext::verma(Leaf side) const {
  if (side == Leaf::plus) return impl_->plus;
  if (side == Leaf::minus) return impl_->minus;
  throw InputError("verma: O(G) is not a Verma module");
}
std::size_t EKContext::half_dim() const { return double_algebra().half_dim(); }

TensorElement EKContext::pure(const Shape& s, const LeafKey& key, const Rational& c) const {
  if (key.size() != s.leaf_count()) throw InputError("tensor: key length differs from the leaf count");
  TensorElement e;
  e.shape = s;
  e.data.assign(hbar_ + 1, TensorData{});
  e.data[0].add(key, c);
  return e;
}

TensorData EKContext::act_leaf(Letter a, std::size_t leaf, const TensorElement& e, const TensorData& v) const {
  const std::string kinds = e.shape.leaves();
  if (leaf >= kinds.size()) throw InputError("tensor: leaf index out of range");
  const char kind = kinds[leaf];
  const std::size_t n = half_dim();
  TensorData out;
  for (const auto& [key, c] : v) {
    const Word& w = key[leaf];
    const Combination<Word>* img = nullptr;
    {
      std::lock_guard lock(impl_->mutex);
      auto it = impl_->leaf_memo.find({kind, a, w});
      if (it != impl_->leaf_memo.end()) img = it->second.get();
    }
    if (!img) {
      auto value = std::make_unique<Combination<Word>>();
      if (kind == 'P') {
        for (const auto& [u, q] : impl_->plus.act(a, w)) value->add(u, q);
      } else if (kind == 'M') {
        for (const auto& [u, q] : impl_->minus.act(a, w)) value->add(u, q);
      } else {
        for (const auto& [m, q] : impl_->dressing.act(a, Sym(exponents(w, n), 1))) value->add(sorted_word(m), q);
      }
      std::lock_guard lock(impl_->mutex);
      img = impl_->leaf_memo.emplace(std::make_tuple(kind, a, w), std::move(value)).first->second.get();
    }
    for (const auto& [u, q] : *img) {
      LeafKey k = key;
      k[leaf] = u;
      out.add(k, c * q);
    }
  }
  return out;
}

TensorData EKContext::act_t(const TensorElement& e, const TensorData& v, std::pair<std::size_t, std::size_t> a,
                            std::pair<std::size_t, std::size_t> b) const {
  TensorData out;
  for (std::size_t i = a.first; i < a.first + a.second; ++i)
    for (std::size_t j = b.first; j < b.first + b.second; ++j)
      for (const auto& term : double_algebra().t()) {
        const TensorData x = act_leaf(term.left, i, e, v);
        if (x.is_zero()) continue;
        out.add_scaled(act_leaf(term.right, j, e, x), term.coeff);
      }
  return out;
}

namespace {

// Σ_w c_w w(X, Y)·v with X, Y given as operators; the ħ-degree of a word is its length.
void apply_series(const NCSeries& s, const std::vector<TensorData>& in, std::vector<TensorData>& out, int hbar,
                  const std::function<TensorData(Letter, const TensorData&)>& op) {
  for (int k = 0; k <= hbar; ++k) {
    if (in[k].is_zero()) continue;
    std::map<Word, TensorData> memo;
    memo[Word{}] = in[k];
    std::function<const TensorData&(const Word&)> value = [&](const Word& w) -> const TensorData& {
      auto it = memo.find(w);
      if (it != memo.end()) return it->second;
      const Word rest(w.begin() + 1, w.end());
      TensorData r = op(w[0], value(rest));
      return memo.emplace(w, std::move(r)).first->second;
    };
    for (const auto& [w, c] : s.terms()) {
      if (k + degree(w) > hbar) continue;
      out[k + degree(w)].add_scaled(value(w), c);
    }
  }
}

}  // namespace

TensorElement EKContext::alpha(const TensorElement& e, std::string_view path, bool inverse) const {
  const Shape& node = e.shape.at(path);
  if (node.is_leaf()) throw InputError("alpha: position is a leaf");
  const auto [first, count] = e.shape.span(path);
  (void)count;
  if (!inverse && node.left().is_leaf()) throw InputError("alpha: left child is a leaf");
  if (inverse && node.right().is_leaf()) throw InputError("alpha: right child is a leaf");
  const Shape a = inverse ? node.left() : node.left().left();
  const Shape b = inverse ? node.right().left() : node.left().right();
  const Shape c = inverse ? node.right().right() : node.right();
  const std::pair<std::size_t, std::size_t> ra{first, a.leaf_count()}, rb{first + a.leaf_count(), b.leaf_count()},
      rc{first + a.leaf_count() + b.leaf_count(), c.leaf_count()};
  TensorElement out;
  out.shape = e.shape.replace(path, inverse ? Shape::join(Shape::join(a, b), c) : Shape::join(a, Shape::join(b, c)));
  out.data.assign(hbar_ + 1, TensorData{});
  apply_series(inverse ? impl_->phi_inverse : impl_->phi, e.data, out.data, hbar_,
               [&](Letter l, const TensorData& v) { return l == 0 ? act_t(e, v, ra, rb) : act_t(e, v, rb, rc); });
  return out;
}

TensorElement EKContext::braid(const TensorElement& e, std::string_view path, bool inverse) const {
  const Shape& node = e.shape.at(path);
  if (node.is_leaf()) throw InputError("braid: position is a leaf");
  const auto [first, count] = e.shape.span(path);
  (void)count;
  const Shape l = node.left(), r = node.right();
  const std::pair<std::size_t, std::size_t> rl{first, l.leaf_count()}, rr{first + l.leaf_count(), r.leaf_count()};
  const Rational half = ratio(inverse ? -1 : 1, 2);
  std::vector<TensorData> acted(hbar_ + 1);
  for (int j = 0; j <= hbar_; ++j) {
    if (e.data[j].is_zero()) continue;
    TensorData cur = e.data[j];
    acted[j] += cur;
    for (int k = 1; j + k <= hbar_; ++k) {
      cur = act_t(e, cur, rl, rr) * (half / k);
      if (cur.is_zero()) break;
      acted[j + k] += cur;
    }
  }
  TensorElement out;
  out.shape = e.shape.replace(path, Shape::join(r, l));
  out.data.assign(hbar_ + 1, TensorData{});
  for (int j = 0; j <= hbar_; ++j)
    for (const auto& [key, c] : acted[j]) {
      LeafKey k(key.begin(), key.begin() + first);
      k.insert(k.end(), key.begin() + first + l.leaf_count(), key.begin() + first + l.leaf_count() + r.leaf_count());
      k.insert(k.end(), key.begin() + first, key.begin() + first + l.leaf_count());
      k.insert(k.end(), key.begin() + first + l.leaf_count() + r.leaf_count(), key.end());
      out.data[j].add(k, c);
    }
  return out;
}

namespace {

// α-moves (forward) carrying s to the right comb, as node paths.
std::vector<std::string> comb_moves(Shape s) {
  std::vector<std::string> moves;
  std::string path;
  while (true) {
    const Shape& node = s.at(path);
    if (node.is_leaf()) break;
    if (!node.left().is_leaf()) {
      moves.push_back(path);
      const Shape& a = node.left().left();
      const Shape& b = node.left().right();
      const Shape& c = node.right();
      s = s.replace(path, Shape::join(a, Shape::join(b, c)));
    } else {
      path += 'r';
    }
  }
  return moves;
}

}  // namespace

TensorElement EKContext::rebracket(const TensorElement& e, const Shape& target) const {
  if (e.shape.leaves() != target.leaves()) throw InputError("rebracket: leaf sequences differ");
  TensorElement cur = e;
  for (const auto& p : comb_moves(e.shape)) cur = alpha(cur, p);
  const auto back = comb_moves(target);
  for (auto it = back.rbegin(); it != back.rend(); ++it) cur = alpha(cur, *it, true);
  return cur;
}

TensorElement EKContext::exact_part(const TensorElement& e) const {
  const std::string kinds = e.shape.leaves();
  TensorElement out;
  out.shape = e.shape;
  out.data.assign(e.data.size(), TensorData{});
  for (std::size_t k = 0; k < e.data.size(); ++k)
    for (const auto& [key, c] : e.data[k]) {
      bool keep = true;
      for (std::size_t i = 0; i < kinds.size() && keep; ++i)
        if (kinds[i] == 'O' && degree(key[i]) > cap_ - static_cast<int>(k)) keep = false;
      if (keep) out.data[k].add(key, c);
    }
  return out;
}

const TensorElement& EKContext::vacuum_coproduct() const {
  {
    std::lock_guard lock(impl_->mutex);
    if (impl_->vacuum) return *impl_->vacuum;
  }
  // ((PP)(MM)) → (P(P(MM))) → (P((PM)M)) → (P((MP)M)) → (P(M(PM))) → ((PM)(PM)).
  TensorElement v = pure(Shape::parse("((PP)(MM))"), LeafKey(4));
  v = alpha(v, "");
  v = alpha(v, "r", true);
  v = braid(v, "rl", crossing_ == Crossing::negative);
  v = alpha(v, "r");
  v = alpha(v, "", true);
  if (v.shape.to_string() != "((PM)(PM))") throw InternalError("vacuum coproduct landed on " + v.shape.to_string());
  std::lock_guard lock(impl_->mutex);
  if (!impl_->vacuum) impl_->vacuum = std::make_unique<TensorElement>(std::move(v));
  return *impl_->vacuum;
}

Combination<std::pair<Word, Word>> EKContext::vacuum_image(const DoubleWords& u) const {
  Combination<std::pair<Word, Word>> out;
  for (const auto& [w, c] : u) {
    Combination<std::pair<Word, Word>> cur({Word{}, Word{}}, c);
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
      Combination<std::pair<Word, Word>> next;
      for (const auto& [pm, q] : cur) {
        for (const auto& [p, r] : impl_->plus.act(*it, pm.first)) next.add({p, pm.second}, q * r);
        for (const auto& [m, r] : impl_->minus.act(*it, pm.second)) next.add({pm.first, m}, q * r);
      }
      cur = std::move(next);
    }
    out += cur;
  }
  return out;
}

const DoubleWords& EKContext::lift(const Word& p, const Word& m) const {
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->lifts.find({p, m});
    if (it != impl_->lifts.end()) return *it->second;
  }
  const std::size_t n = half_dim();
  Word top;
  for (Letter l : p) top.push_back(static_cast<Letter>(l + n));
  top.insert(top.end(), m.begin(), m.end());
  DoubleWords u(top, 1);
  const auto img = vacuum_image(u);
  if (img.coefficient({p, m}) != 1) throw InternalError("vacuum isomorphism: leading coefficient is not 1");
  for (const auto& [pm, c] : img) {
    if (pm.first == p && pm.second == m) continue;
    if (pm.first.size() >= p.size()) throw InternalError("vacuum isomorphism: image is not triangular");
    u.add_scaled(lift(pm.first, pm.second), -c);
  }
  std::lock_guard lock(impl_->mutex);
  auto [it, inserted] = impl_->lifts.emplace(std::make_pair(p, m), std::make_unique<DoubleWords>(std::move(u)));
  return *it->second;
}

Truncated EKContext::act(const DoubleWords& u, const Truncated& f) const {
  Truncated out{Sym{}, f.exact};
  for (const auto& [w, c] : u) out = out + c * impl_->dressing.act(w, f);
  return out;
}

namespace {

Truncated limit(const Truncated& f, int d) {
  const int e = std::min(f.exact, d);
  return Truncated{sym_truncate(f.terms, e), e};
}

}  // namespace

std::vector<Truncated> EKContext::star(const std::vector<Truncated>& a, const std::vector<Truncated>& b,
                                       int target) const {
  if (target + hbar_ > cap_) throw BoundError("star product needs cap ≥ target + hbar bound", target + hbar_);
  const TensorElement& v = vacuum_coproduct();
  std::vector<Truncated> out(hbar_ + 1, Truncated{Sym{}, target});
  const int input_cap = target + hbar_;
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= hbar_; ++i) {
    const Truncated ai = limit(a[i], input_cap);
    if (ai.terms.is_zero() && ai.exact >= target) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= hbar_; ++j) {
      const Truncated bj = limit(b[j], input_cap);
      if (bj.terms.is_zero() && bj.exact >= target) continue;
      std::map<std::pair<Word, Word>, Truncated> la, lb;
      for (int k = 0; static_cast<int>(i + j) + k <= hbar_; ++k)
        for (const auto& [key, c] : v.data[k]) {
          auto ia = la.find({key[0], key[1]});
          if (ia == la.end()) ia = la.emplace(std::make_pair(key[0], key[1]), limit(act(lift(key[0], key[1]), ai), target)).first;
          auto ib = lb.find({key[2], key[3]});
          if (ib == lb.end()) ib = lb.emplace(std::make_pair(key[2], key[3]), limit(act(lift(key[2], key[3]), bj), target)).first;
          auto& slot = out[i + j + k];
          slot = slot + c * limit(ia->second * ib->second, target);
        }
    }
  }
  return out;
}

std::vector<Truncated> EKContext::star(const Sym& a, const Sym& b) const {
  const int target = std::max(0, sym_degree(a)) + std::max(0, sym_degree(b));
  return star(constant_series(a, hbar_, cap_), constant_series(b, hbar_, cap_), target);
}

std::vector<Truncated> constant_series(const Sym& s, int hbar_bound, int exact) {
  std::vector<Truncated> out(hbar_bound + 1, Truncated{Sym{}, exact});
  out[0] = Truncated{sym_truncate(s, exact), exact};
  return out;
}

// --- coherence -----------------------------------------------------------

namespace {

// Node paths of all inner nodes whose left child is inner (α applies there).
void alpha_positions(const Shape& s, std::string& path, std::vector<std::string>& out) {
  const Shape& node = s.at(path);
  if (node.is_leaf()) return;
  if (!node.left().is_leaf()) out.push_back(path);
  path.push_back('l');
  alpha_positions(s, path, out);
  path.back() = 'r';
  alpha_positions(s, path, out);
  path.pop_back();
}

Json tensor_witness(const TensorElement& e, std::size_t k, const LeafKey& key, const Rational& c) {
  std::string words;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) words += " | ";
    words += key[i].empty() ? "1" : [&] {
      std::string s;
      for (Letter l : key[i]) s += (s.empty() ? "" : ".") + std::to_string(l);
      return s;
    }();
  }
  return Json{{"shape", e.shape.to_string()}, {"hbar_order", k}, {"basis_tensor", words}, {"difference", qcenter::to_string(c)}};
}

}  // namespace

CheckRecord pentagon_coherence(const EKContext& ctx, const TensorElement& start, const std::string& name) {
  const std::string leaves = start.shape.leaves();
  const std::size_t expected = all_shapes(leaves).size();
  std::map<std::string, TensorElement> value;
  std::deque<std::string> queue;
  value.emplace(start.shape.to_string(), ctx.exact_part(start));
  queue.push_back(start.shape.to_string());
  std::size_t edges = 0;
  Json witness = Json::object();
  bool ok = true;
  while (!queue.empty() && ok) {
    const TensorElement cur = value.at(queue.front());
    queue.pop_front();
    std::vector<std::string> pos;
    std::string path;
    alpha_positions(cur.shape, path, pos);
    for (const auto& p : pos) {
      const TensorElement next = ctx.exact_part(ctx.alpha(cur, p));
      ++edges;
      auto it = value.find(next.shape.to_string());
      if (it == value.end()) {
        queue.push_back(next.shape.to_string());
        value.emplace(next.shape.to_string(), next);
        continue;
      }
      for (std::size_t k = 0; k < next.data.size() && ok; ++k) {
        const TensorData diff = next.data[k] - it->second.data[k];
        if (!diff.is_zero()) {
          ok = false;
          witness = tensor_witness(next, k, diff.begin()->first, diff.begin()->second);
          witness["from"] = cur.shape.to_string();
          witness["move_at"] = p.empty() ? "root" : p;
        }
      }
      if (!ok) break;
    }
  }
  if (ok && value.size() != expected) {
    ok = false;
    witness["reason"] = "not every bracketing was reached";
  }
  witness["leaves"] = leaves;
  witness["shapes"] = value.size();
  witness["edges_checked"] = edges;
  witness["hbar_bound"] = ctx.hbar_bound();
  return check(name, ok, witness);
}

// --- verification --------------------------------------------------------

int ek_required_cap(const EKVerifyOptions& opt) {
  return std::max(2 * opt.degree + opt.hbar_bound, opt.degree + 2 * opt.hbar_bound);
}

namespace {

template <typename F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

struct Compared {
  bool ok = true;
  int through = 0;
  int hbar_order = 0;
  Sym residual;
};

// a and b agree through `need` in every ħ coefficient.
Compared compare(const std::vector<Truncated>& a, const std::vector<Truncated>& b, int need) {
  Compared r;
  r.through = need;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    int through = 0;
    const bool same = agree(a[k], b[k], &through);
    r.through = std::min(r.through, through);
    if (!same || through < need) {
      r.ok = false;
      r.hbar_order = static_cast<int>(k);
      r.residual = sym_truncate(a[k].terms - b[k].terms, through);
      return r;
    }
  }
  return r;
}

std::vector<Truncated> series_multiply(const std::vector<Truncated>& a, const std::vector<Truncated>& b, int hbar) {
  std::vector<Truncated> out(hbar + 1, Truncated{Sym{}, std::min(a[0].exact, b[0].exact)});
  for (int i = 0; i <= hbar; ++i)
    for (int j = 0; i + j <= hbar; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

}  // namespace

std::vector<CheckRecord> ek_verify(const EKContext& ctx, const EKVerifyOptions& opt) {
  const int H = ctx.hbar_bound();
  const int D = opt.degree;
  if (ctx.cap() < ek_required_cap(opt)) throw BoundError("ek-verify needs a larger function cap", ek_required_cap(opt));
  const std::size_t n = ctx.half_dim();
  const auto& names = ctx.double_algebra().bialgebra().dual().basis_names();
  const DressingAction& act = ctx.dressing();
  std::vector<CheckRecord> out;

  const TensorElement& v = ctx.vacuum_coproduct();
  {
    TensorData unit(LeafKey(4), 1);
    out.push_back(check("ek.vacuum.classical_term", v.data[0] == unit,
                        Json{{"terms_by_hbar_order", [&] {
                               Json a = Json::array();
                               for (const auto& d : v.data) a.push_back(d.size());
                               return a;
                             }()}}));
  }
  {
    bool ok = true;
    Json w = Json::object();
    std::size_t count = 0;
    for (const auto& p : sorted_words(n, D))
      for (const auto& m : sorted_words(n, D - static_cast<int>(p.size()))) {
        Combination<std::pair<Word, Word>> expect({p, m}, 1);
        ++count;
        if (ctx.vacuum_image(ctx.lift(p, m)) != expect) {
          ok = false;
          w = Json{{"p", word_name(p, names)}, {"m", word_name(m, ctx.double_algebra().bialgebra().algebra().basis_names())}};
          break;
        }
      }
    w["pairs"] = count;
    out.push_back(check("ek.vacuum_iso.round_trip", ok, w));
  }

  const auto monos = monomials_up_to(n, D);
  const std::size_t M = monos.size();
  std::vector<std::vector<std::vector<Truncated>>> table(M, std::vector<std::vector<Truncated>>(M));
  parallel_for(M * M, opt.jobs, [&](std::size_t idx) {
    const std::size_t i = idx / M, j = idx % M;
    table[i][j] = ctx.star(Sym(monos[i], 1), Sym(monos[j], 1));
  });

  auto mono_json = [&](const Monomial& m) { return monomial_name(m, names); };

  // Unit.
  {
    bool ok = true;
    Json w = Json::object();
    for (std::size_t i = 0; i < M && ok; ++i) {
      const auto expect = constant_series(Sym(monos[i], 1), H, degree(monos[i]));
      for (const auto& got : {table[i][0], table[0][i]}) {
        const Compared c = compare(got, expect, degree(monos[i]));
        if (!c.ok) {
          ok = false;
          w = Json{{"f", mono_json(monos[i])}, {"hbar_order", c.hbar_order}, {"residual", to_json(c.residual, names)}};
          break;
        }
      }
    }
    out.push_back(check("ek.star.unit", ok, w));
  }
  // ħ⁰ = commutative product and ħ¹ commutator = Poisson bracket.
  {
    bool ok0 = true, ok1 = true, okh = true;
    Json w0 = Json::object(), w1 = Json::object(), wh = Json::object();
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) {
        const int need = degree(monos[i]) + degree(monos[j]);
        const Sym prod(monos[i], 1);
        const Truncated ab = Truncated{sym_multiply(prod, Sym(monos[j], 1)), need};
        int through = 0;
        if (ok0 && (!agree(table[i][j][0], ab, &through) || through < need)) {
          ok0 = false;
          w0 = Json{{"f", mono_json(monos[i])}, {"g", mono_json(monos[j])},
                    {"residual", to_json(sym_truncate(table[i][j][0].terms - ab.terms, through), names)}};
        }
        if (H < 1 || i > j) continue;
        const Truncated comm = table[i][j][1] - table[j][i][1];
        const Truncated pb = limit(poisson_bracket(act, Truncated{Sym(monos[i], 1), ctx.cap()},
                                                   Truncated{Sym(monos[j], 1), ctx.cap()}),
                                   need);
        if (ok1 && (!agree(comm, pb, &through) || through < need)) {
          ok1 = false;
          w1 = Json{{"f", mono_json(monos[i])}, {"g", mono_json(monos[j])}, {"through_degree", through},
                    {"residual", to_json(sym_truncate(comm.terms - pb.terms, through), names)}};
        }
        // The antisymmetric part of the ħ¹ coefficient is half the bracket.
        const Truncated anti = Rational(1, 2) * (table[i][j][1] - table[j][i][1]);
        if (okh && !agree(anti, Rational(1, 2) * pb)) {
          okh = false;
          wh = Json{{"f", mono_json(monos[i])}, {"g", mono_json(monos[j])}};
        }
      }
    const Json pairs{{"pairs", M * M}, {"degree", D}};
    w0.update(pairs);
    w1.update(pairs);
    out.push_back(check("ek.star.classical_limit", ok0, w0));
    if (H >= 1) {
      out.push_back(check("ek.star.semiclassical", ok1, w1));
      out.push_back(check("ek.star.half_bracket", okh, wh));
    }
  }
  // Associativity on triples of total degree ≤ D.
  {
    bool ok = true;
    Json w = Json::object();
    std::size_t count = 0;
    for (std::size_t i = 0; i < M && ok; ++i)
      for (std::size_t j = 0; j < M && ok; ++j)
        for (std::size_t k = 0; k < M && ok; ++k) {
          const int need = degree(monos[i]) + degree(monos[j]) + degree(monos[k]);
          if (need > D) continue;
          ++count;
          const auto f = constant_series(Sym(monos[i], 1), H, ctx.cap());
          const auto g = constant_series(Sym(monos[j], 1), H, ctx.cap());
          const auto h = constant_series(Sym(monos[k], 1), H, ctx.cap());
          // Inner products are kept H degrees beyond the target.
          const auto left = ctx.star(ctx.star(f, g, need + H), h, need);
          const auto right = ctx.star(f, ctx.star(g, h, need + H), need);
          const Compared c = compare(left, right, need);
          if (!c.ok) {
            ok = false;
            w = Json{{"f", mono_json(monos[i])}, {"g", mono_json(monos[j])}, {"h", mono_json(monos[k])},
                     {"hbar_order", c.hbar_order}, {"through_degree", c.through},
                     {"residual", to_json(c.residual, names)}};
          }
        }
    w["triples"] = count;
    out.push_back(check("ek.star.associativity", ok, w));
  }

  // Center: Poisson-center elements with lowest degree ≤ D, known through the cap.
  const PoissonCenter center = poisson_center(act, ctx.cap());
  std::vector<Truncated> zs;
  Json zjson = Json::array();
  for (const auto& z : center.basis) {
    if (z.is_zero() || degree(z.begin()->first) > D) continue;
    zs.push_back(Truncated{z, ctx.cap()});
    zjson.push_back(to_json(sym_truncate(z, D), names));
  }
  out.push_back(CheckRecord{"ek.center.basis", Status::pass,
                            Json{{"known_through", ctx.cap()}, {"elements", zs.size()}, {"lowest_terms_through_degree", D},
                                 {"basis", zjson}}});
  auto low = [](const Truncated& t) { return degree(t.terms.begin()->first); };
  {
    bool ok = true;
    Json w = Json::object();
    for (std::size_t a = 0; a < zs.size() && ok; ++a)
      for (std::size_t b = 0; b < zs.size() && ok; ++b) {
        const int need = low(zs[a]) + low(zs[b]);
        std::vector<Truncated> za(H + 1, Truncated{Sym{}, ctx.cap()}), zb = za;
        za[0] = zs[a];
        zb[0] = zs[b];
        const auto got = ctx.star(za, zb, need);
        const auto expect = series_multiply(za, zb, H);
        const Compared c = compare(got, expect, need);
        if (!c.ok) {
          ok = false;
          w = Json{{"z", a}, {"w", b}, {"hbar_order", c.hbar_order}, {"through_degree", c.through},
                   {"residual", to_json(c.residual, names)}};
        }
      }
    w["pairs"] = zs.size() * zs.size();
    out.push_back(check("ek.center.undeformed_product", ok, w));
  }
  {
    bool ok = true;
    Json w = Json::object();
    for (std::size_t a = 0; a < zs.size() && ok; ++a)
      for (std::size_t i = 0; i < M && ok; ++i) {
        const int need = low(zs[a]) + degree(monos[i]);
        std::vector<Truncated> za(H + 1, Truncated{Sym{}, ctx.cap()});
        za[0] = zs[a];
        const auto f = constant_series(Sym(monos[i], 1), H, ctx.cap());
        const Compared c = compare(ctx.star(za, f, need), ctx.star(f, za, need), need);
        if (!c.ok) {
          ok = false;
          w = Json{{"z", a}, {"f", mono_json(monos[i])}, {"hbar_order", c.hbar_order},
                   {"through_degree", c.through}, {"residual", to_json(c.residual, names)}};
        }
      }
    w["pairs"] = zs.size() * M;
    out.push_back(check("ek.center.central", ok, w));
  }
  // Converse at order ħ: the f of degree ≤ D with [f, ξ^k]_★ = O(ħ²) modulo
  // degree > D for every k span exactly the Poisson center through D.
  if (H >= 1) {
    std::vector<SparseRow> rows;
    std::map<std::pair<std::size_t, Monomial>, SparseRow> eqs;
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < M; ++i)
      if (degree(monos[i]) == 1) gens.push_back(i);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto f = constant_series(Sym(monos[i], 1), H, ctx.cap());
        const auto x = constant_series(Sym(monos[gens[g]], 1), H, ctx.cap());
        const Truncated c = ctx.star(f, x, D)[1] - ctx.star(x, f, D)[1];
        for (const auto& [m, q] : sym_truncate(c.terms, D)) eqs[{g, m}].add(i, q);
      }
    for (auto& [k, r] : eqs) rows.push_back(std::move(r));
    const auto ker = kernel(rows, M);
    const PoissonCenter pc = poisson_center(act, D);
    Json w{{"star_commutant_dimension", ker.size()}, {"poisson_center_dimension", pc.basis.size()}};
    out.push_back(check("ek.center.converse_order_hbar", ker.size() == pc.basis.size(), w));
  }
  return out;
}

}  // namespace qcenter
