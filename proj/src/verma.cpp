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

#include "qcenter/verma.hpp"

namespace qcenter {

VermaModule::VermaModule(VermaSide side, const DoubleAlgebra& d)
    : side_(side),
      n_(d.half_dim()),
      double_(d.algebra()),
      free_(side == VermaSide::minus ? d.bialgebra().algebra() : d.bialgebra().dual()) {}

const PBW& VermaModule::act(Letter a, const Word& w) const {
  if (a >= 2 * n_) throw InputError("Verma action: generator index out of range");
  auto key = std::make_pair(a, w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
  }
  PBW r;
  if (is_free(a)) {
    r = free_.left_multiply(local(a), w);
  } else if (!w.empty()) {
    // a·(f w') = f·(a·w') + [a, f]·w', and a·1 = 0.
    const Letter f = w.front();
    const Word rest(w.begin() + 1, w.end());
    r = free_.left_multiply(f, act(a, rest));
    const std::size_t fd = side_ == VermaSide::minus ? f : f + n_;
    for (const auto& [k, c] : double_.bracket(a, fd)) {
      if (is_free(k))
        r.add_scaled(free_.left_multiply(local(k), rest), c);
      else
        r.add_scaled(act(k, rest), c);
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(std::move(key), std::make_unique<PBW>(std::move(r)));
  return *it->second;
}

PBW VermaModule::act(Letter a, const PBW& v) const {
  PBW out;
  for (const auto& [w, c] : v) out.add_scaled(act(a, w), c);
  return out;
}

PBW VermaModule::act(const Word& u, const PBW& v) const {
  PBW out = v;
  for (auto it = u.rbegin(); it != u.rend(); ++it) out = act(*it, out);
  return out;
}

}  // namespace qcenter
