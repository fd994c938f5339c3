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

// The induced modules M₋ = U(d) ⊗_{U(g*)} 1 ≅ U(g) and M₊ = U(d) ⊗_{U(g)} 1 ≅ U(g*),
// with basis the PBW words of the free half (local indices 0..n-1).

#include <map>
#include <memory>
#include <mutex>

#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"

namespace qcenter {

enum class VermaSide { plus, minus };

class VermaModule {
 public:
  VermaModule(VermaSide side, const DoubleAlgebra& d);

  VermaSide side() const { return side_; }
  std::size_t half_dim() const { return n_; }
  /// U(g) for M₋, U(g*) for M₊.
  const Enveloping& free_part() const { return free_; }
  /// Whether double basis index a lies in the half that acts freely.
  bool is_free(std::size_t a) const { return (a < n_) == (side_ == VermaSide::minus); }
  Letter local(std::size_t a) const { return static_cast<Letter>(a < n_ ? a : a - n_); }

  /// a · w for a double basis index and a basis word w (memoized).
  const PBW& act(Letter a, const Word& w) const;
  PBW act(Letter a, const PBW& v) const;
  /// Action of a word in U(d), letters applied right to left.
  PBW act(const Word& u, const PBW& v) const;
  /// The vacuum vector 1₊ or 1₋.
  static PBW vacuum() { return PBW(Word{}, 1); }

 private:
  VermaSide side_;
  std::size_t n_;
  LieAlgebra double_;
  Enveloping free_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Letter, Word>, std::unique_ptr<PBW>> memo_;
};

}  // namespace qcenter
