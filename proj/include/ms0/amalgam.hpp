// Copyright 2026 The Authors.
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

#ifndef MS0_AMALGAM_HPP
#define MS0_AMALGAM_HPP

#include <memory>
#include <string>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/ground_set.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

// Two simple matroids sharing a rank-2 line. The line is the label
// intersection; the restrictions to it must agree.
struct AmalgamSpec {
  Matroid m1, m2;
};

// Rank and line-closure lookups for both sides. Sides with at most
// `kTableLimit` elements get full per-subset tables, which makes the
// dependence test O(1) per query and full-ground sweeps feasible; larger
// sides fall back to per-call computation.
class AmalgamOracle {
 public:
  static constexpr int kTableLimit = 22;

  explicit AmalgamOracle(const AmalgamSpec& spec);

  const GroundSet& ground() const { return ground_; }
  const Matroid& m1() const { return m1_; }
  const Matroid& m2() const { return m2_; }
  const std::vector<std::string>& ell_labels() const { return ell_labels_; }
  Mask ell_mask() const { return ell_amal_; }  // over the combined ground

  Mask side1_mask(Mask x) const {  // X of combined ground -> X cap E1
    return x & full_mask(n1_);
  }
  Mask side2_mask(Mask x) const {  // X of combined ground -> X cap E2
    Mask m = 0;
    for (int chunk = 0; x; ++chunk, x >>= 8) {
      m |= to2_[chunk * 256 + (x & 0xff)];
    }
    return m;
  }

  // The dependence test: either trace dependent, or one of the three
  // closure/rank conditions along the line holds.
  bool dependent(Mask x) const;

  // Rank via the minimum over supersets; exponential, the verification
  // oracle only. Usable up to ~16 combined elements.
  int rank_eq1(Mask x, Budget budget = {}) const;

  // Greedy rank through the dependence test.
  int rank_greedy(Mask x) const;

  int rank1(Mask side1) const {
    return rank1_.empty() ? m1_.rank(side1) : rank1_[side1];
  }
  int rank2(Mask side2) const {
    return rank2_.empty() ? m2_.rank(side2) : rank2_[side2];
  }

 private:
  friend Matroid amalgam_matroid(std::shared_ptr<const AmalgamOracle>);

  std::uint8_t clell1(Mask side1) const;
  std::uint8_t clell2(Mask side2) const;

  Matroid m1_, m2_;
  GroundSet ground_;  // E1 order, then E2 - ell in m2 order
  int n1_ = 0, n2_ = 0;
  std::vector<std::string> ell_labels_;  // in m1 order
  std::vector<int> ell_pos1_, ell_pos2_;
  Mask ell1_ = 0, ell2_ = 0, ell_amal_ = 0;
  std::vector<std::uint8_t> rank1_, rank2_;  // empty above kTableLimit
  // bit j set iff ell_labels_[j] lies in the closure of the subset
  std::vector<std::uint8_t> clell1_, clell2_;
  std::vector<Mask> to2_;  // 8 x 256 byte-chunk maps, combined -> side-2
};

// Validates the spec invariants and builds the oracle.
std::shared_ptr<const AmalgamOracle> make_amalgam_oracle(
    const AmalgamSpec& spec);

// The proper amalgam as a matroid; independence is the negated dependence
// test, restrictions reproduce the two sides.
Matroid amalgam_matroid(std::shared_ptr<const AmalgamOracle> oracle);

inline Matroid amalgam_matroid(const AmalgamSpec& spec) {
  return amalgam_matroid(make_amalgam_oracle(spec));
}

}  // namespace ms0

#endif  // MS0_AMALGAM_HPP
