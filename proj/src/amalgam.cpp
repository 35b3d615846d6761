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

#include "ms0/amalgam.hpp"

#include <algorithm>

namespace ms0 {

namespace {

std::vector<std::uint8_t> build_rank_table(const Matroid& m) {
  int n = m.size();
  Mask total = Mask{1} << n;
  std::vector<std::uint8_t> rank(total, 0);
  std::vector<std::uint32_t> basis(total, 0);
  for (Mask x = 1; x < total; ++x) {
    int e = lowest_bit(x);
    Mask prev = x & (x - 1);
    Mask b = basis[prev];
    // greedy in element order: extend the stored basis if possible
    if (m.is_independent(b | bit(e))) b |= bit(e);
    basis[x] = static_cast<std::uint32_t>(b);
    rank[x] = static_cast<std::uint8_t>(popcount(b));
  }
  return rank;
}

}  // namespace

AmalgamOracle::AmalgamOracle(const AmalgamSpec& spec)
    : m1_(spec.m1), m2_(spec.m2) {
  n1_ = m1_.size();
  n2_ = m2_.size();
  // The shared line: label intersection, in m1 order.
  for (const auto& l : m1_.ground().labels()) {
    if (m2_.ground().contains(l)) ell_labels_.push_back(l);
  }
  if (ell_labels_.empty()) {
    throw InputError("amalgam sides share no labels");
  }
  if (ell_labels_.size() > 8) {
    throw InputError("shared line too large");
  }
  for (const auto& l : ell_labels_) {
    ell1_ |= bit(m1_.ground().index(l));
    ell2_ |= bit(m2_.ground().index(l));
  }
  if (!m1_.is_simple() || !m2_.is_simple()) {
    throw InputError("amalgam requires simple matroids");
  }
  if (m1_.rank(ell1_) != 2) {
    throw InputError("shared set must be a rank-2 line (got rank " +
                     std::to_string(m1_.rank(ell1_)) + ")");
  }
  // The restrictions to the line must agree as labelled matroids.
  {
    int le = static_cast<int>(ell_labels_.size());
    for (Mask s = 0; s < (Mask{1} << le); ++s) {
      Mask a = 0, b = 0;
      for (int i = 0; i < le; ++i) {
        if (has_bit(s, i)) {
          a |= bit(m1_.ground().index(ell_labels_[i]));
          b |= bit(m2_.ground().index(ell_labels_[i]));
        }
      }
      if (m1_.is_independent(a) != m2_.is_independent(b)) {
        throw InputError("restrictions to the shared line disagree");
      }
    }
  }
  // Combined ground: E1 in m1 order, then E2 - ell in m2 order.
  std::vector<std::string> labels = m1_.ground().labels();
  for (const auto& l : m2_.ground().labels()) {
    if (!m1_.ground().contains(l)) labels.push_back(l);
  }
  ground_ = GroundSet(std::move(labels));
  ell_amal_ = 0;
  for (const auto& l : ell_labels_) ell_amal_ |= bit(ground_.index(l));
  for (const auto& l : ell_labels_) {
    ell_pos1_.push_back(m1_.ground().index(l));
    ell_pos2_.push_back(m2_.ground().index(l));
  }

  auto clell_table = [&](const Matroid& m,
                         const std::vector<std::uint8_t>& rank,
                         const std::vector<int>& ell_pos) {
    int n = m.size();
    std::vector<std::uint8_t> out(Mask{1} << n, 0);
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      std::uint8_t bits = 0;
      for (std::size_t j = 0; j < ell_pos.size(); ++j) {
        Mask e = bit(ell_pos[j]);
        if ((x & e) || rank[x | e] == rank[x]) bits |= 1u << j;
      }
      out[x] = bits;
    }
    return out;
  };
  if (n1_ <= kTableLimit) {
    rank1_ = build_rank_table(m1_);
    clell1_ = clell_table(m1_, rank1_, ell_pos1_);
  }
  if (n2_ <= kTableLimit) {
    rank2_ = build_rank_table(m2_);
    clell2_ = clell_table(m2_, rank2_, ell_pos2_);
  }

  // byte-chunk maps from combined masks to side-2 masks
  std::vector<Mask> bit_to2(ground_.size(), 0);
  for (int i = 0; i < ground_.size(); ++i) {
    const std::string& l = ground_.label(i);
    if (m2_.ground().contains(l)) bit_to2[i] = bit(m2_.ground().index(l));
  }
  to2_.assign(8 * 256, 0);
  for (int chunk = 0; chunk < 8; ++chunk) {
    for (int byte = 0; byte < 256; ++byte) {
      Mask m = 0;
      for (int b = 0; b < 8; ++b) {
        int pos = chunk * 8 + b;
        if ((byte >> b & 1) && pos < ground_.size()) m |= bit_to2[pos];
      }
      to2_[chunk * 256 + byte] = m;
    }
  }
}

std::uint8_t AmalgamOracle::clell1(Mask x) const {
  if (!clell1_.empty()) return clell1_[x];
  std::uint8_t bits = 0;
  int r = m1_.rank(x);
  for (std::size_t j = 0; j < ell_pos1_.size(); ++j) {
    Mask e = bit(ell_pos1_[j]);
    if ((x & e) || m1_.rank(x | e) == r) bits |= 1u << j;
  }
  return bits;
}

std::uint8_t AmalgamOracle::clell2(Mask x) const {
  if (!clell2_.empty()) return clell2_[x];
  std::uint8_t bits = 0;
  int r = m2_.rank(x);
  for (std::size_t j = 0; j < ell_pos2_.size(); ++j) {
    Mask e = bit(ell_pos2_[j]);
    if ((x & e) || m2_.rank(x | e) == r) bits |= 1u << j;
  }
  return bits;
}

bool AmalgamOracle::dependent(Mask x) const {
  if (!is_subset(x, ground_.full())) {
    throw InputError("subset outside the amalgam ground set");
  }
  Mask x1 = side1_mask(x);
  Mask x2 = side2_mask(x);
  if (rank1(x1) != popcount(x1)) return true;
  if (rank2(x2) != popcount(x2)) return true;
  Mask a1 = x1 & ~ell1_;  // X - E2, side-1 coordinates
  Mask b2 = x2 & ~ell2_;  // X - E1, side-2 coordinates
  // (iii) some line element lies in both closures
  if (clell1(a1) & clell2(b2)) return true;
  const std::uint8_t all = static_cast<std::uint8_t>(
      (1u << ell_labels_.size()) - 1);
  // (i) line spanned on side 1, near-skew complement on side 2
  if (clell1(x1) == all && rank2(b2 | ell2_) < rank2(b2) + 2) return true;
  // (ii) symmetric
  if (clell2(x2) == all && rank1(a1 | ell1_) < rank1(a1) + 2) return true;
  return false;
}

int AmalgamOracle::rank_eq1(Mask x, Budget budget) const {
  if (!is_subset(x, ground_.full())) {
    throw InputError("subset outside the amalgam ground set");
  }
  Mask rest = ground_.full() & ~x;
  budget.require(1ull << popcount(rest));
  int best = -1;
  Mask add = 0;
  while (true) {
    Mask y = x | add;
    Mask y1 = side1_mask(y);
    Mask y2 = side2_mask(y);
    int value = rank1(y1) + rank2(y2) - rank1(y1 & ell1_);
    if (best < 0 || value < best) best = value;
    if (add == rest) break;
    add = (add - rest) & rest;
  }
  return best;
}

int AmalgamOracle::rank_greedy(Mask x) const {
  Mask basis = 0;
  Mask rest = x;
  while (rest) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    if (!dependent(basis | bit(e))) basis |= bit(e);
  }
  return popcount(basis);
}

std::shared_ptr<const AmalgamOracle> make_amalgam_oracle(
    const AmalgamSpec& spec) {
  return std::make_shared<AmalgamOracle>(spec);
}

Matroid amalgam_matroid(std::shared_ptr<const AmalgamOracle> oracle) {
  GroundSet ground = oracle->ground();
  return Matroid(std::move(ground), std::make_shared<AmalgamDef>(oracle));
}

}  // namespace ms0
