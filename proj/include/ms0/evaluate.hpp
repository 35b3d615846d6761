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

#ifndef MS0_EVALUATE_HPP
#define MS0_EVALUATE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/formula.hpp"
#include "ms0/ground_set.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

// An independence structure: a ground set plus an arbitrary subset family on
// which Ind is read. Matroids are the special case, which is what lets the
// axiom sentences be evaluated meaningfully on non-matroids.
class SetSystem {
 public:
  SetSystem(GroundSet ground, std::vector<bool> member_table);
  static SetSystem of_matroid(const Matroid& m);
  static SetSystem of_family(GroundSet ground, const std::vector<Mask>& sets);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  bool independent(Mask x) const { return table_[x]; }
  const std::vector<bool>& table() const { return table_; }

 private:
  GroundSet ground_;
  std::vector<bool> table_;  // size 2^n
};

// Map from free variables to subsets.
using Assignment = std::vector<std::pair<std::string, Mask>>;

// Worst-case number of variable assignments a recursive evaluation visits.
unsigned long long evaluation_estimate(const Formula& f, int ground_size);

// Tarskian semantics; set variables range over all subsets of the ground
// set, so quantifiers sweep 2^|E| assignments per level.
bool evaluate(const SetSystem& s, const FormulaPtr& f, const Assignment& a = {},
              Budget budget = {});

inline bool evaluate(const Matroid& m, const FormulaPtr& f,
                     const Assignment& a = {}, Budget budget = {}) {
  return evaluate(SetSystem::of_matroid(m), f, a, budget);
}

// (M, Y_1..Y_l) satisfies f when X_i is interpreted as Y_i; fr(f) must be
// exactly {X1..Xl}.
bool satisfies_stacked(const Matroid& m, const std::vector<Mask>& stack,
                       const FormulaPtr& f, Budget budget = {});

}  // namespace ms0

#endif  // MS0_EVALUATE_HPP
