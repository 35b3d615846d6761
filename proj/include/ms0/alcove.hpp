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

#ifndef MS0_ALCOVE_HPP
#define MS0_ALCOVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ms0/base.hpp"

namespace ms0 {

// Integer-linear form over the unknown gain exponents.
struct LinearForm {
  std::vector<std::int64_t> coeff;  // length = variable count
  std::string cycle;                // the cycle of H this form arises from
};

// Unknown exponents gamma, delta, epsilon, zeta, alpha_1..alpha_s,
// beta_1..beta_{2t-1}; equations are the balanced-cycle identities, and
// disequations assert that cycles independent in the two frame matroids stay
// unbalanced in any representation.
struct GainConstraintSystem {
  int s = 0, t = 0;
  std::vector<std::string> var_names;
  std::vector<LinearForm> equations;     // form == 0
  std::vector<LinearForm> disequations;  // form != 0

  int var_count() const { return static_cast<int>(var_names.size()); }
  int var_index(const std::string& name) const;
};

GainConstraintSystem alcove_constraints(int s, int t);

struct AlcoveResult {
  bool sat = false;
  // Witness exponents, one per variable, verified against the system.
  std::vector<std::int64_t> witness;
};

// Feasibility of the equations subject to all disequations, modulo n
// (order >= 1) or over the integers (order == 0). Elimination over Z by
// diagonalization, then a search over the solution lattice.
AlcoveResult alcove_solve(const GainConstraintSystem& sys, int order,
                          Budget budget = {});

// Does the equation lattice imply `form == 0` over the integers (hence
// modulo every n)? Used to certify the derived divisibility bound.
bool alcove_implies(const GainConstraintSystem& sys,
                    const std::vector<std::int64_t>& form);

// Substitute an assignment and check every equation and disequation.
bool alcove_check_assignment(const GainConstraintSystem& sys,
                             const std::vector<std::int64_t>& assignment,
                             int order);

}  // namespace ms0

#endif  // MS0_ALCOVE_HPP
