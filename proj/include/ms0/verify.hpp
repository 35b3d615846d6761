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

#ifndef MS0_VERIFY_HPP
#define MS0_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ms0/amalgam.hpp"
#include "ms0/formula.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

// One executable verification; each acceptance criterion is one of these,
// runnable standalone through the CLI.
struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json details;  // counters and, on failure, a counterexample
  double wall_ms = 0.0;
};

struct CheckParams {
  std::uint64_t seed = 0;
  int s = 3, t = 3;
  int p = 17;
  int alpha = 3;
  int k = 1;
  int count = 0;      // 0 = check default
  int max_edges = 0;  // 0 = check default
  int order_lo = 1, order_hi = 200;
  unsigned long long budget = 1ull << 30;
};

CheckResult check_jackal_eq1(const CheckParams& p);   // criterion 1
CheckResult check_yogurt(const CheckParams& p);       // criterion 2
CheckResult check_noodle(const CheckParams& p);       // criterion 3
CheckResult check_velvet(const CheckParams& p);       // criterion 4
CheckResult check_alcove(const CheckParams& p);       // criterion 5
CheckResult check_window(const CheckParams& p);       // criterion 6
CheckResult check_needle(const CheckParams& p);       // criterion 7
CheckResult check_axioms(const CheckParams& p);       // criterion 8
CheckResult check_minor(const CheckParams& p);        // criterion 9
CheckResult check_bounds(const CheckParams& p);       // criterion 10
CheckResult check_jungle(const CheckParams& p);       // criterion 11

CheckResult run_named_check(const std::string& name, const CheckParams& p);
std::vector<std::string> check_names();

// ---- Shared generators (deterministic in the seed) ------------------------

// All labelled matroids on canonical grounds e1..en for n <= max_n,
// enumerated as subset families and filtered by the axiom check.
std::vector<Matroid> small_matroid_corpus(int max_n);

// Random prenex sentences with exactly k variables, every variable used.
std::vector<FormulaPtr> random_sentences(int k, int count, std::uint64_t seed);

// Random amalgam specs backed by GF(p) column matroids sharing a rank-2
// line, |E1 u E2| <= max_total.
AmalgamSpec random_amalgam_spec(int p, int max_total, std::uint64_t seed);

// The ten one-variable sentences used by the end-to-end tree check.
std::vector<std::string> needle_sentence_pool();

}  // namespace ms0

#endif  // MS0_VERIFY_HPP
