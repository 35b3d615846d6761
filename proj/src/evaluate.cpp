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

#include "ms0/evaluate.hpp"

#include <algorithm>

namespace ms0 {

SetSystem::SetSystem(GroundSet ground, std::vector<bool> member_table)
    : ground_(std::move(ground)), table_(std::move(member_table)) {
  if (ground_.size() > 24) {
    throw InputError("independence structures limited to 24 elements");
  }
  if (table_.size() != (Mask{1} << ground_.size())) {
    throw InputError("membership table size mismatch");
  }
}

SetSystem SetSystem::of_matroid(const Matroid& m) {
  if (m.size() > 24) {
    throw InputError("evaluation limited to 24 elements");
  }
  Mask total = Mask{1} << m.size();
  std::vector<bool> table(total);
  for (Mask x = 0; x < total; ++x) table[x] = m.is_independent(x);
  return SetSystem(m.ground(), std::move(table));
}

SetSystem SetSystem::of_family(GroundSet ground,
                               const std::vector<Mask>& sets) {
  Mask total = Mask{1} << ground.size();
  std::vector<bool> table(total, false);
  for (Mask s : sets) {
    if (s >= total) throw InputError("family member outside the ground set");
    table[s] = true;
  }
  return SetSystem(std::move(ground), std::move(table));
}

unsigned long long evaluation_estimate(const Formula& f, int ground_size) {
  unsigned long long per_level =
      ground_size >= 63 ? ~0ull : (1ull << ground_size);
  switch (f.kind()) {
    case Conn::Subseteq:
    case Conn::Sing:
    case Conn::Ind:
      return 1;
    case Conn::Not:
      return evaluation_estimate(*f.lhs(), ground_size);
    case Conn::And: {
      unsigned long long a = evaluation_estimate(*f.lhs(), ground_size);
      unsigned long long b = evaluation_estimate(*f.rhs(), ground_size);
      return a + b < a ? ~0ull : a + b;
    }
    case Conn::Exists:
    case Conn::Forall:
      return sat_mul(per_level, evaluation_estimate(*f.lhs(), ground_size));
  }
  return 1;
}

namespace {

struct Env {
  std::vector<std::pair<std::string, Mask>> binding;

  Mask lookup(const std::string& v) const {
    for (auto it = binding.rbegin(); it != binding.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    throw InputError("free variable not covered by the assignment: " + v);
  }
};

bool eval_rec(const SetSystem& s, const Formula& f, Env& env) {
  switch (f.kind()) {
    case Conn::Subseteq:
      return is_subset(env.lookup(f.var1()), env.lookup(f.var2()));
    case Conn::Sing:
      return popcount(env.lookup(f.var1())) == 1;
    case Conn::Ind:
      return s.independent(env.lookup(f.var1()));
    case Conn::Not:
      return !eval_rec(s, *f.lhs(), env);
    case Conn::And:
      return eval_rec(s, *f.lhs(), env) && eval_rec(s, *f.rhs(), env);
    case Conn::Exists:
    case Conn::Forall: {
      bool want = f.kind() == Conn::Exists;
      Mask total = Mask{1} << s.size();
      env.binding.push_back({f.var1(), 0});
      for (Mask y = 0; y < total; ++y) {
        env.binding.back().second = y;
        if (eval_rec(s, *f.lhs(), env) == want) {
          env.binding.pop_back();
          return want;
        }
      }
      env.binding.pop_back();
      return !want;
    }
  }
  throw InputError("unreachable");
}

}  // namespace

bool evaluate(const SetSystem& s, const FormulaPtr& f, const Assignment& a,
              Budget budget) {
  for (const auto& v : f->free_vars()) {
    bool covered = false;
    for (const auto& [name, mask] : a) {
      if (name == v) covered = true;
    }
    if (!covered) {
      throw InputError("assignment does not cover free variable " + v);
    }
  }
  budget.require(evaluation_estimate(*f, s.size()));
  Env env;
  for (const auto& [name, mask] : a) {
    if (!is_subset(mask, s.ground().full())) {
      throw InputError("assigned subset outside the ground set");
    }
    env.binding.push_back({name, mask});
  }
  return eval_rec(s, *f, env);
}

bool satisfies_stacked(const Matroid& m, const std::vector<Mask>& stack,
                       const FormulaPtr& f, Budget budget) {
  if (f->free_vars().size() != stack.size()) {
    throw InputError("stack length differs from the number of free variables");
  }
  Assignment a;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    std::string name = "X" + std::to_string(i + 1);
    if (!f->free_vars().count(name)) {
      throw InputError("free variables must be X1..Xl; missing " + name);
    }
    a.push_back({name, stack[i]});
  }
  return evaluate(m, f, a, budget);
}

}  // namespace ms0
