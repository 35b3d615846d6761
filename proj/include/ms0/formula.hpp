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

#ifndef MS0_FORMULA_HPP
#define MS0_FORMULA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

enum class Conn { Subseteq, Sing, Ind, Not, And, Exists, Forall };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Abstract syntax over the core connectives only. Sugar (or, ->, <->, Union,
// Max) is expanded eagerly at construction; fresh bound variables come from
// the reserved _U namespace and count toward the variable total. The var and
// free-variable sets follow the formation rules: conjunction may not mix a
// variable free on one side with the same variable bound on the other, and a
// quantifier may only bind a variable that is free in its scope.
class Formula {
 public:
  Conn kind() const { return kind_; }
  const std::string& var1() const { return v_; }  // atom arg / bound variable
  const std::string& var2() const { return w_; }  // second arg of subseteq
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }

  const std::set<std::string>& vars() const { return vars_; }
  const std::set<std::string>& free_vars() const { return free_; }
  bool is_sentence() const { return free_.empty(); }
  bool is_quantifier_free() const;

  // Core constructors (enforce the formation rules).
  static FormulaPtr subseteq(const std::string& a, const std::string& b);
  static FormulaPtr sing(const std::string& a);
  static FormulaPtr ind(const std::string& a);
  static FormulaPtr negate(FormulaPtr f);
  // auto_relabel: repair rule-(3) violations by relabelling bound variables
  // (into the reserved _R namespace) instead of rejecting.
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b, bool auto_relabel = true);
  static FormulaPtr exists(const std::string& v, FormulaPtr f);
  static FormulaPtr forall(const std::string& v, FormulaPtr f);

  // Sugar, expanded per its definition. `fresh` supplies reserved names.
  class FreshNames {
   public:
    std::string next() { return "_U" + std::to_string(++count_); }
    int used() const { return count_; }

   private:
    int count_ = 0;
  };
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b, bool auto_relabel = true);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b,
                            bool auto_relabel = true);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b, bool auto_relabel = true);
  static FormulaPtr union_of(const std::vector<std::string>& sources,
                             const std::string& target, FreshNames& fresh);
  static FormulaPtr max_of(const std::string& v, FreshNames& fresh);

  bool equals(const Formula& other) const;  // structural identity
  std::string to_string() const;

 private:
  Formula(Conn k, std::string v, std::string w, FormulaPtr l, FormulaPtr r)
      : kind_(k), v_(std::move(v)), w_(std::move(w)), lhs_(std::move(l)),
        rhs_(std::move(r)) {}

  Conn kind_;
  std::string v_, w_;
  FormulaPtr lhs_, rhs_;
  std::set<std::string> vars_, free_;
};

struct ParseOptions {
  bool strict_rule3 = false;  // reject instead of relabelling
};

// Concrete grammar:
//   formula := quant | iff
//   quant   := ("exists"|"forall") IDENT "." formula
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" or)*
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" formula ")" | atom
//   atom    := "Ind(" IDENT ")" | "Sing(" IDENT ")" | IDENT "<=" IDENT
//            | "Union(" IDENT ("," IDENT)+ ";" IDENT ")" | "Max(" IDENT ")"
FormulaPtr parse_formula(const std::string& text, ParseOptions opts = {});

// Alpha-rename by an injective mapping on var(f); evaluation is unchanged.
FormulaPtr relabel(FormulaPtr f,
                   const std::vector<std::pair<std::string, std::string>>&
                       mapping);

// Prenex normal form: logically equivalent, variable count not increased.
// Already-prenex input is returned unchanged.
FormulaPtr to_prenex(FormulaPtr f);
bool is_prenex(const Formula& f);

// The three axiom sentences, with Max and Union_2 expanded.
struct AxiomSentences {
  FormulaPtr i1, i2, i3;
};
AxiomSentences axiom_sentences();

// The minor-detection sentence for N; |E(N)| <= 5 for evaluation
// feasibility.
FormulaPtr minor_sentence(const Matroid& n);

// ---- Compiled quantifier-free matrices and prenex views -------------------

// Postfix program over per-column atoms; evaluated either directly against
// subset masks or against a summed truth matrix.
struct Qf {
  enum class Op : std::uint8_t { Sub, Sing, Ind, Not, And };
  struct Instr {
    Op op;
    std::uint8_t i = 0, j = 0;
  };
  int k = 0;
  std::vector<Instr> code;

  bool eval_masks(const std::vector<Mask>& assignment,
                  const std::function<bool(Mask)>& ind) const;
};

struct PrenexFormula {
  int k = 0;           // total variables (columns X_1..X_k)
  int free_count = 0;  // leading columns bound by the caller
  std::vector<bool> exists_q;  // quantifier block for X_{l+1}..X_k
  Qf matrix;
  FormulaPtr prenex_source;
};

// Prenex-convert and map variables to columns: free variables first (sorted
// by name), then quantified variables in prefix order.
PrenexFormula normalize_prenex(FormulaPtr f);

}  // namespace ms0

#endif  // MS0_FORMULA_HPP
