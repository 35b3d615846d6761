#include <doctest.h>

#include "ms0/evaluate.hpp"
#include "ms0/formula.hpp"

using namespace ms0;

TEST_CASE("basic sentences") {
  Matroid u11 = gen_uniform(1, 1);
  CHECK(evaluate(u11, parse_formula("exists X1. Ind(X1)")));
  CHECK(evaluate(u11, parse_formula("forall X1. Ind(X1)")));
  Matroid loop = make_matroid_from_sets(GroundSet({"e"}), {0});
  CHECK(evaluate(loop, parse_formula("exists X1. Ind(X1)")));
  CHECK(!evaluate(loop, parse_formula("exists X1. Ind(X1) & Sing(X1)")));
}

TEST_CASE("empty ground set: vacuous quantification") {
  Matroid empty = gen_uniform(0, 0);
  // X1 only ranges over the empty set, where Sing fails
  CHECK(evaluate(empty, parse_formula("forall X1. Sing(X1) -> Ind(X1)")));
  CHECK(!evaluate(empty, parse_formula("exists X1. Sing(X1)")));
}

TEST_CASE("assignments must cover the free variables") {
  Matroid u22 = gen_uniform(2, 2);
  FormulaPtr f = parse_formula("Ind(X1)");
  CHECK_THROWS_AS(evaluate(u22, f), InputError);
  CHECK(evaluate(u22, f, {{"X1", 0b11}}));
  CHECK_THROWS_AS(evaluate(u22, f, {{"X1", 0b100}}), InputError);
}

TEST_CASE("stacked satisfaction") {
  Matroid u23 = gen_uniform(2, 3);
  FormulaPtr f = parse_formula("Ind(X1) & X2 <= X1");
  CHECK(satisfies_stacked(u23, {0b011, 0b001}, f));
  CHECK(!satisfies_stacked(u23, {0b011, 0b100}, f));
  CHECK_THROWS_AS(satisfies_stacked(u23, {0b011}, f), InputError);
  FormulaPtr wrong_names = parse_formula("Ind(Y1)");
  CHECK_THROWS_AS(satisfies_stacked(u23, {0b001}, wrong_names), InputError);
}

TEST_CASE("budget refusal") {
  Matroid u24 = gen_uniform(2, 4);
  FormulaPtr f = parse_formula("exists X1. exists X2. X1 <= X2");
  CHECK(evaluation_estimate(*f, 4) == 256);
  CHECK_THROWS_AS(evaluate(u24, f, {}, Budget{100}), BudgetError);
  CHECK(evaluate(u24, f, {}, Budget{300}));
}

TEST_CASE("axioms versus the direct oracle on a slice of families") {
  AxiomSentences ax = axiom_sentences();
  FormulaPtr all = Formula::conj(Formula::conj(ax.i1, ax.i2), ax.i3);
  GroundSet ground({"e1", "e2", "e3"});
  for (unsigned fam = 0; fam < 256; fam += 5) {
    std::vector<bool> member(8);
    for (Mask s = 0; s < 8; ++s) member[s] = (fam >> s) & 1;
    SetSystem sys(ground, member);
    CHECK(evaluate(sys, all) == is_matroid(member, 3));
  }
}

TEST_CASE("set system constructors") {
  SetSystem sys = SetSystem::of_family(GroundSet({"a", "b"}),
                                       {0, 0b01});
  CHECK(sys.independent(0));
  CHECK(sys.independent(0b01));
  CHECK(!sys.independent(0b10));
  CHECK_THROWS_AS(
      SetSystem::of_family(GroundSet({"a"}), {0b100}), InputError);
}
