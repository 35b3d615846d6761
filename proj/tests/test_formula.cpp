#include <doctest.h>

#include <random>

#include "ms0/evaluate.hpp"
#include "ms0/formula.hpp"
#include "ms0/verify.hpp"

using namespace ms0;

namespace {

// Random well-formed sentences with quantifiers scattered through the tree,
// for the prenex-equivalence oracle.
FormulaPtr random_nested_sentence(std::mt19937_64& rng, int max_vars) {
  std::vector<std::string> pool;
  for (int i = 0; i < max_vars; ++i) {
    pool.push_back("X" + std::to_string(i + 1));
  }
  auto gen = [&](auto&& self, int depth) -> FormulaPtr {
    int pick = static_cast<int>(rng() % (depth >= 3 ? 3 : 6));
    switch (pick) {
      case 0:
        return Formula::ind(pool[rng() % pool.size()]);
      case 1:
        return Formula::sing(pool[rng() % pool.size()]);
      case 2:
        return Formula::subseteq(pool[rng() % pool.size()],
                                 pool[rng() % pool.size()]);
      case 3:
        return Formula::negate(self(self, depth + 1));
      case 4:
        return Formula::conj(self(self, depth + 1), self(self, depth + 1));
      default: {
        FormulaPtr body = self(self, depth + 1);
        if (body->free_vars().empty()) return body;
        auto it = body->free_vars().begin();
        std::advance(it, rng() % body->free_vars().size());
        return (rng() & 1) ? Formula::exists(*it, body)
                           : Formula::forall(*it, body);
      }
    }
  };
  FormulaPtr f = gen(gen, 0);
  // close whatever is still free
  while (!f->free_vars().empty()) {
    std::string v = *f->free_vars().begin();
    f = (rng() & 1) ? Formula::exists(v, f) : Formula::forall(v, f);
  }
  return f;
}

}  // namespace

TEST_CASE("parsing") {
  FormulaPtr f = parse_formula("exists X1. Ind(X1)");
  CHECK(f->kind() == Conn::Exists);
  CHECK(f->var1() == "X1");
  CHECK(f->lhs()->kind() == Conn::Ind);
  CHECK(f->is_sentence());

  FormulaPtr g = parse_formula("X1 <= X2 & Ind(X1)");
  CHECK(g->free_vars() == std::set<std::string>{"X1", "X2"});
  CHECK(g->vars() == g->free_vars());

  CHECK_THROWS_AS(parse_formula("exists X1."), ParseError);
  CHECK_THROWS_AS(parse_formula("Ind(X1) &"), ParseError);
  CHECK_THROWS_AS(parse_formula("Ind(X1) Ind(X2)"), ParseError);
}

TEST_CASE("rule 4: quantified variables must be free in scope") {
  CHECK_THROWS_AS(parse_formula("exists X1. Ind(X2)"), FormationError);
  CHECK_THROWS_AS(parse_formula("exists X1. exists X1. Ind(X1)"),
                  FormationError);
}

TEST_CASE("rule 3: repair by relabelling, or strict rejection") {
  // X1 bound on the left, free on the right
  const std::string text = "(exists X1. Ind(X1)) & Ind(X1)";
  FormulaPtr repaired = parse_formula(text);
  CHECK(repaired->free_vars() == std::set<std::string>{"X1"});
  CHECK(repaired->vars().size() == 2);  // the bound copy was renamed

  ParseOptions strict;
  strict.strict_rule3 = true;
  CHECK_THROWS_AS(parse_formula(text, strict), FormationError);
}

TEST_CASE("disjunction is definitional, not just semantic") {
  FormulaPtr via_sugar = parse_formula("Ind(X1) | Sing(X1)");
  FormulaPtr by_hand = Formula::negate(
      Formula::conj(Formula::negate(Formula::ind("X1")),
                    Formula::negate(Formula::sing("X1"))));
  CHECK(via_sugar->equals(*by_hand));
}

TEST_CASE("Max expands to the maximal-independent predicate") {
  FormulaPtr f = parse_formula("Max(X1)");
  Formula::FreshNames fresh;
  FormulaPtr expected = Formula::max_of("X1", fresh);
  CHECK(f->equals(*expected));
  CHECK(f->free_vars() == std::set<std::string>{"X1"});
  CHECK(f->vars().size() == 4);  // X1 plus three expansion variables
}

TEST_CASE("union semantics") {
  FormulaPtr f = parse_formula("Union(X1,X2;X3)");
  CHECK(f->free_vars() == std::set<std::string>{"X1", "X2", "X3"});
  SetSystem sys(GroundSet({"a", "b", "c", "d"}),
                std::vector<bool>(16, true));
  for (Mask x1 = 0; x1 < 16; ++x1) {
    for (Mask x2 = 0; x2 < 16; ++x2) {
      for (Mask x3 = 0; x3 < 16; ++x3) {
        bool value = evaluate(
            sys, f, {{"X1", x1}, {"X2", x2}, {"X3", x3}});
        CHECK(value == (x3 == (x1 | x2)));
      }
    }
  }
}

TEST_CASE("relabelling") {
  FormulaPtr f = parse_formula("exists X1. Ind(X1) & Sing(X2)");
  FormulaPtr same = relabel(f, {});
  CHECK(f->equals(*same));
  FormulaPtr swapped = relabel(f, {{"X1", "Y"}, {"X2", "X1"}});
  CHECK(swapped->free_vars() == std::set<std::string>{"X1"});
  CHECK_THROWS_AS(relabel(f, {{"X1", "X2"}}), InputError);  // not injective

  // evaluation is unchanged by bound-variable swaps
  std::mt19937_64 rng(7);
  std::vector<Matroid> corpus = small_matroid_corpus(2);
  for (int round = 0; round < 200; ++round) {
    FormulaPtr g = random_nested_sentence(rng, 2);
    FormulaPtr h = relabel(g, {{"X1", "Z1"}, {"X2", "Z2"}});
    for (const Matroid& m : corpus) {
      CHECK(evaluate(m, g) == evaluate(m, h));
    }
  }
}

TEST_CASE("prenex conversion") {
  FormulaPtr f = parse_formula("!(exists X1. Ind(X1))");
  FormulaPtr p = to_prenex(f);
  CHECK(p->kind() == Conn::Forall);
  CHECK(p->lhs()->kind() == Conn::Not);

  FormulaPtr already = parse_formula("forall X1. Ind(X1) & Sing(X1)");
  CHECK(to_prenex(already).get() == already.get());

  // equivalence against direct evaluation on every small matroid
  std::mt19937_64 rng(99);
  std::vector<Matroid> corpus = small_matroid_corpus(3);
  auto binder_count = [](auto&& self, const Formula& g) -> int {
    switch (g.kind()) {
      case Conn::Subseteq:
      case Conn::Sing:
      case Conn::Ind:
        return 0;
      case Conn::Not:
        return self(self, *g.lhs());
      case Conn::And:
        return self(self, *g.lhs()) + self(self, *g.rhs());
      default:
        return 1 + self(self, *g.lhs());
    }
  };
  for (int round = 0; round < 1000; ++round) {
    FormulaPtr g = random_nested_sentence(rng, 3);
    FormulaPtr h = to_prenex(g);
    CHECK(is_prenex(*h));
    // with pairwise distinct bound names the variable count is preserved;
    // parallel duplicates are split apart first, so binders bound it
    int binders = binder_count(binder_count, *g);
    CHECK(static_cast<int>(h->vars().size()) <=
          binders + static_cast<int>(g->free_vars().size()));
    if (binders == static_cast<int>(g->vars().size())) {
      CHECK(h->vars().size() == g->vars().size());
    }
    for (std::size_t i = round % 3; i < corpus.size(); i += 3) {
      CHECK(evaluate(corpus[i], g) == evaluate(corpus[i], h));
    }
  }
}

TEST_CASE("axiom sentences") {
  AxiomSentences ax = axiom_sentences();
  FormulaPtr i1 = Formula::exists("X1", Formula::ind("X1"));
  CHECK(ax.i1->equals(*i1));
  CHECK(ax.i1->is_sentence());
  CHECK(ax.i2->is_sentence());
  CHECK(ax.i3->is_sentence());
  CHECK(ax.i2->vars().size() == 2);
  // I3 uses X1..X4 plus seven expansion variables
  CHECK(ax.i3->vars().size() == 11);

  // I2 alone accepts the downward-closed family {0} over one element
  SetSystem one(GroundSet({"e"}), {true, false});
  CHECK(evaluate(one, ax.i2));
}

TEST_CASE("minor sentence shape") {
  Matroid u12 = gen_uniform(1, 2);
  FormulaPtr f = minor_sentence(u12);
  CHECK(f->is_sentence());
  // identity minor
  CHECK(evaluate(u12, f));
  // the empty matroid's sentence is satisfied everywhere
  FormulaPtr e = minor_sentence(gen_uniform(0, 0));
  CHECK(evaluate(gen_uniform(1, 1), e));
  CHECK(evaluate(gen_uniform(0, 0), e));
  CHECK_THROWS_AS(minor_sentence(gen_uniform(3, 6)), InputError);
}

TEST_CASE("free variable bookkeeping on generated formulas") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 10000; ++round) {
    FormulaPtr f = random_nested_sentence(rng, 3);
    CHECK(f->free_vars().empty());
    // quantification removes exactly the bound variable
    const Formula* g = f.get();
    while (g->kind() == Conn::Exists || g->kind() == Conn::Forall) {
      std::set<std::string> inner = g->lhs()->free_vars();
      CHECK(inner.count(g->var1()) == 1);
      std::set<std::string> outer = g->free_vars();
      inner.erase(g->var1());
      CHECK(outer == inner);
      g = g->lhs().get();
    }
  }
}

TEST_CASE("normalize_prenex compiles the matrix") {
  PrenexFormula psi =
      normalize_prenex(parse_formula("exists X1. forall X2. X1 <= X2"));
  CHECK(psi.k == 2);
  CHECK(psi.free_count == 0);
  REQUIRE(psi.exists_q.size() == 2);
  CHECK(psi.exists_q[0]);
  CHECK(!psi.exists_q[1]);
}
