#include <doctest.h>

#include "ms0/alcove.hpp"

using namespace ms0;

TEST_CASE("constraint layout") {
  GainConstraintSystem sys = alcove_constraints(3, 4);
  CHECK(sys.var_count() == 4 + 3 + 7);
  // one x-cycle, s y/x cycles, one z cycle, 2t-1 e/f cycles, two g cycles
  CHECK(sys.equations.size() == 1u + 3 + 1 + 7 + 2);
  CHECK(sys.disequations.size() == 2u + 3);  // (s-1) + (t-1)
  CHECK_THROWS_AS(alcove_constraints(2, 3), InputError);
  CHECK_THROWS_AS(sys.var_index("nope"), InputError);
}

TEST_CASE("the equations pin zeta to t(s-1) alpha_1 when s = t") {
  GainConstraintSystem sys = alcove_constraints(3, 3);
  std::vector<std::int64_t> form(sys.var_count(), 0);
  form[sys.var_index("zeta")] = 1;
  form[sys.var_index("alpha_1")] = -6;
  CHECK(alcove_implies(sys, form));
  // and they do not pin zeta to anything else
  form[sys.var_index("alpha_1")] = -5;
  CHECK(!alcove_implies(sys, form));
}

TEST_CASE("(3,4) forces alpha_1^{st-t} = alpha_1^{st-s}") {
  GainConstraintSystem sys = alcove_constraints(3, 4);
  std::vector<std::int64_t> form(sys.var_count(), 0);
  // (st - t) - (st - s) = s - t
  form[sys.var_index("alpha_1")] = 3 - 4;
  CHECK(alcove_implies(sys, form));
}

TEST_CASE("dropping the disequations admits the zero assignment") {
  GainConstraintSystem sys = alcove_constraints(3, 4);
  sys.disequations.clear();
  AlcoveResult r = alcove_solve(sys, 7);
  REQUIRE(r.sat);
  for (auto v : r.witness) CHECK(v == 0);
}

TEST_CASE("distinct parameters are unsatisfiable everywhere") {
  GainConstraintSystem sys = alcove_constraints(3, 4);
  CHECK(!alcove_solve(sys, 0).sat);
  for (int n = 1; n <= 64; ++n) {
    CHECK(!alcove_solve(sys, n).sat);
  }
  for (auto [s, t] : {std::pair{3, 5}, {4, 5}, {4, 3}, {5, 3}, {5, 4}}) {
    GainConstraintSystem st = alcove_constraints(s, t);
    CHECK(!alcove_solve(st, 0).sat);
    for (int n = 1; n <= 100; n += 7) {
      CHECK(!alcove_solve(st, n).sat);
    }
  }
}

TEST_CASE("(3,3) at order 16 is satisfiable with a verified witness") {
  GainConstraintSystem sys = alcove_constraints(3, 3);
  AlcoveResult r = alcove_solve(sys, 16);
  REQUIRE(r.sat);
  CHECK(alcove_check_assignment(sys, r.witness, 16));
  // the hand assignment from the gamma/delta gains also verifies
  std::vector<std::int64_t> w(sys.var_count(), 0);
  auto set = [&](const char* n, std::int64_t v) {
    w[sys.var_index(n)] = v;
  };
  set("gamma", 0);
  set("delta", 2);
  set("epsilon", 3);
  set("zeta", 6);
  set("alpha_1", 1);
  set("alpha_2", 1);
  set("alpha_3", 1);
  set("beta_1", 2);
  set("beta_2", 2);
  set("beta_3", 2);
  set("beta_4", 3);
  set("beta_5", 3);
  CHECK(alcove_check_assignment(sys, w, 16));
}

TEST_CASE("(3,3) at order 12: computed regression verdict") {
  // The y/x disequations only demand j * alpha_1 != 0 for j < s, so an
  // order as low as 12 still admits alpha_1 = 1; recorded as computed.
  GainConstraintSystem sys = alcove_constraints(3, 3);
  AlcoveResult r = alcove_solve(sys, 12);
  CHECK(r.sat);
  CHECK(alcove_check_assignment(sys, r.witness, 12));
}

TEST_CASE("equal parameters satisfiable above the velvet bound") {
  for (int s : {3, 4}) {
    GainConstraintSystem sys = alcove_constraints(s, s);
    for (int n = 2 * s * (s - 1) + 1; n <= 100; ++n) {
      AlcoveResult r = alcove_solve(sys, n);
      CHECK(r.sat);
      if (r.sat) CHECK(alcove_check_assignment(sys, r.witness, n));
    }
    CHECK(alcove_solve(sys, 0).sat);
  }
}

TEST_CASE("solver rejects bad arguments") {
  GainConstraintSystem sys = alcove_constraints(3, 3);
  CHECK_THROWS_AS(alcove_solve(sys, -1), InputError);
  CHECK(!alcove_check_assignment(sys, {1, 2}, 5));  // wrong arity
}
