#include <doctest.h>

#include <random>

#include "ms0/field.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/matroid.hpp"
#include "ms0/verify.hpp"

using namespace ms0;

namespace {

std::vector<bool> family_table(const Matroid& m) {
  Mask total = Mask{1} << m.size();
  std::vector<bool> table(total);
  for (Mask x = 0; x < total; ++x) table[x] = m.is_independent(x);
  return table;
}

// Contraction oracle straight from the definition: Y independent in M/X iff
// rank(Y u B) - rank(B) = |Y| for a maximal independent B in X.
bool contract_oracle(const Matroid& m, Mask x, Mask y_parent) {
  Mask b = m.basis_of(x);
  return m.rank(y_parent | b) - m.rank(b) == popcount(y_parent);
}

}  // namespace

TEST_CASE("independence basics") {
  Matroid u24 = gen_uniform(2, 4);
  CHECK(u24.is_independent(Mask{0}));
  CHECK(u24.is_independent(0b0011));
  CHECK(!u24.is_independent(0b0111));
  CHECK_THROWS_AS(u24.is_independent(std::vector<std::string>{"nope"}),
                  InputError);
  CHECK_THROWS_AS(u24.is_independent(Mask{1} << 5), InputError);
}

TEST_CASE("the fano line is dependent") {
  Matroid fano = gen_pg2(2);
  // the three points 0:0:1, 0:1:0, 0:1:1 sum to zero over GF(2)
  Mask line = fano.ground().mask_of({"0:0:1", "0:1:0", "0:1:1"});
  CHECK(!fano.is_independent(line));
  CHECK(fano.rank(line) == 2);
}

TEST_CASE("rank examples") {
  Matroid u24 = gen_uniform(2, 4);
  CHECK(u24.rank(Mask{0}) == 0);
  CHECK(u24.rank() == 2);
  CHECK(gen_pg2(2).rank() == 3);
}

TEST_CASE("closure") {
  Matroid u24 = gen_uniform(2, 4);
  CHECK(u24.closure(bit(0)) == bit(0));  // no parallel elements
  Matroid fano = gen_pg2(2);
  Mask basis = fano.basis_of(fano.ground().full());
  CHECK(fano.closure(basis) == fano.ground().full());
  // two points close to the 3-point line through them; brute-force over all
  // seven elements with the rank oracle
  Mask two = fano.ground().mask_of({"0:0:1", "0:1:0"});
  Mask expected = two;
  for (int e = 0; e < 7; ++e) {
    if (fano.rank(two | bit(e)) == fano.rank(two)) expected |= bit(e);
  }
  CHECK(fano.closure(two) == expected);
  CHECK(popcount(expected) == 3);
  // idempotent, extensive, monotone (spot)
  CHECK(fano.closure(fano.closure(two)) == fano.closure(two));
  CHECK(is_subset(two, fano.closure(two)));
}

TEST_CASE("circuits") {
  Matroid u24 = gen_uniform(2, 4);
  const auto& c = u24.circuits();
  CHECK(c.size() == 4);
  for (Mask x : c) CHECK(popcount(x) == 3);
  CHECK(gen_uniform(3, 3).circuits().empty());
}

TEST_CASE("circuits characterize dependence") {
  for (const Matroid& m : {gen_pg2(2), gen_uniform(2, 5)}) {
    const auto& circuits = m.circuits();
    for (Mask x = 0; x <= m.ground().full(); ++x) {
      bool has_circuit = false;
      for (Mask c : circuits) {
        if (is_subset(c, x)) has_circuit = true;
      }
      CHECK(m.is_independent(x) == !has_circuit);
      if (m.size() == 0) break;
    }
  }
}

TEST_CASE("direct sums") {
  Matroid u11 = gen_uniform(1, 1);
  Matroid empty = gen_uniform(0, 0);
  Matroid m = gen_pg2(2);

  Matroid with_empty = direct_sum(m, empty);
  CHECK(with_empty.ground() == m.ground());
  CHECK(matroid_equal(with_empty, m));

  Matroid two = direct_sum(u11, relabel_with_suffix(u11, "b"));
  CHECK(two.rank() == 2);
  CHECK(two.circuits().empty());

  Matroid sum = direct_sum(m, relabel_with_suffix(gen_uniform(2, 4), "x"));
  CHECK(sum.rank() == m.rank() + 2);
  CHECK_THROWS_AS(direct_sum(u11, u11), InputError);

  // trace-wise independence on every subset
  Matroid a = gen_uniform(2, 3);
  Matroid b = relabel_with_suffix(gen_uniform(1, 3), "y");
  Matroid ab = direct_sum(a, b);
  for (Mask x = 0; x <= ab.ground().full(); ++x) {
    bool expect = a.is_independent(x & full_mask(3)) &&
                  b.is_independent(x >> 3);
    CHECK(ab.is_independent(x) == expect);
  }
}

TEST_CASE("minors") {
  Matroid u24 = gen_uniform(2, 4);
  CHECK(matroid_equal(contract_elements(u24, 0), u24));
  Matroid del = delete_elements(u24, bit(3));
  CHECK(matroid_equal(del, gen_uniform(2, 3)));

  // contraction against the definitional oracle, brute force
  Matroid con = contract_elements(u24, bit(3));
  CHECK(con.size() == 3);
  for (Mask y = 0; y < 8; ++y) {
    Mask y_parent = 0;
    for (int i = 0; i < 3; ++i) {
      if (has_bit(y, i)) y_parent |= bit(u24.ground().index(
          con.ground().label(i)));
    }
    CHECK(con.is_independent(y) == contract_oracle(u24, bit(3), y_parent));
  }
  // U24 / e has rank 1 on 3 elements: U13
  CHECK(con.rank() == 1);
  for (int i = 0; i < 3; ++i) CHECK(con.is_independent(bit(i)));
}

TEST_CASE("minor search") {
  Matroid u24 = gen_uniform(2, 4);
  CHECK(has_minor(u24, u24));
  CHECK(!has_minor(gen_uniform(2, 3), u24));  // too few elements
  CHECK(has_minor(gen_pg2(2), gen_uniform(2, 3)));
  CHECK(!has_minor(gen_pg2(2), u24));  // binary matroids exclude U24
}

TEST_CASE("axiom check on set systems") {
  CHECK(is_matroid(0, {Mask{0}}));
  CHECK(!is_matroid(1, {bit(0)}));  // missing the empty set
  CHECK(is_matroid(1, {Mask{0}}));
  int count = 0;
  for (unsigned fam = 0; fam < 256; ++fam) {
    std::vector<bool> member(8);
    for (Mask s = 0; s < 8; ++s) member[s] = (fam >> s) & 1;
    if (is_matroid(member, 3)) ++count;
  }
  // 1 rank-0, 7 rank-1, 7 rank-2, 1 rank-3 family on three labelled elements
  CHECK(count == 16);
}

TEST_CASE("every backing satisfies the independence axioms") {
  std::vector<Matroid> corpus;
  corpus.push_back(gen_uniform(2, 5));
  corpus.push_back(gen_pg2(2));
  corpus.push_back(make_matroid_from_circuits(
      GroundSet({"a", "b", "c", "d"}), {0b0111, 0b1011, 0b1101, 0b1110}));
  corpus.push_back(make_matroid_from_sets(
      GroundSet({"a", "b"}), {0, 0b01, 0b10}));
  corpus.push_back(frame_matroid(std::make_shared<GainGraph>(
      GainGraph(GainGroup::cyclic(5), {"v1", "v2", "v3"},
                {{"l", 0, 0, 1},
                 {"m", 1, 1, 0},
                 {"e1", 0, 1, 2},
                 {"e2", 0, 1, 3},
                 {"e3", 1, 2, 0},
                 {"e4", 2, 0, 1}}))));
  for (const Matroid& m : corpus) {
    CHECK(is_matroid(family_table(m), m.size()));
  }
}

TEST_CASE("rank is monotone, unit-increase and submodular") {
  Matroid m = gen_pg2(2);
  Mask total = m.ground().full();
  for (Mask a = 0; a <= total; ++a) {
    for (int e = 0; e < m.size(); ++e) {
      int d = m.rank(a | bit(e)) - m.rank(a);
      CHECK(d >= 0);
      CHECK(d <= 1);
    }
  }
  for (Mask a = 0; a <= total; ++a) {
    for (Mask b = a; b <= total; ++b) {
      CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
    }
  }
}

TEST_CASE("generators") {
  Matroid empty = gen_uniform(0, 0);
  CHECK(empty.size() == 0);
  CHECK(empty.rank() == 0);
  Matroid fano = gen_pg2(2);
  CHECK(fano.size() == 7);
  CHECK(fano.rank() == 3);
  CHECK(gen_pg2(3).size() == 13);
  CHECK_THROWS_AS(gen_pg2(4), InputError);
  CHECK_THROWS_AS(gen_uniform(3, 2), InputError);
}

TEST_CASE("matroid construction validates axioms") {
  // {0, {a,b}} without the singletons is not downward closed
  CHECK_THROWS_AS(
      make_matroid_from_sets(GroundSet({"a", "b"}), {0, 0b11}, true),
      InputError);
  // circuits must form an antichain
  CHECK_THROWS_AS(
      make_matroid_from_circuits(GroundSet({"a", "b"}), {0b01, 0b11}),
      InputError);
}
