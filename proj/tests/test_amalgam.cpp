#include <doctest.h>

#include <memory>

#include "ms0/amalgam.hpp"
#include "ms0/field.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/verify.hpp"

using namespace ms0;

namespace {

Matroid line_matroid(const std::vector<std::string>& labels,
                     const std::vector<std::array<int, 2>>& cols, int p) {
  FFMatrix m(p, 2, static_cast<int>(cols.size()));
  m.col_labels = labels;
  m.row_labels = {"r0", "r1"};
  for (int c = 0; c < m.cols; ++c) {
    m.at(0, c) = cols[c][0];
    m.at(1, c) = cols[c][1];
  }
  return column_matroid(m);
}

AmalgamSpec u23_pair() {
  // M1 = U_{2,3} on {p, q, c}; M2 = U_{2,3} on {p, q, d}
  AmalgamSpec spec;
  spec.m1 = line_matroid({"p", "q", "c"}, {{1, 0}, {0, 1}, {1, 1}}, 7);
  spec.m2 = line_matroid({"p", "q", "d"}, {{1, 0}, {0, 1}, {1, 2}}, 7);
  return spec;
}

}  // namespace

TEST_CASE("two lines amalgamate to a longer line") {
  auto oracle = make_amalgam_oracle(u23_pair());
  CHECK(oracle->ground().labels() ==
        std::vector<std::string>{"p", "q", "c", "d"});
  CHECK(oracle->rank_eq1(0) == 0);
  Mask cd = oracle->ground().mask_of({"c", "d"});
  CHECK(oracle->rank_eq1(cd) == 2);
  CHECK(oracle->rank_eq1(oracle->ground().full()) == 2);
  // the amalgam is U_{2,4}
  Matroid amal = amalgam_matroid(oracle);
  for (Mask x = 0; x <= amal.ground().full(); ++x) {
    CHECK(amal.is_independent(x) == (popcount(x) <= 2));
  }
  CHECK(!oracle->dependent(0));
}

TEST_CASE("restrictions reproduce the sides") {
  auto oracle = make_amalgam_oracle(u23_pair());
  Matroid amal = amalgam_matroid(oracle);
  const Matroid& m1 = oracle->m1();
  for (Mask x1 = 0; x1 <= m1.ground().full(); ++x1) {
    Mask in_amal = 0;
    for (int i = 0; i < m1.size(); ++i) {
      if (has_bit(x1, i)) {
        in_amal |= bit(amal.ground().index(m1.ground().label(i)));
      }
    }
    CHECK(amal.is_independent(in_amal) == m1.is_independent(x1));
  }
}

TEST_CASE("spec invariants are enforced") {
  // a non-simple side: repeated projective point
  AmalgamSpec spec;
  spec.m1 = line_matroid({"p", "q", "c"}, {{1, 0}, {0, 1}, {2, 0}}, 7);
  spec.m2 = line_matroid({"p", "q", "d"}, {{1, 0}, {0, 1}, {1, 2}}, 7);
  CHECK_THROWS_AS(make_amalgam_oracle(spec), InputError);

  // shared set of rank 3 is rejected
  AmalgamSpec bad;
  FFMatrix a(7, 3, 4);
  a.col_labels = {"p", "q", "r", "c"};
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  a.at(2, 2) = 1;
  a.at(0, 3) = 1;
  a.at(1, 3) = 1;
  bad.m1 = column_matroid(a);
  FFMatrix b = a;
  b.col_labels = {"p", "q", "r", "d"};
  bad.m2 = column_matroid(b);
  CHECK_THROWS_AS(make_amalgam_oracle(bad), InputError);

  // no shared labels at all
  AmalgamSpec disjoint;
  disjoint.m1 = line_matroid({"p", "q"}, {{1, 0}, {0, 1}}, 7);
  disjoint.m2 = line_matroid({"u", "v"}, {{1, 0}, {0, 1}}, 7);
  CHECK_THROWS_AS(make_amalgam_oracle(disjoint), InputError);
}

TEST_CASE("dependence test matches the rank-minimum oracle") {
  for (int i = 0; i < 25; ++i) {
    AmalgamSpec spec = random_amalgam_spec(7, 10, 1000 + i);
    auto oracle = make_amalgam_oracle(spec);
    Mask total = Mask{1} << oracle->ground().size();
    for (Mask x = 0; x < total; ++x) {
      CHECK(oracle->dependent(x) == (oracle->rank_eq1(x) < popcount(x)));
    }
  }
}

TEST_CASE("amalgams satisfy the matroid axioms") {
  for (int i = 0; i < 5; ++i) {
    AmalgamSpec spec = random_amalgam_spec(7, 10, 2000 + i);
    auto oracle = make_amalgam_oracle(spec);
    Matroid amal = amalgam_matroid(oracle);
    Mask total = Mask{1} << amal.size();
    std::vector<bool> table(total);
    for (Mask x = 0; x < total; ++x) table[x] = amal.is_independent(x);
    CHECK(is_matroid(table, amal.size()));
  }
}

TEST_CASE("the all-loops set is a basis of the (3,4) amalgam") {
  GainGroup g29 = GainGroup::field_units(29, 2);
  auto gamma = std::make_shared<GainGraph>(build_gamma(3, g29, 1));
  auto delta = std::make_shared<GainGraph>(build_delta(4, g29, 1));
  AmalgamSpec spec{frame_matroid(gamma), frame_matroid(delta)};
  auto oracle = make_amalgam_oracle(spec);
  std::vector<std::string> loops = {"a", "a2", "a3", "b"};
  for (int i = 2; i <= 7; ++i) loops.push_back("b" + std::to_string(i));
  CHECK(loops.size() == 10);  // s + 2t - 1
  Mask b = oracle->ground().mask_of(loops);
  CHECK(!oracle->dependent(b));
  // adding any other element closes a 3-element circuit: a basis
  for (int e = 0; e < oracle->ground().size(); ++e) {
    if (has_bit(b, e)) continue;
    CHECK(oracle->dependent(b | bit(e)));
  }
  CHECK(oracle->rank_greedy(oracle->ground().full()) == 10);
}

TEST_CASE("the (3,3) hoop/loop amalgam matches the glued frame matroid") {
  GainGroup g17 = GainGroup::field_units(17, 3);
  auto gamma = std::make_shared<GainGraph>(build_gamma(3, g17, 1));
  auto delta = std::make_shared<GainGraph>(build_delta(3, g17, 1));
  auto glued =
      std::make_shared<GainGraph>(glue_hoop_loop(*gamma, *delta));
  AmalgamSpec spec{frame_matroid(gamma), frame_matroid(delta)};
  auto oracle = make_amalgam_oracle(spec);
  int ne = oracle->ground().size();
  REQUIRE(ne == 28);
  // ground orders agree between the oracle and the glued graph
  for (int i = 0; i < ne; ++i) {
    CHECK(oracle->ground().label(i) == glued->edges()[i].id);
  }
  for (int card = 0; card <= 4; ++card) {
    Mask x = card == 0 ? 0 : full_mask(card);
    do {
      CHECK(frame_is_independent(*glued, x) == !oracle->dependent(x));
      x = next_same_popcount(x);
    } while (card > 0 && x != 0 && x < (Mask{1} << ne));
  }
  // rank equals the vertex count of the glued graph
  CHECK(oracle->rank_greedy(oracle->ground().full()) == 8);
  CHECK(glued->vertex_count() == 8);
}

TEST_CASE("rank_eq1 budget") {
  auto oracle = make_amalgam_oracle(u23_pair());
  CHECK_THROWS_AS(oracle->rank_eq1(0, Budget{3}), BudgetError);
}
