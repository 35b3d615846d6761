#include <doctest.h>

#include <algorithm>

#include "ms0/field.hpp"
#include "ms0/gain_graph.hpp"

using namespace ms0;

namespace {

GainGroup g17() { return GainGroup::field_units(17, 3); }

GainGraph tiny_graph() {
  // two vertices; a balanced loop, an unbalanced loop, a parallel pair
  return GainGraph(GainGroup::cyclic(4), {"p", "q"},
                   {{"bal", 0, 0, 0},
                    {"unbal", 0, 0, 1},
                    {"e1", 0, 1, 0},
                    {"e2", 0, 1, 2}});
}

// Minimal dependent sets straight from the independence oracle.
std::vector<Mask> minimal_dependent(const GainGraph& g) {
  int n = g.edge_count();
  std::vector<Mask> found;
  for (int card = 1; card <= n; ++card) {
    Mask x = full_mask(card);
    while (x != 0 && x < (Mask{1} << n)) {
      bool pruned = false;
      for (Mask c : found) {
        if (is_subset(c, x)) {
          pruned = true;
          break;
        }
      }
      if (!pruned && !frame_is_independent(g, x)) found.push_back(x);
      x = next_same_popcount(x);
    }
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  return found;
}

}  // namespace

TEST_CASE("gain group validation") {
  CHECK_THROWS_AS(GainGroup::cyclic(0), InputError);
  CHECK_THROWS_AS(GainGroup::field_units(17, 2), InputError);  // order 8
  CHECK(GainGroup::field_units(17, 3).order == 16);
  CHECK(GainGroup::cyclic(5).reduce(-3) == 2);
}

TEST_CASE("cycle gains") {
  GainGraph g = tiny_graph();
  CHECK(cycle_gain(g, {"p", {"bal"}}) == 0);
  CHECK(is_balanced(g, {"p", {"bal"}}));
  CHECK(cycle_gain(g, {"p", {"unbal"}}) == 1);
  // the parallel pair traversed both ways: reversal negates
  CHECK(cycle_gain(g, {"p", {"e1", "e2"}}) ==
        (4 - cycle_gain(g, {"q", {"e2", "e1"}})) % 4);
  CHECK_THROWS_AS(cycle_gain(g, {"p", {"e1"}}), InputError);  // not closed
  CHECK_THROWS_AS(cycle_gain(g, {"q", {"bal"}}), InputError);
}

TEST_CASE("trivial group balances everything") {
  GainGraph g(GainGroup::cyclic(1), {"v"}, {{"l", 0, 0, 0}});
  CHECK(is_balanced(g, {"v", {"l"}}));
}

TEST_CASE("gamma construction") {
  GainGraph gamma = build_gamma(3, g17(), 1);
  CHECK(gamma.edge_count() == 13);  // 3s + 4
  CHECK(gamma.vertex_count() == 4);
  // gains as constructed: x_i 1, y_i alpha, y alpha^{s-1}, z alpha^s
  CHECK(gamma.edge(gamma.edge_index("x1")).gain == 0);
  CHECK(gamma.edge(gamma.edge_index("y1")).gain == 1);
  CHECK(gamma.edge(gamma.edge_index("y")).gain == 2);
  CHECK(gamma.edge(gamma.edge_index("z")).gain == 3);
  // {x1, x2, x3, x} is a balanced cycle; {y1, y2, y3, z} as well
  CHECK(is_balanced(gamma, {"u1", {"x1", "x2", "x3", "x"}}));
  CHECK(is_balanced(gamma, {"u1", {"y1", "y2", "y3", "z"}}));
  CHECK(!is_balanced(gamma, {"u1", {"x1", "y1"}}));
  // order precondition: alpha with order <= s is rejected
  CHECK_THROWS_AS(build_gamma(3, GainGroup::cyclic(3), 1), InputError);
  CHECK_THROWS_AS(build_gamma(2, g17(), 1), InputError);
}

TEST_CASE("delta construction") {
  GainGraph delta = build_delta(3, g17(), 1);
  CHECK(delta.edge_count() == 20);  // 6t + 2
  CHECK(delta.vertex_count() == 6);
  CHECK(delta.edge(delta.edge_index("g")).gain == 6);  // t(t-1) * beta
  int with_tm1 = 0;
  for (int i = 1; i <= 5; ++i) {
    if (delta.edge(delta.edge_index("f" + std::to_string(i))).gain == 2) {
      ++with_tm1;
    }
  }
  CHECK(with_tm1 == 3);  // t of the f_i carry beta^{t-1}
  // order precondition 2t(t-1)
  CHECK_THROWS_AS(build_delta(3, GainGroup::cyclic(12), 1), InputError);
  CHECK(build_delta(3, GainGroup::cyclic(13), 1).edge_count() == 20);
}

TEST_CASE("frame independence") {
  GainGraph g = tiny_graph();
  CHECK(frame_is_independent(g, bit(g.edge_index("unbal"))));
  CHECK(!frame_is_independent(g, bit(g.edge_index("bal"))));
  GainGraph gamma = build_gamma(3, g17(), 1);
  Mask loops = 0;
  for (const char* id : {"a", "a2", "a3", "b"}) {
    loops |= bit(gamma.edge_index(id));
  }
  CHECK(frame_is_independent(gamma, loops));
  CHECK(frame_rank(gamma, loops) == 4);
  // theta on x, y, z: dependent
  Mask xyz = bit(gamma.edge_index("x")) | bit(gamma.edge_index("y")) |
             bit(gamma.edge_index("z"));
  CHECK(!frame_is_independent(gamma, xyz));
  CHECK(frame_rank(gamma, xyz) == 2);
}

TEST_CASE("frame circuits by direct search match the oracle") {
  GainGraph g = tiny_graph();
  CHECK(frame_circuits(g) == minimal_dependent(g));

  // two unbalanced loops at one vertex form a handcuff of size two
  GainGraph two_loops(GainGroup::cyclic(3), {"v"},
                      {{"l1", 0, 0, 1}, {"l2", 0, 0, 2}});
  auto c = frame_circuits(two_loops);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 0b11);

  GainGraph lone(GainGroup::cyclic(3), {"v"}, {{"l1", 0, 0, 1}});
  CHECK(frame_circuits(lone).empty());

  // a handcuff with a connecting path, theta variations, a balanced cycle
  GainGraph mixed(GainGroup::cyclic(6), {"v1", "v2", "v3", "v4"},
                  {{"l1", 0, 0, 1},
                   {"p1", 0, 1, 0},
                   {"p2", 1, 2, 2},
                   {"q1", 2, 3, 1},
                   {"q2", 2, 3, 1},
                   {"q3", 2, 3, 4},
                   {"r", 1, 1, 3}});
  CHECK(frame_circuits(mixed) == minimal_dependent(mixed));

  GainGraph gamma10 =
      restrict_edges(build_gamma(3, g17(), 1),
                     full_mask(13) & ~0b111);  // drop a, a2, a3
  CHECK(frame_circuits(gamma10) == minimal_dependent(gamma10));
}

TEST_CASE("gamma circuits include the balanced x-cycle") {
  GainGraph gamma = build_gamma(3, g17(), 1);
  Matroid m = frame_matroid(std::make_shared<GainGraph>(gamma));
  Mask xcycle = 0;
  for (const char* id : {"x1", "x2", "x3", "x"}) {
    xcycle |= bit(gamma.edge_index(id));
  }
  const auto& circuits = m.circuits();
  CHECK(std::find(circuits.begin(), circuits.end(), xcycle) !=
        circuits.end());
}

TEST_CASE("shared boundary of gamma and delta") {
  GainGraph gamma = build_gamma(3, g17(), 1);
  GainGraph delta = build_delta(3, g17(), 1);
  std::vector<std::string> shared;
  for (const auto& e : gamma.edges()) {
    if (delta.has_edge(e.id)) shared.push_back(e.id);
  }
  CHECK(shared == std::vector<std::string>{"a", "b", "x", "y", "z"});
  // both restrictions are five points on a rank-2 line (U_{2,5})
  for (const GainGraph* g : {&gamma, &delta}) {
    std::vector<int> idx;
    for (const auto& id : shared) idx.push_back(g->edge_index(id));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        CHECK(frame_is_independent(*g, bit(idx[i]) | bit(idx[j])));
        for (std::size_t l = j + 1; l < idx.size(); ++l) {
          CHECK(!frame_is_independent(
              *g, bit(idx[i]) | bit(idx[j]) | bit(idx[l])));
        }
      }
    }
  }
}

TEST_CASE("gluing") {
  GainGraph gamma = build_gamma(3, g17(), 1);
  GainGraph delta = build_delta(3, g17(), 1);
  GainGraph h = glue_hoop_loop(gamma, delta);
  CHECK(h.edge_count() == 28);  // 13 + 20 - 5
  CHECK(h.vertex_count() == 8);
  // restriction to E(gamma) is the hoop matroid, on every subset
  int mismatches = 0;
  for (Mask x = 0; x < (Mask{1} << 13); ++x) {
    if (frame_is_independent(h, x) != frame_is_independent(gamma, x)) {
      ++mismatches;
    }
  }
  CHECK(mismatches == 0);
  // mismatched parameters disagree on the shared gains
  GainGraph delta4 = build_delta(4, GainGroup::field_units(29, 2), 1);
  GainGraph gamma29 = build_gamma(3, GainGroup::field_units(29, 2), 1);
  CHECK_THROWS_AS(glue_hoop_loop(gamma29, delta4), InputError);
  CHECK_THROWS_AS(glue_hoop_loop(gamma, delta4), InputError);  // group
}

TEST_CASE("incidence matrix") {
  GainGraph g = tiny_graph();
  CHECK_THROWS_AS(incidence_matrix(g), InputError);  // cyclic group

  GainGraph gf(GainGroup::field_units(5, 2), {"v1", "v2"},
               {{"bal", 0, 0, 0}, {"ub", 1, 1, 1}, {"e", 0, 1, 3}});
  FFMatrix d = incidence_matrix(gf);
  CHECK(d.at(0, 0) == 0);  // balanced loop column is zero
  CHECK(d.at(1, 0) == 0);
  CHECK(d.at(1, 1) == 1);  // unbalanced loop: unit column
  CHECK(d.at(0, 1) == 0);
  CHECK(d.at(0, 2) == 1);  // non-loop: 1 at the lower-indexed endpoint
  CHECK(d.at(1, 2) == (5 - PrimeField(5).pow(2, 3)) % 5);

  // the column matroid equals the frame oracle on every subset
  GainGraph gamma = build_gamma(3, g17(), 1);
  FFMatrix dg = incidence_matrix(gamma);
  Matroid cm = column_matroid(dg);
  for (Mask x = 0; x < (Mask{1} << 13); ++x) {
    CHECK(cm.is_independent(x) == frame_is_independent(gamma, x));
  }
}

TEST_CASE("hoop and loop matroids are simple at the paper instances") {
  {
    GainGraph gamma = build_gamma(3, g17(), 1);
    GainGraph delta = build_delta(3, g17(), 1);
    CHECK(frame_matroid(std::make_shared<GainGraph>(gamma)).is_simple());
    CHECK(frame_matroid(std::make_shared<GainGraph>(delta)).is_simple());
  }
  {
    GainGroup g29 = GainGroup::field_units(29, 2);
    GainGraph gamma = build_gamma(3, g29, 1);
    GainGraph delta = build_delta(4, g29, 1);
    CHECK(frame_matroid(std::make_shared<GainGraph>(gamma)).is_simple());
    CHECK(frame_matroid(std::make_shared<GainGraph>(delta)).is_simple());
  }
}

TEST_CASE("balance is invariant under rotation and reversal") {
  GainGraph gamma = build_gamma(3, g17(), 1);
  std::vector<std::string> cyc = {"x1", "x2", "x3", "x"};
  std::vector<std::string> starts = {"u1", "u2", "u3", "u4"};
  for (int rot = 0; rot < 4; ++rot) {
    std::vector<std::string> rotated;
    for (int i = 0; i < 4; ++i) rotated.push_back(cyc[(rot + i) % 4]);
    CHECK(is_balanced(gamma, {starts[rot], rotated}));
    std::vector<std::string> reversed(rotated.rbegin(), rotated.rend());
    CHECK(is_balanced(gamma, {starts[rot], reversed}));
  }
}
