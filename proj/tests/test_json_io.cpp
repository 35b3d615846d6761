#include <doctest.h>

#include <memory>

#include "ms0/gain_graph.hpp"
#include "ms0/json_io.hpp"

using namespace ms0;

namespace {

void check_round_trip(const Matroid& m) {
  Json j = matroid_to_json(m);
  Matroid back = matroid_from_json(j);
  REQUIRE(back.ground() == m.ground());
  for (Mask x = 0; x <= m.ground().full(); ++x) {
    CHECK(back.is_independent(x) == m.is_independent(x));
    if (m.size() == 0) break;
  }
}

}  // namespace

TEST_CASE("matroid json round trips preserve the oracle") {
  check_round_trip(gen_uniform(2, 4));
  check_round_trip(gen_pg2(2));
  check_round_trip(make_matroid_from_circuits(GroundSet({"a", "b", "c"}),
                                              {0b011}));
  GainGroup g = GainGroup::field_units(5, 2);
  auto graph = std::make_shared<GainGraph>(
      GainGraph(g, {"v1", "v2"},
                {{"p", 0, 0, 1}, {"q", 0, 1, 0}, {"r", 0, 1, 2}}));
  check_round_trip(frame_matroid(graph));
}

TEST_CASE("amalgam json carries both sides") {
  FFMatrix a(7, 2, 3);
  a.col_labels = {"p", "q", "c"};
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  a.at(0, 2) = 1;
  a.at(1, 2) = 1;
  FFMatrix b = a;
  b.col_labels = {"p", "q", "d"};
  b.at(1, 2) = 2;
  Matroid amal = amalgam_matroid(
      AmalgamSpec{column_matroid(a), column_matroid(b)});
  check_round_trip(amal);
  Json j = matroid_to_json(amal);
  CHECK(j["def"]["kind"] == "amalgam");
}

TEST_CASE("gain graph json round trips") {
  GainGroup g = GainGroup::cyclic(6);
  GainGraph graph(g, {"x", "y"},
                  {{"e", 0, 1, 4}, {"l", 1, 1, 5}});
  Json j = gain_graph_to_json(graph);
  auto back = gain_graph_from_json(j);
  CHECK(back->vertices() == graph.vertices());
  CHECK(back->edge_count() == 2);
  CHECK(back->edge(0).gain == 4);
  CHECK(back->group().order == 6);
}

TEST_CASE("bad input is rejected") {
  Json j;
  j["elements"] = {"a", "b"};
  j["def"] = {{"kind", "unknown"}};
  CHECK_THROWS_AS(matroid_from_json(j), InputError);
  Json g;
  g["group"] = {{"kind", "cyclic"}, {"order", 3}};
  g["vertices"] = {"v"};
  g["edges"] = {{{"id", "e"}, {"u", "v"}, {"v", "w"}, {"gain", 0}}};
  CHECK_THROWS_AS(gain_graph_from_json(g), InputError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}
