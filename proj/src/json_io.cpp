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

#include "ms0/json_io.hpp"

#include <fstream>

namespace ms0 {

Json gain_graph_to_json(const GainGraph& g) {
  Json j;
  if (g.group().kind == GainGroup::Kind::Cyclic) {
    j["group"] = {{"kind", "cyclic"}, {"order", g.group().order}};
  } else {
    j["group"] = {{"kind", "field_units"},
                  {"p", g.group().p},
                  {"generator", g.group().generator}};
  }
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"u", g.vertices()[e.u]},
                     {"v", g.vertices()[e.v]},
                     {"gain", e.gain}});
  }
  j["edges"] = edges;
  if (g.family() == GainGraph::Family::Gamma) {
    j["family"] = {{"kind", "gamma"}, {"param", g.param()}};
  } else if (g.family() == GainGraph::Family::Delta) {
    j["family"] = {{"kind", "delta"}, {"param", g.param()}};
  } else if (g.family() == GainGraph::Family::Glued) {
    j["family"] = {{"kind", "glued"}, {"param", g.param()}};
  }
  return j;
}

std::shared_ptr<GainGraph> gain_graph_from_json(const Json& j) {
  if (!j.contains("group") || !j.contains("vertices") ||
      !j.contains("edges")) {
    throw InputError("gain graph JSON needs group, vertices, edges");
  }
  GainGroup group = GainGroup::cyclic(1);
  const Json& gj = j.at("group");
  std::string kind = gj.at("kind").get<std::string>();
  if (kind == "cyclic") {
    group = GainGroup::cyclic(gj.at("order").get<int>());
  } else if (kind == "field_units") {
    group = GainGroup::field_units(gj.at("p").get<int>(),
                                   gj.at("generator").get<int>());
  } else {
    throw InputError("unknown gain group kind: " + kind);
  }
  std::vector<std::string> vertices =
      j.at("vertices").get<std::vector<std::string>>();
  std::unordered_map<std::string, int> vidx;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    vidx[vertices[i]] = i;
  }
  std::vector<GainEdge> edges;
  for (const auto& ej : j.at("edges")) {
    GainEdge e;
    e.id = ej.at("id").get<std::string>();
    auto u = vidx.find(ej.at("u").get<std::string>());
    auto v = vidx.find(ej.at("v").get<std::string>());
    if (u == vidx.end() || v == vidx.end()) {
      throw InputError("edge endpoint is not a listed vertex: " + e.id);
    }
    e.u = u->second;
    e.v = v->second;
    e.gain = ej.at("gain").get<int>();
    edges.push_back(std::move(e));
  }
  auto g = std::make_shared<GainGraph>(group, std::move(vertices),
                                       std::move(edges));
  if (j.contains("family")) {
    std::string fk = j.at("family").at("kind").get<std::string>();
    int param = j.at("family").at("param").get<int>();
    if (fk == "gamma") g->set_family(GainGraph::Family::Gamma, param);
    if (fk == "delta") g->set_family(GainGraph::Family::Delta, param);
    if (fk == "glued") g->set_family(GainGraph::Family::Glued, param);
  }
  return g;
}

namespace {

Json sets_to_json(const GroundSet& g, const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask s : sets) out.push_back(g.unmask(s));
  return out;
}

std::vector<Mask> sets_from_json(const GroundSet& g, const Json& j) {
  std::vector<Mask> out;
  for (const auto& sj : j) {
    out.push_back(g.mask_of(sj.get<std::vector<std::string>>()));
  }
  return out;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["elements"] = m.ground().labels();
  const std::string kind = m.def().kind();
  Json def;
  if (kind == "independent_sets" || kind == "uniform" ||
      kind == "direct_sum" || kind == "minor") {
    // composites and uniforms serialize as their independent-set family
    if (m.size() > 16) {
      throw InputError("explicit family serialization limited to 16 elements");
    }
    std::vector<Mask> sets;
    for (Mask x = 0; x <= m.ground().full(); ++x) {
      if (m.is_independent(x)) sets.push_back(x);
      if (m.size() == 0) break;
    }
    def["kind"] = "independent_sets";
    def["sets"] = sets_to_json(m.ground(), sets);
  } else if (kind == "circuits") {
    def["kind"] = "circuits";
    def["sets"] =
        sets_to_json(m.ground(),
                     static_cast<const CircuitsDef&>(m.def()).circuits);
  } else if (kind == "matrix") {
    const FFMatrix& a = static_cast<const MatrixDef&>(m.def()).matrix;
    def["kind"] = "matrix";
    def["p"] = a.p;
    Json rows = Json::array();
    for (int i = 0; i < a.rows; ++i) {
      Json row = Json::array();
      for (int c = 0; c < a.cols; ++c) row.push_back(a.at(i, c));
      rows.push_back(row);
    }
    def["rows"] = rows;
  } else if (kind == "gain_graph") {
    def["kind"] = "gain_graph";
    def["graph"] = gain_graph_to_json(
        *static_cast<const GainGraphDef&>(m.def()).graph);
  } else if (kind == "amalgam") {
    const AmalgamOracle& o = *static_cast<const AmalgamDef&>(m.def()).oracle;
    def["kind"] = "amalgam";
    def["m1"] = matroid_to_json(o.m1());
    def["m2"] = matroid_to_json(o.m2());
  } else {
    throw InputError("unserializable matroid kind: " + kind);
  }
  j["def"] = def;
  return j;
}

Matroid matroid_from_json(const Json& j) {
  GroundSet ground(j.at("elements").get<std::vector<std::string>>());
  const Json& def = j.at("def");
  std::string kind = def.at("kind").get<std::string>();
  if (kind == "independent_sets") {
    return make_matroid_from_sets(ground,
                                  sets_from_json(ground, def.at("sets")));
  }
  if (kind == "circuits") {
    return make_matroid_from_circuits(ground,
                                      sets_from_json(ground, def.at("sets")));
  }
  if (kind == "matrix") {
    auto rows = def.at("rows").get<std::vector<std::vector<int>>>();
    int p = def.at("p").get<int>();
    FFMatrix a(p, static_cast<int>(rows.size()), ground.size());
    a.col_labels = ground.labels();
    for (int i = 0; i < a.rows; ++i) {
      if (static_cast<int>(rows[i].size()) != a.cols) {
        throw InputError("matrix row width differs from element count");
      }
      for (int c = 0; c < a.cols; ++c) {
        a.at(i, c) = ((rows[i][c] % p) + p) % p;
      }
      a.row_labels.push_back("r" + std::to_string(i));
    }
    Matroid m = column_matroid(a);
    if (!(m.ground() == ground)) throw InputError("column label mismatch");
    return m;
  }
  if (kind == "gain_graph") {
    auto g = gain_graph_from_json(def.at("graph"));
    Matroid m = frame_matroid(g);
    if (!(m.ground() == ground)) {
      throw InputError("elements must equal the edge ids in order");
    }
    return m;
  }
  if (kind == "amalgam") {
    AmalgamSpec spec{matroid_from_json(def.at("m1")),
                     matroid_from_json(def.at("m2"))};
    Matroid m = amalgam_matroid(spec);
    if (!(m.ground() == ground)) {
      throw InputError(
          "elements must be E1 followed by E2 minus the shared line");
    }
    return m;
  }
  throw InputError("unknown matroid kind: " + kind);
}

SetSystem structure_from_json(const Json& j) {
  const Json& def = j.at("def");
  if (def.at("kind").get<std::string>() == "independent_sets") {
    GroundSet ground(j.at("elements").get<std::vector<std::string>>());
    std::vector<Mask> sets = sets_from_json(ground, def.at("sets"));
    return SetSystem::of_family(std::move(ground), sets);
  }
  return SetSystem::of_matroid(matroid_from_json(j));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace ms0
