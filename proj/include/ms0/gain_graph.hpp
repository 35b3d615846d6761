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

#ifndef MS0_GAIN_GRAPH_HPP
#define MS0_GAIN_GRAPH_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/field.hpp"
#include "ms0/ground_set.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

// Cyclic gain group. Elements are stored as exponents of the distinguished
// generator, so balance checks are sum-to-zero tests mod the order.
struct GainGroup {
  enum class Kind { Cyclic, FieldUnits };
  Kind kind = Kind::Cyclic;
  int order = 1;
  int p = 0;          // FieldUnits only
  int generator = 0;  // FieldUnits only; multiplicative order p-1 (verified)

  static GainGroup cyclic(int n);
  static GainGroup field_units(int p, int generator);

  int reduce(long long e) const {
    long long r = e % order;
    return static_cast<int>(r < 0 ? r + order : r);
  }
};

struct GainEdge {
  std::string id;
  int u = 0, v = 0;  // vertex indices; u == v for loops
  int gain = 0;      // exponent, read against the stored orientation (u -> v)
};

// Multigraph with loops and group-valued gains. Reversed traversal uses the
// negated exponent.
class GainGraph {
 public:
  enum class Family { Custom, Gamma, Delta, Glued };

  GainGraph(GainGroup group, std::vector<std::string> vertices,
            std::vector<GainEdge> edges, Family family = Family::Custom);

  const GainGroup& group() const { return group_; }
  Family family() const { return family_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GainEdge>& edges() const { return edges_; }
  const GainEdge& edge(int i) const { return edges_.at(i); }

  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& id) const;
  bool has_edge(const std::string& id) const {
    return edge_by_id_.count(id) != 0;
  }

  // Edge ids as an ordered ground set (the frame matroid's ground set).
  GroundSet edge_ground() const;

  // Parameters of the Gamma / Delta constructions, when applicable.
  int param() const { return param_; }
  void set_family(Family f, int param) {
    family_ = f;
    param_ = param;
  }

 private:
  GainGroup group_;
  std::vector<std::string> vertices_;
  std::vector<GainEdge> edges_;
  std::unordered_map<std::string, int> vertex_by_name_;
  std::unordered_map<std::string, int> edge_by_id_;
  Family family_ = Family::Custom;
  int param_ = 0;
};

// A closed walk given by a start vertex and a sequence of edge ids. Each
// step's direction is inferred from the current vertex.
struct Walk {
  std::string start;
  std::vector<std::string> edges;
};

// Gain of a cycle: sum of oriented exponents along the walk, reduced in the
// group. Validates that the walk is a cycle (closed, no repeated vertices
// except the endpoints; a loop is a length-1 cycle).
int cycle_gain(const GainGraph& g, const Walk& c);
bool is_balanced(const GainGraph& g, const Walk& c);

// Frame (gain-graphic) matroid oracle: X is independent iff every connected
// component of G[X] contains at most one cycle, and that cycle is unbalanced.
bool frame_is_independent(const GainGraph& g, Mask x);
int frame_rank(const GainGraph& g, Mask x);

// Circuits by direct graph search: balanced cycles, plus minimal connected
// sets carrying two unbalanced cycles and no balanced cycle (theta graphs
// and handcuffs). Independent of the component-count oracle above.
std::vector<Mask> frame_circuits(const GainGraph& g);

// The hoop construction. Loops a, a_2..a_s, b; parallel pairs x_i, y_i;
// edges x, y, z from u_1 to u_{s+1}. 3s+4 edges.
GainGraph build_gamma(int s, const GainGroup& group, int alpha_exp);

// The loop construction. 6t+2 edges; edge g carries exponent t(t-1)*beta.
GainGraph build_delta(int t, const GainGroup& group, int beta_exp);

// Identify u_1 with v_1 and u_{s+1} with v_{2t}. Requires the same group and
// equal gains on the shared edges {a, b, x, y, z}.
GainGraph glue_hoop_loop(const GainGraph& gamma, const GainGraph& delta);

// The vertex/edge incidence matrix over the field: balanced loops give zero
// columns, unbalanced loops unit columns, and a non-loop edge between v_j and
// v_k (j < k by vertex index) gives 1 at row j and -sigma(e, v_j, v_k) at k.
// Requires a FieldUnits group.
FFMatrix incidence_matrix(const GainGraph& g);

// Subgraph on an edge subset (all vertices kept; harmless for the matroid).
GainGraph restrict_edges(const GainGraph& g, Mask keep);

Matroid frame_matroid(std::shared_ptr<const GainGraph> g);

}  // namespace ms0

#endif  // MS0_GAIN_GRAPH_HPP
