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

#include "ms0/gain_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ms0 {

GainGroup GainGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be >= 1");
  GainGroup g;
  g.kind = Kind::Cyclic;
  g.order = n;
  return g;
}

GainGroup GainGroup::field_units(int p, int generator) {
  PrimeField f(p);
  if (generator % p == 0) throw InputError("generator must be non-zero");
  if (p > 2 && element_order(f, generator) != p - 1) {
    throw InputError("generator does not have order p-1");
  }
  GainGroup g;
  g.kind = Kind::FieldUnits;
  g.order = p - 1 == 0 ? 1 : p - 1;
  g.p = p;
  g.generator = ((generator % p) + p) % p;
  return g;
}

GainGraph::GainGraph(GainGroup group, std::vector<std::string> vertices,
                     std::vector<GainEdge> edges, Family family)
    : group_(group),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      family_(family) {
  if (static_cast<int>(edges_.size()) > kMaxElements) {
    throw InputError("too many edges");
  }
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vertex_by_name_.emplace(vertices_[i], i).second) {
      throw InputError("duplicate vertex name: " + vertices_[i]);
    }
  }
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    GainEdge& e = edges_[i];
    if (e.u < 0 || e.u >= vertex_count() || e.v < 0 ||
        e.v >= vertex_count()) {
      throw InputError("edge endpoint out of range: " + e.id);
    }
    e.gain = group_.reduce(e.gain);
    if (!edge_by_id_.emplace(e.id, i).second) {
      throw InputError("duplicate edge id: " + e.id);
    }
  }
}

int GainGraph::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) throw InputError("no vertex " + name);
  return it->second;
}

int GainGraph::edge_index(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) throw InputError("no edge " + id);
  return it->second;
}

GroundSet GainGraph::edge_ground() const {
  std::vector<std::string> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return GroundSet(ids);
}

int cycle_gain(const GainGraph& g, const Walk& c) {
  if (c.edges.empty()) throw InputError("empty walk");
  int at = g.vertex_index(c.start);
  int start = at;
  long long total = 0;
  std::set<int> seen;
  seen.insert(at);
  for (std::size_t step = 0; step < c.edges.size(); ++step) {
    const GainEdge& e = g.edge(g.edge_index(c.edges[step]));
    int next;
    if (e.u == e.v) {
      if (e.u != at) throw InputError("loop " + e.id + " not at the walk");
      next = at;
      total += e.gain;
    } else if (e.u == at) {
      next = e.v;
      total += e.gain;
    } else if (e.v == at) {
      next = e.u;
      total -= e.gain;  // reversed traversal negates the exponent
    } else {
      throw InputError("edge " + e.id + " does not continue the walk");
    }
    bool last = step + 1 == c.edges.size();
    if (last) {
      if (next != start) throw InputError("walk is not closed");
    } else {
      if (seen.count(next)) throw InputError("walk repeats a vertex");
      seen.insert(next);
    }
    at = next;
  }
  return g.group().reduce(total);
}

bool is_balanced(const GainGraph& g, const Walk& c) {
  return cycle_gain(g, c) == 0;
}

namespace {

// Union-find with gain potentials to the root; one pass gives rank and
// independence of an edge subset.
struct PotentialDsu {
  std::vector<int> parent;
  std::vector<long long> pot;  // exponent of vertex relative to parent
  std::vector<std::uint8_t> unbalanced, has_cycle;
  int order;

  explicit PotentialDsu(int n, int group_order) : order(group_order) {
    parent.resize(n);
    pot.assign(n, 0);
    unbalanced.assign(n, 0);
    has_cycle.assign(n, 0);
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<int, long long> find(int v) {
    if (parent[v] == v) return {v, 0};
    auto [root, acc] = find(parent[v]);
    parent[v] = root;
    pot[v] = (pot[v] + acc) % order;
    return {root, pot[v]};
  }

  // returns false once a component is forced dependent
  struct Result {
    int rank = 0;
    bool independent = true;
  };
};

struct SweepOutcome {
  int rank = 0;
  bool independent = true;
};

SweepOutcome frame_sweep(const GainGraph& g, Mask x) {
  PotentialDsu dsu(g.vertex_count(), g.group().order);
  SweepOutcome out;
  Mask touched = 0;
  Mask rest = x;
  while (rest) {
    int ei = lowest_bit(rest);
    rest &= rest - 1;
    const GainEdge& e = g.edge(ei);
    touched |= bit(e.u) | bit(e.v);
    auto [ru, pu] = dsu.find(e.u);
    auto [rv, pv] = dsu.find(e.v);
    if (ru != rv) {
      // merging two components that both carry a cycle yields a second
      // cycle in one component
      if (dsu.has_cycle[ru] && dsu.has_cycle[rv]) out.independent = false;
      // merge: pot(u) + gain = pot(v) in the merged frame
      dsu.parent[ru] = rv;
      dsu.pot[ru] =
          ((pv - e.gain - pu) % dsu.order + dsu.order) % dsu.order;
      dsu.unbalanced[rv] |= dsu.unbalanced[ru];
      dsu.has_cycle[rv] |= dsu.has_cycle[ru];
    } else {
      long long diff = (pu + e.gain - pv) % dsu.order;
      if (diff != 0) {
        if (dsu.has_cycle[ru]) out.independent = false;  // second cycle
        dsu.unbalanced[ru] = 1;
      } else {
        out.independent = false;  // balanced cycle closed
      }
      dsu.has_cycle[ru] = 1;
    }
  }
  // rank = |V(X)| - #components + #components with an unbalanced cycle
  int vertices = popcount(touched);
  int comps = 0, unbal = 0;
  Mask t = touched;
  while (t) {
    int v = lowest_bit(t);
    t &= t - 1;
    if (dsu.find(v).first == v) {
      ++comps;
      if (dsu.unbalanced[v]) ++unbal;
    }
  }
  out.rank = vertices - comps + unbal;
  return out;
}

}  // namespace

bool frame_is_independent(const GainGraph& g, Mask x) {
  if (!is_subset(x, full_mask(g.edge_count()))) {
    throw InputError("edge subset out of range");
  }
  return frame_sweep(g, x).independent;
}

int frame_rank(const GainGraph& g, Mask x) {
  if (!is_subset(x, full_mask(g.edge_count()))) {
    throw InputError("edge subset out of range");
  }
  return frame_sweep(g, x).rank;
}

// --- Circuit search ---------------------------------------------------------

namespace {

struct CycleRec {
  Mask edges = 0;
  Mask vertices = 0;
  bool balanced = false;
};

// All simple cycles: loops, parallel pairs, and longer vertex cycles found
// by DFS with a canonical start to avoid duplicates.
std::vector<CycleRec> enumerate_cycles(const GainGraph& g) {
  std::vector<CycleRec> cycles;
  int n = g.vertex_count();
  int m = g.edge_count();
  const int order = g.group().order;

  for (int i = 0; i < m; ++i) {
    const GainEdge& e = g.edge(i);
    if (e.u == e.v) {
      cycles.push_back({bit(i), bit(e.u), g.group().reduce(e.gain) == 0});
    }
  }
  // adjacency of non-loop edges
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < m; ++i) {
    const GainEdge& e = g.edge(i);
    if (e.u != e.v) {
      adj[e.u].push_back(i);
      adj[e.v].push_back(i);
    }
  }
  // DFS over vertex paths starting at the smallest vertex of the cycle.
  std::vector<int> path_edges;
  Mask on_path = 0;
  auto dfs = [&](auto&& self, int start, int at) -> void {
    for (int ei : adj[at]) {
      const GainEdge& e = g.edge(ei);
      int to = e.u == at ? e.v : e.u;
      if (!path_edges.empty() && ei == path_edges.back()) continue;
      if (to == start && path_edges.size() >= 1) {
        // close the cycle; canonical: second vertex index < last vertex
        // index to pick one orientation (2-cycles handled by edge order)
        Mask edges = bit(ei);
        for (int pe : path_edges) edges |= bit(pe);
        if (popcount(edges) == 2 &&
            ei < path_edges.front()) {
          continue;  // parallel pair counted once
        }
        if (popcount(edges) > 2) {
          const GainEdge& first = g.edge(path_edges.front());
          int second = first.u == start ? first.v : first.u;
          const GainEdge& last = g.edge(ei);
          int before = last.u == start ? last.v : last.u;
          if (second > before) continue;  // orientation canonicalization
        }
        long long gain = 0;
        int v = start;
        for (int pe : path_edges) {
          const GainEdge& pg = g.edge(pe);
          gain += pg.u == v ? pg.gain : -pg.gain;
          v = pg.u == v ? pg.v : pg.u;
        }
        gain += e.u == v ? e.gain : -e.gain;
        CycleRec rec;
        rec.edges = edges;
        rec.vertices = bit(start) | on_path;
        rec.balanced =
            (((gain % order) + order) % order) == 0;
        bool dup = false;
        for (const auto& c : cycles) {
          if (c.edges == rec.edges) {
            dup = true;
            break;
          }
        }
        if (!dup) cycles.push_back(rec);
        continue;
      }
      if (to <= start || has_bit(on_path, to)) continue;
      on_path |= bit(to);
      path_edges.push_back(ei);
      self(self, start, to);
      path_edges.pop_back();
      on_path &= ~bit(to);
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path = 0;
    path_edges.clear();
    dfs(dfs, s, s);
  }
  return cycles;
}

// Simple paths between two vertex sets whose interior avoids both.
void connecting_paths(const GainGraph& g, Mask from, Mask to, Mask forbidden,
                      std::vector<std::pair<Mask, Mask>>& out) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < m; ++i) {
    const GainEdge& e = g.edge(i);
    if (e.u != e.v) {
      adj[e.u].push_back(i);
      adj[e.v].push_back(i);
    }
  }
  auto dfs = [&](auto&& self, int at, Mask pe, Mask pv) -> void {
    if (has_bit(to, at)) {
      out.push_back({pe, pv | bit(at)});
      return;
    }
    for (int ei : adj[at]) {
      const GainEdge& e = g.edge(ei);
      int nx = e.u == at ? e.v : e.u;
      if (has_bit(pv, nx) || has_bit(from, nx)) continue;
      if (!has_bit(to, nx) && has_bit(forbidden, nx)) continue;
      self(self, nx, pe | bit(ei), pv | bit(nx));
    }
  };
  Mask f = from;
  while (f) {
    int v = lowest_bit(f);
    f &= f - 1;
    dfs(dfs, v, 0, bit(v));
  }
}

}  // namespace

std::vector<Mask> frame_circuits(const GainGraph& g) {
  if (g.edge_count() > 20) {
    throw InputError("circuit search limited to 20 edges");
  }
  std::vector<CycleRec> cycles = enumerate_cycles(g);
  std::set<Mask> found;
  for (const auto& c : cycles) {
    if (c.balanced) found.insert(c.edges);
  }
  // Handcuffs: two edge-disjoint unbalanced cycles sharing exactly one
  // vertex, or joined by a path whose interior avoids both.
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].balanced) continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[j].balanced) continue;
      if (cycles[i].edges & cycles[j].edges) continue;
      Mask shared = cycles[i].vertices & cycles[j].vertices;
      if (popcount(shared) == 1) {
        found.insert(cycles[i].edges | cycles[j].edges);
      } else if (shared == 0) {
        std::vector<std::pair<Mask, Mask>> paths;
        connecting_paths(g, cycles[i].vertices, cycles[j].vertices,
                         cycles[i].vertices | cycles[j].vertices, paths);
        for (const auto& [pe, pv] : paths) {
          found.insert(cycles[i].edges | cycles[j].edges | pe);
        }
      }
      // cycles sharing >= 2 vertices but no edges: their union contains a
      // theta on fewer edges, produced by the theta enumeration below
    }
  }
  // Thetas: three internally disjoint u-v paths, all three pair-cycles
  // unbalanced.
  {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        // all simple u-v paths (as edge masks with interior vertex masks)
        std::vector<std::pair<Mask, Mask>> paths;
        connecting_paths(g, bit(u), bit(v), 0, paths);
        // path gains u -> v
        std::vector<long long> gains;
        gains.reserve(paths.size());
        for (auto& [pe, pv] : paths) {
          long long gain = 0;
          int at = u;
          Mask rest = pe;
          while (at != v) {
            Mask r = rest;
            bool advanced = false;
            while (r) {
              int ei = lowest_bit(r);
              r &= r - 1;
              const GainEdge& e = g.edge(ei);
              if (e.u == at || e.v == at) {
                gain += e.u == at ? e.gain : -e.gain;
                at = e.u == at ? e.v : e.u;
                rest &= ~bit(ei);
                advanced = true;
                break;
              }
            }
            if (!advanced) break;
          }
          gains.push_back(gain);
        }
        const int order = g.group().order;
        for (std::size_t a = 0; a < paths.size(); ++a) {
          for (std::size_t b = a + 1; b < paths.size(); ++b) {
            if (paths[a].first & paths[b].first) continue;
            Mask inner_ab = (paths[a].second | paths[b].second) &
                            ~(bit(u) | bit(v));
            if ((paths[a].second & paths[b].second & ~(bit(u) | bit(v))))
              continue;
            for (std::size_t c = b + 1; c < paths.size(); ++c) {
              if ((paths[a].first | paths[b].first) & paths[c].first)
                continue;
              if (paths[c].second & inner_ab) continue;
              auto unbal = [&](long long x, long long y) {
                return (((x - y) % order) + order) % order != 0;
              };
              if (unbal(gains[a], gains[b]) && unbal(gains[a], gains[c]) &&
                  unbal(gains[b], gains[c])) {
                found.insert(paths[a].first | paths[b].first |
                             paths[c].first);
              }
            }
          }
        }
      }
    }
  }
  // Minimality sweep: drop anything containing a smaller member.
  std::vector<Mask> all(found.begin(), found.end());
  std::vector<Mask> minimal;
  for (Mask x : all) {
    bool keep = true;
    for (Mask y : all) {
      if (y != x && is_subset(y, x)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  return minimal;
}

// --- Constructions ----------------------------------------------------------

namespace {

int group_element_order(const GainGroup& g, int exp) {
  int e = g.reduce(exp);
  if (e == 0) return 1;
  int gcd = std::gcd(e, g.order);
  return g.order / gcd;
}

}  // namespace

GainGraph build_gamma(int s, const GainGroup& group, int alpha_exp) {
  if (s < 3) throw InputError("gamma needs s >= 3");
  int ord = group_element_order(group, alpha_exp);
  if (ord <= s) {
    throw InputError("gamma needs the order of alpha (" +
                     std::to_string(ord) + ") to exceed s = " +
                     std::to_string(s));
  }
  std::vector<std::string> vertices;
  for (int i = 1; i <= s + 1; ++i) vertices.push_back("u" + std::to_string(i));
  std::vector<GainEdge> edges;
  const int a = group.reduce(alpha_exp);
  edges.push_back({"a", 0, 0, a});
  for (int i = 2; i <= s; ++i) {
    edges.push_back({"a" + std::to_string(i), i - 1, i - 1, a});
  }
  edges.push_back({"b", s, s, a});
  for (int i = 1; i <= s; ++i) {
    edges.push_back({"x" + std::to_string(i), i - 1, i, 0});
    edges.push_back({"y" + std::to_string(i), i - 1, i, a});
  }
  edges.push_back({"x", 0, s, 0});
  edges.push_back({"y", 0, s, group.reduce(static_cast<long long>(s - 1) * a)});
  edges.push_back({"z", 0, s, group.reduce(static_cast<long long>(s) * a)});
  GainGraph g(group, std::move(vertices), std::move(edges));
  g.set_family(GainGraph::Family::Gamma, s);
  return g;
}

GainGraph build_delta(int t, const GainGroup& group, int beta_exp) {
  if (t < 3) throw InputError("delta needs t >= 3");
  int ord = group_element_order(group, beta_exp);
  if (ord <= 2 * t * (t - 1)) {
    throw InputError("delta needs the order of beta (" + std::to_string(ord) +
                     ") to exceed 2t(t-1) = " +
                     std::to_string(2 * t * (t - 1)));
  }
  std::vector<std::string> vertices;
  for (int i = 1; i <= 2 * t; ++i) {
    vertices.push_back("v" + std::to_string(i));
  }
  std::vector<GainEdge> edges;
  const int b = group.reduce(beta_exp);
  edges.push_back({"a", 0, 0, b});
  for (int i = 2; i <= 2 * t - 1; ++i) {
    edges.push_back({"b" + std::to_string(i), i - 1, i - 1, b});
  }
  edges.push_back({"b", 2 * t - 1, 2 * t - 1, b});
  for (int i = 1; i <= 2 * t - 1; ++i) {
    edges.push_back({"e" + std::to_string(i), i - 1, i, 0});
    int fg = i <= t ? group.reduce(static_cast<long long>(t - 1) * b)
                    : group.reduce(static_cast<long long>(t) * b);
    edges.push_back({"f" + std::to_string(i), i - 1, i, fg});
  }
  edges.push_back({"x", 0, 2 * t - 1, 0});
  edges.push_back({"y", 0, 2 * t - 1,
                   group.reduce(static_cast<long long>(t - 1) * b)});
  edges.push_back({"z", 0, 2 * t - 1,
                   group.reduce(static_cast<long long>(t) * b)});
  edges.push_back({"g", 0, 2 * t - 1,
                   group.reduce(static_cast<long long>(t) * (t - 1) * b)});
  GainGraph g(group, std::move(vertices), std::move(edges));
  g.set_family(GainGraph::Family::Delta, t);
  return g;
}

GainGraph glue_hoop_loop(const GainGraph& gamma, const GainGraph& delta) {
  if (gamma.family() != GainGraph::Family::Gamma ||
      delta.family() != GainGraph::Family::Delta) {
    throw InputError("glue expects a gamma graph and a delta graph");
  }
  const GainGroup& gr = gamma.group();
  if (gr.kind != delta.group().kind || gr.order != delta.group().order ||
      gr.p != delta.group().p || gr.generator != delta.group().generator) {
    throw InputError("glue requires the same gain group on both sides");
  }
  static const char* kShared[] = {"a", "b", "x", "y", "z"};
  for (const char* id : kShared) {
    const GainEdge& eg = gamma.edge(gamma.edge_index(id));
    const GainEdge& ed = delta.edge(delta.edge_index(id));
    // both constructions orient shared edges from the first pole to the
    // second, so stored gains are directly comparable
    if (eg.gain != ed.gain) {
      throw InputError(std::string("gain mismatch on shared edge ") + id);
    }
  }
  int s = gamma.param();
  int t = delta.param();
  // vertices: u_1..u_{s+1}, then v_2..v_{2t-1}; u_1 = v_1 and
  // u_{s+1} = v_{2t}
  std::vector<std::string> vertices = gamma.vertices();
  for (int i = 2; i <= 2 * t - 1; ++i) {
    vertices.push_back("v" + std::to_string(i));
  }
  auto map_delta_vertex = [&](int dv) {
    if (dv == 0) return 0;                       // v_1 -> u_1
    if (dv == 2 * t - 1) return s;               // v_{2t} -> u_{s+1}
    return s + dv;                               // v_{i} -> slot s+1+(i-2)
  };
  std::vector<GainEdge> edges = gamma.edges();
  for (const GainEdge& e : delta.edges()) {
    bool shared = false;
    for (const char* id : kShared) {
      if (e.id == id) {
        shared = true;
        break;
      }
    }
    if (shared) continue;
    edges.push_back(
        {e.id, map_delta_vertex(e.u), map_delta_vertex(e.v), e.gain});
  }
  GainGraph h(gr, std::move(vertices), std::move(edges));
  h.set_family(GainGraph::Family::Glued, s);
  return h;
}

FFMatrix incidence_matrix(const GainGraph& g) {
  if (g.group().kind != GainGroup::Kind::FieldUnits) {
    throw InputError(
        "incidence matrix needs a field-units gain group (cyclic groups "
        "have no field embedding here)");
  }
  PrimeField f(g.group().p);
  FFMatrix d(g.group().p, g.vertex_count(), g.edge_count());
  d.row_labels = g.vertices();
  for (int j = 0; j < g.edge_count(); ++j) {
    const GainEdge& e = g.edge(j);
    d.col_labels.push_back(e.id);
    int value = f.pow(g.group().generator, e.gain);
    if (e.u == e.v) {
      if (g.group().reduce(e.gain) == 0) continue;  // balanced loop: zeroes
      d.at(e.u, j) = 1;
      continue;
    }
    int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    // sigma read from the lower-indexed endpoint
    int sigma = e.u == lo ? value : f.inv(value);
    d.at(lo, j) = 1;
    d.at(hi, j) = f.neg(sigma);
  }
  return d;
}

GainGraph restrict_edges(const GainGraph& g, Mask keep) {
  if (!is_subset(keep, full_mask(g.edge_count()))) {
    throw InputError("edge subset out of range");
  }
  std::vector<GainEdge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (has_bit(keep, i)) edges.push_back(g.edge(i));
  }
  return GainGraph(g.group(), g.vertices(), std::move(edges));
}

Matroid frame_matroid(std::shared_ptr<const GainGraph> g) {
  GroundSet ground = g->edge_ground();
  return Matroid(std::move(ground), std::make_shared<GainGraphDef>(g));
}

}  // namespace ms0
