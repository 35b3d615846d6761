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

#include "ms0/matroid.hpp"

#include <algorithm>
#include <array>

#include "ms0/amalgam.hpp"
#include "ms0/gain_graph.hpp"

namespace ms0 {

Matroid::Matroid(GroundSet ground, std::shared_ptr<const IndependenceDef> def)
    : ground_(std::move(ground)),
      def_(std::move(def)),
      cache_(std::make_shared<Cache>()) {
  if (!def_) throw InputError("matroid without a backing definition");
  if (!def_->independent(0)) {
    throw InputError("backing declares the empty set dependent");
  }
}

void Matroid::check_subset(Mask x) const {
  if (!is_subset(x, ground_.full())) {
    throw InputError("subset outside the ground set");
  }
}

bool Matroid::is_independent(Mask x) const {
  check_subset(x);
  int n = size();
  if (n <= 22) {
    if (cache_->table.empty()) cache_->table.assign(Mask{1} << n, 0);
    std::int8_t& slot = cache_->table[x];
    if (slot == 0) slot = def_->independent(x) ? 1 : -1;
    return slot > 0;
  }
  return def_->independent(x);
}

Mask Matroid::basis_of(Mask x) const {
  check_subset(x);
  Mask basis = 0;
  Mask rest = x;
  while (rest) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    if (is_independent(basis | bit(e))) basis |= bit(e);
  }
  return basis;
}

int Matroid::rank(Mask x) const { return popcount(basis_of(x)); }

int Matroid::rank() const {
  if (!cache_->rank) cache_->rank = rank(ground_.full());
  return *cache_->rank;
}

Mask Matroid::closure(Mask x) const {
  check_subset(x);
  Mask basis = basis_of(x);
  Mask cl = x;
  for (int e = 0; e < size(); ++e) {
    if (has_bit(cl, e)) continue;
    // e lies in the span of x iff the greedy basis cannot be extended by it
    if (!is_independent(basis | bit(e))) cl |= bit(e);
  }
  return cl;
}

const std::vector<Mask>& Matroid::circuits(Budget budget) const {
  if (cache_->circuits) return *cache_->circuits;
  int n = size();
  budget.require(n == 0 ? 1 : (1ull << n));
  std::vector<Mask> found;
  for (int card = 1; card <= n; ++card) {
    Mask x = full_mask(card);
    while (x && is_subset(x, ground_.full())) {
      bool pruned = false;
      for (Mask c : found) {
        if (is_subset(c, x)) {
          pruned = true;
          break;
        }
      }
      // no smaller circuit inside, so dependence means minimal dependence
      if (!pruned && !is_independent(x)) found.push_back(x);
      x = next_same_popcount(x);
    }
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  cache_->circuits = std::move(found);
  return *cache_->circuits;
}

bool Matroid::is_simple() const {
  for (int i = 0; i < size(); ++i) {
    if (!is_independent(bit(i))) return false;
    for (int j = i + 1; j < size(); ++j) {
      if (!is_independent(bit(i) | bit(j))) return false;
    }
  }
  return true;
}

// --- Backings ---------------------------------------------------------------

IndependentSetsDef::IndependentSetsDef(int n, const std::vector<Mask>& sets) {
  if (n > 22) throw InputError("independent_sets backing limited to 22");
  member.assign(Mask{1} << n, false);
  for (Mask s : sets) {
    if (!is_subset(s, full_mask(n))) {
      throw InputError("independent set outside the ground set");
    }
    member[s] = true;
  }
}

CircuitsDef::CircuitsDef(std::vector<Mask> c) : circuits(std::move(c)) {
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i] == 0) throw InputError("empty set listed as a circuit");
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && is_subset(circuits[i], circuits[j])) {
        throw InputError("circuit family is not an antichain");
      }
    }
  }
}

bool CircuitsDef::independent(Mask x) const {
  for (Mask c : circuits) {
    if (is_subset(c, x)) return false;
  }
  return true;
}

GainGraphDef::GainGraphDef(std::shared_ptr<const GainGraph> g)
    : graph(std::move(g)) {
  if (!graph) throw InputError("null gain graph");
}

bool GainGraphDef::independent(Mask x) const {
  return frame_is_independent(*graph, x);
}

AmalgamDef::AmalgamDef(std::shared_ptr<const AmalgamOracle> o)
    : oracle(std::move(o)) {
  if (!oracle) throw InputError("null amalgam oracle");
}

bool AmalgamDef::independent(Mask x) const { return !oracle->dependent(x); }

MinorDef::MinorDef(std::shared_ptr<const Matroid> m, std::vector<int> pos,
                   Mask b)
    : parent(std::move(m)), parent_pos(std::move(pos)), contracted_basis(b) {
  basis_rank = popcount(b);
}

bool MinorDef::independent(Mask x) const {
  Mask in_parent = contracted_basis;
  Mask rest = x;
  while (rest) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    in_parent |= bit(parent_pos[e]);
  }
  return parent->rank(in_parent) - basis_rank == popcount(x);
}

// --- Constructors -----------------------------------------------------------

Matroid make_matroid_from_sets(GroundSet g, const std::vector<Mask>& indep,
                               bool validate_axioms) {
  int n = g.size();
  auto def = std::make_shared<IndependentSetsDef>(n, indep);
  if (validate_axioms && n <= 12) {
    if (!is_matroid(def->member, n)) {
      throw InputError("family is not the independent sets of a matroid");
    }
  }
  return Matroid(std::move(g), std::move(def));
}

Matroid make_matroid_from_circuits(GroundSet g, std::vector<Mask> circuits,
                                   bool validate_axioms) {
  int n = g.size();
  auto def = std::make_shared<CircuitsDef>(std::move(circuits));
  if (validate_axioms && n <= 12) {
    std::vector<bool> table(Mask{1} << n);
    for (Mask x = 0; x < (Mask{1} << n); ++x) table[x] = def->independent(x);
    if (!is_matroid(table, n)) {
      throw InputError("family is not the circuits of a matroid");
    }
  }
  return Matroid(std::move(g), std::move(def));
}

Matroid gen_uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) throw InputError("need 0 <= r <= n");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i + 1);
  return Matroid(GroundSet(labels), std::make_shared<UniformDef>(r));
}

Matroid gen_pg2(int q) {
  if (!is_prime(q)) {
    throw InputError("q must be prime (extension fields unsupported): " +
                     std::to_string(q));
  }
  // One representative per projective point: first non-zero coordinate 1.
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        int first = a != 0 ? a : (b != 0 ? b : c);
        if (first != 1) continue;
        points.push_back({a, b, c});
      }
    }
  }
  FFMatrix m(q, 3, static_cast<int>(points.size()));
  m.row_labels = {"r0", "r1", "r2"};
  for (int j = 0; j < m.cols; ++j) {
    for (int i = 0; i < 3; ++i) m.at(i, j) = points[j][i];
    m.col_labels.push_back(std::to_string(points[j][0]) + ":" +
                           std::to_string(points[j][1]) + ":" +
                           std::to_string(points[j][2]));
  }
  return column_matroid(m);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.ground().labels();
  for (const auto& l : b.ground().labels()) {
    if (a.ground().contains(l)) {
      throw InputError("direct sum label collision: " + l);
    }
    labels.push_back(l);
  }
  auto def = std::make_shared<DirectSumDef>(std::make_shared<Matroid>(a),
                                            std::make_shared<Matroid>(b));
  return Matroid(GroundSet(std::move(labels)), std::move(def));
}

Matroid relabel_with_suffix(const Matroid& m, const std::string& suffix) {
  std::vector<std::string> labels;
  labels.reserve(m.size());
  for (const auto& l : m.ground().labels()) labels.push_back(l + suffix);
  return Matroid(GroundSet(std::move(labels)), m.def_ptr());
}

Matroid delete_elements(const Matroid& m, Mask x) {
  if (!is_subset(x, m.ground().full())) {
    throw InputError("deleted set outside the ground set");
  }
  std::vector<std::string> labels;
  std::vector<int> pos;
  for (int i = 0; i < m.size(); ++i) {
    if (!has_bit(x, i)) {
      labels.push_back(m.ground().label(i));
      pos.push_back(i);
    }
  }
  auto def = std::make_shared<MinorDef>(std::make_shared<Matroid>(m),
                                        std::move(pos), Mask{0});
  return Matroid(GroundSet(std::move(labels)), std::move(def));
}

Matroid contract_elements(const Matroid& m, Mask x) {
  if (!is_subset(x, m.ground().full())) {
    throw InputError("contracted set outside the ground set");
  }
  Mask basis = m.basis_of(x);
  std::vector<std::string> labels;
  std::vector<int> pos;
  for (int i = 0; i < m.size(); ++i) {
    if (!has_bit(x, i)) {
      labels.push_back(m.ground().label(i));
      pos.push_back(i);
    }
  }
  auto def = std::make_shared<MinorDef>(std::make_shared<Matroid>(m),
                                        std::move(pos), basis);
  return Matroid(GroundSet(std::move(labels)), std::move(def));
}

bool has_minor(const Matroid& m, const Matroid& n, Budget budget) {
  int nn = n.size();
  int mm = m.size();
  if (nn > mm) return false;
  if (nn > 8) throw InputError("minor search limited to |E(N)| <= 8");

  // Independence pattern of N over position subsets.
  std::vector<bool> n_indep(Mask{1} << nn);
  for (Mask s = 0; s < (Mask{1} << nn); ++s) n_indep[s] = n.is_independent(s);

  // Estimate: ordered tuples times contraction candidates.
  unsigned long long tuples = 1;
  for (int i = 0; i < nn; ++i) tuples *= static_cast<unsigned>(mm - i);
  budget.require(sat_mul(tuples, mm - nn >= 63 ? ~0ull : (1ull << (mm - nn))));

  std::vector<int> chosen(nn, -1);
  std::vector<bool> used(mm, false);

  // Distinct x_1..x_n plus an independent contraction set disjoint from
  // them; the pattern of independent unions must match N exactly.
  auto try_tuple = [&](auto&& self, int depth) -> bool {
    if (depth == nn) {
      Mask tuple_mask = 0;
      for (int v : chosen) tuple_mask |= bit(v);
      Mask rest = m.ground().full() & ~tuple_mask;
      // enumerate subsets of the complement as X_{n+1}
      Mask sub = 0;
      while (true) {
        if (m.is_independent(sub)) {
          bool ok = true;
          for (Mask s = 0; s < (Mask{1} << nn) && ok; ++s) {
            Mask u = sub;
            for (int i = 0; i < nn; ++i) {
              if (has_bit(s, i)) u |= bit(chosen[i]);
            }
            if (m.is_independent(u) != n_indep[s]) ok = false;
          }
          if (ok) return true;
        }
        if (sub == rest) break;
        sub = (sub - rest) & rest;  // next subset of rest
      }
      return false;
    }
    for (int v = 0; v < mm; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen[depth] = v;
      if (self(self, depth + 1)) {
        used[v] = false;
        return true;
      }
      used[v] = false;
    }
    return false;
  };
  return try_tuple(try_tuple, 0);
}

bool matroid_equal(const Matroid& a, const Matroid& b) {
  if (!(a.ground() == b.ground())) return false;
  if (a.size() > 20) throw InputError("matroid_equal limited to 20 elements");
  for (Mask x = 0; x <= a.ground().full(); ++x) {
    if (a.is_independent(x) != b.is_independent(x)) return false;
  }
  return true;
}

bool is_matroid(const std::vector<bool>& member, int n) {
  Mask total = Mask{1} << n;
  if (member.size() != total) throw InputError("family table size mismatch");
  bool any = false;
  for (Mask x = 0; x < total; ++x) {
    if (member[x]) {
      any = true;
      break;
    }
  }
  if (!any) return false;
  // downward closed
  for (Mask x = 0; x < total; ++x) {
    if (!member[x]) continue;
    Mask rest = x;
    while (rest) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (!member[x & ~bit(e)]) return false;
    }
  }
  if (!member[0]) return false;
  // augmentation
  std::vector<Mask> sets;
  for (Mask x = 0; x < total; ++x) {
    if (member[x]) sets.push_back(x);
  }
  for (Mask i : sets) {
    for (Mask j : sets) {
      if (popcount(i) >= popcount(j)) continue;
      Mask cand = j & ~i;
      bool ok = false;
      while (cand) {
        int e = lowest_bit(cand);
        cand &= cand - 1;
        if (member[i | bit(e)]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool is_matroid(int n, const std::vector<Mask>& family) {
  if (n > 22) throw InputError("is_matroid limited to 22 elements");
  std::vector<bool> member(Mask{1} << n, false);
  for (Mask s : family) {
    if (!is_subset(s, full_mask(n))) {
      throw InputError("family member outside the ground set");
    }
    member[s] = true;
  }
  return is_matroid(member, n);
}

}  // namespace ms0
