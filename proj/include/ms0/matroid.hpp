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

#ifndef MS0_MATROID_HPP
#define MS0_MATROID_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/field.hpp"
#include "ms0/ground_set.hpp"

namespace ms0 {

class GainGraph;
class AmalgamOracle;

// Backing definition of a matroid: the independence oracle plus a kind tag
// used for serialization and validation.
class IndependenceDef {
 public:
  virtual ~IndependenceDef() = default;
  virtual bool independent(Mask x) const = 0;
  virtual std::string kind() const = 0;
};

// A finite matroid. Values are immutable after construction; operations are
// pure. Caches are write-once (idempotent) and shared between copies.
class Matroid {
 public:
  Matroid() = default;
  Matroid(GroundSet ground, std::shared_ptr<const IndependenceDef> def);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const IndependenceDef& def() const { return *def_; }
  std::shared_ptr<const IndependenceDef> def_ptr() const { return def_; }

  bool is_independent(Mask x) const;
  bool is_independent(const std::vector<std::string>& labels) const {
    return is_independent(ground_.mask_of(labels));
  }

  // Size of a maximal independent subset of x, greedy via the oracle.
  int rank(Mask x) const;
  int rank() const;  // cached whole-ground rank
  // A fixed maximal independent subset of x (greedy in element order).
  Mask basis_of(Mask x) const;

  // {e : rank(x + e) == rank(x)}; idempotent, extensive, monotone.
  Mask closure(Mask x) const;

  // All minimal dependent sets, by increasing cardinality, each once.
  // Exponential in |E| in general; fine for structured families up to ~20.
  const std::vector<Mask>& circuits(Budget budget = {}) const;

  bool is_simple() const;  // no dependent 1- or 2-subsets

 private:
  void check_subset(Mask x) const;

  GroundSet ground_;
  std::shared_ptr<const IndependenceDef> def_;

  struct Cache {
    std::vector<std::int8_t> table;  // 1 = independent, -1 = dependent
    std::optional<int> rank;
    std::optional<std::vector<Mask>> circuits;
  };
  std::shared_ptr<Cache> cache_;
};

// --- Backing definitions (the five serializable kinds plus composites) ----

struct IndependentSetsDef : IndependenceDef {
  std::vector<bool> member;  // indexed by mask; size 2^n
  explicit IndependentSetsDef(int n, const std::vector<Mask>& sets);
  bool independent(Mask x) const override { return member[x]; }
  std::string kind() const override { return "independent_sets"; }
};

struct CircuitsDef : IndependenceDef {
  std::vector<Mask> circuits;
  explicit CircuitsDef(std::vector<Mask> c);
  bool independent(Mask x) const override;
  std::string kind() const override { return "circuits"; }
};

struct MatrixDef : IndependenceDef {
  FFMatrix matrix;  // columns indexed by ground elements
  explicit MatrixDef(FFMatrix m) : matrix(std::move(m)) {}
  bool independent(Mask x) const override;
  std::string kind() const override { return "matrix"; }
};

struct UniformDef : IndependenceDef {
  int r;
  explicit UniformDef(int r_) : r(r_) {}
  bool independent(Mask x) const override { return popcount(x) <= r; }
  std::string kind() const override { return "uniform"; }
};

struct GainGraphDef : IndependenceDef {
  std::shared_ptr<const GainGraph> graph;
  explicit GainGraphDef(std::shared_ptr<const GainGraph> g);
  bool independent(Mask x) const override;
  std::string kind() const override { return "gain_graph"; }
};

struct AmalgamDef : IndependenceDef {
  std::shared_ptr<const AmalgamOracle> oracle;
  explicit AmalgamDef(std::shared_ptr<const AmalgamOracle> o);
  bool independent(Mask x) const override;
  std::string kind() const override { return "amalgam"; }
};

struct DirectSumDef : IndependenceDef {
  std::shared_ptr<const Matroid> left, right;
  int left_size;
  DirectSumDef(std::shared_ptr<const Matroid> l,
               std::shared_ptr<const Matroid> r)
      : left(std::move(l)), right(std::move(r)), left_size(left->size()) {}
  bool independent(Mask x) const override {
    return left->is_independent(x & full_mask(left_size)) &&
           right->is_independent(x >> left_size);
  }
  std::string kind() const override { return "direct_sum"; }
};

// Minor: contract `contracted_basis` (a basis of the contracted set in the
// parent), restrict to `kept` positions.
struct MinorDef : IndependenceDef {
  std::shared_ptr<const Matroid> parent;
  std::vector<int> parent_pos;  // minor position -> parent position
  Mask contracted_basis;
  int basis_rank;
  MinorDef(std::shared_ptr<const Matroid> m, std::vector<int> pos, Mask b);
  bool independent(Mask x) const override;
  std::string kind() const override { return "minor"; }
};

// --- Constructors and operations ------------------------------------------

Matroid make_matroid_from_sets(GroundSet g, const std::vector<Mask>& indep,
                               bool validate_axioms = true);
Matroid make_matroid_from_circuits(GroundSet g, std::vector<Mask> circuits,
                                   bool validate_axioms = true);

Matroid gen_uniform(int r, int n);
// PG(2,q) as the column matroid of one representative per projective point
// of GF(q)^3. q must be prime.
Matroid gen_pg2(int q);

// Disjoint ground-set labels required; rank adds, independence is trace-wise.
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Relabel helper for building direct sums: appends `suffix` to every label.
Matroid relabel_with_suffix(const Matroid& m, const std::string& suffix);

Matroid delete_elements(const Matroid& m, Mask x);
Matroid contract_elements(const Matroid& m, Mask x);

// Brute-force minor search following the characterization by distinct
// elements x_1..x_n plus an independent, disjoint contraction set.
// Feasible only for |E(N)| <= ~6.
bool has_minor(const Matroid& m, const Matroid& n, Budget budget = {});

// Oracle verdicts agree on every subset (labels must match). |E| <= ~20.
bool matroid_equal(const Matroid& a, const Matroid& b);

// Direct axiom check for a set system: non-empty, downward closed,
// augmentation. This is the executable I1-I3 oracle.
bool is_matroid(int n, const std::vector<Mask>& family);
bool is_matroid(const std::vector<bool>& member_table, int n);

}  // namespace ms0

#endif  // MS0_MATROID_HPP
