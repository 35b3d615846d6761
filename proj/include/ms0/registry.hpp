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

#ifndef MS0_REGISTRY_HPP
#define MS0_REGISTRY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ms0/base.hpp"
#include "ms0/formula.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

inline constexpr int kMaxK = 6;

// Sing-row entries compare |Y_i| with one.
enum class SingMark : std::uint8_t { Less = 0, Equal = 1, Greater = 2 };

// The (k+2) x k truth matrix of a k-stacked matroid: rows Ind, Sing,
// X_1..X_k; columns X_1..X_k.
struct RegistryV1 {
  std::uint8_t k = 0;
  std::uint32_t ind = 0;   // bit i: Y_i independent
  std::uint32_t sing = 0;  // 2 bits per column, SingMark
  std::uint64_t sub = 0;   // bit i*k+j: Y_i subseteq Y_j

  SingMark sing_mark(int i) const {
    return static_cast<SingMark>((sing >> (2 * i)) & 3);
  }
  std::string encode_bytes() const;
  bool operator==(const RegistryV1&) const = default;
};

// Second components of the variant Ind-row pairs.
enum class EllTag : std::uint8_t {
  Ell = 0, A = 1, B = 2, X = 3, Y = 4, Z = 5, Empty = 6, Skew = 7
};

// Variant Ind entry: 0 encodes 'F'; otherwise 1 + first*8 + second, with
// first in {F=0, T=1} and second an EllTag. 17 values total.
using IndV2 = std::uint8_t;
inline IndV2 ind_v2_pair(bool first, EllTag second) {
  return static_cast<IndV2>(1 + (first ? 8 : 0) +
                            static_cast<std::uint8_t>(second));
}
inline bool ind_v2_is_f(IndV2 e) { return e == 0; }
inline bool ind_v2_first(IndV2 e) { return e >= 9; }
inline EllTag ind_v2_second(IndV2 e) {
  return static_cast<EllTag>((e - 1) & 7);
}
std::string ind_v2_to_string(IndV2 e);

struct RegistryV2 {
  std::uint8_t k = 0;
  std::array<IndV2, kMaxK> ind{};
  std::uint32_t sing = 0;
  std::uint64_t sub = 0;

  SingMark sing_mark(int i) const {
    return static_cast<SingMark>((sing >> (2 * i)) & 3);
  }
  std::string encode_bytes() const;
  bool operator==(const RegistryV2&) const = default;
};

// All-T/F matrix the quantifier-free formulas read from.
struct BMatrix {
  std::uint8_t k = 0;
  std::uint32_t ind = 0;
  std::uint32_t sing = 0;
  std::uint64_t sub = 0;
};

// Entry-by-entry sums. T/F rows use the all-T table; the Sing row maps
// exactly {<,=} and {=,<} to T.
BMatrix sum_v1(const RegistryV1& a, const RegistryV1& b);
BMatrix sum_v2(const RegistryV2& a, const RegistryV2& b);
IndV2 sum_v2_ind(IndV2 a, IndV2 b);
bool sum_sing(SingMark a, SingMark b);

bool eval_qf_on_b(const Qf& qf, const BMatrix& b);

RegistryV1 registry_v1(const Matroid& m, const std::vector<Mask>& stack);

// Per-subset data for the variant registries over a hoop or loop matroid:
// rank table, line-closure masks, and the encoded Ind entries.
class V2Context {
 public:
  // alt_skew selects the (Y - ell) union ell reading of the empty/skew rank
  // test; as sets the two expressions coincide, so the flag is observational.
  V2Context(std::shared_ptr<const GainGraph> graph, bool alt_skew = false);

  const GainGraph& graph() const { return *graph_; }
  const Matroid& matroid() const { return matroid_; }
  int size() const { return n_; }
  Mask ell_mask() const { return ell_; }
  IndV2 ind_entry(Mask y) const { return entry_[y]; }
  int rank(Mask y) const { return rank_[y]; }
  std::uint8_t clell(Mask y) const { return clell_[y]; }
  bool is_hoop() const;
  bool is_loop() const;

 private:
  std::shared_ptr<const GainGraph> graph_;
  Matroid matroid_;
  int n_ = 0;
  Mask ell_ = 0;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> clell_;  // bits in (a, b, x, y, z) order
  std::vector<IndV2> entry_;
};

RegistryV2 registry_v2(const V2Context& ctx, const std::vector<Mask>& stack);

// ---- Hash-consed depth-i trees --------------------------------------------

using TreeId = std::int32_t;

// Depth-0 trees are registries; a depth-(i+1) tree is a non-empty canonical
// set of depth-i trees. Equal trees share one id, so tree identity (the
// partition key) is id equality.
class TreeArena {
 public:
  TreeId leaf_v1(const RegistryV1& r);
  TreeId leaf_v2(const RegistryV2& r);
  TreeId node(std::vector<TreeId> children, int child_depth);

  int depth(TreeId t) const { return nodes_[t].depth; }
  bool is_leaf(TreeId t) const { return nodes_[t].depth == 0; }
  const std::vector<TreeId>& children(TreeId t) const;
  bool leaf_is_v1(TreeId t) const { return nodes_[t].reg_v2 < 0; }
  const RegistryV1& reg_v1(TreeId t) const;
  const RegistryV2& reg_v2(TreeId t) const;
  std::size_t size() const { return nodes_.size(); }

  // Canonical nested arrays of registry grids, children sorted by content.
  std::string dump_json(TreeId t) const;

 private:
  struct Node {
    int depth = 0;
    std::int32_t reg_v1 = -1;
    std::int32_t reg_v2 = -1;
    std::vector<TreeId> children;
  };
  std::vector<Node> nodes_;
  std::vector<RegistryV1> regs1_;
  std::vector<RegistryV2> regs2_;
  std::unordered_map<std::string, TreeId> leaf1_ids_, leaf2_ids_;
  std::unordered_map<std::string, TreeId> node_ids_;
};

// Depth-(k-l) tree of an l-stacked matroid; children enumerate all subsets
// of the ground set with on-the-fly deduplication. 2^|E| work per level.
TreeId tree_of_v1(TreeArena& arena, const Matroid& m,
                  const std::vector<Mask>& stack, int k, Budget budget = {});
TreeId tree_of_v2(TreeArena& arena, const V2Context& ctx,
                  const std::vector<Mask>& stack, int k, Budget budget = {});

enum class Variant { V1 = 1, V2 = 2 };

// The compatibility recursion relative to a prenex formula, memoized on
// (tree id, tree id, quantifier position).
class CompatibilityChecker {
 public:
  CompatibilityChecker(TreeArena& arena, PrenexFormula psi)
      : arena_(arena), psi_(std::move(psi)) {}
  bool compatible(TreeId a, TreeId b);

 private:
  bool rec(TreeId a, TreeId b, int level);
  TreeArena& arena_;
  PrenexFormula psi_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

bool compatible(TreeArena& arena, TreeId a, TreeId b,
                const PrenexFormula& psi);

// ---- Partitioning and the counting bounds ---------------------------------

struct PartitionResult {
  std::vector<int> block_of;
  std::vector<TreeId> tree_of_input;
  int block_count = 0;
};

PartitionResult partition_v1(TreeArena& arena,
                             const std::vector<const Matroid*>& family, int k,
                             Budget budget = {});
PartitionResult partition_v2(TreeArena& arena,
                             const std::vector<const V2Context*>& family,
                             int k, Budget budget = {});

// Exact big value when small enough, otherwise a tower 2^2^...^base.
struct TowerValue {
  int height = 0;  // number of 2^ applications over base
  unsigned long long base = 0;
  bool exact = false;
  std::string decimal;  // set when exact
  std::string str() const;
};

struct BoundsResult {
  std::vector<TowerValue> g1;  // g1(k, 0..k)
  TowerValue f1;
  std::vector<TowerValue> g2;
  TowerValue f2;
};

// g1(k,0) = 3^k 2^{k(k+1)}, g1(k,i+1) = 2^{g1(k,i)}, f1(k) = g1(k,k);
// g2(k,0) = 2^{k^2} 3^k 17^k and the same recursion.
BoundsResult bounds(int k, int digit_budget = 4096);

}  // namespace ms0

#endif  // MS0_REGISTRY_HPP
