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

#include "ms0/registry.hpp"

#include <algorithm>
#include <sstream>

namespace ms0 {

std::string RegistryV1::encode_bytes() const {
  std::string s;
  s.push_back(static_cast<char>(k));
  s.append(reinterpret_cast<const char*>(&ind), sizeof(ind));
  s.append(reinterpret_cast<const char*>(&sing), sizeof(sing));
  s.append(reinterpret_cast<const char*>(&sub), sizeof(sub));
  return s;
}

std::string RegistryV2::encode_bytes() const {
  std::string s;
  s.push_back(static_cast<char>(k));
  s.append(reinterpret_cast<const char*>(ind.data()), ind.size());
  s.append(reinterpret_cast<const char*>(&sing), sizeof(sing));
  s.append(reinterpret_cast<const char*>(&sub), sizeof(sub));
  return s;
}

std::string ind_v2_to_string(IndV2 e) {
  if (ind_v2_is_f(e)) return "F";
  static const char* kTag[] = {"ell", "a", "b", "x", "y", "z", "empty",
                               "skew"};
  std::string out = ind_v2_first(e) ? "T," : "F,";
  out += kTag[static_cast<int>(ind_v2_second(e))];
  return out;
}

bool sum_sing(SingMark a, SingMark b) {
  return (a == SingMark::Less && b == SingMark::Equal) ||
         (a == SingMark::Equal && b == SingMark::Less);
}

BMatrix sum_v1(const RegistryV1& a, const RegistryV1& b) {
  if (a.k != b.k) throw InputError("registry arity mismatch");
  BMatrix m;
  m.k = a.k;
  m.ind = a.ind & b.ind;
  m.sub = a.sub & b.sub;
  for (int i = 0; i < a.k; ++i) {
    if (sum_sing(a.sing_mark(i), b.sing_mark(i))) m.sing |= 1u << i;
  }
  return m;
}

IndV2 sum_v2_ind(IndV2 a, IndV2 b) {
  // The result is plain T/F; T is encoded as a (T, skew) dummy pair.
  const IndV2 kT = ind_v2_pair(true, EllTag::Skew);
  if (ind_v2_is_f(a) || ind_v2_is_f(b)) return 0;
  bool fa = ind_v2_first(a), fb = ind_v2_first(b);
  EllTag sa = ind_v2_second(a), sb = ind_v2_second(b);
  if (fa && sb != EllTag::Skew) return 0;
  if (fb && sa != EllTag::Skew) return 0;
  if (!fa && !fb && sa == sb && sa != EllTag::Skew && sa != EllTag::Empty &&
      sa != EllTag::Ell) {
    return 0;
  }
  return kT;
}

BMatrix sum_v2(const RegistryV2& a, const RegistryV2& b) {
  if (a.k != b.k) throw InputError("registry arity mismatch");
  BMatrix m;
  m.k = a.k;
  m.sub = a.sub & b.sub;
  for (int i = 0; i < a.k; ++i) {
    if (!ind_v2_is_f(sum_v2_ind(a.ind[i], b.ind[i]))) m.ind |= 1u << i;
    if (sum_sing(a.sing_mark(i), b.sing_mark(i))) m.sing |= 1u << i;
  }
  return m;
}

bool eval_qf_on_b(const Qf& qf, const BMatrix& b) {
  std::vector<bool> stack;
  stack.reserve(qf.code.size());
  for (const Qf::Instr& in : qf.code) {
    switch (in.op) {
      case Qf::Op::Sub:
        stack.push_back((b.sub >> (in.i * b.k + in.j)) & 1);
        break;
      case Qf::Op::Sing:
        stack.push_back((b.sing >> in.i) & 1);
        break;
      case Qf::Op::Ind:
        stack.push_back((b.ind >> in.i) & 1);
        break;
      case Qf::Op::Not:
        stack.back() = !stack.back();
        break;
      case Qf::Op::And: {
        bool x = stack.back();
        stack.pop_back();
        stack.back() = stack.back() && x;
        break;
      }
    }
  }
  if (stack.size() != 1) throw InputError("malformed compiled formula");
  return stack.back();
}

RegistryV1 registry_v1(const Matroid& m, const std::vector<Mask>& stack) {
  int k = static_cast<int>(stack.size());
  if (k < 1 || k > kMaxK) throw InputError("stack length out of range");
  RegistryV1 r;
  r.k = static_cast<std::uint8_t>(k);
  for (int i = 0; i < k; ++i) {
    if (m.is_independent(stack[i])) r.ind |= 1u << i;
    int c = popcount(stack[i]);
    SingMark mark = c < 1 ? SingMark::Less
                          : (c == 1 ? SingMark::Equal : SingMark::Greater);
    r.sing |= std::uint32_t(mark) << (2 * i);
    for (int j = 0; j < k; ++j) {
      if (is_subset(stack[i], stack[j])) {
        r.sub |= std::uint64_t{1} << (i * k + j);
      }
    }
  }
  return r;
}

// --- Variant registries -----------------------------------------------------

V2Context::V2Context(std::shared_ptr<const GainGraph> graph, bool alt_skew)
    : graph_(std::move(graph)) {
  if (graph_->family() != GainGraph::Family::Gamma &&
      graph_->family() != GainGraph::Family::Delta) {
    throw InputError("variant registries need a hoop or loop matroid");
  }
  matroid_ = frame_matroid(graph_);
  n_ = matroid_.size();
  if (n_ > 24) throw InputError("variant context limited to 24 edges");
  static const char* kEll[] = {"a", "b", "x", "y", "z"};
  for (int j = 0; j < 5; ++j) {
    if (!matroid_.ground().contains(kEll[j])) {
      throw InputError(std::string("matroid lacks line label ") + kEll[j]);
    }
    ell_ |= bit(matroid_.ground().index(kEll[j]));
  }
  Mask total = Mask{1} << n_;
  rank_.resize(total);
  for (Mask x = 0; x < total; ++x) {
    rank_[x] = static_cast<std::uint8_t>(frame_rank(*graph_, x));
  }
  clell_.resize(total);
  for (Mask x = 0; x < total; ++x) {
    std::uint8_t bits = 0;
    for (int j = 0; j < 5; ++j) {
      Mask e = bit(matroid_.ground().index(kEll[j]));
      if ((x & e) || rank_[x | e] == rank_[x]) bits |= 1u << j;
    }
    clell_[x] = bits;
  }
  entry_.resize(total);
  for (Mask y = 0; y < total; ++y) {
    if (rank_[y] != popcount(y)) {
      entry_[y] = 0;  // dependent
      continue;
    }
    bool first = clell_[y] == 0x1f;
    Mask rem = y & ~ell_;
    std::uint8_t cl = clell_[rem];
    EllTag second;
    if (cl == 0x1f) {
      second = EllTag::Ell;
    } else if (cl != 0) {
      // the closure meets the line in a flat: a single point here
      if (popcount(static_cast<Mask>(cl)) != 1) {
        throw InputError("line closure is not a flat of the line");
      }
      second = static_cast<EllTag>(1 + lowest_bit(static_cast<Mask>(cl)));
    } else {
      // as sets Y u ell == (Y - ell) u ell, so the flag cannot change the
      // verdict; both readings are computed for the record
      int lhs = alt_skew ? rank_[rem | ell_] : rank_[y | ell_];
      second = lhs < rank_[rem] + 2 ? EllTag::Empty : EllTag::Skew;
    }
    entry_[y] = ind_v2_pair(first, second);
  }
}

bool V2Context::is_hoop() const {
  return graph_->family() == GainGraph::Family::Gamma;
}

bool V2Context::is_loop() const {
  return graph_->family() == GainGraph::Family::Delta;
}

RegistryV2 registry_v2(const V2Context& ctx, const std::vector<Mask>& stack) {
  int k = static_cast<int>(stack.size());
  if (k < 1 || k > kMaxK) throw InputError("stack length out of range");
  RegistryV2 r;
  r.k = static_cast<std::uint8_t>(k);
  for (int i = 0; i < k; ++i) {
    if (!is_subset(stack[i], full_mask(ctx.size()))) {
      throw InputError("stack subset outside the ground set");
    }
    r.ind[i] = ctx.ind_entry(stack[i]);
    int c = popcount(stack[i]);
    SingMark mark = c < 1 ? SingMark::Less
                          : (c == 1 ? SingMark::Equal : SingMark::Greater);
    r.sing |= std::uint32_t(mark) << (2 * i);
    for (int j = 0; j < k; ++j) {
      if (is_subset(stack[i], stack[j])) {
        r.sub |= std::uint64_t{1} << (i * k + j);
      }
    }
  }
  return r;
}

// --- Trees ------------------------------------------------------------------

TreeId TreeArena::leaf_v1(const RegistryV1& r) {
  std::string key = r.encode_bytes();
  auto it = leaf1_ids_.find(key);
  if (it != leaf1_ids_.end()) return it->second;
  Node n;
  n.depth = 0;
  n.reg_v1 = static_cast<std::int32_t>(regs1_.size());
  regs1_.push_back(r);
  nodes_.push_back(std::move(n));
  TreeId id = static_cast<TreeId>(nodes_.size() - 1);
  leaf1_ids_.emplace(std::move(key), id);
  return id;
}

TreeId TreeArena::leaf_v2(const RegistryV2& r) {
  std::string key = r.encode_bytes();
  auto it = leaf2_ids_.find(key);
  if (it != leaf2_ids_.end()) return it->second;
  Node n;
  n.depth = 0;
  n.reg_v2 = static_cast<std::int32_t>(regs2_.size());
  regs2_.push_back(r);
  nodes_.push_back(std::move(n));
  TreeId id = static_cast<TreeId>(nodes_.size() - 1);
  leaf2_ids_.emplace(std::move(key), id);
  return id;
}

TreeId TreeArena::node(std::vector<TreeId> children, int child_depth) {
  if (children.empty()) throw InputError("trees are non-empty sets");
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()),
                 children.end());
  for (TreeId c : children) {
    if (depth(c) != child_depth) throw InputError("mixed child depths");
  }
  std::string key;
  key.reserve(children.size() * 4 + 4);
  key.append(reinterpret_cast<const char*>(&child_depth), sizeof(int));
  for (TreeId c : children) {
    key.append(reinterpret_cast<const char*>(&c), sizeof(TreeId));
  }
  auto it = node_ids_.find(key);
  if (it != node_ids_.end()) return it->second;
  Node n;
  n.depth = child_depth + 1;
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  TreeId id = static_cast<TreeId>(nodes_.size() - 1);
  node_ids_[key] = id;
  return id;
}

const std::vector<TreeId>& TreeArena::children(TreeId t) const {
  if (nodes_[t].depth == 0) throw InputError("registry nodes have no children");
  return nodes_[t].children;
}

const RegistryV1& TreeArena::reg_v1(TreeId t) const {
  if (nodes_[t].reg_v1 < 0) throw InputError("not a variant-1 registry");
  return regs1_[nodes_[t].reg_v1];
}

const RegistryV2& TreeArena::reg_v2(TreeId t) const {
  if (nodes_[t].reg_v2 < 0) throw InputError("not a variant-2 registry");
  return regs2_[nodes_[t].reg_v2];
}

namespace {

const char* sing_str(SingMark m) {
  switch (m) {
    case SingMark::Less:
      return "<";
    case SingMark::Equal:
      return "=";
    default:
      return ">";
  }
}

std::string dump_registry_v1(const RegistryV1& r) {
  std::ostringstream os;
  os << "[[";
  for (int i = 0; i < r.k; ++i) {
    os << (i ? "," : "") << '"' << (((r.ind >> i) & 1) ? "T" : "F") << '"';
  }
  os << "],[";
  for (int i = 0; i < r.k; ++i) {
    os << (i ? "," : "") << '"' << sing_str(r.sing_mark(i)) << '"';
  }
  os << "]";
  for (int i = 0; i < r.k; ++i) {
    os << ",[";
    for (int j = 0; j < r.k; ++j) {
      os << (j ? "," : "") << '"'
         << (((r.sub >> (i * r.k + j)) & 1) ? "T" : "F") << '"';
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string dump_registry_v2(const RegistryV2& r) {
  std::ostringstream os;
  os << "[[";
  for (int i = 0; i < r.k; ++i) {
    os << (i ? "," : "") << '"' << ind_v2_to_string(r.ind[i]) << '"';
  }
  os << "],[";
  for (int i = 0; i < r.k; ++i) {
    os << (i ? "," : "") << '"' << sing_str(r.sing_mark(i)) << '"';
  }
  os << "]";
  for (int i = 0; i < r.k; ++i) {
    os << ",[";
    for (int j = 0; j < r.k; ++j) {
      os << (j ? "," : "") << '"'
         << (((r.sub >> (i * r.k + j)) & 1) ? "T" : "F") << '"';
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string TreeArena::dump_json(TreeId t) const {
  const Node& n = nodes_[t];
  if (n.depth == 0) {
    return n.reg_v1 >= 0 ? dump_registry_v1(regs1_[n.reg_v1])
                         : dump_registry_v2(regs2_[n.reg_v2]);
  }
  std::vector<std::string> parts;
  parts.reserve(n.children.size());
  for (TreeId c : n.children) parts.push_back(dump_json(c));
  std::sort(parts.begin(), parts.end());
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += "]";
  return out;
}

namespace {

template <typename LeafFn>
TreeId tree_rec(TreeArena& arena, int n, std::vector<Mask>& stack, int k,
                const LeafFn& leaf, Budget budget) {
  if (static_cast<int>(stack.size()) == k) return leaf(stack);
  unsigned long long levels = k - stack.size();
  unsigned long long per = n >= 63 ? ~0ull : (1ull << n);
  unsigned long long est = 1;
  for (unsigned long long i = 0; i < levels; ++i) est = sat_mul(est, per);
  budget.require(est);
  std::vector<TreeId> children;
  Mask total = Mask{1} << n;
  for (Mask y = 0; y < total; ++y) {
    stack.push_back(y);
    children.push_back(tree_rec(arena, n, stack, k, leaf, budget));
    stack.pop_back();
  }
  int child_depth = arena.depth(children.front());
  return arena.node(std::move(children), child_depth);
}

}  // namespace

TreeId tree_of_v1(TreeArena& arena, const Matroid& m,
                  const std::vector<Mask>& stack, int k, Budget budget) {
  if (k < 1 || k > kMaxK) throw InputError("k out of range");
  if (static_cast<int>(stack.size()) > k) {
    throw InputError("stack longer than the variable budget");
  }
  std::vector<Mask> st = stack;
  auto leaf = [&](const std::vector<Mask>& s) {
    return arena.leaf_v1(registry_v1(m, s));
  };
  return tree_rec(arena, m.size(), st, k, leaf, budget);
}

TreeId tree_of_v2(TreeArena& arena, const V2Context& ctx,
                  const std::vector<Mask>& stack, int k, Budget budget) {
  if (k < 1 || k > kMaxK) throw InputError("k out of range");
  if (static_cast<int>(stack.size()) > k) {
    throw InputError("stack longer than the variable budget");
  }
  std::vector<Mask> st = stack;
  auto leaf = [&](const std::vector<Mask>& s) {
    return arena.leaf_v2(registry_v2(ctx, s));
  };
  return tree_rec(arena, ctx.size(), st, k, leaf, budget);
}

// --- Compatibility ----------------------------------------------------------

bool CompatibilityChecker::rec(TreeId a, TreeId b, int level) {
  int remaining = static_cast<int>(psi_.exists_q.size()) - level;
  if (arena_.depth(a) != remaining || arena_.depth(b) != remaining) {
    throw InputError("tree depth does not match the quantifier prefix");
  }
  if (remaining == 0) {
    BMatrix m;
    if (arena_.leaf_is_v1(a)) {
      if (!arena_.leaf_is_v1(b)) throw InputError("mixed registry variants");
      m = sum_v1(arena_.reg_v1(a), arena_.reg_v1(b));
    } else {
      if (arena_.leaf_is_v1(b)) throw InputError("mixed registry variants");
      m = sum_v2(arena_.reg_v2(a), arena_.reg_v2(b));
    }
    if (m.k != psi_.k) throw InputError("registry arity mismatch");
    return eval_qf_on_b(psi_.matrix, m);
  }
  std::uint64_t key = (std::uint64_t(level) << 56) |
                      (std::uint64_t(std::uint32_t(a)) << 28) |
                      std::uint64_t(std::uint32_t(b));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool exists = psi_.exists_q[level];
  bool result = !exists;
  for (TreeId ca : arena_.children(a)) {
    for (TreeId cb : arena_.children(b)) {
      bool sub = rec(ca, cb, level + 1);
      if (sub == exists) {
        result = exists;
        goto done;
      }
    }
  }
done:
  memo_[key] = result;
  return result;
}

bool CompatibilityChecker::compatible(TreeId a, TreeId b) {
  return rec(a, b, 0);
}

bool compatible(TreeArena& arena, TreeId a, TreeId b,
                const PrenexFormula& psi) {
  CompatibilityChecker checker(arena, psi);
  return checker.compatible(a, b);
}

// --- Partition and bounds ---------------------------------------------------

PartitionResult partition_v1(TreeArena& arena,
                             const std::vector<const Matroid*>& family,
                             int k, Budget budget) {
  PartitionResult out;
  std::unordered_map<TreeId, int> block_ids;
  for (const Matroid* m : family) {
    TreeId t = tree_of_v1(arena, *m, {}, k, budget);
    out.tree_of_input.push_back(t);
    auto [it, fresh] = block_ids.emplace(t, out.block_count);
    if (fresh) ++out.block_count;
    out.block_of.push_back(it->second);
  }
  return out;
}

PartitionResult partition_v2(TreeArena& arena,
                             const std::vector<const V2Context*>& family,
                             int k, Budget budget) {
  PartitionResult out;
  std::unordered_map<TreeId, int> block_ids;
  for (const V2Context* ctx : family) {
    if (!ctx->is_hoop()) {
      throw InputError("variant-2 partitions take hoop matroids");
    }
    TreeId t = tree_of_v2(arena, *ctx, {}, k, budget);
    out.tree_of_input.push_back(t);
    auto [it, fresh] = block_ids.emplace(t, out.block_count);
    if (fresh) ++out.block_count;
    out.block_of.push_back(it->second);
  }
  return out;
}

namespace {

// Decimal big integer, limbs of 10^9, little-endian.
struct Decimal {
  std::vector<std::uint32_t> limbs{0};

  static Decimal from_u64(unsigned long long v) {
    Decimal d;
    d.limbs.clear();
    if (v == 0) d.limbs.push_back(0);
    while (v) {
      d.limbs.push_back(static_cast<std::uint32_t>(v % 1000000000ull));
      v /= 1000000000ull;
    }
    return d;
  }

  void double_in_place() {
    std::uint32_t carry = 0;
    for (auto& l : limbs) {
      std::uint64_t x = 2ull * l + carry;
      l = static_cast<std::uint32_t>(x % 1000000000ull);
      carry = static_cast<std::uint32_t>(x / 1000000000ull);
    }
    if (carry) limbs.push_back(carry);
  }

  std::size_t digits() const {
    std::size_t d = (limbs.size() - 1) * 9;
    std::uint32_t top = limbs.back();
    do {
      ++d;
      top /= 10;
    } while (top);
    return d;
  }

  std::string str() const {
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
      std::string part = std::to_string(*it);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }
};

TowerValue make_tower(int height, unsigned long long base,
                      int digit_budget) {
  TowerValue v;
  v.height = height;
  v.base = base;
  if (height == 0) {
    v.exact = true;
    v.decimal = std::to_string(base);
    return v;
  }
  if (height == 1) {
    // 2^base has base*log10(2) digits
    unsigned long long digits = base / 3 + 2;
    if (digits <= static_cast<unsigned long long>(digit_budget)) {
      Decimal d = Decimal::from_u64(1);
      for (unsigned long long i = 0; i < base; ++i) d.double_in_place();
      if (d.digits() <= static_cast<std::size_t>(digit_budget)) {
        v.exact = true;
        v.decimal = d.str();
      }
    }
    return v;
  }
  // height >= 2: exact only if the inner tower collapses to a small value
  TowerValue inner = make_tower(height - 1, base, digit_budget);
  if (inner.exact && inner.decimal.size() <= 6) {
    unsigned long long e = std::stoull(inner.decimal);
    TowerValue flat = make_tower(1, e, digit_budget);
    if (flat.exact) {
      flat.height = height;
      flat.base = base;
      return flat;
    }
  }
  return v;
}

}  // namespace

std::string TowerValue::str() const {
  if (exact) return decimal;
  std::string out;
  for (int i = 0; i < height; ++i) out += "2^";
  out += std::to_string(base);
  return out;
}

BoundsResult bounds(int k, int digit_budget) {
  if (k < 1 || k > kMaxK) throw InputError("k out of range for bounds");
  BoundsResult out;
  unsigned long long g10 = 1;
  for (int i = 0; i < k; ++i) g10 = sat_mul(g10, 3);
  for (int i = 0; i < k * (k + 1); ++i) g10 = sat_mul(g10, 2);
  unsigned long long g20 = 1;
  for (int i = 0; i < k * k; ++i) g20 = sat_mul(g20, 2);
  for (int i = 0; i < k; ++i) g20 = sat_mul(g20, 3);
  for (int i = 0; i < k; ++i) g20 = sat_mul(g20, 17);
  for (int i = 0; i <= k; ++i) {
    out.g1.push_back(make_tower(i, g10, digit_budget));
    out.g2.push_back(make_tower(i, g20, digit_budget));
  }
  out.f1 = out.g1[k];
  out.f2 = out.g2[k];
  return out;
}

}  // namespace ms0
