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

#include "ms0/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <set>

#include "ms0/alcove.hpp"
#include "ms0/evaluate.hpp"
#include "ms0/field.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/json_io.hpp"
#include "ms0/registry.hpp"

namespace ms0 {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
};

CheckResult finish(const std::string& name, bool pass, nlohmann::json details,
                   const Timer& timer) {
  CheckResult r;
  r.name = name;
  r.pass = pass;
  r.details = std::move(details);
  r.wall_ms = timer.ms();
  return r;
}

GainGroup gf17_group() { return GainGroup::field_units(17, 3); }

int dlog(const GainGroup& g, int alpha) {
  PrimeField f(g.p);
  int acc = 1;
  for (int e = 0; e < g.order; ++e) {
    if (acc == ((alpha % g.p) + g.p) % g.p) return e;
    acc = f.mul(acc, g.generator);
  }
  throw InputError("alpha is not a unit");
}

struct HoopLoopInstance {
  std::shared_ptr<GainGraph> gamma, delta, glued;
  std::shared_ptr<const AmalgamOracle> oracle;
};

HoopLoopInstance make_instance(int p, int alpha, int s, int t,
                               bool with_glue) {
  PrimeField f(p);
  GainGroup group = GainGroup::field_units(p, find_generator(f));
  int exp = dlog(group, alpha);
  HoopLoopInstance inst;
  inst.gamma = std::make_shared<GainGraph>(build_gamma(s, group, exp));
  inst.delta = std::make_shared<GainGraph>(build_delta(t, group, exp));
  if (with_glue) {
    inst.glued =
        std::make_shared<GainGraph>(glue_hoop_loop(*inst.gamma, *inst.delta));
  }
  AmalgamSpec spec{frame_matroid(inst.gamma), frame_matroid(inst.delta)};
  inst.oracle = make_amalgam_oracle(spec);
  return inst;
}

}  // namespace

// --- Generators -------------------------------------------------------------

std::vector<Matroid> small_matroid_corpus(int max_n) {
  if (max_n > 4) throw InputError("corpus enumeration limited to n <= 4");
  std::vector<Matroid> out;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    GroundSet ground(labels);
    Mask subsets = Mask{1} << n;
    unsigned long long families = 1ull << subsets;
    for (unsigned long long fam = 0; fam < families; ++fam) {
      std::vector<bool> member(subsets);
      for (Mask s = 0; s < subsets; ++s) member[s] = (fam >> s) & 1;
      if (!is_matroid(member, n)) continue;
      std::vector<Mask> sets;
      for (Mask s = 0; s < subsets; ++s) {
        if (member[s]) sets.push_back(s);
      }
      out.push_back(make_matroid_from_sets(ground, sets,
                                           /*validate_axioms=*/false));
    }
  }
  return out;
}

std::vector<FormulaPtr> random_sentences(int k, int count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FormulaPtr> out;
  auto var = [&](int i) { return "X" + std::to_string(i + 1); };
  while (static_cast<int>(out.size()) < count) {
    // random quantifier-free matrix over X1..Xk
    auto gen = [&](auto&& self, int depth) -> FormulaPtr {
      int pick = static_cast<int>(rng() % (depth >= 4 ? 3 : 5));
      switch (pick) {
        case 0:
          return Formula::ind(var(rng() % k));
        case 1:
          return Formula::sing(var(rng() % k));
        case 2:
          return Formula::subseteq(var(rng() % k), var(rng() % k));
        case 3:
          return Formula::negate(self(self, depth + 1));
        default:
          return Formula::conj(self(self, depth + 1), self(self, depth + 1));
      }
    };
    FormulaPtr matrix = gen(gen, 0);
    for (int i = 0; i < k; ++i) {
      if (!matrix->vars().count(var(i))) {
        matrix = Formula::conj(matrix, Formula::subseteq(var(i), var(i)));
      }
    }
    FormulaPtr f = matrix;
    for (int i = k - 1; i >= 0; --i) {
      f = (rng() & 1) ? Formula::exists(var(i), f)
                      : Formula::forall(var(i), f);
    }
    out.push_back(f);
  }
  return out;
}

AmalgamSpec random_amalgam_spec(int p, int max_total, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PrimeField f(p);
  // projective points of the line: (1, b) and (0, 1)
  std::vector<std::array<int, 2>> line_points;
  for (int b = 0; b < p; ++b) line_points.push_back({1, b});
  line_points.push_back({0, 1});

  int ell = 2 + static_cast<int>(rng() % 4);  // 2..5
  std::vector<std::array<int, 2>> ell_cols;
  {
    std::vector<int> idx(line_points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < ell; ++i) ell_cols.push_back(line_points[idx[i]]);
  }
  int budget_elems = max_total - ell;
  int extra1 = static_cast<int>(rng() % (budget_elems / 2 + 1));
  int extra2 = budget_elems - extra1 > 0
                   ? static_cast<int>(rng() % (budget_elems - extra1 + 1))
                   : 0;

  auto build_side = [&](int extras, const std::string& prefix) {
    int dim = 2 + static_cast<int>(rng() % 2);  // 2 or 3
    std::vector<std::vector<int>> cols;
    std::vector<std::string> labels;
    for (int i = 0; i < ell; ++i) {
      std::vector<int> c(dim, 0);
      c[0] = ell_cols[i][0];
      c[1] = ell_cols[i][1];
      cols.push_back(c);
      labels.push_back("l" + std::to_string(i + 1));
    }
    auto parallel = [&](const std::vector<int>& a,
                        const std::vector<int>& b) {
      // a == lambda b for some unit lambda
      for (int lam = 1; lam < p; ++lam) {
        bool eq = true;
        for (int i = 0; i < dim && eq; ++i) {
          if (a[i] != f.mul(lam, b[i])) eq = false;
        }
        if (eq) return true;
      }
      return false;
    };
    int added = 0;
    int attempts = 0;
    while (added < extras && attempts < 200) {
      ++attempts;
      std::vector<int> c(dim);
      bool zero = true;
      for (int i = 0; i < dim; ++i) {
        c[i] = static_cast<int>(rng() % p);
        if (c[i]) zero = false;
      }
      if (zero) continue;
      bool bad = false;
      for (const auto& existing : cols) {
        if (parallel(c, existing)) {
          bad = true;
          break;
        }
      }
      if (bad) continue;
      cols.push_back(c);
      labels.push_back(prefix + std::to_string(++added));
    }
    FFMatrix m(p, dim, static_cast<int>(cols.size()));
    m.col_labels = labels;
    for (int i = 0; i < dim; ++i) {
      m.row_labels.push_back("r" + std::to_string(i));
      for (int c = 0; c < m.cols; ++c) m.at(i, c) = cols[c][i];
    }
    return column_matroid(m);
  };

  AmalgamSpec spec;
  spec.m1 = build_side(extra1, "a");
  spec.m2 = build_side(extra2, "b");
  return spec;
}

std::vector<std::string> needle_sentence_pool() {
  return {
      "exists X1. Ind(X1)",
      "forall X1. Ind(X1)",
      "exists X1. Ind(X1) & Sing(X1)",
      "forall X1. Sing(X1) -> Ind(X1)",
      "exists X1. !Ind(X1) & Sing(X1)",
      "forall X1. Ind(X1) -> X1 <= X1",
      "exists X1. !Ind(X1)",
      "exists X1. Sing(X1) & X1 <= X1",
      "exists X1. !Sing(X1) & Ind(X1)",
      "forall X1. !Ind(X1) -> !Sing(X1)",
  };
}

// --- Criterion 1 ------------------------------------------------------------

CheckResult check_jackal_eq1(const CheckParams& p) {
  Timer timer;
  int specs = p.count ? p.count : 200;
  unsigned long long subsets_checked = 0;
  nlohmann::json details;
  for (int i = 0; i < specs; ++i) {
    AmalgamSpec spec = random_amalgam_spec(7, 12, p.seed + i);
    auto oracle = make_amalgam_oracle(spec);
    Mask total = Mask{1} << oracle->ground().size();
    for (Mask x = 0; x < total; ++x) {
      bool dep = oracle->dependent(x);
      bool dep_eq1 = oracle->rank_eq1(x) < popcount(x);
      ++subsets_checked;
      if (dep != dep_eq1) {
        details["counterexample"] = {
            {"spec", i},
            {"subset", oracle->ground().unmask(x)},
            {"dependent", dep},
            {"rank_eq1", oracle->rank_eq1(x)}};
        details["specs"] = i + 1;
        return finish("jackal_eq1", false, details, timer);
      }
    }
  }
  details["specs"] = specs;
  details["subsets_checked"] = subsets_checked;
  return finish("jackal_eq1", true, details, timer);
}

// --- Criterion 2 ------------------------------------------------------------

namespace {

// Direct evaluation of a prenex sentence over a direct sum, decomposed by
// traces: X_i splits as (Y_i, Z_i) over the two sides, and the verdict only
// depends on which atom truth vectors are realized. Per pair we precompute
// the realized-vector sets so that every sentence costs a table scan.
struct PairProfile {
  // k = 1: realized 3-bit vectors (ind, sing, sub11)
  std::uint8_t k1_realized = 0;
  // k = 2: per first-level choice, the realized 8-bit vectors over the
  // second level (bits: ind1, ind2, sing1, sing2, sub11, sub12, sub21,
  // sub22)
  std::vector<std::array<std::uint64_t, 4>> k2_sets;
};

BMatrix vec_to_b(int k, int vec) {
  BMatrix m;
  m.k = static_cast<std::uint8_t>(k);
  m.ind = vec & ((1 << k) - 1);
  m.sing = (vec >> k) & ((1 << k) - 1);
  m.sub = (vec >> (2 * k)) & ((1u << (k * k)) - 1);
  return m;
}

PairProfile build_pair_profile(const SetSystem& a, const SetSystem& b) {
  PairProfile prof;
  int na = a.size(), nb = b.size();
  Mask ta = Mask{1} << na, tb = Mask{1} << nb;
  int combos = static_cast<int>(ta * tb);
  // per (Y, Z) choice: independence, singleton-ness
  std::vector<std::uint8_t> ind(combos), sing(combos);
  for (Mask y = 0; y < ta; ++y) {
    for (Mask z = 0; z < tb; ++z) {
      int c = static_cast<int>(y * tb + z);
      ind[c] = a.independent(y) && b.independent(z);
      sing[c] = popcount(y) + popcount(z) == 1;
      prof.k1_realized |=
          static_cast<std::uint8_t>(1u << (ind[c] | (sing[c] << 1) | 4));
    }
  }
  prof.k2_sets.assign(combos, {0, 0, 0, 0});
  for (int c1 = 0; c1 < combos; ++c1) {
    Mask y1 = c1 / tb, z1 = c1 % tb;
    for (int c2 = 0; c2 < combos; ++c2) {
      Mask y2 = c2 / tb, z2 = c2 % tb;
      int vec = ind[c1] | (ind[c2] << 1) | (sing[c1] << 2) | (sing[c2] << 3);
      if (is_subset(y1, y1) && is_subset(z1, z1)) vec |= 1 << 4;
      if (is_subset(y1, y2) && is_subset(z1, z2)) vec |= 1 << 5;
      if (is_subset(y2, y1) && is_subset(z2, z1)) vec |= 1 << 6;
      vec |= 1 << 7;  // sub22
      prof.k2_sets[c1][vec >> 6] |= std::uint64_t{1} << (vec & 63);
    }
  }
  return prof;
}

bool direct_verdict(const PairProfile& prof, const PrenexFormula& psi) {
  if (psi.k == 1) {
    bool exists = psi.exists_q[0];
    for (int vec = 0; vec < 8; ++vec) {
      if (!((prof.k1_realized >> vec) & 1)) continue;
      if (eval_qf_on_b(psi.matrix, vec_to_b(1, vec)) == exists) {
        return exists;
      }
    }
    return !exists;
  }
  // truth table of the matrix over all 256 atom vectors
  std::array<std::uint64_t, 4> truth{0, 0, 0, 0};
  for (int vec = 0; vec < 256; ++vec) {
    if (eval_qf_on_b(psi.matrix, vec_to_b(2, vec))) {
      truth[vec >> 6] |= std::uint64_t{1} << (vec & 63);
    }
  }
  bool q1 = psi.exists_q[0], q2 = psi.exists_q[1];
  for (const auto& set : prof.k2_sets) {
    bool inner;
    if (q2) {
      inner = ((set[0] & truth[0]) | (set[1] & truth[1]) |
               (set[2] & truth[2]) | (set[3] & truth[3])) != 0;
    } else {
      inner = (set[0] & ~truth[0]) == 0 && (set[1] & ~truth[1]) == 0 &&
              (set[2] & ~truth[2]) == 0 && (set[3] & ~truth[3]) == 0;
    }
    if (inner == q1) return q1;
  }
  return !q1;
}

}  // namespace

CheckResult check_yogurt(const CheckParams& p) {
  Timer timer;
  int sentence_count = p.count ? p.count : 1000;
  std::vector<Matroid> corpus = small_matroid_corpus(3);
  std::vector<SetSystem> systems;
  systems.reserve(corpus.size());
  for (const auto& m : corpus) systems.push_back(SetSystem::of_matroid(m));

  // half one-variable, half two-variable sentences
  std::vector<FormulaPtr> sentences =
      random_sentences(1, sentence_count / 2, p.seed);
  {
    auto more = random_sentences(2, sentence_count - sentence_count / 2,
                                 p.seed + 1);
    sentences.insert(sentences.end(), more.begin(), more.end());
  }

  TreeArena arena;
  std::vector<TreeId> trees_k1, trees_k2;
  for (const auto& m : corpus) {
    trees_k1.push_back(tree_of_v1(arena, m, {}, 1));
    trees_k2.push_back(tree_of_v1(arena, m, {}, 2));
  }
  std::vector<PairProfile> profiles;
  profiles.reserve(corpus.size() * corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      profiles.push_back(build_pair_profile(systems[i], systems[j]));
    }
  }

  unsigned long long checked = 0, crosschecked = 0;
  nlohmann::json details;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    PrenexFormula psi = normalize_prenex(sentences[s]);
    const std::vector<TreeId>& trees = psi.k == 1 ? trees_k1 : trees_k2;
    CompatibilityChecker checker(arena, psi);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        bool direct = direct_verdict(profiles[i * corpus.size() + j], psi);
        bool compat = checker.compatible(trees[i], trees[j]);
        ++checked;
        if (direct != compat) {
          details["counterexample"] = {{"left", static_cast<int>(i)},
                                       {"right", static_cast<int>(j)},
                                       {"sentence",
                                        sentences[s]->to_string()}};
          return finish("yogurt", false, details, timer);
        }
        // sample a full-evaluator cross-check of the trace decomposition
        if (s % 97 == 0 && i % 7 == 0 && j % 11 == 0) {
          Matroid sum =
              direct_sum(corpus[i], relabel_with_suffix(corpus[j], "_2"));
          bool full = evaluate(sum, sentences[s]);
          ++crosschecked;
          if (full != direct) {
            details["counterexample"] = {{"kind", "direct-sum evaluator"},
                                         {"left", static_cast<int>(i)},
                                         {"right", static_cast<int>(j)},
                                         {"sentence",
                                          sentences[s]->to_string()}};
            return finish("yogurt", false, details, timer);
          }
        }
      }
    }
  }
  details["matroids"] = corpus.size();
  details["sentences"] = sentences.size();
  details["pairs_times_sentences"] = checked;
  details["evaluator_crosschecks"] = crosschecked;
  return finish("yogurt", true, details, timer);
}

// --- Criterion 3 ------------------------------------------------------------

namespace {

std::vector<std::shared_ptr<GainGraph>> noodle_corpus() {
  std::vector<std::shared_ptr<GainGraph>> out;
  {
    // mixed small graph over GF(5): balanced and unbalanced loops, a
    // parallel pair, a triangle
    GainGroup g5 = GainGroup::field_units(5, 2);
    std::vector<GainEdge> edges = {
        {"p", 0, 0, 0},  {"q", 0, 0, 1}, {"r", 1, 1, 2}, {"s1", 0, 1, 0},
        {"s2", 0, 1, 1}, {"t1", 1, 2, 0}, {"t2", 2, 0, 0}, {"t3", 2, 3, 3},
    };
    out.push_back(std::make_shared<GainGraph>(
        g5, std::vector<std::string>{"w1", "w2", "w3", "w4"}, edges));
  }
  {
    // theta-heavy graph over GF(7)
    GainGroup g7 = GainGroup::field_units(7, 3);
    std::vector<GainEdge> edges = {
        {"d1", 0, 1, 0}, {"d2", 0, 1, 1}, {"d3", 0, 1, 2}, {"d4", 1, 2, 0},
        {"d5", 1, 2, 3}, {"d6", 2, 0, 0}, {"d7", 2, 2, 1}, {"d8", 0, 0, 5},
        {"d9", 1, 2, 5},
    };
    out.push_back(std::make_shared<GainGraph>(
        g7, std::vector<std::string>{"w1", "w2", "w3"}, edges));
  }
  {
    GainGroup g17 = gf17_group();
    GainGraph gamma = build_gamma(3, g17, 1);
    Mask keep = full_mask(gamma.edge_count()) &
                ~bit(gamma.edge_index("a2"));
    out.push_back(
        std::make_shared<GainGraph>(restrict_edges(gamma, keep)));
    GainGraph delta = build_delta(3, g17, 1);
    Mask dkeep = 0;
    for (const char* id : {"a", "b2", "b3", "b", "e1", "f1", "e2", "f2",
                           "x", "y", "z", "g"}) {
      dkeep |= bit(delta.edge_index(id));
    }
    out.push_back(std::make_shared<GainGraph>(restrict_edges(delta, dkeep)));
  }
  return out;
}

std::vector<int> mask_columns(Mask x) {
  std::vector<int> cols;
  while (x) {
    cols.push_back(lowest_bit(x));
    x &= x - 1;
  }
  return cols;
}

}  // namespace

CheckResult check_noodle(const CheckParams& p) {
  Timer timer;
  nlohmann::json details;
  unsigned long long checked = 0;
  int max_edges = p.max_edges ? p.max_edges : 12;
  for (const auto& g : noodle_corpus()) {
    if (g->edge_count() > max_edges) continue;
    FFMatrix d = incidence_matrix(*g);
    Mask total = Mask{1} << g->edge_count();
    for (Mask x = 0; x < total; ++x) {
      int mrank = matrix_rank_cols(d, mask_columns(x));
      int frank = frame_rank(*g, x);
      bool mind = mrank == popcount(x);
      bool find = frame_is_independent(*g, x);
      ++checked;
      if (mrank != frank || mind != find) {
        details["counterexample"] = {{"edges", g->edge_count()},
                                     {"subset", x},
                                     {"matrix_rank", mrank},
                                     {"frame_rank", frank}};
        return finish("noodle", false, details, timer);
      }
    }
  }
  // the glued 28-edge graph: all subsets of size <= 4, then a seeded sample
  HoopLoopInstance inst = make_instance(17, 3, 3, 3, /*with_glue=*/true);
  FFMatrix dh = incidence_matrix(*inst.glued);
  int ne = inst.glued->edge_count();
  unsigned long long glued_checked = 0;
  auto check_one = [&](Mask x) {
    int mrank = matrix_rank_cols(dh, mask_columns(x));
    int frank = frame_rank(*inst.glued, x);
    ++glued_checked;
    return mrank == frank;
  };
  bool ok = true;
  Mask bad = 0;
  for (int card = 0; card <= 4 && ok; ++card) {
    Mask x = card == 0 ? 0 : full_mask(card);
    do {
      if (!check_one(x)) {
        ok = false;
        bad = x;
        break;
      }
      x = next_same_popcount(x);
    } while (card > 0 && x != 0 && x < (Mask{1} << ne));
  }
  std::mt19937_64 rng(p.seed);
  int samples = p.count ? p.count : 100000;
  for (int i = 0; ok && i < samples; ++i) {
    Mask x = rng() & full_mask(ne);
    if (!check_one(x)) {
      ok = false;
      bad = x;
    }
  }
  if (!ok) {
    details["counterexample"] = {{"graph", "glued"}, {"subset", bad}};
    return finish("noodle", false, details, timer);
  }
  details["small_graph_subsets"] = checked;
  details["glued_subsets"] = glued_checked;
  return finish("noodle", true, details, timer);
}

// --- Criterion 4 ------------------------------------------------------------

CheckResult check_velvet(const CheckParams& p) {
  Timer timer;
  nlohmann::json details;
  HoopLoopInstance inst =
      make_instance(p.p, p.alpha, p.s, p.s, /*with_glue=*/true);
  FFMatrix dh = incidence_matrix(*inst.glued);
  int ne = inst.glued->edge_count();
  unsigned long long checked = 0;

  // exhaustive small subsets: representation rank, frame rank of the glued
  // graph, and the amalgam oracle must all agree
  for (int card = 0; card <= 4; ++card) {
    Mask x = card == 0 ? 0 : full_mask(card);
    do {
      int mrank = matrix_rank_cols(dh, mask_columns(x));
      int grank = frame_rank(*inst.glued, x);
      int arank = inst.oracle->rank_greedy(x);
      ++checked;
      if (mrank != arank || grank != arank) {
        details["counterexample"] = {{"subset", x},
                                     {"matrix_rank", mrank},
                                     {"glued_rank", grank},
                                     {"amalgam_rank", arank}};
        return finish("velvet", false, details, timer);
      }
      x = next_same_popcount(x);
    } while (card > 0 && x != 0 && x < (Mask{1} << ne));
  }
  std::mt19937_64 rng(p.seed);
  int samples = p.count ? p.count : 100000;
  for (int i = 0; i < samples; ++i) {
    Mask x = rng() & full_mask(ne);
    int mrank = matrix_rank_cols(dh, mask_columns(x));
    int arank = inst.oracle->rank_greedy(x);
    ++checked;
    if (mrank != arank) {
      details["counterexample"] = {{"subset", x},
                                   {"matrix_rank", mrank},
                                   {"amalgam_rank", arank}};
      return finish("velvet", false, details, timer);
    }
  }
  details["subsets_checked"] = checked;
  details["ground_size"] = ne;
  return finish("velvet", true, details, timer);
}

// --- Criterion 5 ------------------------------------------------------------

CheckResult check_alcove(const CheckParams& p) {
  Timer timer;
  nlohmann::json details;
  int s = p.s, t = p.t == p.s ? p.s + 1 : p.t;
  GainConstraintSystem unsat_sys = alcove_constraints(s, t);

  // the derived divisibility: the equations force (s - t) * alpha_1 == 0
  std::vector<std::int64_t> form(unsat_sys.var_count(), 0);
  form[unsat_sys.var_index("alpha_1")] = s - t;
  if (!alcove_implies(unsat_sys, form)) {
    details["failure"] = "divisibility bound not implied by the equations";
    return finish("alcove", false, details, timer);
  }
  if (alcove_solve(unsat_sys, 0).sat) {
    details["failure"] = "expected UNSAT over the integers";
    return finish("alcove", false, details, timer);
  }
  for (int n = p.order_lo; n <= p.order_hi; ++n) {
    AlcoveResult r = alcove_solve(unsat_sys, n);
    if (r.sat) {
      details["failure"] = "expected UNSAT at modulus " + std::to_string(n);
      return finish("alcove", false, details, timer);
    }
  }
  // the equal-parameter system is satisfiable at order 16 with a verified
  // witness
  GainConstraintSystem sat_sys = alcove_constraints(3, 3);
  AlcoveResult r = alcove_solve(sat_sys, 16);
  if (!r.sat || !alcove_check_assignment(sat_sys, r.witness, 16)) {
    details["failure"] = "expected verified SAT at (3,3) order 16";
    return finish("alcove", false, details, timer);
  }
  details["unsat_orders"] = {p.order_lo, p.order_hi};
  details["s"] = s;
  details["t"] = t;
  details["sat_witness_alpha1"] =
      r.witness[sat_sys.var_index("alpha_1")];
  return finish("alcove", true, details, timer);
}

// --- Criterion 6 ------------------------------------------------------------

CheckResult check_window(const CheckParams& p) {
  Timer timer;
  nlohmann::json details;
  HoopLoopInstance inst = make_instance(17, 3, 3, 3, /*with_glue=*/false);
  V2Context hoop(inst.gamma);
  V2Context loop(inst.delta);
  std::mt19937_64 rng(p.seed);
  int samples = p.count ? p.count : 10000;
  int ne = inst.oracle->ground().size();
  unsigned long long checked = 0;
  for (int i = 0; i < samples; ++i) {
    // stacks share the line part: (Y, Y') is the canonical split of Z
    Mask z = rng() & full_mask(ne);
    Mask y = inst.oracle->side1_mask(z);
    Mask yp = inst.oracle->side2_mask(z);
    RegistryV2 r1 = registry_v2(hoop, {y});
    RegistryV2 r2 = registry_v2(loop, {yp});
    BMatrix sum = sum_v2(r1, r2);
    bool sum_ind = (sum.ind & 1) != 0;
    bool amal_ind = !inst.oracle->dependent(z);
    ++checked;
    if (sum_ind != amal_ind) {
      details["counterexample"] = {{"z", z},
                                   {"sum_ind", sum_ind},
                                   {"amalgam_independent", amal_ind}};
      return finish("window", false, details, timer);
    }
  }
  // For the record: the entry-wise sum reads nothing about the stacks'
  // line parts, so it is not sound when the two parts differ. Count
  // mismatches on line-heavy pairs without gating on them.
  int noncanonical_mismatches = 0;
  Mask ell_h = hoop.ell_mask();
  Mask ell_l = loop.ell_mask();
  for (int i = 0; i < 2000; ++i) {
    Mask y = (rng() & ell_h) | (rng() & rng() & rng() &
                                full_mask(inst.gamma->edge_count()));
    Mask yp = (rng() & ell_l) | (rng() & rng() & rng() &
                                 full_mask(inst.delta->edge_count()));
    RegistryV2 r1 = registry_v2(hoop, {y});
    RegistryV2 r2 = registry_v2(loop, {yp});
    bool sum_ind = (sum_v2(r1, r2).ind & 1) != 0;
    Mask z = y;
    for (int b = 0; b < inst.delta->edge_count(); ++b) {
      if (!has_bit(yp, b)) continue;
      z |= bit(inst.oracle->ground().index(
          inst.delta->edges()[b].id));
    }
    if (sum_ind != !inst.oracle->dependent(z)) ++noncanonical_mismatches;
  }
  // the deterministic witness: Y = {a, b}, Y' = {x} sums to T although the
  // union is three points on the line
  {
    Mask y = bit(hoop.matroid().ground().index("a")) |
             bit(hoop.matroid().ground().index("b"));
    Mask yp = bit(loop.matroid().ground().index("x"));
    bool sum_ind =
        (sum_v2(registry_v2(hoop, {y}), registry_v2(loop, {yp})).ind & 1) !=
        0;
    Mask z = inst.oracle->ground().mask_of({"a", "b", "x"});
    details["unequal_line_parts_witness_mismatch"] =
        sum_ind != !inst.oracle->dependent(z);
  }
  details["pairs_checked"] = checked;
  details["noncanonical_mismatches_logged"] = noncanonical_mismatches;
  return finish("window", true, details, timer);
}

// --- Criterion 7 ------------------------------------------------------------

CheckResult check_needle(const CheckParams&) {
  Timer timer;
  nlohmann::json details;
  HoopLoopInstance inst = make_instance(17, 3, 3, 3, /*with_glue=*/false);
  V2Context hoop(inst.gamma);
  V2Context loop(inst.delta);
  TreeArena arena;
  TreeId th = tree_of_v2(arena, hoop, {}, 1);
  TreeId tl = tree_of_v2(arena, loop, {}, 1);

  // one shared pass over all 2^28 subsets of the amalgam
  int ne = inst.oracle->ground().size();
  Mask total = Mask{1} << ne;
  bool realized[2][2] = {{false, false}, {false, false}};
  for (Mask z = 0; z < total; ++z) {
    bool ind = !inst.oracle->dependent(z);
    bool sing = popcount(z) == 1;
    realized[ind ? 1 : 0][sing ? 1 : 0] = true;
  }

  std::vector<std::string> pool = needle_sentence_pool();
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& text : pool) {
    PrenexFormula psi = normalize_prenex(parse_formula(text));
    if (psi.k != 1 || psi.exists_q.size() != 1) {
      details["failure"] = "pool sentence is not one-variable: " + text;
      return finish("needle", false, details, timer);
    }
    bool exists = psi.exists_q[0];
    bool direct = !exists;
    for (int ind = 0; ind < 2; ++ind) {
      for (int sing = 0; sing < 2; ++sing) {
        if (!realized[ind][sing]) continue;
        BMatrix b;
        b.k = 1;
        b.ind = ind;
        b.sing = sing;
        b.sub = 1;
        if (eval_qf_on_b(psi.matrix, b) == exists) direct = exists;
      }
    }
    bool compat = compatible(arena, th, tl, psi);
    verdicts[text] = direct;
    if (direct != compat) {
      details["counterexample"] = {{"sentence", text},
                                   {"direct", direct},
                                   {"compatible", compat}};
      return finish("needle", false, details, timer);
    }
  }
  details["sweep_size"] = static_cast<std::uint64_t>(total);
  details["verdicts"] = verdicts;
  details["hoop_children"] = arena.children(th).size();
  details["loop_children"] = arena.children(tl).size();
  return finish("needle", true, details, timer);
}

// --- Criterion 8 ------------------------------------------------------------

CheckResult check_axioms(const CheckParams&) {
  Timer timer;
  nlohmann::json details;
  AxiomSentences ax = axiom_sentences();
  FormulaPtr all = Formula::conj(Formula::conj(ax.i1, ax.i2), ax.i3);
  GroundSet ground({"e1", "e2", "e3"});
  int agree = 0;
  for (unsigned fam = 0; fam < 256; ++fam) {
    std::vector<bool> member(8);
    for (Mask s = 0; s < 8; ++s) member[s] = (fam >> s) & 1;
    SetSystem sys(ground, member);
    bool via_logic = evaluate(sys, all);
    bool via_oracle = is_matroid(member, 3);
    if (via_logic != via_oracle) {
      details["counterexample"] = {{"family", fam},
                                   {"evaluate", via_logic},
                                   {"is_matroid", via_oracle}};
      return finish("axioms", false, details, timer);
    }
    if (via_oracle) ++agree;
  }
  details["families"] = 256;
  details["matroids_found"] = agree;
  return finish("axioms", true, details, timer);
}

// --- Criterion 9 ------------------------------------------------------------

namespace {

// Independent route: enumerate all contract/delete splits and try every
// label bijection.
bool minor_by_enumeration(const Matroid& m, const Matroid& n) {
  int nn = n.size();
  int mm = m.size();
  if (nn > mm) return false;
  Mask total = Mask{1} << mm;
  std::vector<int> perm(nn);
  for (Mask c = 0; c < total; ++c) {
    Mask rest = m.ground().full() & ~c;
    // choose kept sets K subseteq rest with |K| = nn; delete the rest
    std::vector<int> rest_bits = mask_columns(rest);
    if (static_cast<int>(rest_bits.size()) < nn) continue;
    std::vector<int> pick(nn);
    auto choose = [&](auto&& self, int start, int depth) -> bool {
      if (depth == nn) {
        Mask keep = 0;
        for (int i = 0; i < nn; ++i) keep |= bit(pick[i]);
        Matroid contracted = contract_elements(m, c);
        Mask keep_in_contracted = 0;
        for (int i = 0; i < contracted.size(); ++i) {
          int parent_pos = m.ground().index(contracted.ground().label(i));
          if (has_bit(keep, parent_pos)) keep_in_contracted |= bit(i);
        }
        Matroid minor = delete_elements(
            contracted, contracted.ground().full() & ~keep_in_contracted);
        // all bijections from minor positions to n positions
        std::vector<int> order(nn);
        for (int i = 0; i < nn; ++i) order[i] = i;
        do {
          bool match = true;
          for (Mask s = 0; s < (Mask{1} << nn) && match; ++s) {
            Mask mapped = 0;
            for (int i = 0; i < nn; ++i) {
              if (has_bit(s, i)) mapped |= bit(order[i]);
            }
            if (minor.is_independent(s) != n.is_independent(mapped)) {
              match = false;
            }
          }
          if (match) return true;
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
      }
      for (int i = start; i < static_cast<int>(rest_bits.size()); ++i) {
        pick[depth] = rest_bits[i];
        if (self(self, i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (choose(choose, 0, 0)) return true;
  }
  return false;
}

}  // namespace

CheckResult check_minor(const CheckParams&) {
  Timer timer;
  nlohmann::json details;
  Matroid u12 = gen_uniform(1, 2);
  FormulaPtr sentence = minor_sentence(u12);
  std::vector<Matroid> corpus = small_matroid_corpus(4);
  unsigned long long evaluated = 0;
  for (const auto& m : corpus) {
    bool via_logic = evaluate(m, sentence);
    bool via_search = has_minor(m, u12);
    ++evaluated;
    if (via_logic != via_search) {
      details["counterexample"] = {{"elements", m.size()},
                                   {"evaluate", via_logic},
                                   {"has_minor", via_search}};
      return finish("minor", false, details, timer);
    }
  }
  // second route on matroids with up to 6 elements
  std::vector<Matroid> small6 = {
      gen_uniform(2, 5),        gen_uniform(3, 6),
      gen_uniform(1, 4),        gen_pg2(2),
      direct_sum(gen_uniform(1, 2),
                 relabel_with_suffix(gen_uniform(2, 3), "_2")),
      delete_elements(gen_pg2(2), bit(0)),
  };
  for (const auto& m : corpus) {
    if (m.size() <= 4) small6.push_back(m);
  }
  std::vector<Matroid> minors = {gen_uniform(0, 1), gen_uniform(1, 1),
                                 gen_uniform(1, 2), gen_uniform(2, 3)};
  unsigned long long pairs = 0;
  for (const auto& m : small6) {
    if (m.size() > 6) continue;
    for (const auto& n : minors) {
      bool a = has_minor(m, n);
      bool b = minor_by_enumeration(m, n);
      ++pairs;
      if (a != b) {
        details["counterexample"] = {{"m_elements", m.size()},
                                     {"n_elements", n.size()},
                                     {"has_minor", a},
                                     {"enumeration", b}};
        return finish("minor", false, details, timer);
      }
    }
  }
  details["sentence_matroids"] = corpus.size();
  details["evaluations"] = evaluated;
  details["route_pairs"] = pairs;
  return finish("minor", true, details, timer);
}

// --- Criterion 10 -----------------------------------------------------------

CheckResult check_bounds(const CheckParams&) {
  Timer timer;
  nlohmann::json details;
  BoundsResult b1 = bounds(1);
  BoundsResult b2 = bounds(2);
  if (!b1.g1[0].exact || b1.g1[0].decimal != "12" ||
      !b1.f1.exact || b1.f1.decimal != "4096" ||
      !b1.g2[0].exact || b1.g2[0].decimal != "102" ||
      !b2.g1[0].exact || b2.g1[0].decimal != "576") {
    details["failure"] = {{"g1_1_0", b1.g1[0].str()},
                          {"f1_1", b1.f1.str()},
                          {"g2_1_0", b1.g2[0].str()},
                          {"g1_2_0", b2.g1[0].str()}};
    return finish("bounds", false, details, timer);
  }
  // observed distinct registries stay under g1(k,0) on the small corpus
  std::vector<Matroid> corpus = small_matroid_corpus(3);
  corpus.push_back(gen_pg2(2));
  nlohmann::json observed = nlohmann::json::object();
  for (int k = 1; k <= 3; ++k) {
    std::set<std::string> distinct;
    for (const auto& m : corpus) {
      Mask total = Mask{1} << m.size();
      std::vector<Mask> stack(k);
      auto sweep = [&](auto&& self, int depth) -> void {
        if (depth == k) {
          distinct.insert(registry_v1(m, stack).encode_bytes());
          return;
        }
        for (Mask y = 0; y < total; ++y) {
          stack[depth] = y;
          self(self, depth + 1);
        }
      };
      sweep(sweep, 0);
    }
    BoundsResult bk = bounds(k);
    unsigned long long limit = std::stoull(bk.g1[0].decimal);
    observed["k" + std::to_string(k)] = distinct.size();
    if (distinct.size() > limit) {
      details["failure"] = {{"k", k},
                            {"distinct", distinct.size()},
                            {"bound", limit}};
      return finish("bounds", false, details, timer);
    }
  }
  // variant registries over the hoop/loop instance stay under g2(1,0)
  HoopLoopInstance inst = make_instance(17, 3, 3, 3, /*with_glue=*/false);
  V2Context hoop(inst.gamma);
  V2Context loop(inst.delta);
  std::set<std::string> distinct2;
  for (Mask y = 0; y < (Mask{1} << hoop.size()); ++y) {
    distinct2.insert(registry_v2(hoop, {y}).encode_bytes());
  }
  for (Mask y = 0; y < (Mask{1} << loop.size()); ++y) {
    distinct2.insert(registry_v2(loop, {y}).encode_bytes());
  }
  observed["variant2_k1"] = distinct2.size();
  if (distinct2.size() > 102) {
    details["failure"] = {{"variant2_distinct", distinct2.size()},
                          {"bound", 102}};
    return finish("bounds", false, details, timer);
  }
  details["observed"] = observed;
  details["f1_1"] = b1.f1.str();
  details["f1_2"] = b2.f1.str();
  return finish("bounds", true, details, timer);
}

// --- Criterion 11 -----------------------------------------------------------

CheckResult check_jungle(const CheckParams& p) {
  Timer timer;
  nlohmann::json details;
  Matroid pg2 = gen_pg2(2);
  Matroid sum = direct_sum(pg2, relabel_with_suffix(pg2, "_2"));

  // the direct sum passes the axiom oracle
  Mask total = Mask{1} << sum.size();
  std::vector<bool> member(total);
  for (Mask x = 0; x < total; ++x) member[x] = sum.is_independent(x);
  if (!is_matroid(member, sum.size())) {
    details["failure"] = "direct sum fails the axiom check";
    return finish("jungle", false, details, timer);
  }

  // and is representable: the block-diagonal matrix over GF(2) backs it
  const FFMatrix& base = static_cast<const MatrixDef&>(pg2.def()).matrix;
  FFMatrix block(2, 6, 14);
  for (int c = 0; c < 14; ++c) {
    block.col_labels.push_back(sum.ground().label(c));
  }
  for (int r = 0; r < 6; ++r) {
    block.row_labels.push_back("r" + std::to_string(r));
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 7; ++c) {
      block.at(r, c) = base.at(r, c);
      block.at(r + 3, c + 7) = base.at(r, c);
    }
  }
  Matroid rep = column_matroid(block);
  for (Mask x = 0; x < total; ++x) {
    if (rep.is_independent(x) != sum.is_independent(x)) {
      details["failure"] = "block-diagonal representation disagrees";
      return finish("jungle", false, details, timer);
    }
  }

  // partition the two projective planes at k = 1; either outcome is logged
  TreeArena arena;
  Matroid pg3 = gen_pg2(3);
  std::vector<const Matroid*> family = {&pg2, &pg3};
  PartitionResult part = partition_v1(arena, family, p.k ? p.k : 1);
  BoundsResult b = bounds(p.k ? p.k : 1);
  unsigned long long f1 = std::stoull(b.f1.decimal);
  if (part.block_count > static_cast<int>(f1)) {
    details["failure"] = "block count exceeds f1";
    return finish("jungle", false, details, timer);
  }
  details["pg2_pg3_same_block"] = part.block_of[0] == part.block_of[1];
  details["blocks"] = part.block_count;
  details["f1_bound"] = f1;
  details["sum_elements"] = sum.size();
  return finish("jungle", true, details, timer);
}

// --- Dispatch ---------------------------------------------------------------

CheckResult run_named_check(const std::string& name, const CheckParams& p) {
  if (name == "jackal" || name == "jackal_eq1") return check_jackal_eq1(p);
  if (name == "yogurt") return check_yogurt(p);
  if (name == "noodle") return check_noodle(p);
  if (name == "velvet") return check_velvet(p);
  if (name == "alcove") return check_alcove(p);
  if (name == "window") return check_window(p);
  if (name == "needle") return check_needle(p);
  if (name == "axioms") return check_axioms(p);
  if (name == "minor") return check_minor(p);
  if (name == "bounds") return check_bounds(p);
  if (name == "jungle") return check_jungle(p);
  throw InputError("unknown check: " + name);
}

std::vector<std::string> check_names() {
  return {"jackal_eq1", "yogurt", "noodle", "velvet", "alcove", "window",
          "needle",     "axioms", "minor",  "bounds", "jungle"};
}

}  // namespace ms0
