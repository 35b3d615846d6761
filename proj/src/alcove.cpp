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

#include "ms0/alcove.hpp"

#include <algorithm>
#include <numeric>

namespace ms0 {

int GainConstraintSystem::var_index(const std::string& name) const {
  for (int i = 0; i < var_count(); ++i) {
    if (var_names[i] == name) return i;
  }
  throw InputError("no such unknown: " + name);
}

GainConstraintSystem alcove_constraints(int s, int t) {
  if (s < 3 || t < 3) throw InputError("alcove needs s, t >= 3");
  GainConstraintSystem sys;
  sys.s = s;
  sys.t = t;
  sys.var_names = {"gamma", "delta", "epsilon", "zeta"};
  for (int i = 1; i <= s; ++i) {
    sys.var_names.push_back("alpha_" + std::to_string(i));
  }
  for (int i = 1; i <= 2 * t - 1; ++i) {
    sys.var_names.push_back("beta_" + std::to_string(i));
  }
  const int kGamma = 0, kDelta = 1, kEpsilon = 2, kZeta = 3;
  auto alpha = [&](int i) { return 4 + (i - 1); };
  auto beta = [&](int i) { return 4 + s + (i - 1); };
  const int m = sys.var_count();
  auto form = [&](const std::string& cycle) {
    LinearForm f;
    f.coeff.assign(m, 0);
    f.cycle = cycle;
    return f;
  };

  // Balanced cycles force the exponent sums to vanish.
  {
    LinearForm f = form("{x1..x" + std::to_string(s) + ", x}");
    f.coeff[kGamma] = -1;
    sys.equations.push_back(f);
  }
  for (int i = 1; i <= s; ++i) {
    LinearForm f = form("({y1..y" + std::to_string(s) + "} - y" +
                        std::to_string(i) + ") + {x" + std::to_string(i) +
                        ", y}");
    for (int j = 1; j <= s; ++j) {
      if (j != i) f.coeff[alpha(j)] = 1;
    }
    f.coeff[kDelta] = -1;
    sys.equations.push_back(f);
  }
  {
    LinearForm f = form("{y1..y" + std::to_string(s) + ", z}");
    for (int j = 1; j <= s; ++j) f.coeff[alpha(j)] = 1;
    f.coeff[kEpsilon] = -1;
    sys.equations.push_back(f);
  }
  for (int i = 1; i <= t; ++i) {
    LinearForm f = form("({e1..e" + std::to_string(2 * t - 1) + "} - e" +
                        std::to_string(i) + ") + {f" + std::to_string(i) +
                        ", y}");
    f.coeff[beta(i)] = 1;
    f.coeff[kDelta] = -1;
    sys.equations.push_back(f);
  }
  for (int i = t + 1; i <= 2 * t - 1; ++i) {
    LinearForm f = form("({e1..e" + std::to_string(2 * t - 1) + "} - e" +
                        std::to_string(i) + ") + {f" + std::to_string(i) +
                        ", z}");
    f.coeff[beta(i)] = 1;
    f.coeff[kEpsilon] = -1;
    sys.equations.push_back(f);
  }
  {
    LinearForm f = form("{f1..f" + std::to_string(t) + ", e" +
                        std::to_string(t + 1) + "..e" +
                        std::to_string(2 * t - 1) + ", g}");
    for (int i = 1; i <= t; ++i) f.coeff[beta(i)] = 1;
    f.coeff[kZeta] = -1;
    sys.equations.push_back(f);
  }
  {
    LinearForm f = form("{e1..e" + std::to_string(t) + ", f" +
                        std::to_string(t + 1) + "..f" +
                        std::to_string(2 * t - 1) + ", g}");
    for (int i = t + 1; i <= 2 * t - 1; ++i) f.coeff[beta(i)] = 1;
    f.coeff[kZeta] = -1;
    sys.equations.push_back(f);
  }

  // Cycles that are independent in the frame matroids must stay unbalanced.
  for (int j = 1; j <= s - 1; ++j) {
    LinearForm f = form("{y1..y" + std::to_string(j) + ", x" +
                        std::to_string(j + 1) + "..x" + std::to_string(s) +
                        ", x}");
    for (int i = 1; i <= j; ++i) f.coeff[alpha(i)] = 1;
    f.coeff[kGamma] = -1;
    sys.disequations.push_back(f);
  }
  for (int j = 1; j <= t - 1; ++j) {
    LinearForm f = form("{f1..f" + std::to_string(j) + ", e" +
                        std::to_string(j + 1) + "..e" +
                        std::to_string(2 * t - 1) + ", x}");
    for (int i = 1; i <= j; ++i) f.coeff[beta(i)] = 1;
    f.coeff[kGamma] = -1;
    sys.disequations.push_back(f);
  }
  return sys;
}

namespace {

using I64 = std::int64_t;

// Diagonalize A over Z by unimodular row/column operations: returns the
// diagonal entries and the column transform V with A v = 0 iff v = V w and
// diag * w = 0 componentwise.
struct Diagonalization {
  std::vector<I64> diag;            // min(rows, cols) entries
  std::vector<std::vector<I64>> v;  // m x m
  int rows = 0, cols = 0;
};

Diagonalization diagonalize(std::vector<std::vector<I64>> a, int rows,
                            int cols) {
  Diagonalization d;
  d.rows = rows;
  d.cols = cols;
  d.v.assign(cols, std::vector<I64>(cols, 0));
  for (int i = 0; i < cols; ++i) d.v[i][i] = 1;

  int k = 0;
  while (k < rows && k < cols) {
    // find a pivot of smallest absolute value
    int pr = -1, pc = -1;
    for (int r = k; r < rows; ++r) {
      for (int c = k; c < cols; ++c) {
        if (a[r][c] != 0 &&
            (pr < 0 || std::abs(a[r][c]) < std::abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    std::swap(a[k], a[pr]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][k], a[r][pc]);
    for (int i = 0; i < cols; ++i) std::swap(d.v[i][k], d.v[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = k + 1; r < rows; ++r) {
        if (a[r][k] == 0) continue;
        I64 q = a[r][k] / a[k][k];
        for (int c = k; c < cols; ++c) a[r][c] -= q * a[k][c];
        if (a[r][k] != 0) {
          std::swap(a[r], a[k]);
          clean = false;
        }
      }
      for (int c = k + 1; c < cols; ++c) {
        if (a[k][c] == 0) continue;
        I64 q = a[k][c] / a[k][k];
        for (int r = 0; r < rows; ++r) a[r][c] -= q * a[r][k];
        for (std::size_t i = 0; i < d.v.size(); ++i) {
          d.v[i][c] -= q * d.v[i][k];
        }
        if (a[k][c] != 0) {
          for (int r = 0; r < rows; ++r) std::swap(a[r][c], a[r][k]);
          for (int i = 0; i < cols; ++i) std::swap(d.v[i][c], d.v[i][k]);
          clean = false;
        }
      }
    }
    ++k;
  }
  for (int i = 0; i < std::min(rows, cols); ++i) {
    d.diag.push_back(i < k ? a[i][i] : 0);
  }
  return d;
}

I64 mod_reduce(I64 x, I64 n) {
  I64 r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool alcove_check_assignment(const GainConstraintSystem& sys,
                             const std::vector<std::int64_t>& v, int order) {
  if (static_cast<int>(v.size()) != sys.var_count()) return false;
  auto value = [&](const LinearForm& f) {
    I64 acc = 0;
    for (int i = 0; i < sys.var_count(); ++i) acc += f.coeff[i] * v[i];
    return order > 0 ? mod_reduce(acc, order) : acc;
  };
  for (const auto& eq : sys.equations) {
    if (value(eq) != 0) return false;
  }
  for (const auto& de : sys.disequations) {
    if (value(de) == 0) return false;
  }
  return true;
}

AlcoveResult alcove_solve(const GainConstraintSystem& sys, int order,
                          Budget budget) {
  if (order < 0) throw InputError("order must be >= 1, or 0 for integers");
  const int m = sys.var_count();
  std::vector<std::vector<I64>> a;
  for (const auto& eq : sys.equations) {
    a.emplace_back(eq.coeff.begin(), eq.coeff.end());
  }
  Diagonalization d =
      diagonalize(a, static_cast<int>(sys.equations.size()), m);

  auto assemble = [&](const std::vector<I64>& w) {
    std::vector<I64> v(m, 0);
    for (int i = 0; i < m; ++i) {
      I64 acc = 0;
      for (int j = 0; j < m; ++j) acc += d.v[i][j] * w[j];
      v[i] = order > 0 ? mod_reduce(acc, order) : acc;
    }
    return v;
  };

  AlcoveResult result;
  if (order > 0) {
    // w_i ranges over the solutions of diag_i * w_i == 0 (mod order);
    // columns beyond the diagonal are free.
    std::vector<std::vector<I64>> choices(m);
    unsigned long long total = 1;
    for (int i = 0; i < m; ++i) {
      I64 di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
      if (di == 0) {
        choices[i].resize(order);
        std::iota(choices[i].begin(), choices[i].end(), 0);
      } else {
        I64 g = std::gcd(std::abs(di), static_cast<I64>(order));
        I64 step = order / g;
        for (I64 w = 0; w < order; w += step) choices[i].push_back(w);
      }
      total = sat_mul(total, choices[i].size());
    }
    budget.require(total);
    std::vector<I64> w(m, 0);
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      for (int i = 0; i < m; ++i) w[i] = choices[i][idx[i]];
      std::vector<I64> v = assemble(w);
      if (alcove_check_assignment(sys, v, order)) {
        result.sat = true;
        result.witness = v;
        return result;
      }
      int pos = m - 1;
      while (pos >= 0 && ++idx[pos] == choices[pos].size()) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return result;
  }

  // Over the integers: pivot coordinates with non-zero diagonal are forced
  // to zero; the rest parametrize the solution lattice.
  std::vector<int> free_cols;
  for (int i = 0; i < m; ++i) {
    I64 di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
    if (di == 0) free_cols.push_back(i);
  }
  // Disequation forms restricted to the lattice.
  std::vector<std::vector<I64>> forms;
  for (const auto& de : sys.disequations) {
    std::vector<I64> f(free_cols.size(), 0);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      I64 acc = 0;
      for (int i = 0; i < m; ++i) acc += de.coeff[i] * d.v[i][free_cols[j]];
      f[j] = acc;
    }
    bool all_zero =
        std::all_of(f.begin(), f.end(), [](I64 x) { return x == 0; });
    if (all_zero) return result;  // that cycle is forced balanced: UNSAT
    forms.push_back(std::move(f));
  }
  // Each surviving form is a non-zero polynomial in T under w_j = T^j, so a
  // small T avoids every root.
  int f = static_cast<int>(free_cols.size());
  if (f == 0) {
    std::vector<I64> v(m, 0);
    if (alcove_check_assignment(sys, v, 0)) {
      result.sat = true;
      result.witness = v;
    }
    return result;
  }
  long long max_t = static_cast<long long>(forms.size()) * f + 2;
  for (long long tval = 1; tval <= max_t; ++tval) {
    std::vector<I64> w(m, 0);
    I64 power = 1;
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      w[free_cols[j]] = power;
      power *= tval;
    }
    std::vector<I64> v = assemble(w);
    if (alcove_check_assignment(sys, v, 0)) {
      result.sat = true;
      result.witness = v;
      return result;
    }
  }
  return result;
}

bool alcove_implies(const GainConstraintSystem& sys,
                    const std::vector<std::int64_t>& form) {
  // Membership of the form in the integer row lattice of the equations:
  // with S = U A V diagonal, form = A^T x has a solution iff (form^T V)_i
  // is divisible by d_i on pivot columns and vanishes on the rest. Row
  // lattice membership makes the form vanish on every solution, mod every n.
  const int m = sys.var_count();
  if (static_cast<int>(form.size()) != m) {
    throw InputError("form has the wrong arity");
  }
  std::vector<std::vector<I64>> a;
  for (const auto& eq : sys.equations) {
    a.emplace_back(eq.coeff.begin(), eq.coeff.end());
  }
  Diagonalization d =
      diagonalize(a, static_cast<int>(sys.equations.size()), m);
  for (int i = 0; i < m; ++i) {
    I64 di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
    I64 acc = 0;
    for (int r = 0; r < m; ++r) acc += form[r] * d.v[r][i];
    if (di == 0 ? acc != 0 : acc % di != 0) return false;
  }
  return true;
}

}  // namespace ms0
