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

#include "ms0/field.hpp"

#include "ms0/matroid.hpp"

namespace ms0 {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p)) {
    throw InputError("modulus is not prime: " + std::to_string(p));
  }
}

int PrimeField::pow(int a, long long e) const {
  long long base = ((a % p_) + p_) % p_;
  long long acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

int PrimeField::inv(int a) const {
  if (a % p_ == 0) throw InputError("inverse of zero");
  return pow(a, p_ - 2);
}

int element_order(const PrimeField& f, int a) {
  if (a % f.p() == 0) throw InputError("element_order of zero");
  int x = ((a % f.p()) + f.p()) % f.p();
  int acc = x;
  int o = 1;
  while (acc != 1) {
    acc = f.mul(acc, x);
    ++o;
  }
  return o;
}

int find_generator(const PrimeField& f) {
  for (int a = 1; a < f.p(); ++a) {
    if (element_order(f, a) == f.p() - 1) return a;
  }
  // p = 2: the loop above already returned 1 (order 1 == p-1).
  throw InputError("no generator found");
}

FFMatrix::FFMatrix(int p_, int rows_, int cols_)
    : p(p_), rows(rows_), cols(cols_), data(rows_ * cols_, 0) {
  if (!is_prime(p_)) {
    throw InputError("matrix modulus is not prime: " + std::to_string(p_));
  }
}

namespace {

// Elimination on an explicit column selection; first non-zero pivot in
// column order.
int rank_of_selection(const FFMatrix& a, const std::vector<int>& cols) {
  PrimeField f(a.p);
  int m = a.rows;
  int n = static_cast<int>(cols.size());
  std::vector<std::int32_t> w(m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i * n + j] = a.at(i, cols[j]);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (w[r * n + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(w[rank * n + j], w[pivot * n + j]);
    int piv_inv = f.inv(w[rank * n + col]);
    for (int r = rank + 1; r < m; ++r) {
      int factor = f.mul(w[r * n + col], piv_inv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) {
        w[r * n + j] = f.sub(w[r * n + j], f.mul(factor, w[rank * n + j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const FFMatrix& a) {
  std::vector<int> all(a.cols);
  for (int j = 0; j < a.cols; ++j) all[j] = j;
  return rank_of_selection(a, all);
}

int matrix_rank_cols(const FFMatrix& a, const std::vector<int>& cols) {
  return rank_of_selection(a, cols);
}

bool MatrixDef::independent(Mask x) const {
  std::vector<int> cols;
  cols.reserve(popcount(x));
  for (int j = 0; j < matrix.cols; ++j) {
    if (has_bit(x, j)) cols.push_back(j);
  }
  return rank_of_selection(matrix, cols) == static_cast<int>(cols.size());
}

Matroid column_matroid(const FFMatrix& a) {
  std::vector<std::string> labels = a.col_labels;
  if (static_cast<int>(labels.size()) != a.cols) {
    labels.resize(a.cols);
    for (int j = 0; j < a.cols; ++j) {
      if (labels[j].empty()) labels[j] = "c" + std::to_string(j);
    }
  }
  GroundSet ground(labels);  // throws on duplicates
  return Matroid(std::move(ground), std::make_shared<MatrixDef>(a));
}

}  // namespace ms0
