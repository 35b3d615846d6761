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

#ifndef MS0_FIELD_HPP
#define MS0_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ms0/base.hpp"

namespace ms0 {

class Matroid;

// GF(p) for prime p. Residues are machine integers in [0, p); no floating
// point anywhere in the arithmetic.
class PrimeField {
 public:
  explicit PrimeField(int p);  // throws InputError unless p is prime

  int p() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return ((a - b) % p_ + p_) % p_; }
  int mul(int a, int b) const {
    return static_cast<int>(static_cast<std::int64_t>(a) * b % p_);
  }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int pow(int a, long long e) const;
  int inv(int a) const;  // throws InputError on 0

 private:
  int p_;
};

bool is_prime(int n);

// Least o >= 1 with a^o = 1; divides p-1. a must be non-zero.
int element_order(const PrimeField& f, int a);

// Smallest residue of multiplicative order p-1.
int find_generator(const PrimeField& f);

// Dense matrix over GF(p) with labelled rows and columns.
struct FFMatrix {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<std::int32_t> data;  // row-major, entries in [0, p)
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  FFMatrix() = default;
  FFMatrix(int p_, int rows_, int cols_);

  std::int32_t& at(int r, int c) { return data[r * cols + c]; }
  std::int32_t at(int r, int c) const { return data[r * cols + c]; }
};

// Rank by Gaussian elimination mod p; deterministic pivot rule (first
// non-zero in column order). The input is not modified.
int matrix_rank(const FFMatrix& a);

// Rank of the submatrix formed by the given columns.
int matrix_rank_cols(const FFMatrix& a, const std::vector<int>& cols);

// Matroid whose independence is linear independence of column sets.
// Column labels must be distinct.
Matroid column_matroid(const FFMatrix& a);

}  // namespace ms0

#endif  // MS0_FIELD_HPP
