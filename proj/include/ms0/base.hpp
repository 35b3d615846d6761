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

#ifndef MS0_BASE_HPP
#define MS0_BASE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ms0 {

// Subsets of a ground set are bit masks over element positions.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 63;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
// a subset of b
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Next k-subset in colex order (Gosper's hack). Returns 0 on wrap.
inline Mask next_same_popcount(Mask v) {
  if (v == 0) return 0;
  Mask c = v & (~v + 1);
  Mask r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Violation of the formula formation rules; carries the offending variable.
struct FormationError : InputError {
  std::string variable;
  FormationError(const std::string& msg, std::string var)
      : InputError(msg), variable(std::move(var)) {}
};

struct BudgetError : std::runtime_error {
  unsigned long long estimate;
  unsigned long long limit;
  BudgetError(unsigned long long est, unsigned long long lim)
      : std::runtime_error("sweep estimate " + std::to_string(est) +
                           " exceeds budget " + std::to_string(lim)),
        estimate(est),
        limit(lim) {}
};

inline unsigned long long sat_mul(unsigned long long a,
                                  unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > ~0ull / b) return ~0ull;
  return a * b;
}

// Optional cap on subset sweeps. A default-constructed budget is unlimited.
struct Budget {
  unsigned long long limit = ~0ull;
  void require(unsigned long long estimate) const {
    if (estimate > limit) throw BudgetError(estimate, limit);
  }
};

// FNV-1a, used to fingerprint CLI inputs in reports.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ms0

#endif  // MS0_BASE_HPP
