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

#ifndef MS0_GROUND_SET_HPP
#define MS0_GROUND_SET_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "ms0/base.hpp"

namespace ms0 {

// Ordered list of distinct element labels. Iteration order is the definition
// order and is stable; subsets are masks over positions in that order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  bool contains(const std::string& label) const {
    return index_.count(label) != 0;
  }
  int index(const std::string& label) const;  // throws InputError if absent

  Mask full() const { return full_mask(size()); }
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> unmask(Mask m) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace ms0

#endif  // MS0_GROUND_SET_HPP
