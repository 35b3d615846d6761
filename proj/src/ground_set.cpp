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

#include "ms0/ground_set.hpp"

namespace ms0 {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxElements) {
    throw InputError("ground set too large: " +
                     std::to_string(labels_.size()));
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) throw InputError("empty element label");
    auto [it, fresh] = index_.emplace(labels_[i], i);
    (void)it;
    if (!fresh) throw InputError("duplicate element label: " + labels_[i]);
  }
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw InputError("label not in ground set: " + label);
  }
  return it->second;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index(l));
  return m;
}

std::vector<std::string> GroundSet::unmask(Mask m) const {
  if (!is_subset(m, full())) throw InputError("mask outside ground set");
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (has_bit(m, i)) out.push_back(labels_[i]);
  }
  return out;
}

}  // namespace ms0
