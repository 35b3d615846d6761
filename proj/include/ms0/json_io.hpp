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

#ifndef MS0_JSON_IO_HPP
#define MS0_JSON_IO_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "ms0/amalgam.hpp"
#include "ms0/evaluate.hpp"
#include "ms0/gain_graph.hpp"
#include "ms0/matroid.hpp"

namespace ms0 {

using Json = nlohmann::json;

// {"group": {...}, "vertices": [...], "edges": [{"id","u","v","gain"}...]}
Json gain_graph_to_json(const GainGraph& g);
std::shared_ptr<GainGraph> gain_graph_from_json(const Json& j);

// {"elements": [...], "def": {"kind": "independent_sets"|"circuits"|
//  "matrix"|"gain_graph"|"amalgam", ...}}
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// Loads an independence structure: an "independent_sets" definition is
// taken as the raw family without the matroid validation, so the axiom
// sentences can be evaluated on corrupted families; any other kind goes
// through the matroid loader.
SetSystem structure_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ms0

#endif  // MS0_JSON_IO_HPP
