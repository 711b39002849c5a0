// Copyright 2026 The bicross Authors
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

#ifndef BICROSS_SERIALIZATION_HPP_
#define BICROSS_SERIALIZATION_HPP_

#include <json.hpp>

#include "bicross/crossing.hpp"
#include "bicross/generators.hpp"
#include "bicross/spanning.hpp"
#include "bicross/strategies.hpp"

namespace bicross {

using Json = nlohmann::json;

// {"vertices": [...], "edges": [[a, b], ...], "tie": bool}
Json to_json(const Tree& tree);
Tree tree_from_json(const Json& j);

// The coloring string, e.g. "RBBD".
Json to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j);

// {"v": [...], "w": [...]} of 0-based point indices.
Json to_json(const GridLabels& labels);
GridLabels grid_labels_from_json(const Json& j);

// Count, crossing pairs and both trees.
Json to_json(const CrossingReport& report);

Json to_json(const StrategyOutcome& outcome);

}  // namespace bicross

#endif  // BICROSS_SERIALIZATION_HPP_
