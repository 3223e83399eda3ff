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

#ifndef SPPOS_JSON_IO_H_
#define SPPOS_JSON_IO_H_

#include <optional>
#include <string_view>

#include <json.hpp>

#include "sppos/decorated_permutation.h"
#include "sppos/enumeration.h"
#include "sppos/le_diagram.h"
#include "sppos/matroid.h"
#include "sppos/necklace.h"

namespace sppos {

// Key order is preserved so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// Parses JSON text; throws InvalidInputError carrying the parser's position.
Json ParseJson(std::string_view text);

// Every *FromJson throws InvalidInputError on a missing key, a wrong type or
// a violated invariant.

// {"n": n, "k": k, "bases": [[...], ...]}, each basis ascending and the list
// sorted lexicographically.
Json MatroidToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j);

// {"n": n, "k": k, "entries": [I_1, ..., I_n]}, each entry ascending.
Json NecklaceToJson(const GrassmannNecklace& necklace);
GrassmannNecklace NecklaceFromJson(const Json& j);

// {"n": n, "perm": [pi(1), ..., pi(n)], "colors": {"i": +-1, ...}} with color
// keys in increasing numeric order.
Json DecPermToJson(const DecoratedPermutation& dp);
DecoratedPermutation DecPermFromJson(const Json& j);

// {"k": k, "n": n, "shape": [...], "filling": [[0|1, ...], ...]}; zero parts
// are omitted on output and accepted on input. Only the shape is validated;
// check IsLe separately.
Json LeDiagramToJson(const LeDiagram& d);
LeDiagram LeDiagramFromJson(const Json& j);

// {"n": n, "k": k, "A": [...]}; "k" is optional on input.
struct NonAdjacentInput {
  NonAdjacentSet a;
  std::optional<int> k;
};
Json NonAdjacentToJson(const NonAdjacentSet& a, std::optional<int> k);
NonAdjacentInput NonAdjacentFromJson(const Json& j);

// One census line: {"A": [...], "necklace": ..., "perm": ..., "le": ...,
// "bases": ...}.
Json CensusRecordToJson(const SparsePavingPositroid& record);

}  // namespace sppos

#endif  // SPPOS_JSON_IO_H_
