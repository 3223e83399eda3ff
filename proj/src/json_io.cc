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

#include "sppos/json_io.h"

#include <string>
#include <vector>

#include "sppos/errors.h"

namespace sppos {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InvalidInputError(std::string("missing key \"") + key + "\"");
  }
  return *it;
}

int AsInt(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw InvalidInputError(what + " must be an integer");
  }
  const auto value = j.get<long long>();
  if (value < -1'000'000 || value > 1'000'000) {
    throw InvalidInputError(what + " out of range");
  }
  return static_cast<int>(value);
}

int IntField(const Json& j, const char* key) {
  return AsInt(Field(j, key), std::string("\"") + key + "\"");
}

std::vector<int> AsIntList(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInputError(what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& item : j) out.push_back(AsInt(item, what + " entry"));
  return out;
}

Json SubsetToJson(const Subset& s) { return Json(s.members()); }

Subset SubsetFromJson(const Json& j, int n, const std::string& what) {
  return Subset::FromMembers(n, AsIntList(j, what));
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError(std::string("JSON ") + e.what());
  }
}

Json MatroidToJson(const Matroid& m) {
  Json bases = Json::array();
  for (const Subset& b : m.LexSortedBases()) bases.push_back(SubsetToJson(b));
  Json j;
  j["n"] = m.n();
  j["k"] = m.k();
  j["bases"] = std::move(bases);
  return j;
}

Matroid MatroidFromJson(const Json& j) {
  const int n = IntField(j, "n");
  const int k = IntField(j, "k");
  CheckGroundSize(n);
  const Json& list = Field(j, "bases");
  if (!list.is_array()) throw InvalidInputError("\"bases\" must be an array");
  std::vector<Mask> bases;
  for (const Json& item : list) {
    const Subset b = SubsetFromJson(item, n, "basis");
    if (b.size() != k) {
      throw InvalidInputError("basis " + b.ToString() + " does not have k = " +
                              std::to_string(k) + " elements");
    }
    bases.push_back(b.mask());
  }
  return Matroid(n, std::move(bases));
}

Json NecklaceToJson(const GrassmannNecklace& necklace) {
  Json entries = Json::array();
  for (const Subset& e : necklace.entries()) entries.push_back(SubsetToJson(e));
  Json j;
  j["n"] = necklace.n();
  j["k"] = necklace.k();
  j["entries"] = std::move(entries);
  return j;
}

GrassmannNecklace NecklaceFromJson(const Json& j) {
  const int n = IntField(j, "n");
  const int k = IntField(j, "k");
  CheckGroundSize(n);
  const Json& list = Field(j, "entries");
  if (!list.is_array() || static_cast<int>(list.size()) != n) {
    throw InvalidInputError("\"entries\" must list exactly n subsets");
  }
  std::vector<Subset> entries;
  for (const Json& item : list) {
    Subset e = SubsetFromJson(item, n, "necklace entry");
    if (e.size() != k) {
      throw InvalidInputError("necklace entry " + e.ToString() +
                              " does not have k = " + std::to_string(k) +
                              " elements");
    }
    entries.push_back(e);
  }
  return GrassmannNecklace(std::move(entries));
}

Json DecPermToJson(const DecoratedPermutation& dp) {
  Json colors = Json::object();
  for (const auto& [point, color] : dp.colors()) {
    colors[std::to_string(point)] = color;
  }
  Json j;
  j["n"] = dp.n();
  j["perm"] = dp.one_line();
  j["colors"] = std::move(colors);
  return j;
}

DecoratedPermutation DecPermFromJson(const Json& j) {
  const int n = IntField(j, "n");
  std::vector<int> perm = AsIntList(Field(j, "perm"), "\"perm\"");
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidInputError("\"perm\" must have n entries");
  }
  std::map<int, int> colors;
  if (j.contains("colors")) {
    const Json& table = j.at("colors");
    if (!table.is_object()) {
      throw InvalidInputError("\"colors\" must be an object");
    }
    for (const auto& [key, value] : table.items()) {
      if (key.empty() || key.size() > 6 ||
          key.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidInputError("color key \"" + key +
                                "\" is not a decimal integer");
      }
      colors[std::stoi(key)] = AsInt(value, "color of " + key);
    }
  }
  return DecoratedPermutation(std::move(perm), std::move(colors));
}

Json LeDiagramToJson(const LeDiagram& d) {
  Json shape = Json::array();
  Json filling = Json::array();
  for (int r = 1; r <= d.k() && d.RowLength(r) > 0; ++r) {
    shape.push_back(d.RowLength(r));
    Json row = Json::array();
    for (int c = 1; c <= d.RowLength(r); ++c) {
      row.push_back(d.HasBullet({r, c}) ? 1 : 0);
    }
    filling.push_back(std::move(row));
  }
  Json j;
  j["k"] = d.k();
  j["n"] = d.n();
  j["shape"] = std::move(shape);
  j["filling"] = std::move(filling);
  return j;
}

LeDiagram LeDiagramFromJson(const Json& j) {
  const int k = IntField(j, "k");
  const int n = IntField(j, "n");
  std::vector<int> shape = AsIntList(Field(j, "shape"), "\"shape\"");
  const Json& rows = Field(j, "filling");
  if (!rows.is_array()) throw InvalidInputError("\"filling\" must be an array");
  std::vector<std::vector<bool>> filling;
  for (const Json& row : rows) {
    std::vector<bool> cells;
    for (int value : AsIntList(row, "filling row")) {
      if (value != 0 && value != 1) {
        throw InvalidInputError("filling cells must be 0 or 1");
      }
      cells.push_back(value == 1);
    }
    filling.push_back(std::move(cells));
  }
  return LeDiagram(k, n, std::move(shape), std::move(filling));
}

Json NonAdjacentToJson(const NonAdjacentSet& a, std::optional<int> k) {
  Json j;
  j["n"] = a.n();
  if (k) j["k"] = *k;
  j["A"] = a.members();
  return j;
}

NonAdjacentInput NonAdjacentFromJson(const Json& j) {
  const int n = IntField(j, "n");
  std::optional<int> k;
  if (j.contains("k")) k = IntField(j, "k");
  return {NonAdjacentSet(SubsetFromJson(Field(j, "A"), n, "\"A\"")), k};
}

Json CensusRecordToJson(const SparsePavingPositroid& record) {
  Json j;
  j["A"] = record.a.members();
  j["necklace"] = NecklaceToJson(record.necklace);
  j["perm"] = DecPermToJson(record.perm);
  j["le"] = LeDiagramToJson(record.le);
  j["bases"] = MatroidToJson(record.matroid);
  return j;
}

}  // namespace sppos
