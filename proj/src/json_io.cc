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

#include "taquin/json_io.h"

#include <fstream>
#include <limits>
#include <sstream>

#include "taquin/errors.h"

namespace taquin {
namespace {

using nlohmann::json;

int ToInt(const json& v) {
  if (!v.is_number_integer()) throw ParseError("expected an integer");
  const auto value = v.get<int64_t>();
  if (value < 0 || value > std::numeric_limits<int>::max()) {
    throw ParseError("integer out of range: " + std::to_string(value));
  }
  return static_cast<int>(value);
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Diagram3 diagram_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("diagram must be a JSON array");
  if (j.empty()) return Diagram3();
  if (j[0].is_array()) {
    RowForm rows;
    for (const json& row : j) {
      if (!row.is_array()) throw ParseError("mixed nesting depth in diagram");
      std::vector<int>& out = rows.emplace_back();
      for (const json& v : row) out.push_back(ToInt(v));
    }
    return from_rows(rows);
  }
  std::vector<int> parts;
  for (const json& v : j) parts.push_back(ToInt(v));
  return from_partition(parts);
}

Diagram3 parse_diagram(std::string_view text) {
  return diagram_from_json(Parse(text));
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("tableau must be a JSON array");
  std::vector<Box> path;
  for (const json& b : j) {
    if (!b.is_array() || b.size() != 3) {
      throw ParseError("tableau entries must be [x,y,z] triples");
    }
    path.push_back({ToInt(b[0]), ToInt(b[1]), ToInt(b[2])});
  }
  return Tableau(std::move(path));
}

Tableau parse_tableau(std::string_view text) {
  return tableau_from_json(Parse(text));
}

json diagram_to_json(const Diagram3& d) { return d.rows(); }

json box_to_json(const Box& b) { return json::array({b.x, b.y, b.z}); }

json path_to_json(const std::vector<Box>& path) {
  json out = json::array();
  for (const Box& b : path) out.push_back(box_to_json(b));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace taquin
