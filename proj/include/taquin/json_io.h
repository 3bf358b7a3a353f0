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

// JSON forms of diagrams and tableaux.
//
//   diagram, 2D:  [4,4,3,3,1]           (partition, non-increasing parts)
//   diagram, 3D:  [[2,2,1],[2,1],[1]]   (rows of column heights)
//   tableau:      [[0,0,0],[1,0,0],...] (growth path of [x,y,z] boxes)
//
// Diagram inputs are told apart by nesting depth; `[]` is the empty diagram.

#ifndef TAQUIN_JSON_IO_H_
#define TAQUIN_JSON_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "taquin/diagram.h"
#include "taquin/tableau.h"

namespace taquin {

// Throws ParseError on malformed input and the diagram errors on invalid
// shapes.
Diagram3 diagram_from_json(const nlohmann::json& j);
Diagram3 parse_diagram(std::string_view text);

// Throws ParseError or InvalidPrefix.
Tableau tableau_from_json(const nlohmann::json& j);
Tableau parse_tableau(std::string_view text);

nlohmann::json diagram_to_json(const Diagram3& d);
nlohmann::json box_to_json(const Box& b);
nlohmann::json path_to_json(const std::vector<Box>& path);

// Whole file contents; throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace taquin

#endif  // TAQUIN_JSON_IO_H_
