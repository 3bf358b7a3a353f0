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

#include "taquin/tableau.h"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "taquin/errors.h"

namespace taquin {
namespace {

uint64_t ColumnKey(int x, int y) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
         static_cast<uint32_t>(y);
}

}  // namespace

Tableau::Tableau(std::vector<Box> path) : path_(std::move(path)) {
  validate(path_);
}

std::optional<std::size_t> first_invalid_prefix(std::span<const Box> path) {
  absl::flat_hash_map<uint64_t, int> heights;
  heights.reserve(path.size());
  auto height = [&](int x, int y) {
    auto it = heights.find(ColumnKey(x, y));
    return it == heights.end() ? 0 : it->second;
  };
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Box& b = path[k];
    // A duplicate fails the height test as well: its column is already
    // taller than b.z.
    const bool ok = b.x >= 0 && b.y >= 0 && b.z >= 0 &&
                    height(b.x, b.y) == b.z &&
                    (b.x == 0 || height(b.x - 1, b.y) > b.z) &&
                    (b.y == 0 || height(b.x, b.y - 1) > b.z);
    if (!ok) return k + 1;
    heights[ColumnKey(b.x, b.y)] = b.z + 1;
  }
  return std::nullopt;
}

void validate(std::span<const Box> path) {
  if (auto bad = first_invalid_prefix(path)) throw InvalidPrefix(*bad);
}

Tableau canonical_tableau(const Diagram3& shape) {
  std::vector<Box> path = shape.boxes();
  std::sort(path.begin(), path.end(), [](const Box& a, const Box& b) {
    return std::tie(a.z, a.y, a.x) < std::tie(b.z, b.y, b.x);
  });
  return Tableau::FromValidPath(std::move(path));
}

Diagram3 shape_of(const Tableau& t) { return diagram_from_boxes(t.path()); }

std::map<Box, int> entry_grid(const Tableau& t) {
  std::map<Box, int> grid;
  for (std::size_t k = 0; k < t.size(); ++k) {
    grid.emplace(t[k], static_cast<int>(k) + 1);
  }
  return grid;
}

}  // namespace taquin
