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

// Slow, obviously-correct reference implementations used only by tests.
// They see a diagram only through Diagram3::contains and boxes().

#ifndef TAQUIN_TESTS_ORACLES_H_
#define TAQUIN_TESTS_ORACLES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "taquin/diagram.h"
#include "taquin/dimensions.h"

namespace taquin::testing {

inline bool PredecessorsIn(const std::set<Box>& have, const Box& b) {
  return (b.x == 0 || have.count({b.x - 1, b.y, b.z})) &&
         (b.y == 0 || have.count({b.x, b.y - 1, b.z})) &&
         (b.z == 0 || have.count({b.x, b.y, b.z - 1}));
}

// Every growth path to `shape`, by depth-first search over box sets.
inline std::vector<std::vector<Box>> EnumerateTableaux(const Diagram3& shape) {
  const std::vector<Box> all = shape.boxes();
  std::vector<std::vector<Box>> out;
  std::set<Box> have;
  std::vector<Box> path;
  std::function<void()> walk = [&] {
    if (path.size() == all.size()) {
      out.push_back(path);
      return;
    }
    for (const Box& b : all) {
      if (have.count(b) || !PredecessorsIn(have, b)) continue;
      have.insert(b);
      path.push_back(b);
      walk();
      path.pop_back();
      have.erase(b);
    }
  };
  walk();
  return out;
}

// Number of growth paths, memoized on the bitmask of present boxes.
// Shapes up to 63 boxes; practical up to a few tens.
inline BigDim BruteDim(const Diagram3& shape) {
  const std::vector<Box> all = shape.boxes();
  std::map<Box, int> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
  std::unordered_map<uint64_t, BigDim> memo;
  // Paths from the set `mask` up to the full shape.
  std::function<BigDim(uint64_t)> up = [&](uint64_t mask) -> BigDim {
    if (mask == (all.size() == 64 ? ~0ULL : (1ULL << all.size()) - 1)) {
      return 1;
    }
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    BigDim total = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) continue;
      const Box& b = all[i];
      const bool ok = (b.x == 0 || mask >> index[{b.x - 1, b.y, b.z}] & 1) &&
                      (b.y == 0 || mask >> index[{b.x, b.y - 1, b.z}] & 1) &&
                      (b.z == 0 || mask >> index[{b.x, b.y, b.z - 1}] & 1);
      if (ok) total += up(mask | 1ULL << i);
    }
    memo.emplace(mask, total);
    return total;
  };
  return up(0);
}

// 3D hook length by walking the three rays.
inline int BruteHook(const Diagram3& d, const Box& b) {
  int count = 1;
  for (int i = b.x + 1; d.contains({i, b.y, b.z}); ++i) ++count;
  for (int j = b.y + 1; d.contains({b.x, j, b.z}); ++j) ++count;
  for (int k = b.z + 1; d.contains({b.x, b.y, k}); ++k) ++count;
  return count;
}

// Unnormalized transition weight from the defining product.
inline double BruteWeight(const Diagram3& d, const Box& b) {
  double w = 1.0;
  for (int i = 0; i < b.x; ++i) {
    const int h = BruteHook(d, {i, b.y, b.z});
    w *= h / (h + 1.0);
  }
  for (int j = 0; j < b.y; ++j) {
    const int h = BruteHook(d, {b.x, j, b.z});
    w *= h / (h + 1.0);
  }
  for (int k = 0; k < b.z; ++k) {
    const int h = BruteHook(d, {b.x, b.y, k});
    w *= h / (h + 1.0);
  }
  return w;
}

}  // namespace taquin::testing

#endif  // TAQUIN_TESTS_ORACLES_H_
