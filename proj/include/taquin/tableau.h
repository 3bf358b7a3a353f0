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

// Standard Young tableaux stored as growth paths: the box holding entry k is
// path[k - 1]. Entries are never materialized except by entry_grid().

#ifndef TAQUIN_TABLEAU_H_
#define TAQUIN_TABLEAU_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "taquin/diagram.h"

namespace taquin {

class Tableau {
 public:
  Tableau() = default;
  // Validates; throws InvalidPrefix.
  explicit Tableau(std::vector<Box> path);

  // Skips validation. For transformation code whose output is valid by
  // construction.
  static Tableau FromValidPath(std::vector<Box> path) {
    Tableau t;
    t.path_ = std::move(path);
    return t;
  }

  std::size_t size() const { return path_.size(); }
  bool empty() const { return path_.empty(); }
  const std::vector<Box>& path() const { return path_; }
  const Box& operator[](std::size_t i) const { return path_[i]; }

  // Mutable access for in-place transformations. Callers keep the path valid.
  std::vector<Box>& mutable_path() { return path_; }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    return a.path_ <=> b.path_;
  }

 private:
  std::vector<Box> path_;
};

// 1-based position of the first prefix that is not a diagram, or nullopt
// when the whole path is valid.
std::optional<std::size_t> first_invalid_prefix(std::span<const Box> path);
// Throws InvalidPrefix(k).
void validate(std::span<const Box> path);

// Boxes of the shape in (z, y, x) layer order.
Tableau canonical_tableau(const Diagram3& shape);

Diagram3 shape_of(const Tableau& t);

std::map<Box, int> entry_grid(const Tableau& t);

}  // namespace taquin

#endif  // TAQUIN_TABLEAU_H_
