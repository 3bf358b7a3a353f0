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

#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "taquin/dimensions.h"
#include "taquin/errors.h"
#include "taquin/json_io.h"
#include "taquin/tableau.h"

namespace taquin {
namespace {

std::optional<std::size_t> InvalidAt(const std::vector<Box>& path) {
  try {
    validate(path);
    return std::nullopt;
  } catch (const InvalidPrefix& e) {
    return e.position();
  }
}

TEST_CASE("validate reports the first bad prefix") {
  CHECK(!InvalidAt({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(InvalidAt({{1, 0, 0}}) == 1u);
  CHECK(InvalidAt({{0, 0, 0}, {0, 0, 0}}) == 2u);
  CHECK(InvalidAt({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}) == 3u);
  CHECK(InvalidAt({{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}) == 3u);
  CHECK_THROWS_AS(Tableau({{0, 0, 1}}), InvalidPrefix);
}

TEST_CASE("canonical tableau uses layer order") {
  CHECK(canonical_tableau(from_rows({{1}})).path() ==
        std::vector<Box>{{0, 0, 0}});
  CHECK(canonical_tableau(from_rows({{2, 1}, {1}})).path() ==
        std::vector<Box>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(canonical_tableau(Diagram3()).path().empty());
  for (int n = 0; n <= 8; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      const Tableau t = canonical_tableau(d);
      CHECK(!first_invalid_prefix(t.path()));
      CHECK(shape_of(t) == d);
    }
  }
}

TEST_CASE("shape_of") {
  CHECK(shape_of(Tableau({{0, 0, 0}})) == from_rows({{1}}));
  CHECK(shape_of(Tableau({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) ==
        from_rows({{1, 1}, {1}}));
  CHECK(shape_of(Tableau()) == Diagram3());
}

TEST_CASE("entry grid increases along every axis") {
  const auto small = entry_grid(Tableau({{0, 0, 0}, {1, 0, 0}}));
  CHECK(small.size() == 2);
  CHECK(small.at({0, 0, 0}) == 1);
  CHECK(small.at({1, 0, 0}) == 2);
  CHECK(entry_grid(Tableau()).empty());

  const auto grid = entry_grid(canonical_tableau(from_rows({{2, 1}, {1}})));
  for (const auto& [b, k] : grid) {
    for (const Box& next : {Box{b.x + 1, b.y, b.z}, Box{b.x, b.y + 1, b.z},
                            Box{b.x, b.y, b.z + 1}}) {
      if (grid.count(next)) CHECK(grid.at(next) > k);
    }
  }
}

TEST_CASE("path enumeration count equals exact dimension up to size 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      const auto all = testing::EnumerateTableaux(d);
      CHECK(BigDim(all.size()) == exact_dim_3d(d));
      for (const auto& path : all) CHECK(!first_invalid_prefix(path));
    }
  }
}

TEST_CASE("tableau json round trip") {
  const Tableau t = canonical_tableau(from_rows({{2, 1}, {1}}));
  CHECK(parse_tableau(path_to_json(t.path()).dump()) == t);
  CHECK_THROWS_AS(parse_tableau("[[0,0]]"), ParseError);
  CHECK_THROWS_AS(parse_tableau("[[0,1,0]]"), InvalidPrefix);
}

}  // namespace
}  // namespace taquin
