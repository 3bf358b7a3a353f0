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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "taquin/errors.h"
#include "taquin/processes.h"
#include "taquin/schutz.h"

namespace taquin {
namespace {

// Jeu de taquin on the explicit entry grid.
SchutzResult GridSchutz(const Tableau& t) {
  std::map<Box, int> grid = entry_grid(t);
  Box hole = kOrigin;
  grid.erase(hole);
  Nerve nerve;
  nerve.steps.push_back(hole);
  while (true) {
    std::optional<Box> best;
    for (const Box& n : {Box{hole.x + 1, hole.y, hole.z},
                         Box{hole.x, hole.y + 1, hole.z},
                         Box{hole.x, hole.y, hole.z + 1}}) {
      auto it = grid.find(n);
      if (it != grid.end() && (!best || it->second < grid.at(*best))) best = n;
    }
    if (!best) break;
    grid[hole] = grid.at(*best);
    grid.erase(*best);
    hole = *best;
    nerve.steps.push_back(hole);
  }
  nerve.end = hole;
  std::vector<std::pair<int, Box>> order;
  for (const auto& [b, k] : grid) order.emplace_back(k, b);
  std::sort(order.begin(), order.end());
  std::vector<Box> path;
  for (const auto& [k, b] : order) path.push_back(b);
  return {Tableau(path), nerve};
}

RandomSource SourceWithFirstBit(bool bit) {
  for (uint64_t seed = 0;; ++seed) {
    RandomSource probe(seed);
    if (probe.FairBit() == bit) return RandomSource(seed);
  }
}

TEST_CASE("schutz examples") {
  const SchutzResult r = schutz(Tableau({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(r.tableau.path() == std::vector<Box>{{0, 0, 0}, {0, 1, 0}});
  CHECK(r.nerve.end == Box{1, 0, 0});

  const SchutzResult one = schutz(Tableau({{0, 0, 0}}));
  CHECK(one.tableau.empty());
  CHECK(one.nerve.end == kOrigin);

  const SchutzResult column =
      schutz(Tableau({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}}));
  CHECK(column.tableau.path() == std::vector<Box>{{0, 0, 0}, {0, 0, 1}});
  CHECK(column.nerve.steps ==
        std::vector<Box>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  CHECK(column.nerve.end == Box{0, 0, 2});

  CHECK_THROWS_AS(schutz(Tableau()), EmptyTableau);
  CHECK_THROWS_AS(schutz_preserve(Tableau()), EmptyTableau);
  CHECK_THROWS_AS(schutz_preserve_inverse(Tableau()), EmptyTableau);
}

TEST_CASE("fast pass matches grid jeu de taquin on all tableaux up to 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      const Diagram3 before = d;
      for (const auto& path : testing::EnumerateTableaux(d)) {
        const Tableau t(path);
        const SchutzResult fast = schutz(t);
        const SchutzResult slow = GridSchutz(t);
        CHECK(fast.tableau == slow.tableau);
        CHECK(fast.nerve.steps == slow.nerve.steps);
        CHECK(fast.nerve.end == slow.nerve.end);
        CHECK(is_removable(d, fast.nerve.end));
        for (std::size_t i = 1; i < fast.nerve.steps.size(); ++i) {
          CHECK(IsSuccessor(fast.nerve.steps[i - 1], fast.nerve.steps[i]));
        }
        // Entries that move are exactly those of the nerve.
        const Tableau kept = schutz_preserve(t);
        std::size_t changed = 0;
        for (std::size_t i = 1; i < path.size(); ++i) {
          if (kept[i - 1] != path[i]) ++changed;
        }
        CHECK(changed == fast.nerve.shifts());
      }
    }
  }
}

TEST_CASE("schutz_preserve examples") {
  CHECK(schutz_preserve(Tableau({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})).path() ==
        std::vector<Box>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}});
  CHECK(schutz_preserve(Tableau({{0, 0, 0}})).path() ==
        std::vector<Box>{{0, 0, 0}});
  const Tableau column({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}});
  CHECK(schutz_preserve(column) == column);
  CHECK(schutz_preserve_inverse(
            Tableau({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}})).path() ==
        std::vector<Box>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("schutz_preserve is a bijection with the reverse scan as inverse") {
  int shapes_with_several_cycles = 0;
  int shapes = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      const auto all = testing::EnumerateTableaux(d);
      std::map<std::vector<Box>, std::vector<Box>> forward;
      std::set<std::vector<Box>> images;
      for (const auto& path : all) {
        const Tableau image = schutz_preserve(Tableau(path));
        CHECK(shape_of(image) == d);
        forward[path] = image.path();
        images.insert(image.path());
        CHECK(schutz_preserve_inverse(image).path() == path);
        CHECK(schutz_preserve(schutz_preserve_inverse(Tableau(path))).path() ==
              path);
      }
      CHECK(images.size() == all.size());
      // Cycle count of the permutation.
      std::set<std::vector<Box>> seen;
      int cycles = 0;
      for (const auto& path : all) {
        if (seen.count(path)) continue;
        ++cycles;
        for (auto p = path; !seen.count(p); p = forward[p]) seen.insert(p);
      }
      ++shapes;
      if (cycles > 1) ++shapes_with_several_cycles;
    }
  }
  MESSAGE("shapes with more than one cycle: " << shapes_with_several_cycles
                                              << " of " << shapes);
}

TEST_CASE("randomize_prefix") {
  {
    RandomSource r = SourceWithFirstBit(false);
    const Tableau t({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(randomize_prefix(t, r).path() ==
          std::vector<Box>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}});
  }
  {
    RandomSource r = SourceWithFirstBit(true);
    const Tableau t({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(randomize_prefix(t, r).path() ==
          std::vector<Box>{{0, 0, 0}, {0, 0, 1}, {1, 0, 0}});
  }
  const Tableau column({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  for (uint64_t seed = 0; seed < 8; ++seed) {
    RandomSource r(seed);
    CHECK(randomize_prefix(column, r) == column);
  }
  // Each L-shape ends up in each of its two orders.
  for (const auto& pair : std::vector<std::pair<Box, Box>>{
           {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}}}) {
    std::set<std::vector<Box>> outcomes;
    for (uint64_t seed = 0; seed < 32; ++seed) {
      RandomSource r(seed);
      outcomes.insert(
          randomize_prefix(Tableau({kOrigin, pair.first, pair.second}), r)
              .path());
    }
    CHECK(outcomes.size() == 2);
  }
}

TEST_CASE("schutz_rnd") {
  RandomSource r(1);
  CHECK(schutz_rnd(Tableau({{0, 0, 0}}), r, true).path() ==
        std::vector<Box>{{0, 0, 0}});
  CHECK(schutz_rnd(Tableau({{0, 0, 0}}), r, false).empty());

  // Same draws as randomize_prefix followed by schutz.
  const Tableau t = canonical_tableau(from_rows({{2, 2, 1}, {2, 1}, {1}, {1}}));
  RandomSource a(9), b(9);
  Tableau x = t;
  for (int i = 0; i < 50; ++i) {
    const Tableau y = schutz_rnd(x, a, true);
    SchutzResult s = schutz(randomize_prefix(x, b));
    std::vector<Box> path = s.tableau.path();
    path.push_back(s.nerve.end);
    CHECK(y.path() == path);
    x = y;
  }

  // Both tableaux of {2,1} are visited about equally.
  Tableau u({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  RandomSource c(17);
  int first = 0;
  const int iterations = 10000;
  for (int i = 0; i < iterations; ++i) {
    u = schutz_rnd(u, c, true);
    if (u[1] == Box{1, 0, 0}) ++first;
  }
  const double sigma = std::sqrt(iterations * 0.25);
  CHECK(std::abs(first - iterations / 2.0) < 3 * sigma);
}

TEST_CASE("schutz_rnd with addlast keeps the shape") {
  RandomSource r(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tableau t = sample_pp_tableau(50, r);
    const Tableau u = schutz_rnd(t, r, true);
    CHECK(!first_invalid_prefix(u.path()));
    CHECK(shape_of(u) == shape_of(t));
  }
}

}  // namespace
}  // namespace taquin
