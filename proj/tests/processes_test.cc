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

#include <array>
#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.h"
#include "taquin/dimensions.h"
#include "taquin/errors.h"
#include "taquin/processes.h"
#include "taquin/schutz.h"

namespace taquin {
namespace {

double Sum(const TransitionTable& t) {
  double s = 0.0;
  for (const auto& [b, p] : t.entries) s += p;
  return s;
}

TEST_CASE("3D hook lengths") {
  CHECK(hook3_length(from_rows({{1}}), {0, 0, 0}) == 1);
  CHECK(hook3_length(from_rows({{2, 1}, {1}}), {0, 0, 0}) == 4);
  CHECK(hook3_length(from_rows({{3}}), {0, 0, 1}) == 2);
  CHECK(hook3_length(from_rows({{1, 1, 1}}), {1, 0, 0}) == 2);
  CHECK_THROWS_AS(hook3_length(from_rows({{1}}), {1, 0, 0}), BoxNotInDiagram);
  for (int n = 1; n <= 7; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      for (const Box& b : d.boxes()) {
        CHECK(hook3_length(d, b) == testing::BruteHook(d, b));
      }
    }
  }
}

TEST_CASE("transition weights") {
  CHECK(pp_weight(Diagram3(), {0, 0, 0}) == 1.0);
  CHECK(pp_weight(from_rows({{1}}), {1, 0, 0}) == doctest::Approx(0.5));
  CHECK(pp_weight(from_rows({{1, 1}}), {2, 0, 0}) ==
        doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(pp_weight(from_rows({{1}}), {1, 1, 0}), IllegalCorner);
  for (int n = 0; n <= 7; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      for (const Box& b : corners(d).addable) {
        const double w = pp_weight(d, b);
        CHECK(w > 0.0);
        CHECK(w <= 1.0);
        CHECK(w == doctest::Approx(testing::BruteWeight(d, b)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("transition tables") {
  const TransitionTable root = pp_transitions(Diagram3());
  CHECK(root.entries.size() == 1);
  CHECK(root.entries.at({0, 0, 0}) == 1.0);
  const TransitionTable one = pp_transitions(from_rows({{1}}));
  for (const auto& [b, p] : one.entries) CHECK(p == doctest::Approx(1.0 / 3));

  const std::array<std::array<int, 3>, 3> perms = {
      {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}}};
  for (int n = 1; n <= 7; ++n) {
    for (const Diagram3& d : all_plane_partitions(n)) {
      const TransitionTable t = pp_transitions(d);
      CHECK(std::abs(Sum(t) - 1.0) < 1e-12);
      for (const auto& perm : perms) {
        const TransitionTable u = pp_transitions(permute_axes(d, perm));
        for (const auto& [b, p] : t.entries) {
          CHECK(u.entries.at(permute_axes(b, perm)) ==
                doctest::Approx(p).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("2D Plancherel rule") {
  CHECK(plancherel2d_transitions(Diagram3()).entries.at({0, 0, 0}) == 1.0);
  const auto single = plancherel2d_transitions(from_partition({1}));
  CHECK(single.entries.size() == 2);
  CHECK(single.entries.at({1, 0, 0}) == 0.5);
  CHECK(single.entries.at({0, 1, 0}) == 0.5);
  const auto t = plancherel2d_transitions(from_partition({2, 1}));
  CHECK(t.entries.at({2, 0, 0}) == doctest::Approx(3.0 / 8));
  CHECK(t.entries.at({1, 1, 0}) == doctest::Approx(2.0 / 8));
  CHECK(t.entries.at({0, 2, 0}) == doctest::Approx(3.0 / 8));
  CHECK_THROWS_AS(plancherel2d_transitions(from_rows({{2}})), NotPlanar);

  for (int n = 0; n <= 12; ++n) {
    for (const Diagram3& d : all_partitions_2d(n)) {
      const BigDim dim = hook_dim_2d(d);
      BigRational total = 0;
      for (const Box& b : corners(d).addable) {
        if (b.z == 0) total += BigRational(hook_dim_2d(add_box(d, b)), dim * (n + 1));
      }
      CHECK(total == 1);
      // On the z = 0 slab the 3D weights reproduce the Plancherel rule.
      const auto exact = plancherel2d_transitions(d);
      GrowthSampler s({GrowthProcess::kPlancherel2d});
      const Tableau canonical = canonical_tableau(d);
      for (const Box& b : canonical.path()) s.Add(b);
      for (const auto& [b, p] : exact.entries) {
        CHECK(s.Probability(b) == doctest::Approx(p).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("incremental sampler matches the direct tables") {
  RandomSource r(11);
  GrowthSampler s;
  std::vector<Box> path;
  for (int k = 0; k < 60; ++k) {
    const Diagram3 d = diagram_from_boxes(path);
    const TransitionTable t = pp_transitions(d);
    REQUIRE(t.entries.size() == s.weights().size());
    for (const auto& [b, p] : t.entries) {
      CHECK(s.Probability(b) == doctest::Approx(p).epsilon(1e-12));
    }
    path.push_back(s.Step(r));
  }
  // Log-space mode draws the same boxes.
  RandomSource a(3), b(3);
  const Tableau plain = sample_pp_tableau(300, a);
  const Tableau logged = sample_pp_tableau(300, b, {GrowthProcess::kPseudoPlancherel, true});
  CHECK(plain == logged);
}

TEST_CASE("sampling") {
  RandomSource r(1);
  CHECK(sample_pp_tableau(0, r).empty());
  CHECK(sample_pp_tableau(1, r).path() == std::vector<Box>{{0, 0, 0}});
  RandomSource a(42), b(42);
  CHECK(sample_pp_tableau(500, a) == sample_pp_tableau(500, b));

  std::map<Box, int> second;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++second[sample_pp_tableau(2, r)[1]];
  CHECK(second.size() == 3);
  const double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
  for (const auto& [box, count] : second) {
    CHECK(std::abs(count - draws / 3.0) < 3 * sigma);
  }

  RandomSource p(8);
  const Tableau planar =
      sample_pp_tableau(200, p, {GrowthProcess::kPlancherel2d, false});
  CHECK(shape_of(planar).is_planar());
}

TEST_CASE("path probability ratio report") {
  RandomSource r(2024);
  const Tableau t = sample_pp_tableau(1000, r);
  RandomSource c(7);
  Tableau u = t;
  for (int i = 0; i < 2000; ++i) u = schutz_rnd(u, c, true);
  const double log_ratio = pp_path_log_probability(t) - pp_path_log_probability(u);
  MESSAGE("path probability ratio on a size-1000 diagram: "
          << std::exp(log_ratio));
  CHECK(std::isfinite(log_ratio));
}

}  // namespace
}  // namespace taquin
