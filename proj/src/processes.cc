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

#include "taquin/processes.h"

#include <algorithm>
#include <cmath>

#include "taquin/dimensions.h"
#include "taquin/errors.h"

namespace taquin {
namespace {

// Multiplies h/(h+1) over the hooks in increasing hook order, or sums the
// logarithms in log-space mode.
double CombineHooks(std::vector<int>& hooks, bool log_space) {
  std::sort(hooks.begin(), hooks.end());
  if (log_space) {
    double sum = 0.0;
    for (int h : hooks) sum += std::log1p(-1.0 / (h + 1.0));
    return sum;
  }
  double product = 1.0;
  for (int h : hooks) product *= static_cast<double>(h) / (h + 1.0);
  return product;
}

bool SharesCoordinate(const Box& a, const Box& b) {
  return a.x == b.x || a.y == b.y || a.z == b.z;
}

int At(const std::vector<std::vector<int>>& table, int i, int j) {
  if (i < 0 || i >= static_cast<int>(table.size())) return 0;
  const auto& row = table[i];
  return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : 0;
}

void Increment(std::vector<std::vector<int>>& table, int i, int j) {
  if (static_cast<int>(table.size()) <= i) table.resize(i + 1);
  auto& row = table[i];
  if (static_cast<int>(row.size()) <= j) row.resize(j + 1, 0);
  ++row[j];
}

}  // namespace

int hook3_length(const Diagram3& d, const Box& b) {
  if (!d.contains(b)) {
    throw BoxNotInDiagram(ToString(b) + " is not in " + serialize(d));
  }
  return (d.length_x(b.y, b.z) - b.x) + (d.length_y(b.x, b.z) - b.y) +
         (d.height(b.x, b.y) - b.z) - 2;
}

double pp_weight(const Diagram3& d, const Box& b) {
  if (!is_addable(d, b)) {
    throw IllegalCorner(ToString(b) + " is not an addable corner");
  }
  std::vector<int> hooks;
  for (int i = 0; i < b.x; ++i) hooks.push_back(hook3_length(d, {i, b.y, b.z}));
  for (int j = 0; j < b.y; ++j) hooks.push_back(hook3_length(d, {b.x, j, b.z}));
  for (int k = 0; k < b.z; ++k) hooks.push_back(hook3_length(d, {b.x, b.y, k}));
  return CombineHooks(hooks, /*log_space=*/false);
}

TransitionTable pp_transitions(const Diagram3& d) {
  TransitionTable table;
  table.diagram = d;
  double total = 0.0;
  for (const Box& b : corners(d).addable) {
    const double w = pp_weight(d, b);
    table.entries.emplace(b, w);
    total += w;
  }
  for (auto& [box, p] : table.entries) p /= total;
  return table;
}

TransitionTable plancherel2d_transitions(const Diagram3& d) {
  if (!d.is_planar()) throw NotPlanar("2D Plancherel rule needs a 2D diagram");
  TransitionTable table;
  table.diagram = d;
  const BigDim dim = hook_dim_2d(d);
  for (const Box& b : corners(d).addable) {
    if (b.z != 0) continue;
    const BigRational p(hook_dim_2d(add_box(d, b)), dim * (d.size() + 1));
    table.entries.emplace(b, p.convert_to<double>());
  }
  return table;
}

GrowthSampler::GrowthSampler(SamplerOptions options) : options_(options) {
  weights_.emplace(kOrigin, ComputeWeight(kOrigin));
}

int GrowthSampler::height(int x, int y) const { return At(heights_, y, x); }
int GrowthSampler::length_x(int y, int z) const { return At(length_x_, y, z); }
int GrowthSampler::length_y(int x, int z) const { return At(length_y_, x, z); }

int GrowthSampler::hook(int x, int y, int z) const {
  return (length_x(y, z) - x) + (length_y(x, z) - y) + (height(x, y) - z) - 2;
}

bool GrowthSampler::addable(const Box& b) const {
  if (options_.process == GrowthProcess::kPlancherel2d && b.z != 0) {
    return false;
  }
  return height(b.x, b.y) == b.z &&
         (b.x == 0 || height(b.x - 1, b.y) > b.z) &&
         (b.y == 0 || height(b.x, b.y - 1) > b.z);
}

double GrowthSampler::ComputeWeight(const Box& b) const {
  thread_local std::vector<int> hooks;
  hooks.clear();
  for (int i = 0; i < b.x; ++i) hooks.push_back(hook(i, b.y, b.z));
  for (int j = 0; j < b.y; ++j) hooks.push_back(hook(b.x, j, b.z));
  for (int k = 0; k < b.z; ++k) hooks.push_back(hook(b.x, b.y, k));
  return CombineHooks(hooks, options_.log_space);
}

std::vector<double> GrowthSampler::Relative() const {
  std::vector<double> out;
  out.reserve(weights_.size());
  if (!options_.log_space) {
    for (const auto& [box, w] : weights_) out.push_back(w);
    return out;
  }
  double top = -HUGE_VAL;
  for (const auto& [box, w] : weights_) top = std::max(top, w);
  for (const auto& [box, w] : weights_) out.push_back(std::exp(w - top));
  return out;
}

double GrowthSampler::Probability(const Box& b) const {
  const std::vector<double> rel = Relative();
  double total = 0.0;
  double mine = 0.0;
  std::size_t i = 0;
  for (const auto& [box, w] : weights_) {
    total += rel[i];
    if (box == b) mine = rel[i];
    ++i;
  }
  return mine / total;
}

Box GrowthSampler::Step(RandomSource& rng) {
  const std::vector<double> rel = Relative();
  double total = 0.0;
  for (double w : rel) total += w;
  const double target = rng.Uniform01() * total;
  double cumulative = 0.0;
  Box chosen = weights_.rbegin()->first;
  std::size_t i = 0;
  for (const auto& [box, w] : weights_) {
    cumulative += rel[i++];
    if (target < cumulative) {
      chosen = box;
      break;
    }
  }
  Add(chosen);
  return chosen;
}

void GrowthSampler::Add(const Box& b) {
  if (weights_.find(b) == weights_.end()) {
    throw IllegalCorner(ToString(b) + " is not an addable corner");
  }
  Increment(heights_, b.y, b.x);
  Increment(length_x_, b.y, b.z);
  Increment(length_y_, b.x, b.z);
  ++size_;
  weights_.erase(b);
  // Hooks change only on the three rays through b, and a weight reads hooks
  // on the rays through its own box, so only boxes sharing a coordinate with
  // b need a fresh weight.
  for (auto& [box, w] : weights_) {
    if (SharesCoordinate(box, b)) w = ComputeWeight(box);
  }
  for (int axis = 0; axis < 3; ++axis) {
    const Box u = UnitBox(axis);
    const Box next{b.x + u.x, b.y + u.y, b.z + u.z};
    if (addable(next)) weights_.emplace(next, ComputeWeight(next));
  }
}

Tableau sample_pp_tableau(int n, RandomSource& rng, SamplerOptions options) {
  GrowthSampler sampler(options);
  std::vector<Box> path;
  path.reserve(n);
  for (int k = 0; k < n; ++k) path.push_back(sampler.Step(rng));
  return Tableau::FromValidPath(std::move(path));
}

double pp_path_log_probability(const Tableau& t) {
  GrowthSampler sampler;
  double total = 0.0;
  for (const Box& b : t.path()) {
    total += std::log(sampler.Probability(b));
    sampler.Add(b);
  }
  return total;
}

}  // namespace taquin
