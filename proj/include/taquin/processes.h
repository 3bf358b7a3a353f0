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

// Markov growth processes on the Young graph.
//
// The pseudo-Plancherel process adds box (x, y, z) to a plane partition with
// probability proportional to
//
//   w(x, y, z) = prod_{i<x} h(i,y,z)/(h(i,y,z)+1)
//              * prod_{j<y} h(x,j,z)/(h(x,j,z)+1)
//              * prod_{k<z} h(x,y,k)/(h(x,y,k)+1),
//
// where h is the 3D hook length measured in the diagram before the box is
// added: the size of the union of the three axis rays from a box. On the
// z = 0 slab this is the 2D Plancherel transition rule.

#ifndef TAQUIN_PROCESSES_H_
#define TAQUIN_PROCESSES_H_

#include <cstdint>
#include <map>
#include <vector>

#include "taquin/diagram.h"
#include "taquin/random.h"
#include "taquin/tableau.h"

namespace taquin {

struct TransitionTable {
  Diagram3 diagram;
  std::map<Box, double> entries;  // addable box -> probability
};

// Throws BoxNotInDiagram.
int hook3_length(const Diagram3& d, const Box& b);

// Unnormalized weight; throws IllegalCorner unless b is addable.
double pp_weight(const Diagram3& d, const Box& b);

TransitionTable pp_transitions(const Diagram3& d);

// 2D Plancherel rule dim(d + b) / ((n + 1) dim(d)) from exact hook-length
// dimensions. Throws NotPlanar.
TransitionTable plancherel2d_transitions(const Diagram3& d);

enum class GrowthProcess { kPseudoPlancherel, kPlancherel2d };

struct SamplerOptions {
  GrowthProcess process = GrowthProcess::kPseudoPlancherel;
  // Combine weight factors as sums of logarithms. Needed only for diagrams
  // far beyond 10^5 boxes, where the plain products lose range.
  bool log_space = false;
};

// Incremental sampler. Keeps the three ray-length tables of the current
// diagram so every hook length is O(1), and caches the weight of each
// addable box; adding a box only invalidates weights of addable boxes that
// share a coordinate with it.
class GrowthSampler {
 public:
  explicit GrowthSampler(SamplerOptions options = {});

  int size() const { return size_; }

  // Addable boxes in lexicographic order with their unnormalized weights
  // (log-weights in log-space mode).
  const std::map<Box, double>& weights() const { return weights_; }

  // Normalized probability of adding `b` next.
  double Probability(const Box& b) const;

  // Draws the next box with one uniform variate (inverse CDF over the
  // lexicographically ordered addable boxes) and adds it.
  Box Step(RandomSource& rng);

  // Adds a chosen addable box; throws IllegalCorner.
  void Add(const Box& b);

  int hook(int x, int y, int z) const;

 private:
  int height(int x, int y) const;
  int length_x(int y, int z) const;
  int length_y(int x, int z) const;
  bool addable(const Box& b) const;
  double ComputeWeight(const Box& b) const;
  // Per-entry multipliers relative to the largest weight, in lex order.
  std::vector<double> Relative() const;

  SamplerOptions options_;
  int size_ = 0;
  std::vector<std::vector<int>> heights_;   // [y][x]
  std::vector<std::vector<int>> length_x_;  // [y][z]
  std::vector<std::vector<int>> length_y_;  // [x][z]
  std::map<Box, double> weights_;
};

// A tableau grown by n sequential draws of the chosen process.
Tableau sample_pp_tableau(int n, RandomSource& rng,
                          SamplerOptions options = {});

// Sum of log transition probabilities of the growth path under the
// pseudo-Plancherel process.
double pp_path_log_probability(const Tableau& t);

}  // namespace taquin

#endif  // TAQUIN_PROCESSES_H_
