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

// Monte Carlo estimation of co-transition probabilities of the central
// process, and the dimension estimates built on them.
//
// Iterating the randomized shape-preserving transformation on a fixed shape
// produces (close to) uniformly distributed growth paths to that shape. The
// box each path adds last is a removable corner c, and the fraction of paths
// ending in c estimates dim(shape - c) / dim(shape).

#ifndef TAQUIN_ESTIMATION_H_
#define TAQUIN_ESTIMATION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "taquin/diagram.h"
#include "taquin/dimensions.h"
#include "taquin/random.h"
#include "taquin/tableau.h"

namespace taquin {

// t_0 = canonical_tableau(shape), t_{k+1} = schutz_rnd(t_k, addlast). Yields
// t_k for k > burn_in, keeping every `thinning`-th iterate.
class UniformTableauStream {
 public:
  UniformTableauStream(const Diagram3& shape, uint64_t seed,
                       int64_t burn_in = 0, int thinning = 1);
  UniformTableauStream(const Tableau& start, uint64_t seed,
                       int64_t burn_in = 0, int thinning = 1);

  // Path of the next yielded tableau. Valid until the following call.
  const std::vector<Box>& Next();

 private:
  void Advance();

  std::vector<Box> path_;
  RandomSource rng_;
  int64_t burn_in_left_;
  int thinning_;
};

struct EstimateOptions {
  int64_t trials = 100000;
  uint64_t seed = 0;
  int64_t burn_in = 0;
  int thinning = 1;
  // Trials are split over this many independent chains with derived seeds.
  // The result depends on (seed, chains), never on `workers`.
  int chains = 1;
  int workers = 1;
};

struct CotransEstimate {
  Diagram3 shape;
  std::map<Box, int64_t> counts;  // every removable corner, possibly 0
  int64_t trials = 0;
  uint64_t seed = 0;
  int64_t burn_in = 0;
  int thinning = 1;
  int chains = 1;

  double frequency(const Box& corner) const;
};

CotransEstimate estimate_cotransitions(const Diagram3& shape,
                                       const EstimateOptions& options);

// p(prev -> next) for next = prev + added.
using CotransitionSource = std::function<double(
    const Diagram3& prev, const Diagram3& next, const Box& added)>;

// Monte Carlo source: estimates on `next` with a seed derived from
// options.seed and the canonical text of `next`. Throws ZeroFrequency when
// the added corner is never observed.
CotransitionSource MonteCarloSource(EstimateOptions options);
CotransitionSource ExactSource(DimCache& cache);

enum class Provenance { kExact, kEstimated };

struct LogDim {
  double log_dim = 0.0;
  int n = 0;
  Provenance provenance = Provenance::kEstimated;
};

// log dim of every diagram of a cover chain, from
// log dim(l_k) = log dim(l_{k-1}) - log p(l_{k-1} -> l_k). `start_log_dim`
// is the known log dimension of chain[0]. Throws NotACover.
std::vector<LogDim> estimate_dim_recurrence(
    const std::vector<Diagram3>& chain, const CotransitionSource& source,
    double start_log_dim = 0.0, Provenance provenance = Provenance::kEstimated);
std::vector<LogDim> estimate_dim_recurrence(
    const std::vector<Diagram3>& chain, const EstimateOptions& options);

// Cover chain from `inner` to `outer` adding the missing boxes in
// lexicographic order.
std::vector<Diagram3> lexicographic_chain(const Diagram3& inner,
                                          const Diagram3& outer);

// dim(a) / dim(b) from the co-transition products along the lexicographic
// chains from the intersection of a and b to each of them.
double estimate_dim_ratio(const Diagram3& a, const Diagram3& b,
                          const CotransitionSource& source);
double estimate_dim_ratio(const Diagram3& a, const Diagram3& b,
                          const EstimateOptions& options);

struct GreedyEstimateStep {
  int size = 0;
  Diagram3 diagram;
  Box added;
  double estimate = 0.0;
};

// From the empty diagram, adds at each step the addable box whose estimated
// co-transition probability is smallest (ties: lexicographically smallest
// box). Each candidate uses options.trials trials; candidates are spread
// over options.workers threads.
std::vector<GreedyEstimateStep> greedy_sequence_estimated(
    int n_max, const EstimateOptions& options);

// c = (-log dim + (2/3) log n!) / n^(2/3).
double normalized_dim(int n, double log_dim);

}  // namespace taquin

#endif  // TAQUIN_ESTIMATION_H_
