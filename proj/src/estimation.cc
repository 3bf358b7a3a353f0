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

#include "taquin/estimation.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "taquin/errors.h"
#include "taquin/parallel.h"
#include "taquin/schutz.h"

namespace taquin {

UniformTableauStream::UniformTableauStream(const Diagram3& shape,
                                           uint64_t seed, int64_t burn_in,
                                           int thinning)
    : UniformTableauStream(canonical_tableau(shape), seed, burn_in,
                           thinning) {}

UniformTableauStream::UniformTableauStream(const Tableau& start,
                                           uint64_t seed, int64_t burn_in,
                                           int thinning)
    : path_(start.path()),
      rng_(seed),
      burn_in_left_(burn_in),
      thinning_(std::max(thinning, 1)) {
  if (path_.empty()) throw EmptyTableau("stream needs a non-empty shape");
}

void UniformTableauStream::Advance() {
  SchutzRndInPlace(path_, rng_, /*addlast=*/true);
}

const std::vector<Box>& UniformTableauStream::Next() {
  while (burn_in_left_ > 0) {
    Advance();
    --burn_in_left_;
  }
  for (int i = 0; i < thinning_; ++i) Advance();
  return path_;
}

double CotransEstimate::frequency(const Box& corner) const {
  auto it = counts.find(corner);
  if (it == counts.end() || trials == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(trials);
}

CotransEstimate estimate_cotransitions(const Diagram3& shape,
                                       const EstimateOptions& options) {
  if (shape.empty()) throw EmptyTableau("cannot estimate on the empty shape");
  const std::vector<Box> removable = corners(shape).removable;
  const int chains = std::max(options.chains, 1);
  std::vector<std::vector<int64_t>> per_chain(
      chains, std::vector<int64_t>(removable.size(), 0));
  const Tableau start = canonical_tableau(shape);

  ParallelFor(chains, options.workers, [&](int chain) {
    const int64_t trials = options.trials / chains +
                           (chain < options.trials % chains ? 1 : 0);
    const uint64_t seed =
        chains == 1 ? options.seed : DeriveSeed(options.seed, chain);
    UniformTableauStream stream(start, seed, options.burn_in,
                                options.thinning);
    std::vector<int64_t>& counts = per_chain[chain];
    for (int64_t t = 0; t < trials; ++t) {
      const Box end = stream.Next().back();
      const auto it = std::lower_bound(removable.begin(), removable.end(), end);
      ++counts[it - removable.begin()];
    }
  });

  CotransEstimate estimate;
  estimate.shape = shape;
  estimate.trials = options.trials;
  estimate.seed = options.seed;
  estimate.burn_in = options.burn_in;
  estimate.thinning = std::max(options.thinning, 1);
  estimate.chains = chains;
  for (std::size_t i = 0; i < removable.size(); ++i) {
    int64_t total = 0;
    for (const auto& counts : per_chain) total += counts[i];
    estimate.counts.emplace(removable[i], total);
  }
  return estimate;
}

CotransitionSource MonteCarloSource(EstimateOptions options) {
  return [options](const Diagram3&, const Diagram3& next, const Box& added) {
    EstimateOptions local = options;
    local.seed = DeriveSeed(options.seed, StableHash(serialize(next)));
    const CotransEstimate e = estimate_cotransitions(next, local);
    auto it = e.counts.find(added);
    if (it == e.counts.end() || it->second == 0) {
      throw ZeroFrequency("corner " + ToString(added) + " of " +
                          serialize(next) + " never observed in " +
                          std::to_string(e.trials) + " trials");
    }
    return e.frequency(added);
  };
}

CotransitionSource ExactSource(DimCache& cache) {
  return [&cache](const Diagram3& prev, const Diagram3& next, const Box&) {
    return exact_cotransition(prev, next, cache).approx;
  };
}

namespace {

// The box of `next` missing from `prev`; throws NotACover.
Box AddedBox(const Diagram3& prev, const Diagram3& next) {
  if (next.size() != prev.size() + 1 || !is_subdiagram(prev, next)) {
    throw NotACover(serialize(next) + " does not cover " + serialize(prev));
  }
  for (const Box& b : corners(next).removable) {
    if (!prev.contains(b)) return b;
  }
  throw NotACover(serialize(next) + " does not cover " + serialize(prev));
}

}  // namespace

std::vector<LogDim> estimate_dim_recurrence(const std::vector<Diagram3>& chain,
                                            const CotransitionSource& source,
                                            double start_log_dim,
                                            Provenance provenance) {
  std::vector<LogDim> out;
  if (chain.empty()) return out;
  out.push_back({start_log_dim, chain[0].size(), provenance});
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const Box added = AddedBox(chain[k - 1], chain[k]);
    const double p = source(chain[k - 1], chain[k], added);
    if (!(p > 0.0)) {
      throw ZeroFrequency("zero co-transition probability at size " +
                          std::to_string(chain[k].size()));
    }
    out.push_back({out.back().log_dim - std::log(p), chain[k].size(),
                   provenance});
  }
  return out;
}

std::vector<LogDim> estimate_dim_recurrence(const std::vector<Diagram3>& chain,
                                            const EstimateOptions& options) {
  return estimate_dim_recurrence(chain, MonteCarloSource(options));
}

std::vector<Diagram3> lexicographic_chain(const Diagram3& inner,
                                          const Diagram3& outer) {
  if (!is_subdiagram(inner, outer)) {
    throw NotACover(serialize(inner) + " is not inside " + serialize(outer));
  }
  // Every predecessor of a box is lexicographically smaller, so adding the
  // missing boxes in lexicographic order keeps each prefix a diagram.
  std::vector<Diagram3> chain = {inner};
  for (const Box& b : outer.boxes()) {
    if (!inner.contains(b)) chain.push_back(add_box(chain.back(), b));
  }
  return chain;
}

double estimate_dim_ratio(const Diagram3& a, const Diagram3& b,
                          const CotransitionSource& source) {
  const Diagram3 meet = intersect(a, b);
  auto log_product = [&](const Diagram3& target) {
    double sum = 0.0;
    const std::vector<Diagram3> chain = lexicographic_chain(meet, target);
    for (const LogDim& ld : estimate_dim_recurrence(chain, source)) {
      sum = -ld.log_dim;
    }
    return sum;
  };
  // log dim(a) - log dim(b) = sum log p along meet->b - sum log p along meet->a.
  return std::exp(log_product(b) - log_product(a));
}

double estimate_dim_ratio(const Diagram3& a, const Diagram3& b,
                          const EstimateOptions& options) {
  return estimate_dim_ratio(a, b, MonteCarloSource(options));
}

std::vector<GreedyEstimateStep> greedy_sequence_estimated(
    int n_max, const EstimateOptions& options) {
  std::vector<GreedyEstimateStep> steps;
  Diagram3 current;
  EstimateOptions per_candidate = options;
  per_candidate.workers = 1;
  const CotransitionSource source = MonteCarloSource(per_candidate);
  for (int k = 1; k <= n_max; ++k) {
    const std::vector<Box> candidates = corners(current).addable;
    std::vector<double> estimates(candidates.size());
    ParallelFor(static_cast<int>(candidates.size()), options.workers,
                [&](int i) {
                  const Diagram3 next = add_box(current, candidates[i]);
                  estimates[i] = source(current, next, candidates[i]);
                });
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (estimates[i] < estimates[best]) best = i;
    }
    GreedyEstimateStep step;
    step.size = k;
    step.added = candidates[best];
    step.diagram = add_box(current, candidates[best]);
    step.estimate = estimates[best];
    current = step.diagram;
    steps.push_back(std::move(step));
  }
  return steps;
}

double normalized_dim(int n, double log_dim) {
  const double log_factorial = std::lgamma(static_cast<double>(n) + 1.0);
  return (-log_dim + (2.0 / 3.0) * log_factorial) /
         std::pow(static_cast<double>(n), 2.0 / 3.0);
}

}  // namespace taquin
