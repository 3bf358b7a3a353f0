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

// Uniformity diagnostics for the randomized tableau generator.

#ifndef TAQUIN_STATS_H_
#define TAQUIN_STATS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "taquin/diagram.h"
#include "taquin/dimensions.h"
#include "taquin/tableau.h"

namespace taquin {

struct Fingerprint {
  uint64_t hi = 0;
  uint64_t lo = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Fingerprint& f) {
    return H::combine(std::move(h), f.hi, f.lo);
  }
};

// 128-bit hash of a growth path.
Fingerprint fingerprint(const std::vector<Box>& path);

class FrequencyHistogram {
 public:
  explicit FrequencyHistogram(Diagram3 shape = {}) : shape_(std::move(shape)) {}

  // Counts one occurrence. The first path seen under a fingerprint is kept
  // and compared on every later match; a mismatch is a genuine collision and
  // the path is then counted under its full text instead.
  void Add(const std::vector<Box>& path);

  // Adds the counts of `other`, which must have the same shape.
  void Merge(const FrequencyHistogram& other);

  const Diagram3& shape() const { return shape_; }
  int64_t total() const { return total_; }
  std::size_t num_keys() const { return cells_.size() + overflow_.size(); }
  int64_t collisions() const { return collisions_; }

  // Per-tableau counts in no particular order.
  std::vector<int64_t> counts() const;

  // count value -> number of tableaux observed that many times. With
  // `dim` set, the tableaux never observed are reported under count 0.
  std::map<int64_t, int64_t> count_histogram(
      std::optional<int64_t> dim = std::nullopt) const;

 private:
  struct Cell {
    std::vector<Box> path;
    int64_t count = 0;
  };

  Diagram3 shape_;
  int64_t total_ = 0;
  int64_t collisions_ = 0;
  absl::flat_hash_map<Fingerprint, Cell> cells_;
  std::map<std::vector<Box>, int64_t> overflow_;
};

struct HistogramOptions {
  int chains = 1;
  int thinning = 1;
  int64_t burn_in = 0;
  int workers = 1;
};

// Feeds `iterations` draws of the randomized stream on `shape` into a
// histogram. Iterations are split over options.chains chains with seeds
// derived from `seed` (the seed itself when there is one chain).
FrequencyHistogram run_histogram(const Diagram3& shape, int64_t iterations,
                                 uint64_t seed,
                                 const HistogramOptions& options = {});

struct ChiSquare {
  double statistic = 0.0;
  int64_t dof = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit against the uniform law on `dim` tableaux. Throws
// ExpectedTooSmall when total/dim < 5 and SizeLimitExceeded when dim does
// not fit in 63 bits.
ChiSquare chi_square_uniform(const FrequencyHistogram& h, const BigDim& dim);

struct GaussianSummary {
  double mean = 0.0;
  double sigma = 0.0;
};

// Sample mean and standard deviation of the per-tableau counts. With `dim`
// set, the unobserved tableaux take part as zero counts. Throws TooFewCells
// when fewer than two cells take part.
GaussianSummary gaussian_summary(const FrequencyHistogram& h,
                                 std::optional<int64_t> dim = std::nullopt);

struct CoverageReport {
  std::vector<Box> targets;        // removable corners, sorted
  std::map<Box, int64_t> hits;     // only positions hit at least once
  int64_t iterations = 0;          // iterations actually run
  std::optional<int64_t> full_coverage_at;  // empty: not reached

  std::size_t num_positions() const { return targets.size(); }
};

// Iterates the randomized transformation with addlast from `start` and
// records where each nerve ends. Stops at the first iteration after which
// every removable corner has been hit, or after max_iterations.
CoverageReport nerve_coverage(const Tableau& start, int64_t max_iterations,
                              uint64_t seed);
CoverageReport nerve_coverage(const Diagram3& shape, int64_t max_iterations,
                              uint64_t seed);

}  // namespace taquin

#endif  // TAQUIN_STATS_H_
