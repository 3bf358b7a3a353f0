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

// Exact dimensions (numbers of growth paths) of Young diagrams and plane
// partitions, and the quantities built from them: co-transition
// probabilities of the central process, maximal dimensions, and the exact
// greedy sequence.

#ifndef TAQUIN_DIMENSIONS_H_
#define TAQUIN_DIMENSIONS_H_

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"
#include "taquin/diagram.h"

namespace taquin {

using BigDim = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultExactSizeCap = 70;
inline constexpr int kDefaultSearchSizeCap = 33;

// Memo of exact dimensions keyed by the canonical row-form text. Reads are
// shared; inserts take the writer lock. Inserting past `max_entries` throws
// SizeLimitExceeded instead of evicting.
class DimCache {
 public:
  explicit DimCache(std::size_t max_entries = std::size_t{1} << 22)
      : max_entries_(max_entries) {}

  std::optional<BigDim> Find(const std::string& key) const;
  // Returns the stored value, which is `value` unless another thread won.
  BigDim InsertIfAbsent(const std::string& key, BigDim value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, BigDim> map_;
  std::size_t max_entries_;
};

// n! / prod(hooks) for a diagram in the z = 0 slab; throws NotPlanar.
BigDim hook_dim_2d(const Diagram3& partition);

// Number of growth paths from the empty diagram to `d`. Computed by a
// level-by-level sweep over the order ideals of `d` (each level holds the
// path counts of all sub-diagrams of one size). Throws SizeLimitExceeded
// when d.size() > size_cap.
BigDim exact_dim_3d(const Diagram3& d, DimCache& cache,
                    int size_cap = kDefaultExactSizeCap);
BigDim exact_dim_3d(const Diagram3& d, int size_cap = kDefaultExactSizeCap);

// Number of order ideals of `d` (sub-diagrams), i.e. the number of DP states
// exact_dim_3d visits.
std::size_t count_subdiagrams(const Diagram3& d);

struct ExactCotransition {
  BigRational value;
  double approx = 0.0;
};

// dim(prev) / dim(next). Throws NotACover unless next = prev + one box.
ExactCotransition exact_cotransition(const Diagram3& prev,
                                     const Diagram3& next, DimCache& cache,
                                     int size_cap = kDefaultExactSizeCap);

struct MaxDimEntry {
  int size = 0;
  BigDim dimension;
  // Tie-break winner: smallest canonical serialization among maximizers.
  Diagram3 diagram;
  // Every maximizer, sorted by canonical serialization.
  std::vector<Diagram3> maximizers;
  // Number of plane partitions of this size.
  std::size_t num_diagrams = 0;
};

// Maximal dimensions for all sizes 1..n in a single sweep over the graded
// Young graph of plane partitions. Throws SizeLimitExceeded for n > cap.
std::vector<MaxDimEntry> max_dim_table(int n,
                                       int cap = kDefaultSearchSizeCap);
MaxDimEntry max_dim_search(int n, int cap = kDefaultSearchSizeCap);

struct GreedyStep {
  int size = 0;
  Diagram3 diagram;
  Box added;
  BigDim dimension;
  BigRational probability;  // dim(previous) / dim(diagram)
  double approx = 0.0;
};

// Starting from the empty diagram, repeatedly adds the addable box with the
// smallest exact co-transition probability (ties: lexicographically smallest
// box). Emits one step per size 1..n_max.
std::vector<GreedyStep> greedy_sequence_exact(
    int n_max, DimCache& cache, int size_cap = kDefaultExactSizeCap);

// Exact decimal rendering of a rational with `digits` places, rounding half
// to even.
std::string FormatRational(const BigRational& value, int digits);

// Natural logarithm of a positive big integer.
double LogBig(const BigDim& value);

}  // namespace taquin

#endif  // TAQUIN_DIMENSIONS_H_
