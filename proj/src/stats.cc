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

#include "taquin/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "taquin/errors.h"
#include "taquin/estimation.h"
#include "taquin/parallel.h"
#include "taquin/random.h"
#include "taquin/schutz.h"

namespace taquin {
namespace {

uint64_t PackBox(const Box& b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(b.x)) << 42) ^
         (static_cast<uint64_t>(static_cast<uint32_t>(b.y)) << 21) ^
         static_cast<uint64_t>(static_cast<uint32_t>(b.z));
}

}  // namespace

Fingerprint fingerprint(const std::vector<Box>& path) {
  // Two independently seeded SplitMix chains over the packed coordinates.
  uint64_t a = 0x6a09e667f3bcc908ULL ^ path.size();
  uint64_t b = 0xbb67ae8584caa73bULL + path.size();
  for (const Box& box : path) {
    const uint64_t v = PackBox(box);
    a = Mix64(a ^ v);
    b = Mix64(b + v * 0x9e3779b97f4a7c15ULL);
  }
  return {a, b};
}

void FrequencyHistogram::Add(const std::vector<Box>& path) {
  ++total_;
  auto [it, inserted] = cells_.try_emplace(fingerprint(path));
  if (inserted) {
    it->second.path = path;
    it->second.count = 1;
    return;
  }
  if (it->second.path == path) {
    ++it->second.count;
    return;
  }
  ++collisions_;
  ++overflow_[path];
}

void FrequencyHistogram::Merge(const FrequencyHistogram& other) {
  for (const auto& [key, cell] : other.cells_) {
    auto [it, inserted] = cells_.try_emplace(key);
    if (inserted) {
      it->second = cell;
    } else if (it->second.path == cell.path) {
      it->second.count += cell.count;
    } else {
      ++collisions_;
      overflow_[cell.path] += cell.count;
    }
  }
  for (const auto& [path, count] : other.overflow_) overflow_[path] += count;
  total_ += other.total_;
  collisions_ += other.collisions_;
}

std::vector<int64_t> FrequencyHistogram::counts() const {
  std::vector<int64_t> out;
  out.reserve(num_keys());
  for (const auto& [key, cell] : cells_) out.push_back(cell.count);
  for (const auto& [path, count] : overflow_) out.push_back(count);
  return out;
}

std::map<int64_t, int64_t> FrequencyHistogram::count_histogram(
    std::optional<int64_t> dim) const {
  std::map<int64_t, int64_t> out;
  for (int64_t c : counts()) ++out[c];
  if (dim && *dim > static_cast<int64_t>(num_keys())) {
    out[0] += *dim - static_cast<int64_t>(num_keys());
  }
  return out;
}

FrequencyHistogram run_histogram(const Diagram3& shape, int64_t iterations,
                                 uint64_t seed,
                                 const HistogramOptions& options) {
  const int chains = std::max(options.chains, 1);
  const Tableau start = canonical_tableau(shape);
  std::vector<FrequencyHistogram> parts(chains, FrequencyHistogram(shape));
  ParallelFor(chains, options.workers, [&](int chain) {
    const int64_t n =
        iterations / chains + (chain < iterations % chains ? 1 : 0);
    UniformTableauStream stream(
        start, chains == 1 ? seed : DeriveSeed(seed, chain), options.burn_in,
        options.thinning);
    for (int64_t i = 0; i < n; ++i) parts[chain].Add(stream.Next());
  });
  FrequencyHistogram merged(shape);
  for (const auto& part : parts) merged.Merge(part);
  return merged;
}

ChiSquare chi_square_uniform(const FrequencyHistogram& h, const BigDim& dim) {
  if (dim <= 0 || dim > std::numeric_limits<int64_t>::max()) {
    throw SizeLimitExceeded("dimension does not fit in a machine integer");
  }
  const auto cells = dim.convert_to<int64_t>();
  const long double expected =
      static_cast<long double>(h.total()) / static_cast<long double>(cells);
  if (expected < 5.0L) {
    throw ExpectedTooSmall("expected count per tableau is below 5");
  }
  long double statistic = 0.0L;
  int64_t seen = 0;
  for (int64_t c : h.counts()) {
    const long double d = static_cast<long double>(c) - expected;
    statistic += d * d / expected;
    ++seen;
  }
  statistic += static_cast<long double>(cells - seen) * expected;

  ChiSquare out;
  out.statistic = static_cast<double>(statistic);
  out.dof = cells - 1;
  out.p_value = out.dof == 0 ? 1.0
                             : boost::math::gamma_q(out.dof / 2.0,
                                                    out.statistic / 2.0);
  return out;
}

GaussianSummary gaussian_summary(const FrequencyHistogram& h,
                                 std::optional<int64_t> dim) {
  std::vector<int64_t> counts = h.counts();
  const int64_t cells =
      std::max<int64_t>(dim.value_or(0), static_cast<int64_t>(counts.size()));
  if (cells < 2) throw TooFewCells("need at least two cells");
  // Exact integer sums; the zero cells add nothing to either sum.
  long double sum = 0.0L;
  for (int64_t c : counts) sum += c;
  const long double mean = sum / cells;
  long double squares = 0.0L;
  for (int64_t c : counts) squares += (c - mean) * (c - mean);
  squares += static_cast<long double>(cells - counts.size()) * mean * mean;
  return {static_cast<double>(mean),
          static_cast<double>(std::sqrt(squares / (cells - 1)))};
}

CoverageReport nerve_coverage(const Tableau& start, int64_t max_iterations,
                              uint64_t seed) {
  CoverageReport report;
  report.targets = corners(shape_of(start)).removable;
  std::vector<Box> path = start.path();
  if (path.empty()) return report;
  RandomSource rng(seed);
  std::size_t hit = 0;
  while (report.iterations < max_iterations) {
    const Box end = SchutzRndInPlace(path, rng, /*addlast=*/true);
    ++report.iterations;
    if (report.hits[end]++ == 0) ++hit;
    if (hit == report.targets.size()) {
      report.full_coverage_at = report.iterations;
      break;
    }
  }
  return report;
}

CoverageReport nerve_coverage(const Diagram3& shape, int64_t max_iterations,
                              uint64_t seed) {
  return nerve_coverage(canonical_tableau(shape), max_iterations, seed);
}

}  // namespace taquin
