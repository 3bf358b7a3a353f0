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

#include "taquin/dimensions.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "taquin/errors.h"
#include "taquin/random.h"

namespace taquin {
namespace {

namespace mp = boost::multiprecision;

using U128 = unsigned __int128;
// Fixed-width unsigned accumulator for path counts. Addition is the only
// arithmetic the sweep needs; a carry out of the top limb throws.
template <int kLimbs>
struct FixedUint {
  std::array<uint64_t, kLimbs> limb{};

  FixedUint() = default;
  explicit FixedUint(uint64_t v) { limb[0] = v; }

  FixedUint& operator+=(const FixedUint& o) {
    unsigned char carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      const unsigned __int128 s = static_cast<unsigned __int128>(limb[i]) +
                                  o.limb[i] + carry;
      limb[i] = static_cast<uint64_t>(s);
      carry = static_cast<unsigned char>(s >> 64);
    }
    if (carry != 0) throw std::overflow_error("path count overflow");
    return *this;
  }
};

using Fixed256 = FixedUint<4>;
using Fixed512 = FixedUint<8>;

struct U128Hash {
  std::size_t operator()(U128 k) const {
    return Mix64(static_cast<uint64_t>(k) ^
                 Mix64(static_cast<uint64_t>(k >> 64)));
  }
};

BigDim ToBig(U128 v) {
  BigDim out = static_cast<uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<uint64_t>(v);
  return out;
}
template <int kLimbs>
BigDim ToBig(const FixedUint<kLimbs>& v) {
  BigDim out = 0;
  for (int i = kLimbs - 1; i >= 0; --i) {
    out <<= 64;
    out += v.limb[i];
  }
  return out;
}
BigDim ToBig(const BigDim& v) { return v; }

// True when n! < 2^(bits - 1), which bounds every path count of size n.
bool FactorialFitsBits(int n, int bits) {
  double log2_fact = 0.0;
  for (int k = 2; k <= n; ++k) log2_fact += std::log2(static_cast<double>(k));
  return log2_fact < bits - 1;
}

// Packs the column heights of a sub-diagram of a fixed target into a 128-bit
// key. Column c gets bit_width(H_c) bits; since bit_width(h) <= h, the total
// never exceeds the target size.
struct IdealLayout {
  struct Cell {
    int max_height;
    int left;  // cell index of (x-1, y) or -1
    int down;  // cell index of (x, y-1) or -1
    int offset;
    int width;
  };
  std::vector<Cell> cells;
  int total_bits = 0;

  explicit IdealLayout(const Diagram3& d) {
    const RowForm& rows = d.rows();
    std::vector<int> row_begin;
    for (std::size_t y = 0; y < rows.size(); ++y) {
      row_begin.push_back(static_cast<int>(cells.size()));
      for (std::size_t x = 0; x < rows[y].size(); ++x) {
        Cell c;
        c.max_height = rows[y][x];
        c.left = x > 0 ? static_cast<int>(cells.size()) - 1 : -1;
        c.down = y > 0 ? row_begin[y - 1] + static_cast<int>(x) : -1;
        c.width = std::bit_width(static_cast<unsigned>(c.max_height));
        c.offset = total_bits;
        total_bits += c.width;
        cells.push_back(c);
      }
    }
  }

  int Height(U128 key, const Cell& c) const {
    return static_cast<int>((key >> c.offset) &
                            ((U128{1} << c.width) - 1));
  }
};

struct SweepResult {
  BigDim paths;
  std::size_t states = 0;
};

template <typename Count>
SweepResult SweepIdeals(const Diagram3& d) {
  const IdealLayout layout(d);
  if (layout.total_bits > 128) {
    throw SizeLimitExceeded("diagram too large for the packed state key");
  }
  const std::size_t num_cells = layout.cells.size();
  std::vector<int> h(num_cells);
  absl::flat_hash_map<U128, Count, U128Hash> level, next;
  level.emplace(U128{0}, Count(1));
  SweepResult result;
  result.states = 1;
  for (int k = 0; k < d.size(); ++k) {
    next.clear();
    next.reserve(level.size() * 2);
    for (const auto& [key, count] : level) {
      for (std::size_t c = 0; c < num_cells; ++c) {
        h[c] = layout.Height(key, layout.cells[c]);
      }
      for (std::size_t c = 0; c < num_cells; ++c) {
        const IdealLayout::Cell& cell = layout.cells[c];
        const int hc = h[c];
        if (hc == cell.max_height) continue;
        if (cell.left >= 0 && h[cell.left] <= hc) continue;
        if (cell.down >= 0 && h[cell.down] <= hc) continue;
        next[key + (U128{1} << cell.offset)] += count;
      }
    }
    std::swap(level, next);
    result.states += level.size();
  }
  result.paths = ToBig(level.begin()->second);
  return result;
}

SweepResult SweepIdealsAuto(const Diagram3& d) {
  if (FactorialFitsBits(d.size(), 128)) return SweepIdeals<U128>(d);
  try {
    if (FactorialFitsBits(d.size(), 256)) return SweepIdeals<Fixed256>(d);
    return SweepIdeals<Fixed512>(d);
  } catch (const std::overflow_error&) {
    return SweepIdeals<BigDim>(d);
  }
}

}  // namespace

std::optional<BigDim> DimCache::Find(const std::string& key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

BigDim DimCache::InsertIfAbsent(const std::string& key, BigDim value) {
  std::unique_lock lock(mu_);
  auto it = map_.find(key);
  if (it != map_.end()) return it->second;
  if (map_.size() >= max_entries_) {
    throw SizeLimitExceeded("dimension cache is full (" +
                            std::to_string(max_entries_) + " entries)");
  }
  map_.emplace(key, value);
  return value;
}

std::size_t DimCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

BigDim hook_dim_2d(const Diagram3& partition) {
  if (!partition.is_planar()) {
    throw NotPlanar("hook-length formula needs a 2D diagram");
  }
  BigDim numerator = 1;
  for (int k = 2; k <= partition.size(); ++k) numerator *= k;
  BigDim hooks = 1;
  const std::vector<int> parts = to_partition(partition);
  for (std::size_t y = 0; y < parts.size(); ++y) {
    for (int x = 0; x < parts[y]; ++x) {
      const int arm = parts[y] - x - 1;
      const int leg = partition.length_y(x, 0) - static_cast<int>(y) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return numerator / hooks;
}

BigDim exact_dim_3d(const Diagram3& d, DimCache& cache, int size_cap) {
  if (d.size() > size_cap) {
    throw SizeLimitExceeded("size " + std::to_string(d.size()) +
                            " exceeds the exact-dimension cap " +
                            std::to_string(size_cap));
  }
  const std::string key = serialize(d);
  if (auto hit = cache.Find(key)) return *hit;
  return cache.InsertIfAbsent(key, SweepIdealsAuto(d).paths);
}

BigDim exact_dim_3d(const Diagram3& d, int size_cap) {
  DimCache cache;
  return exact_dim_3d(d, cache, size_cap);
}

std::size_t count_subdiagrams(const Diagram3& d) {
  return SweepIdeals<U128>(d).states;
}

ExactCotransition exact_cotransition(const Diagram3& prev,
                                     const Diagram3& next, DimCache& cache,
                                     int size_cap) {
  if (next.size() != prev.size() + 1 || !is_subdiagram(prev, next)) {
    throw NotACover(serialize(next) + " is not " + serialize(prev) +
                    " plus one box");
  }
  ExactCotransition out;
  out.value = BigRational(exact_dim_3d(prev, cache, size_cap),
                          exact_dim_3d(next, cache, size_cap));
  out.approx = out.value.convert_to<double>();
  return out;
}

namespace {

// Plane partitions of size <= 42 as 128-bit keys. Reading from bit 0, each
// column of height h is h one-bits and a zero; each row ends with an extra
// zero and the whole diagram with one more. At most 3n + 1 bits.
class PartitionCodec {
 public:
  static constexpr int kMaxSize = 42;

  // Decodes `key` into per-cell heights and the bit positions needed to
  // insert a box anywhere.
  void Decode(U128 key) {
    cell_h_.clear();
    cell_pos_.clear();
    row_begin_.clear();
    row_end_pos_.clear();
    int pos = 0;
    auto bit = [&](int p) { return static_cast<int>((key >> p) & 1); };
    while (bit(pos) == 1) {
      row_begin_.push_back(static_cast<int>(cell_h_.size()));
      while (bit(pos) == 1) {
        const int start = pos;
        while (bit(pos) == 1) ++pos;
        cell_pos_.push_back(start);
        cell_h_.push_back(pos - start);
        ++pos;  // cell terminator
      }
      row_end_pos_.push_back(pos);
      ++pos;  // row terminator
    }
    final_pos_ = pos;
    row_begin_.push_back(static_cast<int>(cell_h_.size()));
  }

  int num_rows() const { return static_cast<int>(row_end_pos_.size()); }
  int row_len(int y) const { return row_begin_[y + 1] - row_begin_[y]; }
  int height(int x, int y) const {
    if (y >= num_rows() || x >= row_len(y)) return 0;
    return cell_h_[row_begin_[y] + x];
  }

  // Calls fn(successor_key) for every diagram covering the decoded one.
  template <typename Fn>
  void ForEachSuccessor(U128 key, Fn&& fn) const {
    const int rows = num_rows();
    for (int y = 0; y < rows; ++y) {
      const int len = row_len(y);
      for (int x = 0; x < len; ++x) {
        const int h = height(x, y);
        if (x > 0 && height(x - 1, y) <= h) continue;
        if (y > 0 && height(x, y - 1) <= h) continue;
        fn(Insert(key, cell_pos_[row_begin_[y] + x], U128{1}, 1));
      }
      if (y == 0 || row_len(y - 1) > len) {
        fn(Insert(key, row_end_pos_[y], U128{1}, 2));
      }
    }
    fn(Insert(key, final_pos_, U128{1}, 3));
  }

  RowForm ToRows() const {
    RowForm rows(num_rows());
    for (int y = 0; y < num_rows(); ++y) {
      for (int x = 0; x < row_len(y); ++x) rows[y].push_back(height(x, y));
    }
    return rows;
  }

 private:
  static U128 Insert(U128 key, int pos, U128 pattern, int len) {
    const U128 low_mask = pos == 0 ? U128{0} : ((U128{1} << pos) - 1);
    return (key & low_mask) | (pattern << pos) | ((key >> pos) << (pos + len));
  }

  std::vector<int> cell_h_;
  std::vector<int> cell_pos_;
  std::vector<int> row_begin_;
  std::vector<int> row_end_pos_;
  int final_pos_ = 0;
};

}  // namespace

std::vector<MaxDimEntry> max_dim_table(int n, int cap) {
  if (n < 1) throw SizeLimitExceeded("size must be at least 1");
  if (n > cap || n > PartitionCodec::kMaxSize || n > 34) {
    throw SizeLimitExceeded("size " + std::to_string(n) +
                            " exceeds the max-dimension search cap " +
                            std::to_string(std::min(cap, 34)));
  }
  // Path counts stay below n! < 2^128 for n <= 34.
  absl::flat_hash_map<U128, U128, U128Hash> level, next;
  level.emplace(U128{0}, U128{1});
  PartitionCodec codec;
  std::vector<MaxDimEntry> table;
  for (int k = 1; k <= n; ++k) {
    next.clear();
    next.reserve(level.size() * 3 / 2 + 16);
    for (const auto& [key, count] : level) {
      codec.Decode(key);
      const U128 c = count;
      codec.ForEachSuccessor(key, [&](U128 succ) { next[succ] += c; });
    }
    std::swap(level, next);

    U128 best = 0;
    for (const auto& [key, count] : level) best = std::max(best, count);
    MaxDimEntry entry;
    entry.size = k;
    entry.dimension = ToBig(best);
    entry.num_diagrams = level.size();
    std::vector<std::pair<std::string, Diagram3>> winners;
    for (const auto& [key, count] : level) {
      if (count != best) continue;
      codec.Decode(key);
      Diagram3 d = from_rows(codec.ToRows());
      winners.emplace_back(serialize(d), std::move(d));
    }
    std::sort(winners.begin(), winners.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [text, d] : winners) entry.maximizers.push_back(std::move(d));
    entry.diagram = entry.maximizers.front();
    table.push_back(std::move(entry));
  }
  return table;
}

MaxDimEntry max_dim_search(int n, int cap) {
  return std::move(max_dim_table(n, cap).back());
}

std::vector<GreedyStep> greedy_sequence_exact(int n_max, DimCache& cache,
                                              int size_cap) {
  if (n_max > size_cap) {
    throw SizeLimitExceeded("greedy size " + std::to_string(n_max) +
                            " exceeds the exact-dimension cap " +
                            std::to_string(size_cap));
  }
  std::vector<GreedyStep> steps;
  Diagram3 current;
  BigDim current_dim = 1;
  for (int k = 1; k <= n_max; ++k) {
    // The smallest co-transition probability is the largest new dimension;
    // strict comparison over the sorted addable list keeps the
    // lexicographically smallest box on ties.
    GreedyStep best;
    bool have_best = false;
    for (const Box& b : corners(current).addable) {
      Diagram3 candidate = add_box(current, b);
      BigDim dim = exact_dim_3d(candidate, cache, size_cap);
      if (!have_best || dim > best.dimension) {
        best.diagram = std::move(candidate);
        best.added = b;
        best.dimension = std::move(dim);
        have_best = true;
      }
    }
    best.size = k;
    best.probability = BigRational(current_dim, best.dimension);
    best.approx = best.probability.convert_to<double>();
    current = best.diagram;
    current_dim = best.dimension;
    steps.push_back(std::move(best));
  }
  return steps;
}

std::string FormatRational(const BigRational& value, int digits) {
  BigDim num = mp::numerator(value);
  const BigDim den = mp::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigDim scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigDim q = (num * scale) / den;
  const BigDim r = (num * scale) % den;
  const BigDim twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0)) ++q;
  std::string text = q.str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
  }
  if (negative && q != 0) text.insert(0, "-");
  return text;
}

double LogBig(const BigDim& value) {
  if (value <= 0) return -HUGE_VAL;
  const auto msb = static_cast<long>(mp::msb(value));
  if (msb < 1000) return std::log(value.convert_to<double>());
  const long shift = msb - 62;
  const BigDim top = value >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace taquin
