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

#include "taquin/diagram.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taquin/errors.h"

namespace taquin {

std::string ToString(const Box& b) {
  return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + "," +
         std::to_string(b.z) + ")";
}

void Diagram3::Normalize() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

std::vector<Box> Diagram3::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  const int max_x = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  for (int x = 0; x < max_x; ++x) {
    for (int y = 0; y < static_cast<int>(rows_.size()); ++y) {
      const int h = height(x, y);
      if (h == 0) break;
      for (int z = 0; z < h; ++z) out.push_back(Box{x, y, z});
    }
  }
  return out;
}

bool Diagram3::is_planar() const {
  return rows_.empty() || rows_[0][0] <= 1;
}

int Diagram3::length_x(int y, int z) const {
  if (y < 0 || y >= static_cast<int>(rows_.size())) return 0;
  const auto& row = rows_[y];
  // Row entries are non-increasing, so the boxes above height z form a prefix.
  auto it = std::partition_point(row.begin(), row.end(),
                                 [z](int h) { return h > z; });
  return static_cast<int>(it - row.begin());
}

int Diagram3::length_y(int x, int z) const {
  int y = 0;
  while (y < static_cast<int>(rows_.size()) && height(x, y) > z) ++y;
  return y;
}

Diagram3 from_rows(const RowForm& rows) {
  Diagram3 d;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    const auto& row = rows[y];
    if (row.empty()) {
      throw MonotonicityViolation("row " + std::to_string(y) + " is empty");
    }
    if (y > 0 && row.size() > rows[y - 1].size()) {
      throw MonotonicityViolation("row " + std::to_string(y) +
                                  " is longer than the row before it");
    }
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (row[x] <= 0) {
        throw MonotonicityViolation("non-positive entry in row " +
                                    std::to_string(y));
      }
      if (x > 0 && row[x] > row[x - 1]) {
        throw MonotonicityViolation("row " + std::to_string(y) +
                                    " increases at x=" + std::to_string(x));
      }
      if (y > 0 && row[x] > rows[y - 1][x]) {
        throw MonotonicityViolation("column " + std::to_string(x) +
                                    " increases at y=" + std::to_string(y));
      }
      d.size_ += row[x];
    }
  }
  d.rows_ = rows;
  return d;
}

RowForm to_rows(const Diagram3& d) { return d.rows(); }

Diagram3 from_partition(const std::vector<int>& parts) {
  RowForm rows;
  for (int len : parts) {
    if (len <= 0) throw MonotonicityViolation("non-positive partition part");
    rows.emplace_back(len, 1);
  }
  return from_rows(rows);
}

std::vector<int> to_partition(const Diagram3& d) {
  if (!d.is_planar()) throw NotPlanar("diagram has boxes above z = 0");
  std::vector<int> parts;
  for (const auto& row : d.rows()) parts.push_back(static_cast<int>(row.size()));
  return parts;
}

Diagram3 diagram_from_boxes(std::span<const Box> boxes) {
  std::map<std::pair<int, int>, int> columns;
  for (const Box& b : boxes) {
    if (b.x < 0 || b.y < 0 || b.z < 0) {
      throw IllegalCorner("negative coordinate in " + ToString(b));
    }
    ++columns[{b.y, b.x}];
  }
  RowForm rows;
  for (const auto& [key, count] : columns) {
    const auto [y, x] = key;
    if (static_cast<int>(rows.size()) <= y) rows.resize(y + 1);
    if (static_cast<int>(rows[y].size()) <= x) rows[y].resize(x + 1, 0);
    rows[y][x] = count;
  }
  Diagram3 d;
  d.rows_ = std::move(rows);
  d.size_ = static_cast<int>(boxes.size());
  // Every column must be the full stack {0..count-1} and the heights must be
  // monotone; checking box membership against the rebuilt height map catches
  // gaps, duplicates, and holes in the base alike.
  for (const Box& b : boxes) {
    if (b.z >= d.height(b.x, b.y)) {
      throw IllegalCorner("box set is not downward closed at " + ToString(b));
    }
  }
  for (std::size_t y = 0; y < d.rows_.size(); ++y) {
    for (std::size_t x = 0; x < d.rows_[y].size(); ++x) {
      const int h = d.rows_[y][x];
      if ((h == 0 && !d.rows_[y].empty()) ||
          (x > 0 && h > d.rows_[y][x - 1]) ||
          (y > 0 && h > d.height(static_cast<int>(x), static_cast<int>(y) - 1))) {
        throw IllegalCorner("box set is not downward closed");
      }
    }
    if (d.rows_[y].empty()) throw IllegalCorner("box set has an empty row");
  }
  std::set<Box> distinct(boxes.begin(), boxes.end());
  if (distinct.size() != boxes.size()) {
    throw IllegalCorner("duplicate boxes");
  }
  return d;
}

bool is_addable(const Diagram3& d, const Box& b) {
  if (b.x < 0 || b.y < 0 || b.z < 0) return false;
  return d.height(b.x, b.y) == b.z &&
         (b.x == 0 || d.height(b.x - 1, b.y) > b.z) &&
         (b.y == 0 || d.height(b.x, b.y - 1) > b.z);
}

bool is_removable(const Diagram3& d, const Box& b) {
  if (b.x < 0 || b.y < 0 || b.z < 0) return false;
  return d.height(b.x, b.y) == b.z + 1 && d.height(b.x + 1, b.y) <= b.z &&
         d.height(b.x, b.y + 1) <= b.z;
}

CornerSet corners(const Diagram3& d) {
  CornerSet c;
  const auto& rows = d.rows();
  const int num_rows = static_cast<int>(rows.size());
  for (int y = 0; y <= num_rows; ++y) {
    const int len = y < num_rows ? static_cast<int>(rows[y].size()) : 0;
    for (int x = 0; x <= len; ++x) {
      const Box top{x, y, d.height(x, y)};
      if (is_addable(d, top)) c.addable.push_back(top);
      if (top.z > 0) {
        const Box last{x, y, top.z - 1};
        if (is_removable(d, last)) c.removable.push_back(last);
      }
    }
  }
  std::sort(c.addable.begin(), c.addable.end());
  std::sort(c.removable.begin(), c.removable.end());
  return c;
}

Diagram3 add_box(const Diagram3& d, const Box& b) {
  if (!is_addable(d, b)) {
    throw IllegalCorner(ToString(b) + " is not an addable corner");
  }
  Diagram3 out = d;
  if (static_cast<int>(out.rows_.size()) <= b.y) out.rows_.resize(b.y + 1);
  auto& row = out.rows_[b.y];
  if (static_cast<int>(row.size()) <= b.x) row.resize(b.x + 1, 0);
  ++row[b.x];
  ++out.size_;
  return out;
}

Diagram3 remove_box(const Diagram3& d, const Box& b) {
  if (!is_removable(d, b)) {
    throw IllegalCorner(ToString(b) + " is not a removable corner");
  }
  Diagram3 out = d;
  --out.rows_[b.y][b.x];
  --out.size_;
  out.Normalize();
  return out;
}

Diagram3 intersect(const Diagram3& a, const Diagram3& b) {
  RowForm rows;
  const std::size_t num_rows = std::min(a.rows().size(), b.rows().size());
  for (std::size_t y = 0; y < num_rows; ++y) {
    std::vector<int> row;
    const std::size_t len = std::min(a.rows()[y].size(), b.rows()[y].size());
    for (std::size_t x = 0; x < len; ++x) {
      row.push_back(std::min(a.rows()[y][x], b.rows()[y][x]));
    }
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

bool is_subdiagram(const Diagram3& inner, const Diagram3& outer) {
  for (std::size_t y = 0; y < inner.rows().size(); ++y) {
    for (std::size_t x = 0; x < inner.rows()[y].size(); ++x) {
      if (inner.rows()[y][x] >
          outer.height(static_cast<int>(x), static_cast<int>(y))) {
        return false;
      }
    }
  }
  return true;
}

Box permute_axes(const Box& b, const std::array<int, 3>& perm) {
  const int c[3] = {b.x, b.y, b.z};
  return Box{c[perm[0]], c[perm[1]], c[perm[2]]};
}

Diagram3 permute_axes(const Diagram3& d, const std::array<int, 3>& perm) {
  std::vector<Box> boxes = d.boxes();
  for (Box& b : boxes) b = permute_axes(b, perm);
  return diagram_from_boxes(boxes);
}

std::string serialize(const Diagram3& d) {
  std::string out = "[";
  for (std::size_t y = 0; y < d.rows().size(); ++y) {
    if (y > 0) out += ',';
    out += '[';
    const auto& row = d.rows()[y];
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x > 0) out += ',';
      out += std::to_string(row[x]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::string serialize_partition(const Diagram3& d) {
  const std::vector<int> parts = to_partition(d);
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ']';
  return out;
}

namespace {

std::vector<Diagram3> GrowAll(int n, bool planar_only) {
  std::vector<Diagram3> level = {Diagram3()};
  for (int k = 0; k < n; ++k) {
    std::map<std::string, Diagram3> next;
    for (const Diagram3& d : level) {
      for (const Box& b : corners(d).addable) {
        if (planar_only && b.z > 0) continue;
        Diagram3 grown = add_box(d, b);
        next.emplace(serialize(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [key, d] : next) level.push_back(std::move(d));
  }
  return level;
}

}  // namespace

std::vector<Diagram3> all_plane_partitions(int n) {
  return GrowAll(n, /*planar_only=*/false);
}

std::vector<Diagram3> all_partitions_2d(int n) {
  return GrowAll(n, /*planar_only=*/true);
}

}  // namespace taquin
