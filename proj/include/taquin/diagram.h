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

// Plane partitions (3D Young diagrams) and their corner calculus. A 2D Young
// diagram is a plane partition confined to the z = 0 slab.

#ifndef TAQUIN_DIAGRAM_H_
#define TAQUIN_DIAGRAM_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace taquin {

// A unit box of the positive octant. The defaulted comparison is the
// lexicographic (x, y, z) order used for every canonical ordering.
struct Box {
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

inline constexpr Box kOrigin{0, 0, 0};

// Unit vector along `axis` (0 = x, 1 = y, 2 = z).
constexpr Box UnitBox(int axis) {
  return Box{axis == 0 ? 1 : 0, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0};
}

// True when `b` is `a` moved by +1 along exactly one axis.
constexpr bool IsSuccessor(const Box& a, const Box& b) {
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  const int dz = b.z - a.z;
  return dx >= 0 && dy >= 0 && dz >= 0 && dx + dy + dz == 1;
}

std::string ToString(const Box& b);

// Row form of a plane partition: rows[y][x] is the height of the column of
// boxes standing on (x, y).
using RowForm = std::vector<std::vector<int>>;

class Diagram3 {
 public:
  Diagram3() = default;

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Column height at (x, y); zero outside the diagram.
  int height(int x, int y) const {
    if (y < 0 || x < 0 || y >= static_cast<int>(rows_.size())) return 0;
    const auto& row = rows_[y];
    return x < static_cast<int>(row.size()) ? row[x] : 0;
  }
  bool contains(const Box& b) const {
    return b.x >= 0 && b.y >= 0 && b.z >= 0 && b.z < height(b.x, b.y);
  }

  const RowForm& rows() const { return rows_; }

  // All boxes in lexicographic (x, y, z) order.
  std::vector<Box> boxes() const;

  // True when every box lies in the z = 0 slab.
  bool is_planar() const;

  // Number of boxes along each axis ray starting at the origin of the ray.
  int length_x(int y, int z) const;
  int length_y(int x, int z) const;
  int length_z(int x, int y) const { return height(x, y); }

  friend bool operator==(const Diagram3& a, const Diagram3& b) {
    return a.rows_ == b.rows_;
  }

 private:
  friend Diagram3 from_rows(const RowForm& rows);
  friend Diagram3 add_box(const Diagram3& d, const Box& b);
  friend Diagram3 remove_box(const Diagram3& d, const Box& b);
  friend Diagram3 diagram_from_boxes(std::span<const Box> boxes);

  void Normalize();

  RowForm rows_;
  int size_ = 0;
};

struct CornerSet {
  std::vector<Box> addable;
  std::vector<Box> removable;
};

// Throws MonotonicityViolation unless rows, row entries, and column entries
// are all non-increasing and every entry is positive.
Diagram3 from_rows(const RowForm& rows);
RowForm to_rows(const Diagram3& d);

// 2D partition {l_0 >= l_1 >= ...}: row y holds boxes (x, y, 0), x < l_y.
Diagram3 from_partition(const std::vector<int>& parts);
// Inverse of from_partition; throws NotPlanar.
std::vector<int> to_partition(const Diagram3& d);

// Builds a diagram from an unordered box set; throws IllegalCorner when the
// set is not downward closed or holds duplicates.
Diagram3 diagram_from_boxes(std::span<const Box> boxes);

CornerSet corners(const Diagram3& d);
bool is_addable(const Diagram3& d, const Box& b);
bool is_removable(const Diagram3& d, const Box& b);

// Value-semantics growth and shrinkage; throw IllegalCorner.
Diagram3 add_box(const Diagram3& d, const Box& b);
Diagram3 remove_box(const Diagram3& d, const Box& b);

// Boxwise intersection (always downward closed).
Diagram3 intersect(const Diagram3& a, const Diagram3& b);
bool is_subdiagram(const Diagram3& inner, const Diagram3& outer);

// Relabels axes: new coordinate k is old coordinate perm[k].
Diagram3 permute_axes(const Diagram3& d, const std::array<int, 3>& perm);
Box permute_axes(const Box& b, const std::array<int, 3>& perm);

// Canonical JSON text: `[[7,5,4],[2,1]]`. This is the key used for caching
// and tie-breaking.
std::string serialize(const Diagram3& d);
// `[4,4,3,3,1]`; throws NotPlanar.
std::string serialize_partition(const Diagram3& d);

// Every plane partition of size n, in no particular order. Intended for
// small n (tests and exhaustive oracles).
std::vector<Diagram3> all_plane_partitions(int n);
// Every 2D partition of size n.
std::vector<Diagram3> all_partitions_2d(int n);

}  // namespace taquin

#endif  // TAQUIN_DIAGRAM_H_
