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

// Schützenberger's jeu de taquin on growth paths, in three variants:
//
//  * classic: delete the origin box and slide the hole outward, each time
//    pulling in the +x/+y/+z neighbour with the smallest entry, until the
//    hole reaches the front of the diagram. The tableau shrinks by one.
//  * shape-preserving: as classic, then re-append the vacated front box as
//    the largest entry. This is a bijection on the tableaux of a shape.
//  * randomized: before the shape-preserving step, resample the order of
//    path positions 2 and 3 when the first three boxes form an L-shape.
//
// All of them run as a single scan over the path. Since path order is entry
// order, the first path box adjacent to the hole is the smallest-entry
// neighbour, and only the boxes on the sliding path move.

#ifndef TAQUIN_SCHUTZ_H_
#define TAQUIN_SCHUTZ_H_

#include <cstddef>
#include <vector>

#include "taquin/diagram.h"
#include "taquin/random.h"
#include "taquin/tableau.h"

namespace taquin {

// The sliding path of one transformation. steps[0] is the origin and
// consecutive steps differ by a unit move; end == steps.back() is the box
// vacated at the front.
struct Nerve {
  std::vector<Box> steps;
  Box end;

  // Number of boxes that slid into the hole.
  std::size_t shifts() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct SchutzResult {
  Tableau tableau;
  Nerve nerve;
};

// Classic transformation; the result has size n - 1. Throws EmptyTableau.
SchutzResult schutz(const Tableau& t);

// Shape-preserving transformation and its inverse. Throw EmptyTableau.
Tableau schutz_preserve(const Tableau& t);
Tableau schutz_preserve_inverse(const Tableau& t);

// Resamples the order of the second and third path boxes with one fair bit
// when the first three boxes are {origin, e_i, e_j}, i != j. The pairs are
// oriented cyclically (x,y), (y,z), (z,x): bit 0 puts the second axis of
// the pair first, bit 1 the first axis. No bit is consumed otherwise.
Tableau randomize_prefix(const Tableau& t, RandomSource& rng);

// randomize_prefix followed by the classic transformation; with `addlast`
// the vacated box is re-appended so the shape is preserved.
Tableau schutz_rnd(const Tableau& t, RandomSource& rng, bool addlast);

// In-place kernels used by the Monte Carlo loops. `path` must be a valid
// non-empty tableau path. Return the vacated front box; when `steps` is
// non-null it receives the nerve steps.
Box SchutzInPlace(std::vector<Box>& path, bool addlast,
                  std::vector<Box>* steps = nullptr);
void RandomizePrefixInPlace(std::vector<Box>& path, RandomSource& rng);
Box SchutzRndInPlace(std::vector<Box>& path, RandomSource& rng,
                     bool addlast);

}  // namespace taquin

#endif  // TAQUIN_SCHUTZ_H_
