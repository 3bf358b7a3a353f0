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

#include "taquin/schutz.h"

#include <cassert>
#include <utility>

#include "taquin/errors.h"

namespace taquin {
namespace {

// Axis index of a unit box, or -1.
int UnitAxis(const Box& b) {
  if (b == UnitBox(0)) return 0;
  if (b == UnitBox(1)) return 1;
  if (b == UnitBox(2)) return 2;
  return -1;
}

void RequireNonEmpty(const Tableau& t) {
  if (t.empty()) throw EmptyTableau("transformation needs at least one box");
}

}  // namespace

Box SchutzInPlace(std::vector<Box>& path, bool addlast,
                  std::vector<Box>* steps) {
  assert(!path.empty() && path[0] == kOrigin);
  const std::size_t n = path.size();
  Box active = path[0];
  if (steps != nullptr) {
    steps->clear();
    steps->push_back(active);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Box b = path[i];
    if (IsSuccessor(active, b)) {
      path[i - 1] = active;
      active = b;
      if (steps != nullptr) steps->push_back(active);
    } else {
      path[i - 1] = b;
    }
  }
  if (addlast) {
    path[n - 1] = active;
  } else {
    path.pop_back();
  }
  return active;
}

void RandomizePrefixInPlace(std::vector<Box>& path, RandomSource& rng) {
  if (path.size() < 3) return;
  const int a1 = UnitAxis(path[1]);
  const int a2 = UnitAxis(path[2]);
  if (a1 < 0 || a2 < 0 || a1 == a2) return;
  // Orient the pair cyclically: (first, second) in {(x,y), (y,z), (z,x)}.
  const int first = ((a1 + 1) % 3 == a2) ? a1 : a2;
  const int second = (first + 1) % 3;
  if (rng.FairBit()) {
    path[1] = UnitBox(first);
    path[2] = UnitBox(second);
  } else {
    path[1] = UnitBox(second);
    path[2] = UnitBox(first);
  }
}

Box SchutzRndInPlace(std::vector<Box>& path, RandomSource& rng,
                     bool addlast) {
  RandomizePrefixInPlace(path, rng);
  return SchutzInPlace(path, addlast);
}

SchutzResult schutz(const Tableau& t) {
  RequireNonEmpty(t);
  std::vector<Box> path = t.path();
  SchutzResult result;
  result.nerve.end = SchutzInPlace(path, /*addlast=*/false,
                                   &result.nerve.steps);
  result.tableau = Tableau::FromValidPath(std::move(path));
  return result;
}

Tableau schutz_preserve(const Tableau& t) {
  RequireNonEmpty(t);
  std::vector<Box> path = t.path();
  SchutzInPlace(path, /*addlast=*/true);
  return Tableau::FromValidPath(std::move(path));
}

// Reverse scan: the last box is the vacated front cell. Slide the hole back
// toward the origin, each time pulling in the -x/-y/-z neighbour with the
// largest entry, which is the first one met when scanning from the end.
Tableau schutz_preserve_inverse(const Tableau& t) {
  RequireNonEmpty(t);
  const std::vector<Box>& in = t.path();
  const std::size_t n = in.size();
  std::vector<Box> out(n);
  Box active = in[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    const Box b = in[j];
    if (IsSuccessor(b, active)) {
      out[j + 1] = active;
      active = b;
    } else {
      out[j + 1] = b;
    }
  }
  assert(active == kOrigin);
  out[0] = active;
  return Tableau::FromValidPath(std::move(out));
}

Tableau randomize_prefix(const Tableau& t, RandomSource& rng) {
  std::vector<Box> path = t.path();
  RandomizePrefixInPlace(path, rng);
  return Tableau::FromValidPath(std::move(path));
}

Tableau schutz_rnd(const Tableau& t, RandomSource& rng, bool addlast) {
  RequireNonEmpty(t);
  std::vector<Box> path = t.path();
  SchutzRndInPlace(path, rng, addlast);
  return Tableau::FromValidPath(std::move(path));
}

}  // namespace taquin
