// Copyright 2026 The Stripecover Authors
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

#ifndef STRIPECOVER_GENERATORS_H_
#define STRIPECOVER_GENERATORS_H_

#include <vector>

#include "stripecover/null1d.h"
#include "stripecover/projections.h"
#include "stripecover/rng.h"
#include "stripecover/stripes.h"

namespace stripecover {

// Seeded random instances (deterministic per seed) and the fixed
// fixtures the verification campaigns run on.

// 1-Lipschitz PL function with up to max_breakpoints breakpoints in the
// window and every slope a rational in [-1, 1].
PLFunction random_one_lipschitz(Rng& rng, int max_breakpoints,
                                const Interval& window);

std::vector<PLFunction> random_curve_family(Rng& rng, size_t n,
                                            int max_breakpoints,
                                            const Interval& window);

// Uncross + disjointify a random family, then lift everything above
// baseline 0 over the window.
Arrangement random_disjoint_arrangement(Rng& rng, size_t n,
                                        const Rational& delta,
                                        const Interval& window, int axis = 1);

// Random points inside the stripes of an arrangement (used for the
// inclusion verification).
std::vector<Point> random_points_in_stripes(Rng& rng, const Arrangement& a,
                                            const Interval& window,
                                            size_t count);

// A horizontal line crossed by a tent: the classic uncrossing picture.
std::vector<PLFunction> figure1_curves();
// Two crossing tents (1 - |t| and |t| - 1); disjointification demo.
std::vector<PLFunction> figure2_curves();
Rational figure2_delta();

// Fixed 4-curve arrangement with N * delta = 2^-j, for the
// approximation ladder (j = 1..10).
Arrangement bundled_arrangement(int j);

// Cover of [0,1] with total length exactly 2^-j (disjoint open
// intervals), for the 1-D approximate-identity ladder.
OpenCover1D bundled_cover(int j);

// Horizontal stripes of thickness 4^-n covering the y-extent of the
// depth-n four-corner iterate: 2^n stripes, total thickness 2^-n.
Arrangement cantor_cover(int n);

// Corners and centers of every square: grid samples of the square set.
std::vector<Point> square_sample_points(const SquareSet& s);

}  // namespace stripecover

#endif  // STRIPECOVER_GENERATORS_H_
