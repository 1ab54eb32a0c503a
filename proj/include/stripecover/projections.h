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

#ifndef STRIPECOVER_PROJECTIONS_H_
#define STRIPECOVER_PROJECTIONS_H_

#include <string>
#include <vector>

#include "stripecover/error.h"
#include "stripecover/intervals.h"
#include "stripecover/rational.h"

namespace stripecover {

struct Square {
  Rational x;  // lower-left corner
  Rational y;
  Rational side;
};

// Finite union of axis-aligned squares; generation labels the
// construction depth.
struct SquareSet {
  std::vector<Square> squares;
  int generation = 0;

  SquareSet(std::vector<Square> squares, int generation);
};

// n-th iterate of the four-corner Cantor construction on the unit
// square: each square is replaced by its four corner subsquares of a
// quarter the side.  4^n squares of side 4^-n; BudgetError past n = 10.
SquareSet four_corner(int depth);

// Rational direction (p, q), coprime, not both zero.  Projection is
// onto the linear functional (x, y) -> p*x + q*y; dividing lengths by
// sqrt(p^2 + q^2) recovers the Euclidean projection.
struct Direction {
  long p;
  long q;

  Direction(long p, long q);

  double norm() const;
  std::string str() const;
};

// Exact unnormalized length of the projection of the square union.
Rational project_length(const SquareSet& s, const Direction& d);

// Exact unnormalized projected length of the segment [a, b].
Rational project_segment(const std::pair<Rational, Rational>& a,
                         const std::pair<Rational, Rational>& b,
                         const Direction& d);

struct ProjectionCell {
  std::string set_name;
  int depth = 0;  // -1 for the control segment
  Direction dir{1, 0};
  Rational exact;     // unnormalized, exact
  double normalized;  // exact / norm(dir)
};

// Grid of projection lengths for the four-corner iterates at the given
// depths, plus a rectifiable control row (the segment (0,0)-(1,1)) per
// direction.  Cells are ordered deterministically.
std::vector<ProjectionCell> projection_report(
    const std::vector<int>& depths, const std::vector<Direction>& directions);

std::string projection_csv(const std::vector<ProjectionCell>& cells);

}  // namespace stripecover

#endif  // STRIPECOVER_PROJECTIONS_H_
