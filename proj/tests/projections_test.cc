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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "stripecover/projections.h"

namespace sc = stripecover;
using sc::Direction;
using sc::Rational;
using sc::SquareSet;

TEST_CASE("four corner iterates count and shrink as expected") {
  const SquareSet s0 = sc::four_corner(0);
  REQUIRE(s0.squares.size() == 1);
  CHECK(s0.squares[0].side == Rational(1));
  CHECK(s0.generation == 0);

  const SquareSet s1 = sc::four_corner(1);
  REQUIRE(s1.squares.size() == 4);
  for (const sc::Square& q : s1.squares) CHECK(q.side == Rational(1, 4));

  const SquareSet s3 = sc::four_corner(3);
  CHECK(s3.squares.size() == 64);
  for (const sc::Square& q : s3.squares) CHECK(q.side == Rational(1, 64));

  CHECK_THROWS_AS(sc::four_corner(-1), sc::PreconditionError);
  CHECK_THROWS_AS(sc::four_corner(11), sc::BudgetError);
}

TEST_CASE("direction validates coprimality") {
  CHECK_THROWS_AS(Direction(0, 0), sc::Error);
  CHECK_THROWS_AS(Direction(2, 4), sc::Error);
  CHECK_THROWS_AS(Direction(2, 0), sc::Error);
  CHECK_NOTHROW(Direction(1, 0));
  CHECK_NOTHROW(Direction(-3, 5));
  CHECK(Direction(3, -4).norm() == doctest::Approx(5.0));
  CHECK(Direction(2, 1).str() == "2,1");
}

TEST_CASE("horizontal projection of depth n has length 2^-n") {
  for (int n = 0; n <= 6; ++n) {
    const Rational want(1, 1L << n);
    CHECK(sc::project_length(sc::four_corner(n), Direction(1, 0)) == want);
    // Symmetry: the vertical projection matches.
    CHECK(sc::project_length(sc::four_corner(n), Direction(0, 1)) == want);
  }
}

TEST_CASE("projection of a single square spans side times |p| + |q|") {
  const SquareSet unit({sc::Square{Rational(0), Rational(0), Rational(1)}}, 0);
  CHECK(sc::project_length(unit, Direction(1, 0)) == Rational(1));
  CHECK(sc::project_length(unit, Direction(1, 1)) == Rational(2));
  CHECK(sc::project_length(unit, Direction(1, -1)) == Rational(2));
  CHECK(sc::project_length(unit, Direction(3, 2)) == Rational(5));

  const SquareSet small({sc::Square{Rational(2), Rational(5), Rational(1, 3)}},
                        0);
  CHECK(sc::project_length(small, Direction(2, -3)) == Rational(5, 3));
}

TEST_CASE("overlapping projections merge before measuring") {
  // Two squares whose (1,0)-shadows overlap in [1/2, 1].
  const SquareSet s({sc::Square{Rational(0), Rational(0), Rational(1)},
                     sc::Square{Rational(1, 2), Rational(3), Rational(1)}},
                    0);
  CHECK(sc::project_length(s, Direction(1, 0)) == Rational(3, 2));
}

TEST_CASE("control segment projections are exact") {
  const auto seg = [](long p, long q) {
    return sc::project_segment({Rational(0), Rational(0)},
                               {Rational(1), Rational(1)}, Direction(p, q));
  };
  CHECK(seg(1, 1) == Rational(2));
  CHECK(seg(1, -1) == Rational(0));  // the segment collapses to a point
  CHECK(seg(1, 0) == Rational(1));
  CHECK(seg(0, 1) == Rational(1));
}

TEST_CASE("report grid carries the control row and every cell") {
  const std::vector<int> depths = {0, 1, 2};
  const std::vector<Direction> dirs = {Direction(1, 0), Direction(1, 1),
                                       Direction(1, -1)};
  const auto cells = sc::projection_report(depths, dirs);
  REQUIRE(cells.size() == dirs.size() * (depths.size() + 1));

  // Control rows come first, one per direction, at depth -1.
  for (size_t d = 0; d < dirs.size(); ++d) {
    CHECK(cells[d].set_name == "segment");
    CHECK(cells[d].depth == -1);
  }
  // The rectifiable control keeps positive shadow except at (1,-1).
  CHECK(cells[0].exact == Rational(1));
  CHECK(cells[2].exact == Rational(0));

  // Cantor cells shrink with depth in the (1,0) column.
  Rational prev(2);
  for (const auto& c : cells) {
    if (c.set_name == "segment" || !(c.dir.p == 1 && c.dir.q == 0)) continue;
    CHECK(c.exact < prev);
    prev = c.exact;
  }

  const std::string csv = sc::projection_csv(cells);
  CHECK(csv.find("set,depth,direction,exact,normalized") == 0);
  CHECK(csv.find("four-corner,2,\"1,0\",1/4,0.25") != std::string::npos);
}

TEST_CASE("square sets validate their sides") {
  CHECK_THROWS_AS(SquareSet({sc::Square{Rational(0), Rational(0), Rational(0)}},
                            0),
                  sc::Error);
  CHECK_THROWS_AS(
      SquareSet({sc::Square{Rational(0), Rational(0), Rational(-1)}}, 0),
      sc::Error);
}
