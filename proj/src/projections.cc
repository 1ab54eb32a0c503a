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

#include "stripecover/projections.h"

#include <cmath>
#include <numeric>
#include <sstream>

namespace stripecover {

SquareSet::SquareSet(std::vector<Square> squares_in, int generation_in)
    : squares(std::move(squares_in)), generation(generation_in) {
  for (const Square& s : squares) {
    if (s.side.sign() <= 0) {
      throw InvariantError("squares: side must be positive");
    }
  }
}

SquareSet four_corner(int depth) {
  if (depth < 0) throw PreconditionError("four_corner: depth must be >= 0");
  if (depth > 10) {
    throw BudgetError("four_corner: depth capped at 10 (4^10 squares)");
  }
  std::vector<Square> squares{{Rational(0), Rational(0), Rational(1)}};
  for (int n = 0; n < depth; ++n) {
    std::vector<Square> next;
    next.reserve(squares.size() * 4);
    for (const Square& s : squares) {
      const Rational quarter = s.side / 4;
      const Rational far = s.side * Rational(3, 4);
      next.push_back({s.x, s.y, quarter});
      next.push_back({s.x + far, s.y, quarter});
      next.push_back({s.x, s.y + far, quarter});
      next.push_back({s.x + far, s.y + far, quarter});
    }
    squares = std::move(next);
  }
  return SquareSet(std::move(squares), depth);
}

Direction::Direction(long p_in, long q_in) : p(p_in), q(q_in) {
  if (p == 0 && q == 0) {
    throw InvariantError("direction: (0,0) is not a direction");
  }
  if (std::gcd(std::abs(p), std::abs(q)) != 1) {
    throw InvariantError("direction: components must be coprime");
  }
}

double Direction::norm() const {
  return std::sqrt(static_cast<double>(p) * p + static_cast<double>(q) * q);
}

std::string Direction::str() const {
  return std::to_string(p) + "," + std::to_string(q);
}

Rational project_length(const SquareSet& s, const Direction& d) {
  // A square projects onto an interval under the linear functional:
  // the extremes are attained at corners, so the interval is
  // [base + side*(min(0,p) + min(0,q)), base + side*(max(0,p) + max(0,q))].
  const Rational lo_coef(std::min(0L, d.p) + std::min(0L, d.q));
  const Rational hi_coef(std::max(0L, d.p) + std::max(0L, d.q));
  std::vector<Interval> pieces;
  pieces.reserve(s.squares.size());
  for (const Square& sq : s.squares) {
    const Rational base = Rational(d.p) * sq.x + Rational(d.q) * sq.y;
    pieces.emplace_back(base + sq.side * lo_coef, base + sq.side * hi_coef);
  }
  return union_length(pieces);
}

Rational project_segment(const std::pair<Rational, Rational>& a,
                         const std::pair<Rational, Rational>& b,
                         const Direction& d) {
  return abs(Rational(d.p) * (b.first - a.first) +
             Rational(d.q) * (b.second - a.second));
}

std::vector<ProjectionCell> projection_report(
    const std::vector<int>& depths, const std::vector<Direction>& directions) {
  std::vector<ProjectionCell> cells;
  cells.reserve((depths.size() + 1) * directions.size());
  for (const Direction& d : directions) {
    const Rational len =
        project_segment({Rational(0), Rational(0)}, {Rational(1), Rational(1)},
                        d);
    cells.push_back({"segment", -1, d, len, len.to_double() / d.norm()});
  }
  for (int depth : depths) {
    const SquareSet s = four_corner(depth);
    for (const Direction& d : directions) {
      const Rational len = project_length(s, d);
      cells.push_back(
          {"four-corner", depth, d, len, len.to_double() / d.norm()});
    }
  }
  return cells;
}

std::string projection_csv(const std::vector<ProjectionCell>& cells) {
  std::ostringstream out;
  out << "set,depth,direction,exact,normalized\n";
  for (const ProjectionCell& c : cells) {
    out << c.set_name << ',' << c.depth << ",\"" << c.dir.str() << "\","
        << c.exact.str() << ',' << c.normalized << '\n';
  }
  return out.str();
}

}  // namespace stripecover
