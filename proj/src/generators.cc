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

#include "stripecover/generators.h"

#include <algorithm>

namespace stripecover {

namespace {

constexpr long kDen = 64;  // denominator cap for generated coordinates

}  // namespace

PLFunction random_one_lipschitz(Rng& rng, int max_breakpoints,
                                const Interval& window) {
  const int k = static_cast<int>(rng.below(max_breakpoints)) + 1;
  std::vector<Rational> xs;
  xs.reserve(k);
  for (int i = 0; i < k; ++i) {
    xs.push_back(rng.rational(window.lo, window.hi, kDen));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Start near the middle of the unit band and walk with slopes in
  // [-1,1], so families share a range and actually cross.
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  ys.push_back(rng.rational(Rational(1, 4), Rational(3, 4), kDen));
  for (size_t i = 1; i < xs.size(); ++i) {
    const Rational slope = rng.rational(-1, 1, kDen);
    ys.push_back(ys.back() + slope * (xs[i] - xs[i - 1]));
  }
  const Rational ls = rng.rational(-1, 1, kDen);
  const Rational rs = rng.rational(-1, 1, kDen);
  return PLFunction(std::move(xs), std::move(ys), ls, rs);
}

std::vector<PLFunction> random_curve_family(Rng& rng, size_t n,
                                            int max_breakpoints,
                                            const Interval& window) {
  std::vector<PLFunction> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(random_one_lipschitz(rng, max_breakpoints, window));
  }
  return out;
}

Arrangement random_disjoint_arrangement(Rng& rng, size_t n,
                                        const Rational& delta,
                                        const Interval& window, int axis) {
  std::vector<PLFunction> family =
      random_curve_family(rng, n, 6, window);
  std::vector<PLFunction> sorted = uncross(family);
  Arrangement arr = disjointify(sorted, delta, axis);
  // Lift so the lowest stripe clears baseline 0 over the window.
  const Rational bottom = arr.curves().front().min_on(window) - delta / 2;
  if (bottom.sign() < 0) {
    std::vector<PLFunction> lifted;
    lifted.reserve(arr.size());
    for (const PLFunction& f : arr.curves()) {
      lifted.push_back(shift(f, -bottom));
    }
    return Arrangement(axis, delta, std::move(lifted));
  }
  return arr;
}

std::vector<Point> random_points_in_stripes(Rng& rng, const Arrangement& a,
                                            const Interval& window,
                                            size_t count) {
  std::vector<Point> pts;
  pts.reserve(count);
  const Rational half = a.delta() / 2;
  for (size_t i = 0; i < count; ++i) {
    const size_t j = rng.below(a.size());
    const Rational t = rng.rational(window.lo, window.hi, kDen);
    const Rational o = rng.rational(-half, half, kDen);
    const Rational v = a.curves()[j].eval(t) + o;
    pts.push_back(a.axis() == 1 ? Point{t, v} : Point{v, t});
  }
  return pts;
}

std::vector<PLFunction> figure1_curves() {
  return {PLFunction::constant(Rational(3, 2)),
          PLFunction({0}, {Rational(5, 2)}, 1, -1)};
}

std::vector<PLFunction> figure2_curves() {
  return {PLFunction({0}, {1}, 1, -1),    // 1 - |t|
          PLFunction({0}, {-1}, -1, 1)};  // |t| - 1
}

Rational figure2_delta() { return Rational(1, 2); }

Arrangement bundled_arrangement(int j) {
  if (j < 1) throw PreconditionError("bundled_arrangement: j must be >= 1");
  const Rational delta = Rational(1, 4) / Rational(1L << j, 1);
  // Four nearly-flat 1-Lipschitz curves with unit-slope bumps, spaced
  // 1/10 apart; disjointify handles the thickness-dependent lifting.
  std::vector<PLFunction> curves;
  const Rational amp(1, 40);
  for (int l = 0; l < 4; ++l) {
    const Rational center = Rational(3 + l, 10);
    const Rational peak = Rational(2 * l + 1, 9);
    curves.push_back(PLFunction({peak - amp, peak, peak + amp},
                                {center, center + amp, center}, 0, 0));
  }
  return disjointify(curves, delta, 1);
}

OpenCover1D bundled_cover(int j) {
  if (j < 1) throw PreconditionError("bundled_cover: j must be >= 1");
  const Rational total = Rational(1) / Rational(1L << j, 1);
  const int k = std::min(j, 5);
  const Rational piece = total / k;
  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.reserve(k);
  for (int i = 1; i <= k; ++i) {
    const Rational start(i, k + 1);
    intervals.emplace_back(start, start + piece);
  }
  return OpenCover1D(Interval(Rational(0), Rational(1)),
                     std::move(intervals));
}

Arrangement cantor_cover(int n) {
  // y-extents of the depth-n iterate: the 1-D quarter-Cantor intervals.
  std::vector<Rational> starts{Rational(0)};
  Rational side(1);
  for (int k = 0; k < n; ++k) {
    side /= 4;
    std::vector<Rational> next;
    next.reserve(starts.size() * 2);
    for (const Rational& s : starts) {
      next.push_back(s);
      next.push_back(s + 3 * side);
    }
    starts = std::move(next);
  }
  std::vector<PLFunction> curves;
  curves.reserve(starts.size());
  const Rational half = side / 2;
  for (const Rational& s : starts) {
    curves.push_back(PLFunction::constant(s + half));
  }
  return Arrangement(1, side, std::move(curves));
}

std::vector<Point> square_sample_points(const SquareSet& s) {
  std::vector<Point> pts;
  pts.reserve(s.squares.size() * 5);
  for (const Square& sq : s.squares) {
    const Rational half = sq.side / 2;
    pts.push_back({sq.x, sq.y});
    pts.push_back({sq.x + sq.side, sq.y});
    pts.push_back({sq.x, sq.y + sq.side});
    pts.push_back({sq.x + sq.side, sq.y + sq.side});
    pts.push_back({sq.x + half, sq.y + half});
  }
  return pts;
}

}  // namespace stripecover
