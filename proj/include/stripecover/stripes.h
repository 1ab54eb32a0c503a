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

#ifndef STRIPECOVER_STRIPES_H_
#define STRIPECOVER_STRIPES_H_

#include <optional>
#include <utility>
#include <vector>

#include "stripecover/error.h"
#include "stripecover/intervals.h"
#include "stripecover/pl_function.h"

namespace stripecover {

// A point of the plane.
struct Point {
  Rational x1;
  Rational x2;
};

// Graph of a 1-Lipschitz function over the x1-axis (axis == 1) or over
// the x2-axis (axis == 2).  The function is unbounded so the curve spans
// the whole plane strip-wise.
struct Curve {
  int axis;
  PLFunction f;

  Curve(int axis, PLFunction f);
};

// Closed thickened curve: all points within delta/2 of the graph in the
// transverse coordinate.
struct Stripe {
  Curve curve;
  Rational delta;

  Stripe(Curve curve, Rational delta);

  bool contains(const Point& p) const;
};

// Ordered finite family of stripes with one shared axis and thickness.
// The flags record exact (not sampled) facts established at
// construction: ordered means f_{j-1} <= f_j everywhere; disjoint
// interiors means f_j + delta <= f_{j+1} everywhere.
class Arrangement {
 public:
  Arrangement(int axis, Rational delta, std::vector<PLFunction> curves);

  int axis() const { return axis_; }
  const Rational& delta() const { return delta_; }
  const std::vector<PLFunction>& curves() const { return curves_; }
  size_t size() const { return curves_.size(); }
  bool ordered() const { return ordered_; }
  bool disjoint_interiors() const { return disjoint_interiors_; }

  Stripe stripe(size_t j) const;
  bool stripe_contains(size_t j, const Point& p) const;

  // N * delta, exact.
  Rational total_thickness() const;

 private:
  int axis_;
  Rational delta_;
  std::vector<PLFunction> curves_;
  bool ordered_ = false;
  bool disjoint_interiors_ = false;
};

// Replaces the family by its pointwise sort: same union of graphs, same
// multiset of values at every abscissa, monotone ordering
// f_{j-1} <= f_j.  Inputs must be 1-Lipschitz; the outputs are too.
std::vector<PLFunction> uncross(const std::vector<PLFunction>& curves);
std::vector<Curve> uncross(const std::vector<Curve>& curves);

// Lifts ordered curves by multiples of delta so the stripes of
// thickness delta around the results have pairwise-disjoint interiors
// while still covering the input stripes:
//   h_{1,j} = f_j v (f_1 + delta)            for j > 1,
//   h_{k,j} = h_{k-1,j} v (h_{k-1,k} + delta) for j > k,
// output curve j is h_{j,j}.  PreconditionError on unordered input or
// delta <= 0.
Arrangement disjointify(const std::vector<PLFunction>& ordered_curves,
                        const Rational& delta, int axis = 1);
Arrangement disjointify(const Arrangement& a);

struct CoverReport {
  bool covered = true;
  std::vector<Point> uncovered;
};

// Exact membership of every point in the union of stripes.
CoverReport covers(const Arrangement& a, const std::vector<Point>& pts);
// Heterogeneous-thickness variant.
CoverReport covers(const std::vector<Stripe>& stripes,
                   const std::vector<Point>& pts);

Rational total_thickness(const std::vector<Stripe>& stripes);

// Intersection of a transversal curve (graph over the other axis,
// Lipschitz constant L < 1) with each stripe of an arrangement, solved
// exactly as PL inequalities in the transversal's parameter.
struct TransversalReport {
  // Parameter interval per stripe, in stripe order; nullopt when the
  // (windowed) transversal misses that stripe.
  std::vector<std::optional<Interval>> per_stripe;
  Rational param_length;     // exact length of the union of intervals
  Rational arclength_upper;  // (1 + L) * param_length >= true arclength
  Rational bound;            // C(L) * sum of thicknesses, C(L) = (1+L)/(1-L)
};

TransversalReport transversal_intersection(
    const Arrangement& a, const Curve& transversal,
    const std::optional<Interval>& window = std::nullopt);

}  // namespace stripecover

#endif  // STRIPECOVER_STRIPES_H_
