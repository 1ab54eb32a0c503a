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

#ifndef STRIPECOVER_COORD_APPROX_H_
#define STRIPECOVER_COORD_APPROX_H_

#include <optional>
#include <vector>

#include "stripecover/rng.h"
#include "stripecover/stripes.h"

namespace stripecover {

// Coordinate-approximating function of a disjoint stripe arrangement:
//
//   phi(p) = signed length of the baseline-to-p segment on the
//            transverse axis, minus its overlap with the stripe
//            sections through p
//
// i.e. the integral of the complement indicator along the transverse
// segment.  phi is 3-Lipschitz, within total_thickness() of the
// transverse coordinate (measured from the baseline), and constant on
// vertical sections of each stripe.
class CoordApproximator {
 public:
  // The arrangement must have disjoint interiors; the baseline must lie
  // at or below every stripe over the window (exact PL check).
  CoordApproximator(Arrangement a, Rational baseline = Rational(0),
                    Interval window = Interval(Rational(0), Rational(1)));

  const Arrangement& arrangement() const { return arr_; }
  const Rational& baseline() const { return baseline_; }
  const Interval& window() const { return window_; }

  // Exact value at p; axis-2 arrangements swap the roles of p1/p2.
  Rational eval(const Point& p) const;

  // (transverse coordinate - baseline) - phi: the overlap of the
  // baseline segment with the stripes.  Always in [0, N*delta].
  Rational deficit(const Point& p) const;

  // Restriction of phi to the line {param = c} as a function of the
  // transverse coordinate (slopes in {0,1}).
  PLFunction restrict_transverse(const Rational& c) const;
  // Restriction of phi to the line {transverse = c} as a function of
  // the parameter coordinate.
  PLFunction restrict_parallel(const Rational& c) const;

 private:
  // Disjoint closed sections [f_l(c) - delta/2, f_l(c) + delta/2].
  std::vector<Interval> sections_at(const Rational& c) const;

  Arrangement arr_;
  Rational baseline_;
  Interval window_;
};

struct PairWitness {
  Point p;
  Point q;
};

struct LipschitzReport {
  bool within_case_bound = true;   // |dphi| <= |dx2| + 2|dx1| everywhere
  bool within_euclidean = true;    // dphi^2 <= 9 (dx1^2 + dx2^2)
  Rational max_taxicab_ratio;      // max |dphi| / |p-q|_1, exact
  PairWitness witness;             // attains the taxicab max
  size_t pairs = 0;
};

// Stratified sampled verification of the 3-Lipschitz property: pairs on
// one vertical line, pairs inside one stripe, and free pairs, so every
// case of the proof is exercised.  All comparisons exact.
LipschitzReport verify_three_lipschitz(const CoordApproximator& A,
                                       size_t pair_budget, Rng& rng);

struct ApproximationReport {
  bool ok = true;            // every deficit in [0, N*delta]
  Rational max_deficit;      // exact
  Point witness;             // attains the max
  size_t points = 0;
};

ApproximationReport verify_approximation(const CoordApproximator& A,
                                         const std::vector<Point>& pts);
ApproximationReport verify_approximation(const CoordApproximator& A,
                                         size_t point_budget, Rng& rng);

struct UnivariateReport {
  bool ok = true;
  // Per stripe: the constant phi(p) - f_l(p1), identical across samples.
  std::vector<Rational> stripe_constants;
  size_t pairs = 0;
};

// Same-abscissa pairs inside one stripe have exactly equal phi, and
// phi - f_l(param) is one constant per stripe.
UnivariateReport verify_stripe_univariate(const CoordApproximator& A,
                                          size_t samples_per_stripe, Rng& rng);

// |p2 - p2s| + |q2s - q2| <= |p2 - q2| + |p2s - q2s| for p2 <= p2s and
// q2s <= q2 (PreconditionError otherwise).  Returns the truth value.
bool interval_inequality(const Rational& p2, const Rational& p2s,
                         const Rational& q2, const Rational& q2s);

}  // namespace stripecover

#endif  // STRIPECOVER_COORD_APPROX_H_
