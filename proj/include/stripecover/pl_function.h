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

#ifndef STRIPECOVER_PL_FUNCTION_H_
#define STRIPECOVER_PL_FUNCTION_H_

#include <optional>
#include <vector>

#include "stripecover/intervals.h"
#include "stripecover/rational.h"

namespace stripecover {

// Continuous piecewise-linear function with exact rational breakpoints
// and values.  Between breakpoints the function interpolates linearly;
// beyond the first/last breakpoint it continues with the affine
// extension slopes.  A function may optionally carry a closed bounded
// domain; evaluation outside it throws DomainError.
//
// Values are immutable after construction and freely shareable across
// threads.
class PLFunction {
 public:
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values,
             Rational left_slope, Rational right_slope,
             std::optional<Interval> domain = std::nullopt);

  static PLFunction constant(const Rational& c,
                             std::optional<Interval> domain = std::nullopt);
  // y0 + slope * (x - x0), anchored at breakpoint x0.
  static PLFunction affine(const Rational& x0, const Rational& y0,
                           const Rational& slope,
                           std::optional<Interval> domain = std::nullopt);
  static PLFunction identity(std::optional<Interval> domain = std::nullopt) {
    return affine(0, 0, 1, std::move(domain));
  }

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }
  const std::optional<Interval>& domain() const { return domain_; }
  size_t size() const { return xs_.size(); }

  Rational eval(const Rational& x) const;

  // Max |slope| over all pieces.  Extension slopes count only where the
  // extension region is actually reachable within the domain.
  Rational lipschitz_constant() const;

  PLFunction shift(const Rational& c) const;  // f + c
  PLFunction negate() const;

  // Exact extrema over a closed interval (must lie inside the domain).
  Rational min_on(const Interval& window) const;
  Rational max_on(const Interval& window) const;

  // Removes breakpoints where the slope does not change.  The result is
  // pointwise identical.
  PLFunction canonicalized() const;

  // Unique solution of f(x) = c for strictly increasing unbounded f
  // (every slope > 0); PreconditionError otherwise.
  Rational solve_increasing(const Rational& c) const;

  bool is_unbounded() const { return !domain_.has_value(); }

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  Rational left_slope_;
  Rational right_slope_;
  std::optional<Interval> domain_;
  std::vector<Rational> seg_slopes_;  // size() - 1 entries

  friend PLFunction pointwise_max(const PLFunction&, const PLFunction&);
  friend PLFunction pointwise_min(const PLFunction&, const PLFunction&);
  friend PLFunction add(const PLFunction&, const PLFunction&);
  friend PLFunction compose(const PLFunction&, const PLFunction&);
  const Rational& slope_at_segment(size_t i) const { return seg_slopes_[i]; }
};

// Exact upper/lower envelope.  Breakpoints of the result are the union
// of the inputs' breakpoints plus every crossing point; crossings of
// rational lines are rational, so the result is exact.
PLFunction pointwise_max(const PLFunction& f, const PLFunction& g);
PLFunction pointwise_min(const PLFunction& f, const PLFunction& g);

PLFunction add(const PLFunction& f, const PLFunction& g);
PLFunction subtract(const PLFunction& f, const PLFunction& g);

// f(g(x)).  Both functions must be unbounded.
PLFunction compose(const PLFunction& f, const PLFunction& g);

// Exact pointwise equality on the common domain.
bool equals_pointwise(const PLFunction& f, const PLFunction& g);

// Exact check of f(t) <= g(t) for every t (of the common domain).
bool is_everywhere_le(const PLFunction& f, const PLFunction& g);

PLFunction shift(const PLFunction& f, const Rational& c);

}  // namespace stripecover

#endif  // STRIPECOVER_PL_FUNCTION_H_
