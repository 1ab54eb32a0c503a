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

#ifndef STRIPECOVER_INTERVALS_H_
#define STRIPECOVER_INTERVALS_H_

#include <vector>

#include "stripecover/rational.h"

namespace stripecover {

// Closed interval [lo, hi].  Degenerate (lo == hi) is allowed; lo > hi
// is rejected at construction.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational l, Rational h);
  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Length of [a.lo,a.hi] ∩ [b.lo,b.hi]; zero when they are disjoint.
Rational intersection_length(const Interval& a, const Interval& b);

// Merges into pairwise-disjoint intervals, sorted by lo.  Touching
// intervals ([0,1],[1,2]) merge.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals);

// Exact Lebesgue measure of the union.
Rational union_length(std::vector<Interval> intervals);

}  // namespace stripecover

#endif  // STRIPECOVER_INTERVALS_H_
