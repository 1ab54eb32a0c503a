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

#include "stripecover/intervals.h"

#include <algorithm>
#include <utility>

namespace stripecover {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InvariantError("interval: hi < lo");
}

Rational intersection_length(const Interval& a, const Interval& b) {
  const Rational lo = max(a.lo, b.lo);
  const Rational hi = min(a.hi, b.hi);
  return lo < hi ? hi - lo : Rational(0);
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  for (auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return merged;
}

Rational union_length(std::vector<Interval> intervals) {
  Rational total(0);
  for (const auto& iv : merge_intervals(std::move(intervals))) {
    total += iv.length();
  }
  return total;
}

}  // namespace stripecover
