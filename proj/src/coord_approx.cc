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

#include "stripecover/coord_approx.h"

#include <utility>

namespace stripecover {

namespace {

constexpr long kSampleDen = 256;  // denominator cap for sampled rationals

// (param, transverse) -> original plane coordinates.
Point to_plane(int axis, const Rational& param, const Rational& trans) {
  return axis == 1 ? Point{param, trans} : Point{trans, param};
}

}  // namespace

CoordApproximator::CoordApproximator(Arrangement a, Rational baseline,
                                     Interval window)
    : arr_(std::move(a)),
      baseline_(std::move(baseline)),
      window_(std::move(window)) {
  if (!arr_.disjoint_interiors()) {
    throw PreconditionError("phi: arrangement must have disjoint interiors");
  }
  const Rational half = arr_.delta() / 2;
  for (const PLFunction& f : arr_.curves()) {
    if (f.min_on(window_) - half < baseline_) {
      throw PreconditionError("phi: baseline must lie below every stripe "
                              "over the window");
    }
  }
}

std::vector<Interval> CoordApproximator::sections_at(const Rational& c) const {
  const Rational half = arr_.delta() / 2;
  std::vector<Interval> secs;
  secs.reserve(arr_.size());
  for (const PLFunction& f : arr_.curves()) {
    const Rational v = f.eval(c);
    secs.emplace_back(v - half, v + half);
  }
  return secs;
}

Rational CoordApproximator::eval(const Point& p) const {
  const Rational& param = arr_.axis() == 1 ? p.x1 : p.x2;
  const Rational& trans = arr_.axis() == 1 ? p.x2 : p.x1;
  const std::vector<Interval> secs = sections_at(param);
  if (trans >= baseline_) {
    const Interval seg(baseline_, trans);
    Rational overlap(0);
    for (const Interval& s : secs) overlap += intersection_length(seg, s);
    return (trans - baseline_) - overlap;
  }
  const Interval seg(trans, baseline_);
  Rational overlap(0);
  for (const Interval& s : secs) overlap += intersection_length(seg, s);
  return (trans - baseline_) + overlap;
}

Rational CoordApproximator::deficit(const Point& p) const {
  const Rational& trans = arr_.axis() == 1 ? p.x2 : p.x1;
  return (trans - baseline_) - eval(p);
}

PLFunction CoordApproximator::restrict_transverse(const Rational& c) const {
  const std::vector<Interval> merged = merge_intervals(sections_at(c));
  if (merged.empty()) {
    return PLFunction({baseline_}, {Rational(0)}, 1, 1);
  }
  std::vector<Rational> xs, ys;
  xs.reserve(2 * merged.size());
  for (const Interval& s : merged) {
    xs.push_back(s.lo);
    xs.push_back(s.hi);
  }
  for (const Rational& x : xs) {
    ys.push_back(eval(to_plane(arr_.axis(), c, x)));
  }
  return PLFunction(std::move(xs), std::move(ys), 1, 1);
}

PLFunction CoordApproximator::restrict_parallel(const Rational& c) const {
  const Rational half = arr_.delta() / 2;
  const bool above = c >= baseline_;
  const Rational seg_lo = above ? baseline_ : c;
  const Rational seg_hi = above ? c : baseline_;
  PLFunction acc = PLFunction::constant(0);
  for (const PLFunction& f : arr_.curves()) {
    // Overlap of [seg_lo, seg_hi] with the moving section f +- delta/2,
    // as an exact PL function of the parameter.
    const PLFunction top =
        pointwise_min(PLFunction::constant(seg_hi), shift(f, half));
    const PLFunction bot =
        pointwise_max(PLFunction::constant(seg_lo), shift(f, -half));
    const PLFunction ov =
        pointwise_max(PLFunction::constant(0), subtract(top, bot));
    acc = add(acc, ov);
  }
  const PLFunction base = PLFunction::constant(c - baseline_);
  return above ? subtract(base, acc) : add(base, acc);
}

LipschitzReport verify_three_lipschitz(const CoordApproximator& A,
                                       size_t pair_budget, Rng& rng) {
  if (pair_budget < 1) throw PreconditionError("lipschitz: budget must be >= 1");
  const Arrangement& arr = A.arrangement();
  const Interval& win = A.window();
  const Rational trans_lo = max(A.baseline(), win.lo);
  const Rational trans_hi = win.hi;
  const Rational half = arr.delta() / 2;

  LipschitzReport report;
  report.max_taxicab_ratio = Rational(0);
  auto sample_param = [&] { return rng.rational(win.lo, win.hi, kSampleDen); };
  auto sample_trans = [&] {
    return rng.rational(trans_lo, trans_hi, kSampleDen);
  };

  for (size_t k = 0; k < pair_budget; ++k) {
    const int stratum = arr.size() == 0 ? 2 : static_cast<int>(k % 3);
    Rational s1, s2, t1, t2;
    if (stratum == 0) {
      // Both points on one vertical line (Case A of the proof).
      s1 = s2 = sample_param();
      t1 = sample_trans();
      t2 = sample_trans();
    } else if (stratum == 1) {
      // Both points inside one stripe (Case B).
      const size_t l = rng.below(arr.size());
      s1 = sample_param();
      s2 = sample_param();
      t1 = arr.curves()[l].eval(s1) + rng.rational(-half, half, kSampleDen);
      t2 = arr.curves()[l].eval(s2) + rng.rational(-half, half, kSampleDen);
    } else {
      // Free pair (Cases C/D).
      s1 = sample_param();
      s2 = sample_param();
      t1 = sample_trans();
      t2 = sample_trans();
    }
    const Point p = to_plane(arr.axis(), s1, t1);
    const Point q = to_plane(arr.axis(), s2, t2);
    const Rational dphi = abs(A.eval(p) - A.eval(q));
    const Rational dpar = abs(s1 - s2);
    const Rational dtrans = abs(t1 - t2);
    if (dphi > dtrans + 2 * dpar) report.within_case_bound = false;
    if (dphi * dphi > 9 * (dpar * dpar + dtrans * dtrans)) {
      report.within_euclidean = false;
    }
    const Rational taxi = dpar + dtrans;
    if (!taxi.is_zero()) {
      const Rational ratio = dphi / taxi;
      if (ratio > report.max_taxicab_ratio) {
        report.max_taxicab_ratio = ratio;
        report.witness = PairWitness{p, q};
      }
    }
    ++report.pairs;
  }
  return report;
}

ApproximationReport verify_approximation(const CoordApproximator& A,
                                         const std::vector<Point>& pts) {
  ApproximationReport report;
  report.max_deficit = Rational(0);
  const Rational cap = A.arrangement().total_thickness();
  for (const Point& p : pts) {
    const Rational d = A.deficit(p);
    if (d.sign() < 0 || d > cap) {
      report.ok = false;
      report.witness = p;
    }
    if (d > report.max_deficit) {
      report.max_deficit = d;
      report.witness = p;
    }
    ++report.points;
  }
  return report;
}

ApproximationReport verify_approximation(const CoordApproximator& A,
                                         size_t point_budget, Rng& rng) {
  const Interval& win = A.window();
  const Rational trans_lo = max(A.baseline(), win.lo);
  std::vector<Point> pts;
  pts.reserve(point_budget);
  for (size_t k = 0; k < point_budget; ++k) {
    const Rational s = rng.rational(win.lo, win.hi, kSampleDen);
    const Rational t = rng.rational(trans_lo, win.hi, kSampleDen);
    pts.push_back(to_plane(A.arrangement().axis(), s, t));
  }
  return verify_approximation(A, pts);
}

UnivariateReport verify_stripe_univariate(const CoordApproximator& A,
                                          size_t samples_per_stripe,
                                          Rng& rng) {
  const Arrangement& arr = A.arrangement();
  const Interval& win = A.window();
  const Rational half = arr.delta() / 2;
  UnivariateReport report;
  for (size_t l = 0; l < arr.size(); ++l) {
    bool have_constant = false;
    Rational constant(0);
    for (size_t k = 0; k < samples_per_stripe; ++k) {
      const Rational s = rng.rational(win.lo, win.hi, kSampleDen);
      const Rational fl = arr.curves()[l].eval(s);
      const Rational o1 = rng.rational(-half, half, kSampleDen);
      const Rational o2 = rng.rational(-half, half, kSampleDen);
      const Point p = to_plane(arr.axis(), s, fl + o1);
      const Point q = to_plane(arr.axis(), s, fl + o2);
      const Rational vp = A.eval(p);
      if (vp != A.eval(q)) report.ok = false;
      const Rational c = vp - fl;
      if (!have_constant) {
        constant = c;
        have_constant = true;
      } else if (c != constant) {
        report.ok = false;
      }
      ++report.pairs;
    }
    report.stripe_constants.push_back(constant);
  }
  return report;
}

bool interval_inequality(const Rational& p2, const Rational& p2s,
                         const Rational& q2, const Rational& q2s) {
  if (p2 > p2s || q2s > q2) {
    throw PreconditionError("interval_inequality: needs p2 <= p2' and "
                            "q2' <= q2");
  }
  return abs(p2 - p2s) + abs(q2s - q2) <= abs(p2 - q2) + abs(p2s - q2s);
}

}  // namespace stripecover
