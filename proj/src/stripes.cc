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

#include "stripecover/stripes.h"

#include <string>

namespace stripecover {

namespace {

void require_one_lipschitz(const PLFunction& f, const char* who) {
  if (f.lipschitz_constant() > Rational(1)) {
    throw PreconditionError(std::string(who) + ": curve is not 1-Lipschitz");
  }
}

void require_axis(int axis, const char* who) {
  if (axis != 1 && axis != 2) {
    throw InvariantError(std::string(who) + ": axis must be 1 or 2");
  }
}

}  // namespace

Curve::Curve(int axis_in, PLFunction f_in) : axis(axis_in), f(std::move(f_in)) {
  require_axis(axis, "curve");
  require_one_lipschitz(f, "curve");
  if (!f.is_unbounded()) throw InvariantError("curve: must be unbounded");
}

Stripe::Stripe(Curve curve_in, Rational delta_in)
    : curve(std::move(curve_in)), delta(std::move(delta_in)) {
  if (delta.sign() <= 0) throw InvariantError("stripe: delta must be > 0");
}

bool Stripe::contains(const Point& p) const {
  const Rational& param = curve.axis == 1 ? p.x1 : p.x2;
  const Rational& transverse = curve.axis == 1 ? p.x2 : p.x1;
  return abs(transverse - curve.f.eval(param)) * 2 <= delta;
}

Arrangement::Arrangement(int axis, Rational delta,
                         std::vector<PLFunction> curves)
    : axis_(axis), delta_(std::move(delta)), curves_(std::move(curves)) {
  require_axis(axis_, "arrangement");
  if (delta_.sign() <= 0) throw InvariantError("arrangement: delta must be > 0");
  for (const PLFunction& f : curves_) require_one_lipschitz(f, "arrangement");
  ordered_ = true;
  disjoint_interiors_ = true;
  for (size_t j = 0; j + 1 < curves_.size(); ++j) {
    if (!is_everywhere_le(curves_[j], curves_[j + 1])) ordered_ = false;
    if (!is_everywhere_le(shift(curves_[j], delta_), curves_[j + 1])) {
      disjoint_interiors_ = false;
    }
  }
}

Stripe Arrangement::stripe(size_t j) const {
  return Stripe(Curve(axis_, curves_.at(j)), delta_);
}

bool Arrangement::stripe_contains(size_t j, const Point& p) const {
  const Rational& param = axis_ == 1 ? p.x1 : p.x2;
  const Rational& transverse = axis_ == 1 ? p.x2 : p.x1;
  return abs(transverse - curves_[j].eval(param)) * 2 <= delta_;
}

Rational Arrangement::total_thickness() const {
  return delta_ * Rational(static_cast<long>(curves_.size()));
}

std::vector<PLFunction> uncross(const std::vector<PLFunction>& curves) {
  for (const PLFunction& f : curves) require_one_lipschitz(f, "uncross");
  // Insertion form of the recursion: with the first n curves already
  // sorted, fold in the next one by carrying the running max upward
  //   f_j <- g_j ^ carry,  carry <- g_j v carry.
  std::vector<PLFunction> out;
  out.reserve(curves.size());
  for (const PLFunction& g : curves) {
    PLFunction carry = g;
    for (PLFunction& held : out) {
      PLFunction low = pointwise_min(held, carry);
      carry = pointwise_max(held, carry);
      held = std::move(low);
    }
    out.push_back(std::move(carry));
  }
  return out;
}

std::vector<Curve> uncross(const std::vector<Curve>& curves) {
  std::vector<PLFunction> fs;
  fs.reserve(curves.size());
  for (size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].axis != curves[0].axis) {
      throw PreconditionError("uncross: mixed axes");
    }
    fs.push_back(curves[i].f);
  }
  std::vector<PLFunction> sorted = uncross(fs);
  std::vector<Curve> out;
  out.reserve(sorted.size());
  for (PLFunction& f : sorted) {
    out.emplace_back(curves[0].axis, std::move(f));
  }
  return out;
}

Arrangement disjointify(const std::vector<PLFunction>& ordered_curves,
                        const Rational& delta, int axis) {
  if (delta.sign() <= 0) {
    throw PreconditionError("disjointify: delta must be > 0");
  }
  for (size_t j = 0; j + 1 < ordered_curves.size(); ++j) {
    if (!is_everywhere_le(ordered_curves[j], ordered_curves[j + 1])) {
      throw PreconditionError(
          "disjointify: input not ordered at index " + std::to_string(j + 1) +
          " (uncross first)");
    }
  }
  std::vector<PLFunction> h = ordered_curves;
  // h[j] after outer step k equals h_{k,j}; entry j is last touched at
  // k = j-1, leaving h_{j,j}.
  for (size_t k = 0; k + 1 < h.size(); ++k) {
    const PLFunction lifted = shift(h[k], delta);
    for (size_t j = k + 1; j < h.size(); ++j) {
      h[j] = pointwise_max(h[j], lifted);
    }
  }
  Arrangement out(axis, delta, std::move(h));
  if (out.size() > 1 && !out.disjoint_interiors()) {
    throw InvariantError("disjointify: separation failed");  // unreachable
  }
  return out;
}

Arrangement disjointify(const Arrangement& a) {
  return disjointify(a.curves(), a.delta(), a.axis());
}

CoverReport covers(const Arrangement& a, const std::vector<Point>& pts) {
  CoverReport report;
  for (const Point& p : pts) {
    bool in = false;
    for (size_t j = 0; j < a.size() && !in; ++j) {
      in = a.stripe_contains(j, p);
    }
    if (!in) {
      report.covered = false;
      report.uncovered.push_back(p);
    }
  }
  return report;
}

CoverReport covers(const std::vector<Stripe>& stripes,
                   const std::vector<Point>& pts) {
  CoverReport report;
  for (const Point& p : pts) {
    bool in = false;
    for (const Stripe& s : stripes) {
      if (s.contains(p)) {
        in = true;
        break;
      }
    }
    if (!in) {
      report.covered = false;
      report.uncovered.push_back(p);
    }
  }
  return report;
}

Rational total_thickness(const std::vector<Stripe>& stripes) {
  Rational t(0);
  for (const Stripe& s : stripes) t += s.delta;
  return t;
}

TransversalReport transversal_intersection(
    const Arrangement& a, const Curve& transversal,
    const std::optional<Interval>& window) {
  if (transversal.axis == a.axis()) {
    throw PreconditionError("transversal: curve must be of the other axis");
  }
  const Rational L = transversal.f.lipschitz_constant();
  if (L >= Rational(1)) {
    throw PreconditionError("transversal: needs Lipschitz constant < 1");
  }
  // Parametrize the transversal by its own axis coordinate s; it meets
  // stripe j exactly where |s - f_j(g(s))| <= delta/2.  The gap
  // u_j(s) = s - f_j(g(s)) has every slope in [1-L, 1+L], so it is
  // strictly increasing and each stripe is met in one parameter
  // interval [u_j^{-1}(-delta/2), u_j^{-1}(delta/2)].
  const Rational half = a.delta() / 2;
  TransversalReport report;
  report.per_stripe.reserve(a.size());
  std::vector<Interval> pieces;
  for (size_t j = 0; j < a.size(); ++j) {
    const PLFunction u = subtract(PLFunction::identity(),
                                  compose(a.curves()[j], transversal.f));
    Rational lo = u.solve_increasing(-half);
    Rational hi = u.solve_increasing(half);
    if (window.has_value()) {
      lo = max(lo, window->lo);
      hi = min(hi, window->hi);
    }
    if (lo <= hi) {
      report.per_stripe.emplace_back(Interval(lo, hi));
      pieces.emplace_back(lo, hi);
    } else {
      report.per_stripe.emplace_back(std::nullopt);
    }
  }
  report.param_length = union_length(pieces);
  report.arclength_upper = (Rational(1) + L) * report.param_length;
  // Cone geometry: each crossing spends parameter at most
  // delta / (1 - L) inside a stripe, and arclength is at most (1 + L)
  // per unit parameter.
  report.bound =
      (Rational(1) + L) / (Rational(1) - L) * a.total_thickness();
  return report;
}

}  // namespace stripecover
