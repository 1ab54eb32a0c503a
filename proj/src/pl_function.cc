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

#include "stripecover/pl_function.h"

#include <algorithm>
#include <string>
#include <utility>

namespace stripecover {

namespace {

// Common-domain rule for binary operations: both unbounded, or equal
// bounded domains.
std::optional<Interval> common_domain(const PLFunction& f,
                                      const PLFunction& g) {
  if (!f.domain().has_value() && !g.domain().has_value()) return std::nullopt;
  if (f.domain().has_value() && g.domain().has_value() &&
      *f.domain() == *g.domain()) {
    return f.domain();
  }
  throw InvariantError("pl: incompatible domains");
}

std::vector<Rational> merged_breakpoints(const PLFunction& f,
                                         const PLFunction& g) {
  std::vector<Rational> xs;
  xs.reserve(f.size() + g.size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(),
             g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Slope of f immediately left/right of x, where x is at or outside the
// convex hull of f's breakpoints.
const Rational& slope_left_of_front(const PLFunction& f) {
  return f.left_slope();
}
const Rational& slope_right_of_back(const PLFunction& f) {
  return f.right_slope();
}

enum class Envelope { kMax, kMin };

PLFunction envelope(const PLFunction& f, const PLFunction& g, Envelope kind) {
  auto domain = common_domain(f, g);
  std::vector<Rational> xs = merged_breakpoints(f, g);

  // Crossing in the interior segments.
  std::vector<Rational> crossings;
  std::vector<Rational> df(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) df[i] = f.eval(xs[i]) - g.eval(xs[i]);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (df[i].sign() * df[i + 1].sign() < 0) {
      // d is linear on [xs[i], xs[i+1]] and changes sign strictly.
      const Rational t = df[i] / (df[i] - df[i + 1]);
      crossings.push_back(xs[i] + (xs[i + 1] - xs[i]) * t);
    }
  }
  // Crossing on the extension rays.
  {
    const Rational dl = slope_left_of_front(f) - slope_left_of_front(g);
    if (!dl.is_zero() && !df.front().is_zero()) {
      const Rational x_star = xs.front() - df.front() / dl;
      if (x_star < xs.front() &&
          (!domain.has_value() || domain->contains(x_star))) {
        crossings.push_back(x_star);
      }
    }
    const Rational dr = slope_right_of_back(f) - slope_right_of_back(g);
    if (!dr.is_zero() && !df.back().is_zero()) {
      const Rational x_star = xs.back() - df.back() / dr;
      if (x_star > xs.back() &&
          (!domain.has_value() || domain->contains(x_star))) {
        crossings.push_back(x_star);
      }
    }
  }
  xs.insert(xs.end(), crossings.begin(), crossings.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const bool is_max = kind == Envelope::kMax;
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) {
    const Rational vf = f.eval(x);
    const Rational vg = g.eval(x);
    ys.push_back(is_max ? max(vf, vg) : min(vf, vg));
  }

  // Dominant branch on the outer rays.  Past the outermost breakpoint
  // there are no crossings left, so dominance at the endpoint decides;
  // on a tie the branch that wins infinitesimally beyond decides.
  const Rational vfl = f.eval(xs.front());
  const Rational vgl = g.eval(xs.front());
  Rational ls;
  if (vfl != vgl) {
    ls = ((vfl > vgl) == is_max) ? f.left_slope() : g.left_slope();
  } else {
    ls = is_max ? min(f.left_slope(), g.left_slope())
                : max(f.left_slope(), g.left_slope());
  }
  const Rational vfr = f.eval(xs.back());
  const Rational vgr = g.eval(xs.back());
  Rational rs;
  if (vfr != vgr) {
    rs = ((vfr > vgr) == is_max) ? f.right_slope() : g.right_slope();
  } else {
    rs = is_max ? max(f.right_slope(), g.right_slope())
                : min(f.right_slope(), g.right_slope());
  }

  return PLFunction(std::move(xs), std::move(ys), std::move(ls), std::move(rs),
                    std::move(domain))
      .canonicalized();
}

}  // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints,
                       std::vector<Rational> values, Rational left_slope,
                       Rational right_slope, std::optional<Interval> domain)
    : xs_(std::move(breakpoints)),
      ys_(std::move(values)),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)),
      domain_(std::move(domain)) {
  if (xs_.empty()) throw InvariantError("pl: breakpoints empty");
  if (xs_.size() != ys_.size()) {
    throw InvariantError("pl: breakpoints/values size mismatch");
  }
  for (size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (!(xs_[i] < xs_[i + 1])) {
      throw InvariantError("pl: breakpoints not strictly increasing at index " +
                           std::to_string(i + 1));
    }
  }
  if (domain_.has_value()) {
    if (xs_.front() < domain_->lo || domain_->hi < xs_.back()) {
      throw InvariantError("pl: breakpoints outside declared domain");
    }
  }
  seg_slopes_.reserve(xs_.size() > 0 ? xs_.size() - 1 : 0);
  for (size_t i = 0; i + 1 < xs_.size(); ++i) {
    seg_slopes_.push_back((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]));
  }
}

PLFunction PLFunction::constant(const Rational& c,
                                std::optional<Interval> domain) {
  const Rational anchor = domain.has_value() ? domain->lo : Rational(0);
  return PLFunction({anchor}, {c}, 0, 0, std::move(domain));
}

PLFunction PLFunction::affine(const Rational& x0, const Rational& y0,
                              const Rational& slope,
                              std::optional<Interval> domain) {
  return PLFunction({x0}, {y0}, slope, slope, std::move(domain));
}

Rational PLFunction::eval(const Rational& x) const {
  if (domain_.has_value() && !domain_->contains(x)) {
    throw DomainError("pl: evaluation outside domain at x = " + x.str());
  }
  if (x <= xs_.front()) {
    return ys_.front() + left_slope_ * (x - xs_.front());
  }
  if (x >= xs_.back()) {
    return ys_.back() + right_slope_ * (x - xs_.back());
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
  return ys_[i] + seg_slopes_[i] * (x - xs_[i]);
}

Rational PLFunction::lipschitz_constant() const {
  Rational best(0);
  for (const Rational& s : seg_slopes_) best = max(best, abs(s));
  const bool left_active = !domain_.has_value() || domain_->lo < xs_.front();
  const bool right_active = !domain_.has_value() || xs_.back() < domain_->hi;
  if (left_active) best = max(best, abs(left_slope_));
  if (right_active) best = max(best, abs(right_slope_));
  return best;
}

PLFunction PLFunction::shift(const Rational& c) const {
  std::vector<Rational> ys = ys_;
  for (Rational& y : ys) y += c;
  return PLFunction(xs_, std::move(ys), left_slope_, right_slope_, domain_);
}

PLFunction PLFunction::negate() const {
  std::vector<Rational> ys = ys_;
  for (Rational& y : ys) y = -y;
  return PLFunction(xs_, std::move(ys), -left_slope_, -right_slope_, domain_);
}

Rational PLFunction::min_on(const Interval& window) const {
  Rational best = eval(window.lo);
  best = min(best, eval(window.hi));
  for (const Rational& x : xs_) {
    if (window.lo < x && x < window.hi) best = min(best, ys_[&x - xs_.data()]);
  }
  return best;
}

Rational PLFunction::max_on(const Interval& window) const {
  Rational best = eval(window.lo);
  best = max(best, eval(window.hi));
  for (const Rational& x : xs_) {
    if (window.lo < x && x < window.hi) best = max(best, ys_[&x - xs_.data()]);
  }
  return best;
}

PLFunction PLFunction::canonicalized() const {
  std::vector<size_t> keep;
  const size_t n = xs_.size();
  for (size_t i = 0; i < n; ++i) {
    const Rational& in = (i == 0) ? left_slope_ : seg_slopes_[i - 1];
    const Rational& out = (i == n - 1) ? right_slope_ : seg_slopes_[i];
    if (in != out) keep.push_back(i);
  }
  if (keep.size() == n) return *this;
  if (keep.empty()) {
    // Pure affine; a single anchor breakpoint is enough.
    return PLFunction({xs_.front()}, {ys_.front()}, left_slope_, right_slope_,
                      domain_);
  }
  std::vector<Rational> xs, ys;
  xs.reserve(keep.size());
  ys.reserve(keep.size());
  for (size_t i : keep) {
    xs.push_back(xs_[i]);
    ys.push_back(ys_[i]);
  }
  return PLFunction(std::move(xs), std::move(ys), left_slope_, right_slope_,
                    domain_);
}

Rational PLFunction::solve_increasing(const Rational& c) const {
  if (domain_.has_value()) {
    throw PreconditionError("pl: solve_increasing needs an unbounded function");
  }
  if (left_slope_.sign() <= 0 || right_slope_.sign() <= 0) {
    throw PreconditionError("pl: solve_increasing needs all slopes > 0");
  }
  for (const Rational& s : seg_slopes_) {
    if (s.sign() <= 0) {
      throw PreconditionError("pl: solve_increasing needs all slopes > 0");
    }
  }
  if (c <= ys_.front()) {
    return xs_.front() + (c - ys_.front()) / left_slope_;
  }
  if (c >= ys_.back()) {
    return xs_.back() + (c - ys_.back()) / right_slope_;
  }
  // ys_ is strictly increasing here.
  const auto it = std::upper_bound(ys_.begin(), ys_.end(), c);
  const size_t i = static_cast<size_t>(it - ys_.begin()) - 1;
  return xs_[i] + (c - ys_[i]) / seg_slopes_[i];
}

PLFunction pointwise_max(const PLFunction& f, const PLFunction& g) {
  return envelope(f, g, Envelope::kMax);
}

PLFunction pointwise_min(const PLFunction& f, const PLFunction& g) {
  return envelope(f, g, Envelope::kMin);
}

PLFunction add(const PLFunction& f, const PLFunction& g) {
  auto domain = common_domain(f, g);
  std::vector<Rational> xs = merged_breakpoints(f, g);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) ys.push_back(f.eval(x) + g.eval(x));
  return PLFunction(std::move(xs), std::move(ys),
                    f.left_slope() + g.left_slope(),
                    f.right_slope() + g.right_slope(), std::move(domain))
      .canonicalized();
}

PLFunction subtract(const PLFunction& f, const PLFunction& g) {
  return add(f, g.negate());
}

PLFunction compose(const PLFunction& f, const PLFunction& g) {
  if (!f.is_unbounded() || !g.is_unbounded()) {
    throw PreconditionError("pl: compose needs unbounded functions");
  }
  std::vector<Rational> xs = g.breakpoints();
  const auto& gx = g.breakpoints();
  const auto& gy = g.values();
  for (const Rational& b : f.breakpoints()) {
    // Preimages of b under g: one per strictly monotone piece that
    // crosses level b.
    for (size_t i = 0; i + 1 < gx.size(); ++i) {
      const Rational& m = g.slope_at_segment(i);
      if (m.is_zero()) continue;
      const Rational x_star = gx[i] + (b - gy[i]) / m;
      if (gx[i] <= x_star && x_star <= gx[i + 1]) xs.push_back(x_star);
    }
    if (!g.left_slope().is_zero()) {
      const Rational x_star = gx.front() + (b - gy.front()) / g.left_slope();
      if (x_star < gx.front()) xs.push_back(x_star);
    }
    if (!g.right_slope().is_zero()) {
      const Rational x_star = gx.back() + (b - gy.back()) / g.right_slope();
      if (x_star > gx.back()) xs.push_back(x_star);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) ys.push_back(f.eval(g.eval(x)));

  Rational ls(0), rs(0);
  if (g.left_slope().sign() > 0) {
    ls = f.left_slope() * g.left_slope();
  } else if (g.left_slope().sign() < 0) {
    ls = f.right_slope() * g.left_slope();
  }
  if (g.right_slope().sign() > 0) {
    rs = f.right_slope() * g.right_slope();
  } else if (g.right_slope().sign() < 0) {
    rs = f.left_slope() * g.right_slope();
  }
  return PLFunction(std::move(xs), std::move(ys), std::move(ls), std::move(rs))
      .canonicalized();
}

bool equals_pointwise(const PLFunction& f, const PLFunction& g) {
  const PLFunction h = subtract(f, g);
  for (const Rational& y : h.values()) {
    if (!y.is_zero()) return false;
  }
  if (h.domain().has_value()) {
    return h.eval(h.domain()->lo).is_zero() && h.eval(h.domain()->hi).is_zero();
  }
  return h.left_slope().is_zero() && h.right_slope().is_zero();
}

bool is_everywhere_le(const PLFunction& f, const PLFunction& g) {
  const PLFunction h = subtract(g, f);
  for (const Rational& y : h.values()) {
    if (y.sign() < 0) return false;
  }
  if (h.domain().has_value()) {
    return h.eval(h.domain()->lo).sign() >= 0 &&
           h.eval(h.domain()->hi).sign() >= 0;
  }
  // h >= 0 on the rays iff it does not decrease toward either infinity.
  return h.left_slope().sign() <= 0 && h.right_slope().sign() >= 0;
}

PLFunction shift(const PLFunction& f, const Rational& c) { return f.shift(c); }

}  // namespace stripecover
