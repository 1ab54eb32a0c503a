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

#include "stripecover/null1d.h"

#include <algorithm>
#include <string>

namespace stripecover {

StepFunction::StepFunction(Interval domain, std::vector<Rational> cuts,
                           std::vector<Rational> values)
    : domain_(std::move(domain)),
      cuts_(std::move(cuts)),
      values_(std::move(values)) {
  if (values_.size() != cuts_.size() + 1) {
    throw InvariantError("step: need one value per piece");
  }
  for (size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i] <= domain_.lo || cuts_[i] >= domain_.hi) {
      throw InvariantError("step: cut " + std::to_string(i) +
                           " outside the open domain");
    }
    if (i > 0 && !(cuts_[i - 1] < cuts_[i])) {
      throw InvariantError("step: cuts not strictly increasing at index " +
                           std::to_string(i));
    }
  }
}

StepFunction StepFunction::constant(Interval domain, const Rational& c) {
  return StepFunction(std::move(domain), {}, {c});
}

Rational StepFunction::eval_ae(const Rational& x) const {
  if (!domain_.contains(x)) {
    throw DomainError("step: evaluation outside domain at x = " + x.str());
  }
  const auto it = std::lower_bound(cuts_.begin(), cuts_.end(), x);
  if (it != cuts_.end() && *it == x) {
    throw PreconditionError("step: value undefined at cut x = " + x.str());
  }
  return values_[static_cast<size_t>(it - cuts_.begin())];
}

bool StepFunction::is_zero() const {
  for (const Rational& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool StepFunction::is_nonnegative() const {
  for (const Rational& v : values_) {
    if (v.sign() < 0) return false;
  }
  return true;
}

Rational StepFunction::integral() const {
  Rational total(0);
  Rational lo = domain_.lo;
  for (size_t i = 0; i < values_.size(); ++i) {
    const Rational hi = i < cuts_.size() ? cuts_[i] : domain_.hi;
    total += values_[i] * (hi - lo);
    lo = hi;
  }
  return total;
}

StepFunction StepFunction::scale(const Rational& c) const {
  std::vector<Rational> vals = values_;
  for (Rational& v : vals) v *= c;
  return StepFunction(domain_, cuts_, std::move(vals));
}

namespace {

template <typename Op>
StepFunction combine(const StepFunction& a, const StepFunction& b, Op op) {
  if (!(a.domain() == b.domain())) {
    throw PreconditionError("step: domains must agree");
  }
  std::vector<Rational> cuts;
  std::merge(a.cuts().begin(), a.cuts().end(), b.cuts().begin(),
             b.cuts().end(), std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // Piece i of the refinement is (prev, next); index into each input by
  // counting its cuts at or before the piece's left end.
  std::vector<Rational> vals;
  vals.reserve(cuts.size() + 1);
  Rational left = a.domain().lo;
  for (size_t i = 0; i <= cuts.size(); ++i) {
    const size_t ia = static_cast<size_t>(
        std::upper_bound(a.cuts().begin(), a.cuts().end(), left) -
        a.cuts().begin());
    const size_t ib = static_cast<size_t>(
        std::upper_bound(b.cuts().begin(), b.cuts().end(), left) -
        b.cuts().begin());
    vals.push_back(op(a.values()[ia], b.values()[ib]));
    if (i < cuts.size()) left = cuts[i];
  }
  return StepFunction(a.domain(), std::move(cuts), std::move(vals));
}

}  // namespace

StepFunction multiply(const StepFunction& a, const StepFunction& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) {
    return x * y;
  });
}

StepFunction add(const StepFunction& a, const StepFunction& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) {
    return x + y;
  });
}

bool step_equal(const StepFunction& a, const StepFunction& b) {
  const StepFunction d = combine(a, b, [](const Rational& x, const Rational& y) {
    return x - y;
  });
  return d.is_zero();
}

StepFunction derivative_step(const PLFunction& f, const Interval& domain) {
  // Interior breakpoints become cuts; f is linear on each piece, so the
  // difference quotient over the piece is the exact slope there.
  std::vector<Rational> cuts;
  for (const Rational& x : f.breakpoints()) {
    if (domain.lo < x && x < domain.hi) cuts.push_back(x);
  }
  std::vector<Rational> vals;
  vals.reserve(cuts.size() + 1);
  Rational left = domain.lo;
  for (size_t i = 0; i <= cuts.size(); ++i) {
    const Rational right = i < cuts.size() ? cuts[i] : domain.hi;
    vals.push_back((f.eval(right) - f.eval(left)) / (right - left));
    left = right;
  }
  return StepFunction(domain, std::move(cuts), std::move(vals));
}

OpenCover1D::OpenCover1D(Interval domain,
                         std::vector<std::pair<Rational, Rational>> intervals)
    : domain_(std::move(domain)), intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < intervals_.size(); ++i) {
    const auto& [lo, hi] = intervals_[i];
    if (!(lo < hi)) {
      throw InvariantError("cover: interval " + std::to_string(i) + " empty");
    }
    if (lo < domain_.lo || hi > domain_.hi) {
      throw InvariantError("cover: interval " + std::to_string(i) +
                           " outside the working interval");
    }
    if (i > 0 && intervals_[i - 1].second > lo) {
      throw InvariantError("cover: intervals overlap at index " +
                           std::to_string(i));
    }
  }
}

Rational OpenCover1D::total_length() const {
  Rational t(0);
  for (const auto& [lo, hi] : intervals_) t += hi - lo;
  return t;
}

bool OpenCover1D::contains(const Rational& x) const {
  for (const auto& [lo, hi] : intervals_) {
    if (lo < x && x < hi) return true;
  }
  return false;
}

PLFunction build_phi_1d(const OpenCover1D& cover) {
  const Interval& dom = cover.domain();
  std::vector<Rational> xs;
  xs.push_back(dom.lo);
  for (const auto& [lo, hi] : cover.intervals()) {
    if (lo > xs.back()) xs.push_back(lo);
    if (hi > xs.back()) xs.push_back(hi);
  }
  if (dom.hi > xs.back()) xs.push_back(dom.hi);
  // Integrate 1 - indicator from the left end; start at the left end's
  // own coordinate so the empty cover yields the identity.
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  Rational value = dom.lo;
  ys.push_back(value);
  for (size_t i = 1; i < xs.size(); ++i) {
    const Rational mid = (xs[i - 1] + xs[i]) / 2;
    if (!cover.contains(mid)) value += xs[i] - xs[i - 1];
    ys.push_back(value);
  }
  return PLFunction(std::move(xs), std::move(ys), 1, 1, dom).canonicalized();
}

DeficitReport identity_deficit(const PLFunction& phi,
                               const OpenCover1D& cover) {
  const Interval& dom = cover.domain();
  DeficitReport report{Rational(0), dom.lo};
  auto consider = [&](const Rational& x) {
    const Rational d = x - phi.eval(x);
    if (d > report.max_deficit) {
      report.max_deficit = d;
      report.argmax = x;
    }
    if (d.sign() < 0 || d > cover.total_length()) {
      throw ConsistencyError("deficit: outside [0, cover length] at x = " +
                             x.str());
    }
  };
  consider(dom.lo);
  for (const Rational& x : phi.breakpoints()) consider(x);
  consider(dom.hi);
  return report;
}

Measure1D::Measure1D(std::vector<std::pair<Rational, Rational>> atoms_in,
                     StepFunction density_in)
    : atoms(std::move(atoms_in)), density(std::move(density_in)) {
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].second.sign() <= 0) {
      throw InvariantError("measure: atom mass must be positive");
    }
    if (i > 0 && atoms[i - 1].first == atoms[i].first) {
      throw InvariantError("measure: duplicate atom location " +
                           atoms[i].first.str());
    }
  }
  if (!density.is_nonnegative()) {
    throw InvariantError("measure: density must be nonnegative");
  }
}

Rational Measure1D::total_mass() const {
  Rational t = density.integral();
  for (const auto& [loc, mass] : atoms) {
    (void)loc;
    t += mass;
  }
  return t;
}

std::pair<Measure1D, Measure1D> decompose(const Measure1D& m) {
  Measure1D ac({}, m.density);
  Measure1D singular(m.atoms,
                     StepFunction::constant(m.density.domain(), Rational(0)));
  return {std::move(ac), std::move(singular)};
}

DerivationResult apply_derivation_1d(const Measure1D& m,
                                     const StepFunction& weight,
                                     const PLFunction& f) {
  if (!(weight.domain() == m.density.domain())) {
    throw PreconditionError("derivation: weight domain must match density");
  }
  const StepFunction df = derivative_step(f, m.density.domain());
  const StepFunction raw = multiply(weight, df);
  // Mask to the support of the density: off the support the measure
  // sees nothing, so the result is 0 there (atom-only measures give 0).
  std::vector<Rational> indicator;
  indicator.reserve(m.density.values().size());
  for (const Rational& v : m.density.values()) {
    indicator.emplace_back(v.is_zero() ? 0 : 1);
  }
  const StepFunction mask(m.density.domain(), m.density.cuts(),
                          std::move(indicator));
  StepFunction masked = multiply(raw, mask);
  DerivationResult out{std::move(masked), {}};
  out.atom_values.reserve(m.atoms.size());
  for (const auto& [loc, mass] : m.atoms) {
    (void)mass;
    out.atom_values.emplace_back(loc, Rational(0));
  }
  return out;
}

}  // namespace stripecover
