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

#ifndef STRIPECOVER_NULL1D_H_
#define STRIPECOVER_NULL1D_H_

#include <utility>
#include <vector>

#include "stripecover/error.h"
#include "stripecover/intervals.h"
#include "stripecover/pl_function.h"

namespace stripecover {

// Piecewise-constant function on a closed interval.  Pieces are
// delimited by interior cut points; values at the cuts themselves are
// deliberately undefined (almost-everywhere semantics), and eval_ae
// refuses to evaluate there.
class StepFunction {
 public:
  // cuts: strictly increasing, strictly inside the domain;
  // values: one per piece, i.e. cuts.size() + 1 entries.
  StepFunction(Interval domain, std::vector<Rational> cuts,
               std::vector<Rational> values);

  static StepFunction constant(Interval domain, const Rational& c);

  const Interval& domain() const { return domain_; }
  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Rational>& values() const { return values_; }

  // Value off the cut set; DomainError outside the domain,
  // PreconditionError exactly at an interior cut.
  Rational eval_ae(const Rational& x) const;

  bool is_zero() const;
  bool is_nonnegative() const;

  // Exact integral over the domain.
  Rational integral() const;

  StepFunction scale(const Rational& c) const;

 private:
  Interval domain_;
  std::vector<Rational> cuts_;
  std::vector<Rational> values_;
};

// Pointwise combinations on a common refinement (domains must agree).
StepFunction multiply(const StepFunction& a, const StepFunction& b);
StepFunction add(const StepFunction& a, const StepFunction& b);
// Equal almost everywhere (piecewise, on the common refinement).
bool step_equal(const StepFunction& a, const StepFunction& b);

// The a.e. derivative of a PL function restricted to [domain], as a
// step function cut at the breakpoints.
StepFunction derivative_step(const PLFunction& f, const Interval& domain);

// Finitely many disjoint open intervals inside a working interval.
class OpenCover1D {
 public:
  OpenCover1D(Interval domain,
              std::vector<std::pair<Rational, Rational>> intervals);

  const Interval& domain() const { return domain_; }
  const std::vector<std::pair<Rational, Rational>>& intervals() const {
    return intervals_;
  }
  Rational total_length() const;
  bool contains(const Rational& x) const;  // open membership

 private:
  Interval domain_;
  std::vector<std::pair<Rational, Rational>> intervals_;  // sorted
};

// phi(x) = a + integral_a^x (1 - indicator of the cover): slope 0 on
// cover intervals, slope 1 elsewhere; 1-Lipschitz, nondecreasing;
// carries the working interval as its domain.
PLFunction build_phi_1d(const OpenCover1D& cover);

struct DeficitReport {
  Rational max_deficit;  // max over x of x - phi(x), exact
  Rational argmax;
};

// Exact maximum of x - phi(x); always within [0, total_length(cover)].
DeficitReport identity_deficit(const PLFunction& phi, const OpenCover1D& cover);

// Desk-scale Radon measure on the line: point atoms plus a step
// density on a working interval.
struct Measure1D {
  std::vector<std::pair<Rational, Rational>> atoms;  // (location, mass > 0)
  StepFunction density;                              // >= 0

  Measure1D(std::vector<std::pair<Rational, Rational>> atoms,
            StepFunction density);

  Rational total_mass() const;
  bool is_atom_only() const { return density.is_zero(); }
};

// Exact Lebesgue decomposition by representation: the density is the
// absolutely continuous part and the atoms are the singular part.
std::pair<Measure1D, Measure1D> decompose(const Measure1D& m);

// Result of applying the model derivation (weight = the derivation of
// the identity) to a PL function f: weight * f' on the support of the
// density, and 0 at every atom.
struct DerivationResult {
  StepFunction step;                                 // on the AC part
  std::vector<std::pair<Rational, Rational>> atom_values;  // all zero
};

DerivationResult apply_derivation_1d(const Measure1D& m,
                                     const StepFunction& weight,
                                     const PLFunction& f);

}  // namespace stripecover

#endif  // STRIPECOVER_NULL1D_H_
