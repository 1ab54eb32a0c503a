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

#ifndef STRIPECOVER_EXTENSION_H_
#define STRIPECOVER_EXTENSION_H_

#include <functional>
#include <vector>

#include "stripecover/error.h"
#include "stripecover/rational.h"
#include "stripecover/rng.h"

namespace stripecover {

// Finite set of labeled points in R^n, n in {1,2,3}.  Euclidean metric:
// squared distances are exact rationals; norms themselves are floats.
struct SampleSet {
  int dim = 1;
  std::vector<std::vector<Rational>> points;  // each of size dim
  std::vector<Rational> values;

  SampleSet(int dim, std::vector<std::vector<Rational>> points,
            std::vector<Rational> values);

  size_t size() const { return points.size(); }
};

// Exact squared Euclidean distance.
Rational dist_sq(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Exact square of the sampled Lipschitz constant: max over pairs of
// (value difference)^2 / squared distance.  0 for a singleton.
Rational sample_lipschitz_sq(const SampleSet& s);

// Float Lipschitz constant (sqrt of the exact square).
double sample_lipschitz(const SampleSet& s);

// Exact Lipschitz constant for dim == 1 samples.
Rational sample_lipschitz_1d(const SampleSet& s);

// McShane extension F(x) = min over samples of value(a) + L * d(x, a).
// Exact lane for dim == 1; ConsistencyError if L is below the sampled
// Lipschitz constant.
Rational mcshane_extend_1d(const SampleSet& s, const Rational& L,
                           const Rational& query);

// Float lane for any dim (distances are irrational for dim >= 2).
double mcshane_extend(const SampleSet& s, double L,
                      const std::vector<double>& query);

// McShane extension clamped into [-M, M] with M = max |value|; keeps the
// Lipschitz constant and the sup norm of the samples.
Rational bounded_mcshane_extend_1d(const SampleSet& s, const Rational& query);
double bounded_mcshane_extend(const SampleSet& s,
                              const std::vector<double>& query);

// Sampled estimates of the pointwise Lipschitz constants
//   Lip[f](x) = limsup_r  sup_{d(x,y) <= r} |f(x)-f(y)| / r
//   lip[f](x) = liminf_r  sup_{d(x,y) <= r} |f(x)-f(y)| / r
// at a fixed radius schedule: per radius the sup is estimated from
// `budget` samples; Lip takes the max over radii, lip the min, so
// lip_estimate <= Lip_estimate by construction.
struct LipEstimate {
  double upper = 0.0;  // Lip[f](x) estimate
  double lower = 0.0;  // lip[f](x) estimate
  std::vector<double> radii;
};

LipEstimate pointwise_lip(const std::function<double(double)>& f, double x,
                          const std::vector<double>& radii, int budget,
                          Rng& rng);

}  // namespace stripecover

#endif  // STRIPECOVER_EXTENSION_H_
