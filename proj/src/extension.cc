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

#include "stripecover/extension.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace stripecover {

SampleSet::SampleSet(int dim_in, std::vector<std::vector<Rational>> points_in,
                     std::vector<Rational> values_in)
    : dim(dim_in), points(std::move(points_in)), values(std::move(values_in)) {
  if (dim < 1 || dim > 3) throw InvariantError("samples: dim must be 1, 2 or 3");
  if (points.empty()) throw InvariantError("samples: empty");
  if (points.size() != values.size()) {
    throw InvariantError("samples: points/values size mismatch");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != static_cast<size_t>(dim)) {
      throw InvariantError("samples: point " + std::to_string(i) +
                           " has wrong dimension");
    }
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw InvariantError("samples: duplicate points at " +
                             std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

Rational dist_sq(const std::vector<Rational>& a,
                 const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw PreconditionError("dist_sq: dim mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) {
    const Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

Rational sample_lipschitz_sq(const SampleSet& s) {
  Rational best(0);
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      const Rational dv = s.values[i] - s.values[j];
      best = max(best, dv * dv / dist_sq(s.points[i], s.points[j]));
    }
  }
  return best;
}

double sample_lipschitz(const SampleSet& s) {
  return std::sqrt(sample_lipschitz_sq(s).to_double());
}

Rational sample_lipschitz_1d(const SampleSet& s) {
  if (s.dim != 1) throw PreconditionError("sample_lipschitz_1d: dim must be 1");
  Rational best(0);
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      best = max(best, abs(s.values[i] - s.values[j]) /
                           abs(s.points[i][0] - s.points[j][0]));
    }
  }
  return best;
}

Rational mcshane_extend_1d(const SampleSet& s, const Rational& L,
                           const Rational& query) {
  if (s.dim != 1) throw PreconditionError("mcshane_extend_1d: dim must be 1");
  if (L < sample_lipschitz_1d(s)) {
    throw ConsistencyError(
        "mcshane: L is below the sampled Lipschitz constant");
  }
  Rational best = s.values[0] + L * abs(query - s.points[0][0]);
  for (size_t i = 1; i < s.size(); ++i) {
    best = min(best, s.values[i] + L * abs(query - s.points[i][0]));
  }
  return best;
}

namespace {

double dist_f(const std::vector<Rational>& a, const std::vector<double>& q) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i].to_double() - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

double mcshane_extend(const SampleSet& s, double L,
                      const std::vector<double>& query) {
  if (query.size() != static_cast<size_t>(s.dim)) {
    throw PreconditionError("mcshane: query dimension mismatch");
  }
  // Allow exact equality up to roundoff in the sqrt.
  if (L < sample_lipschitz(s) * (1.0 - 1e-12) - 1e-15) {
    throw ConsistencyError(
        "mcshane: L is below the sampled Lipschitz constant");
  }
  double best = s.values[0].to_double() + L * dist_f(s.points[0], query);
  for (size_t i = 1; i < s.size(); ++i) {
    best = std::min(best,
                    s.values[i].to_double() + L * dist_f(s.points[i], query));
  }
  return best;
}

Rational bounded_mcshane_extend_1d(const SampleSet& s, const Rational& query) {
  Rational m(0);
  for (const Rational& v : s.values) m = max(m, abs(v));
  const Rational raw = mcshane_extend_1d(s, sample_lipschitz_1d(s), query);
  return max(-m, min(m, raw));
}

double bounded_mcshane_extend(const SampleSet& s,
                              const std::vector<double>& query) {
  double m = 0.0;
  for (const Rational& v : s.values) m = std::max(m, std::abs(v.to_double()));
  const double raw = mcshane_extend(s, sample_lipschitz(s), query);
  return std::max(-m, std::min(m, raw));
}

LipEstimate pointwise_lip(const std::function<double(double)>& f, double x,
                          const std::vector<double>& radii, int budget,
                          Rng& rng) {
  if (radii.empty()) throw PreconditionError("pointwise_lip: empty schedule");
  for (size_t i = 0; i + 1 < radii.size(); ++i) {
    if (!(radii[i] > radii[i + 1])) {
      throw PreconditionError("pointwise_lip: radii must strictly decrease");
    }
  }
  if (radii.back() <= 0.0) {
    throw PreconditionError("pointwise_lip: radii must stay positive");
  }
  if (budget < 1) throw PreconditionError("pointwise_lip: budget must be >= 1");

  const double fx = f(x);
  LipEstimate est;
  est.radii = radii;
  bool first = true;
  for (double r : radii) {
    double sup = 0.0;
    for (int k = 0; k < budget; ++k) {
      // Uniform in [x-r, x+r]; the two halves and the deterministic
      // endpoints keep the sup estimate from missing one-sided behavior.
      const double u =
          static_cast<double>(rng.next() >> 11) * 0x1.0p-53;  // [0,1)
      const double y = x + (2.0 * u - 1.0) * r;
      if (y == x) continue;
      sup = std::max(sup, std::abs(f(y) - fx) / std::abs(y - x));
    }
    sup = std::max(sup, std::abs(f(x + r) - fx) / r);
    sup = std::max(sup, std::abs(f(x - r) - fx) / r);
    est.upper = first ? sup : std::max(est.upper, sup);
    est.lower = first ? sup : std::min(est.lower, sup);
    first = false;
  }
  return est;
}

}  // namespace stripecover
