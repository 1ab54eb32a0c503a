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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "stripecover/extension.h"
#include "stripecover/rng.h"

namespace sc = stripecover;
using sc::Rational;
using sc::SampleSet;

namespace {

SampleSet two_point_line() {
  return SampleSet(1, {{Rational(0)}, {Rational(1)}},
                   {Rational(0), Rational(1)});
}

}  // namespace

TEST_CASE("sample set validates dimension, sizes and distinctness") {
  CHECK_THROWS_AS(SampleSet(0, {}, {}), sc::Error);
  CHECK_THROWS_AS(SampleSet(4, {{Rational(0)}}, {Rational(0)}), sc::Error);
  CHECK_THROWS_AS(SampleSet(1, {{Rational(0)}}, {}), sc::Error);
  CHECK_THROWS_AS(SampleSet(1, {{Rational(0)}, {Rational(0)}},
                            {Rational(0), Rational(1)}),
                  sc::Error);
  CHECK_THROWS_AS(
      SampleSet(2, {{Rational(0)}}, {Rational(0)}),  // wrong coordinate count
      sc::Error);
}

TEST_CASE("sampled lipschitz constants") {
  CHECK(sc::sample_lipschitz_1d(two_point_line()) == Rational(1));

  // Points (0,0) and (3,4), values 0 and 10: distance 5, so L = 2.
  const SampleSet s(2, {{Rational(0), Rational(0)}, {Rational(3), Rational(4)}},
                    {Rational(0), Rational(10)});
  CHECK(sc::sample_lipschitz_sq(s) == Rational(4));
  CHECK(sc::sample_lipschitz(s) == doctest::Approx(2.0).epsilon(1e-12));

  // A single sample has no pair: L = 0.
  const SampleSet one(1, {{Rational(7)}}, {Rational(3)});
  CHECK(sc::sample_lipschitz_1d(one) == Rational(0));
}

TEST_CASE("mcshane extension reproduces the frozen examples") {
  const SampleSet s = two_point_line();
  const Rational L = sc::sample_lipschitz_1d(s);
  REQUIRE(L == Rational(1));
  // F(x) = min(0 + |x|, 1 + |x - 1|).
  CHECK(sc::mcshane_extend_1d(s, L, Rational(2)) == Rational(2));
  CHECK(sc::mcshane_extend_1d(s, L, Rational(-1)) == Rational(1));
  CHECK(sc::mcshane_extend_1d(s, L, Rational(1, 2)) == Rational(1, 2));

  // Clamped lane: unclamped value 5 exceeds the sup norm 1.
  CHECK(sc::bounded_mcshane_extend_1d(s, Rational(5)) == Rational(1));
  // The extension grows away from the samples on both sides, so the
  // upper clamp binds far left too (the inf-convolution never dips
  // below the minimum sample value).
  CHECK(sc::bounded_mcshane_extend_1d(s, Rational(-5)) == Rational(1));
  // Inside the convex hull the clamp is inactive.
  CHECK(sc::bounded_mcshane_extend_1d(s, Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("extension agrees with the samples exactly") {
  sc::Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    const size_t n = 2 + rng.below(6);
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> vals;
    for (size_t i = 0; i < n; ++i) {
      Rational x = rng.rational(Rational(-4), Rational(4), 32);
      bool fresh = true;
      for (const auto& p : pts) fresh = fresh && !(p[0] == x);
      if (!fresh) continue;
      pts.push_back({x});
      vals.push_back(rng.rational(Rational(-3), Rational(3), 32));
    }
    if (pts.size() < 2) continue;
    const SampleSet s(1, pts, vals);
    const Rational L = sc::sample_lipschitz_1d(s);
    for (size_t i = 0; i < pts.size(); ++i) {
      CHECK(sc::mcshane_extend_1d(s, L, pts[i][0]) == vals[i]);
      CHECK(sc::bounded_mcshane_extend_1d(s, pts[i][0]) == vals[i]);
    }
    // L-Lipschitz across random query pairs, exact.
    for (int k = 0; k < 50; ++k) {
      const Rational x = rng.rational(Rational(-6), Rational(6), 64);
      const Rational y = rng.rational(Rational(-6), Rational(6), 64);
      const Rational dv =
          sc::abs(sc::mcshane_extend_1d(s, L, x) - sc::mcshane_extend_1d(s, L, y));
      CHECK(dv <= L * sc::abs(x - y));
    }
  }
}

TEST_CASE("extension constant below the sampled constant is rejected") {
  const SampleSet s = two_point_line();
  CHECK_THROWS_AS(sc::mcshane_extend_1d(s, Rational(1, 2), Rational(3)),
                  sc::ConsistencyError);
  // A larger constant is fine and still interpolates.
  CHECK(sc::mcshane_extend_1d(s, Rational(2), Rational(0)) == Rational(0));
}

TEST_CASE("float lane extends in dimension 2 within tolerance") {
  const SampleSet s(2, {{Rational(0), Rational(0)}, {Rational(3), Rational(4)}},
                    {Rational(0), Rational(10)});
  const double L = sc::sample_lipschitz(s);
  // Values at the samples match to float tolerance.
  CHECK(sc::mcshane_extend(s, L, {0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sc::mcshane_extend(s, L, {3.0, 4.0}) == doctest::Approx(10.0).epsilon(1e-12));
  // Lipschitz bound across query pairs.
  sc::Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const double x0 = (rng.next() >> 11) * 0x1.0p-53 * 10 - 5;
    const double x1 = (rng.next() >> 11) * 0x1.0p-53 * 10 - 5;
    const double y0 = (rng.next() >> 11) * 0x1.0p-53 * 10 - 5;
    const double y1 = (rng.next() >> 11) * 0x1.0p-53 * 10 - 5;
    const double dv =
        std::abs(sc::mcshane_extend(s, L, {x0, x1}) - sc::mcshane_extend(s, L, {y0, y1}));
    const double d = std::hypot(x0 - y0, x1 - y1);
    CHECK(dv <= L * d + 1e-12);
  }
  // Bounded lane clamps far away.
  CHECK(sc::bounded_mcshane_extend(s, {100.0, 100.0}) ==
        doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("pointwise lipschitz estimates for the model functions") {
  sc::Rng rng(3);
  const std::vector<double> radii = {1e-4, 1e-5, 1e-6};

  const auto absf = [](double x) { return std::abs(x); };
  const sc::LipEstimate e1 = sc::pointwise_lip(absf, 0.0, radii, 200, rng);
  CHECK(e1.upper == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(e1.lower == doctest::Approx(1.0).epsilon(1e-9));

  const auto cf = [](double) { return 4.25; };
  const sc::LipEstimate e2 = sc::pointwise_lip(cf, 3.0, radii, 200, rng);
  CHECK(e2.upper == 0.0);
  CHECK(e2.lower == 0.0);

  const auto sq = [](double x) { return x * x; };
  const sc::LipEstimate e3 = sc::pointwise_lip(sq, 1.0, radii, 200, rng);
  CHECK(std::abs(e3.upper - 2.0) <= 1e-3);
  CHECK(std::abs(e3.lower - 2.0) <= 1e-3);

  // lower <= upper by construction.
  CHECK(e3.lower <= e3.upper);

  CHECK_THROWS_AS(sc::pointwise_lip(sq, 1.0, {}, 10, rng), sc::Error);
  CHECK_THROWS_AS(sc::pointwise_lip(sq, 1.0, {1e-5, 1e-4}, 10, rng), sc::Error);
}

TEST_CASE("estimator chain lip <= Lip <= global L on a sampled grid") {
  sc::Rng rng(13);
  const SampleSet s(1,
                    {{Rational(-1)}, {Rational(0)}, {Rational(1)}, {Rational(2)}},
                    {Rational(1), Rational(0), Rational(1), Rational(-1)});
  const Rational L = sc::sample_lipschitz_1d(s);
  const auto F = [&](double x) {
    // Float view of the exact extension; the double converts to a
    // rational exactly (binary fraction), keeping F truly L-Lipschitz.
    return sc::mcshane_extend_1d(s, L, Rational(mpq_class(x))).to_double();
  };
  const std::vector<double> radii = {1e-3, 1e-4};
  for (double x : {-0.5, 0.25, 1.5}) {
    const sc::LipEstimate e = sc::pointwise_lip(F, x, radii, 100, rng);
    CHECK(e.lower <= e.upper + 1e-12);
    CHECK(e.upper <= L.to_double() + 1e-9);
  }
}
