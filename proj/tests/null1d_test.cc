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

#include <utility>
#include <vector>

#include "stripecover/generators.h"
#include "stripecover/null1d.h"
#include "stripecover/rng.h"

namespace sc = stripecover;
using sc::Interval;
using sc::Measure1D;
using sc::OpenCover1D;
using sc::PLFunction;
using sc::Rational;
using sc::StepFunction;

TEST_CASE("step function evaluates almost everywhere") {
  const StepFunction s(Interval(0, 1), {Rational(1, 3), Rational(2, 3)},
                       {Rational(1), Rational(2), Rational(3)});
  CHECK(s.eval_ae(Rational(0)) == Rational(1));
  CHECK(s.eval_ae(Rational(1, 6)) == Rational(1));
  CHECK(s.eval_ae(Rational(1, 2)) == Rational(2));
  CHECK(s.eval_ae(Rational(1)) == Rational(3));
  CHECK_THROWS_AS(s.eval_ae(Rational(1, 3)), sc::PreconditionError);
  CHECK_THROWS_AS(s.eval_ae(Rational(2, 3)), sc::PreconditionError);
  CHECK_THROWS_AS(s.eval_ae(Rational(2)), sc::DomainError);
  CHECK_THROWS_AS(s.eval_ae(Rational(-1)), sc::DomainError);

  CHECK(s.integral() == Rational(2));  // (1 + 2 + 3) / 3
  CHECK(s.is_nonnegative());
  CHECK(!s.is_zero());
  CHECK(s.scale(Rational(1, 2)).integral() == Rational(1));
  CHECK(StepFunction::constant(Interval(0, 1), Rational(0)).is_zero());
}

TEST_CASE("step function construction validates cuts") {
  CHECK_THROWS_AS(StepFunction(Interval(0, 1), {Rational(0)},
                               {Rational(1), Rational(2)}),
                  sc::Error);  // cut at the boundary
  CHECK_THROWS_AS(StepFunction(Interval(0, 1), {Rational(2, 3), Rational(1, 3)},
                               {Rational(1), Rational(2), Rational(3)}),
                  sc::Error);  // unsorted
  CHECK_THROWS_AS(StepFunction(Interval(0, 1), {Rational(1, 2)}, {Rational(1)}),
                  sc::Error);  // values.size() != cuts.size() + 1
}

TEST_CASE("step combinations refine the cut sets") {
  const StepFunction a(Interval(0, 1), {Rational(1, 2)},
                       {Rational(2), Rational(3)});
  const StepFunction b(Interval(0, 1), {Rational(1, 4)},
                       {Rational(5), Rational(7)});
  const StepFunction prod = sc::multiply(a, b);
  const StepFunction sum = sc::add(a, b);
  CHECK(prod.eval_ae(Rational(1, 8)) == Rational(10));
  CHECK(prod.eval_ae(Rational(3, 8)) == Rational(14));
  CHECK(prod.eval_ae(Rational(3, 4)) == Rational(21));
  CHECK(sum.eval_ae(Rational(1, 8)) == Rational(7));
  CHECK(sum.eval_ae(Rational(3, 4)) == Rational(10));
  CHECK(sc::step_equal(prod, prod));
  CHECK(!sc::step_equal(prod, sum));

  // Same function with a redundant cut still compares equal a.e.
  const StepFunction padded(Interval(0, 1), {Rational(1, 3), Rational(1, 2)},
                            {Rational(2), Rational(2), Rational(3)});
  CHECK(sc::step_equal(a, padded));

  const StepFunction other(Interval(0, 2), {}, {Rational(1)});
  CHECK_THROWS_AS(sc::multiply(a, other), sc::Error);  // domains differ
}

TEST_CASE("derivative of a PL function is the slope step function") {
  const PLFunction tent({-1, 0, 1}, {0, 1, 0}, 1, -1);
  const StepFunction d = sc::derivative_step(tent, Interval(-2, 2));
  CHECK(d.eval_ae(Rational(-3, 2)) == Rational(1));
  CHECK(d.eval_ae(Rational(-1, 2)) == Rational(1));
  CHECK(d.eval_ae(Rational(1, 2)) == Rational(-1));
  CHECK(d.eval_ae(Rational(3, 2)) == Rational(-1));
  CHECK_THROWS_AS(d.eval_ae(Rational(0)), sc::PreconditionError);
  // Fundamental theorem on the window: integral of f' = f(2) - f(-2).
  CHECK(d.integral() == tent.eval(Rational(2)) - tent.eval(Rational(-2)));
}

TEST_CASE("open cover validates and measures its intervals") {
  const OpenCover1D c(Interval(0, 1),
                      {{Rational(2, 5), Rational(3, 5)}});
  CHECK(c.total_length() == Rational(1, 5));
  CHECK(c.contains(Rational(1, 2)));
  CHECK(!c.contains(Rational(2, 5)));  // open at the ends
  CHECK(!c.contains(Rational(3, 5)));
  CHECK(!c.contains(Rational(0)));

  // Touching intervals are allowed; overlapping ones are not.
  CHECK_NOTHROW(OpenCover1D(Interval(0, 1), {{Rational(1, 4), Rational(1, 2)},
                                             {Rational(1, 2), Rational(3, 4)}}));
  CHECK_THROWS_AS(
      OpenCover1D(Interval(0, 1), {{Rational(1, 4), Rational(3, 5)},
                                   {Rational(1, 2), Rational(3, 4)}}),
      sc::Error);
  CHECK_THROWS_AS(OpenCover1D(Interval(0, 1), {{Rational(1, 2), Rational(2)}}),
                  sc::Error);  // sticks out of the domain
  CHECK_THROWS_AS(OpenCover1D(Interval(0, 1), {{Rational(1, 2), Rational(1, 2)}}),
                  sc::Error);  // empty interval
}

TEST_CASE("phi of the single-interval cover: the worked example") {
  const OpenCover1D cover(Interval(0, 1), {{Rational(2, 5), Rational(3, 5)}});
  const PLFunction phi = sc::build_phi_1d(cover);

  CHECK(phi.eval(Rational(0)) == Rational(0));
  CHECK(phi.eval(Rational(2, 5)) == Rational(2, 5));
  // Flat across the covered interval.
  CHECK(phi.eval(Rational(9, 20)) == Rational(2, 5));
  CHECK(phi.eval(Rational(11, 20)) == Rational(2, 5));
  CHECK(phi.eval(Rational(3, 5)) == Rational(2, 5));
  // Slope 1 resumes after the interval.
  CHECK(phi.eval(Rational(1)) == Rational(4, 5));

  const sc::DeficitReport rep = sc::identity_deficit(phi, cover);
  CHECK(rep.max_deficit == Rational(1, 5));
  CHECK(rep.argmax == Rational(3, 5));
  CHECK(rep.max_deficit <= cover.total_length());
}

TEST_CASE("phi deficit equals interval length wherever it sits") {
  // A single interval of length 1/5 anywhere gives max deficit 1/5.
  for (const Rational& start : {Rational(0), Rational(1, 10), Rational(7, 10),
                                Rational(4, 5)}) {
    const OpenCover1D cover(Interval(0, 1),
                            {{start, start + Rational(1, 5)}});
    const sc::DeficitReport rep =
        sc::identity_deficit(sc::build_phi_1d(cover), cover);
    CHECK(rep.max_deficit == Rational(1, 5));
    CHECK(rep.argmax == start + Rational(1, 5));
  }
}

TEST_CASE("empty cover gives the identity and zero deficit") {
  const OpenCover1D cover(Interval(0, 1), {});
  const PLFunction phi = sc::build_phi_1d(cover);
  CHECK(phi.eval(Rational(1, 3)) == Rational(1, 3));
  CHECK(phi.eval(Rational(1)) == Rational(1));
  const sc::DeficitReport rep = sc::identity_deficit(phi, cover);
  CHECK(rep.max_deficit == Rational(0));
}

TEST_CASE("phi of the bundled dyadic covers shrinks like 2^-j") {
  for (int j = 1; j <= 6; ++j) {
    const OpenCover1D cover = sc::bundled_cover(j);
    CHECK(cover.total_length() == Rational(1, 1L << j));
    const sc::DeficitReport rep =
        sc::identity_deficit(sc::build_phi_1d(cover), cover);
    CHECK(rep.max_deficit <= cover.total_length());
    CHECK(rep.max_deficit >= Rational(0));
  }
}

TEST_CASE("phi is 1-lipschitz nondecreasing with slope in {0,1}") {
  sc::Rng rng(61);
  for (int it = 0; it < 20; ++it) {
    // Random disjoint open intervals in [0, 1].
    std::vector<std::pair<Rational, Rational>> ivs;
    Rational cursor(0);
    while (true) {
      const Rational gap = rng.rational(Rational(1, 100), Rational(1, 5), 64);
      const Rational len = rng.rational(Rational(1, 100), Rational(1, 6), 64);
      if (cursor + gap + len >= Rational(1)) break;
      ivs.emplace_back(cursor + gap, cursor + gap + len);
      cursor = cursor + gap + len;
    }
    const OpenCover1D cover(Interval(0, 1), ivs);
    const PLFunction phi = sc::build_phi_1d(cover);
    CHECK(phi.lipschitz_constant() <= Rational(1));
    Rational prev = phi.eval(Rational(0));
    for (int k = 1; k <= 50; ++k) {
      const Rational x(k, 50);
      const Rational cur = phi.eval(x);
      CHECK(prev <= cur);
      prev = cur;
    }
    const sc::DeficitReport rep = sc::identity_deficit(phi, cover);
    CHECK(rep.max_deficit <= cover.total_length());
  }
}

TEST_CASE("measure decomposition splits atoms from density") {
  const Measure1D m({{Rational(1, 4), Rational(1)}},
                    StepFunction(Interval(0, 1), {Rational(1, 2)},
                                 {Rational(1), Rational(3, 2)}));
  CHECK(m.total_mass() == Rational(1) + Rational(5, 4));
  CHECK(!m.is_atom_only());

  const auto [ac, sing] = sc::decompose(m);
  CHECK(ac.atoms.empty());
  CHECK(ac.density.integral() == Rational(5, 4));
  CHECK(sing.is_atom_only());
  REQUIRE(sing.atoms.size() == 1);
  CHECK(sing.atoms[0].first == Rational(1, 4));

  // Validation: masses positive, locations distinct, density nonnegative.
  CHECK_THROWS_AS(Measure1D({{Rational(0), Rational(0)}},
                            StepFunction::constant(Interval(0, 1), Rational(0))),
                  sc::Error);
  CHECK_THROWS_AS(
      Measure1D({{Rational(0), Rational(1)}, {Rational(0), Rational(2)}},
                StepFunction::constant(Interval(0, 1), Rational(0))),
      sc::Error);
  CHECK_THROWS_AS(
      Measure1D({}, StepFunction::constant(Interval(0, 1), Rational(-1))),
      sc::Error);
}

TEST_CASE("derivation acts as weight times derivative with leibniz rule") {
  const Interval dom(0, 1);
  const StepFunction weight(dom, {Rational(1, 3), Rational(2, 3)},
                            {Rational(1, 2), Rational(2), Rational(1)});
  const StepFunction density(dom, {Rational(1, 2)},
                             {Rational(1), Rational(3, 2)});
  const Measure1D m({{Rational(1, 4), Rational(1)}}, density);

  const PLFunction f({Rational(1, 4), Rational(1, 2)},
                     {Rational(1, 8), Rational(1, 2)}, 1, -2);
  const PLFunction g({Rational(1, 5), Rational(7, 10)},
                     {Rational(0), Rational(1)}, 0, 3);

  const sc::DerivationResult Df = sc::apply_derivation_1d(m, weight, f);
  const sc::DerivationResult Dg = sc::apply_derivation_1d(m, weight, g);

  // Atoms always map to zero.
  REQUIRE(Df.atom_values.size() == 1);
  CHECK(Df.atom_values[0].first == Rational(1, 4));
  CHECK(Df.atom_values[0].second == Rational(0));

  // Linearity: D(2f - 3g) = 2 Df - 3 Dg as step functions.
  const PLFunction comb =
      add(compose(PLFunction::affine(0, 0, 2), f).canonicalized(),
          compose(PLFunction::affine(0, 0, -3), g).canonicalized());
  const sc::DerivationResult Dc = sc::apply_derivation_1d(m, weight, comb);
  CHECK(sc::step_equal(Dc.step, sc::add(Df.step.scale(2), Dg.step.scale(-3))));

  // Leibniz a.e.: the product fg is piecewise quadratic, so the rule is
  // checked pointwise off the cut set, with the left side expanded as
  // weight * (f'g + fg') masked to the support of the density.
  const StepFunction dfs = sc::derivative_step(f, dom);
  const StepFunction dgs = sc::derivative_step(g, dom);
  sc::Rng rng(67);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const Rational x = rng.rational(Rational(1, 100), Rational(99, 100), 97);
    try {
      Rational lhs = weight.eval_ae(x) *
                     (dfs.eval_ae(x) * g.eval(x) + f.eval(x) * dgs.eval_ae(x));
      if (density.eval_ae(x).is_zero()) lhs = Rational(0);
      const Rational rhs =
          f.eval(x) * Dg.step.eval_ae(x) + g.eval(x) * Df.step.eval_ae(x);
      CHECK(lhs == rhs);
      ++checked;
    } catch (const sc::PreconditionError&) {
      continue;  // landed on a cut; a.e. semantics skip it
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("derivation of the identity is the weight on the support") {
  const Interval dom(0, 1);
  const StepFunction weight(dom, {Rational(1, 2)}, {Rational(3), Rational(5)});
  const StepFunction density(dom, {Rational(1, 4)},
                             {Rational(0), Rational(2)});
  const Measure1D m({}, density);
  const sc::DerivationResult Did =
      sc::apply_derivation_1d(m, weight, PLFunction::identity());
  // Off the support (density 0) the result vanishes; on it, equals weight.
  CHECK(Did.step.eval_ae(Rational(1, 8)) == Rational(0));
  CHECK(Did.step.eval_ae(Rational(3, 8)) == Rational(3));
  CHECK(Did.step.eval_ae(Rational(3, 4)) == Rational(5));
}

TEST_CASE("atom-only measures kill every derivation value") {
  const Interval dom(0, 1);
  std::vector<std::pair<Rational, Rational>> atoms;
  for (long i = 0; i < 8; ++i) {
    atoms.emplace_back(Rational(2 * i + 1, 27), Rational(1, 8));
  }
  const Measure1D m(atoms, StepFunction::constant(dom, Rational(0)));
  REQUIRE(m.is_atom_only());
  const StepFunction weight = StepFunction::constant(dom, Rational(7));
  const sc::DerivationResult D =
      sc::apply_derivation_1d(m, weight, PLFunction::identity());
  CHECK(D.step.is_zero());
  CHECK(D.atom_values.size() == 8);
  for (const auto& [loc, v] : D.atom_values) CHECK(v == Rational(0));
}
