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

#include "stripecover/verify.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "stripecover/coord_approx.h"
#include "stripecover/extension.h"
#include "stripecover/generators.h"
#include "stripecover/null1d.h"
#include "stripecover/projections.h"
#include "stripecover/stripes.h"

namespace stripecover {

namespace {

const Interval kUnit(Rational(0), Rational(1));

std::string ratio_str(const Rational& r) {
  return r.str() + " (" + std::to_string(r.to_double()) + ")";
}

// 1. Uncross equals the pointwise sort, and the output is ordered.
CriterionResult c1_uncross_sort(Rng rng) {
  CriterionResult r{1, "uncross-sort-equivalence", true, ""};
  size_t instances = 0, checks = 0;
  for (int inst = 0; inst < 200 && r.pass; ++inst) {
    const size_t n = rng.below(8) + 1;
    const int max_bp = static_cast<int>(rng.below(12)) + 1;
    const std::vector<PLFunction> in = random_curve_family(rng, n, max_bp, kUnit);
    const std::vector<PLFunction> out = uncross(in);
    for (size_t j = 0; j + 1 < out.size(); ++j) {
      if (!is_everywhere_le(out[j], out[j + 1])) {
        r.pass = false;
        r.detail = "output unordered at instance " + std::to_string(inst);
        break;
      }
    }
    for (int s = 0; s < 100 && r.pass; ++s) {
      const Rational t = rng.rational(-1, 2, 128);
      std::vector<Rational> vin, vout;
      for (const PLFunction& f : in) vin.push_back(f.eval(t));
      for (const PLFunction& f : out) vout.push_back(f.eval(t));
      std::sort(vin.begin(), vin.end());
      if (vin != vout) {
        r.pass = false;
        r.detail = "value multiset mismatch at t = " + t.str();
      }
      ++checks;
    }
    ++instances;
  }
  if (r.pass) {
    r.detail = std::to_string(instances) + " instances, " +
               std::to_string(checks) + " abscissa checks";
  }
  return r;
}

// 2. Uncross preserves the 1-Lipschitz PL structure exactly.
CriterionResult c2_uncross_lipschitz(Rng rng) {
  CriterionResult r{2, "uncross-preserves-1-lipschitz", true, ""};
  size_t curves = 0;
  for (int inst = 0; inst < 100 && r.pass; ++inst) {
    const size_t n = rng.below(8) + 1;
    const std::vector<PLFunction> out =
        uncross(random_curve_family(rng, n, 12, kUnit));
    for (const PLFunction& f : out) {
      if (f.lipschitz_constant() > Rational(1)) {
        r.pass = false;
        r.detail = "output slope above 1 at instance " + std::to_string(inst);
        break;
      }
      ++curves;
    }
  }
  if (r.pass) r.detail = std::to_string(curves) + " output curves checked";
  return r;
}

// 3. Disjointify separation as an exact PL inequality.
CriterionResult c3_disjointify_separation(Rng rng) {
  CriterionResult r{3, "disjointify-separation", true, ""};
  for (int inst = 0; inst < 100 && r.pass; ++inst) {
    const size_t n = rng.below(6) + 2;
    const Rational delta = rng.rational(Rational(1, 64), Rational(1, 4), 64);
    const std::vector<PLFunction> ordered =
        uncross(random_curve_family(rng, n, 8, kUnit));
    const Arrangement out = disjointify(ordered, delta);
    for (size_t j = 0; j + 1 < out.size(); ++j) {
      if (!is_everywhere_le(shift(out.curves()[j], delta),
                            out.curves()[j + 1])) {
        r.pass = false;
        r.detail = "separation failed at instance " + std::to_string(inst) +
                   ", pair " + std::to_string(j);
      }
    }
    if (!out.disjoint_interiors()) {
      r.pass = false;
      r.detail = "disjoint flag unset at instance " + std::to_string(inst);
    }
  }
  if (r.pass) r.detail = "100 ordered instances";
  return r;
}

// 4. Disjointify inclusion: input stripes inside the output union.
CriterionResult c4_disjointify_inclusion(Rng rng) {
  CriterionResult r{4, "disjointify-inclusion", true, ""};
  size_t points = 0;
  const Interval wide(Rational(-1), Rational(2));
  for (int inst = 0; inst < 10 && r.pass; ++inst) {
    const size_t n = rng.below(6) + 2;
    const Rational delta = rng.rational(Rational(1, 32), Rational(1, 4), 64);
    const std::vector<PLFunction> ordered =
        uncross(random_curve_family(rng, n, 8, kUnit));
    const Arrangement input(1, delta, ordered);
    const Arrangement output = disjointify(ordered, delta);
    const std::vector<Point> pts =
        random_points_in_stripes(rng, input, wide, 1000);
    const CoverReport rep = covers(output, pts);
    points += pts.size();
    if (!rep.covered) {
      r.pass = false;
      r.detail = "uncovered point (" + rep.uncovered[0].x1.str() + ", " +
                 rep.uncovered[0].x2.str() + ") at instance " +
                 std::to_string(inst);
    }
  }
  if (r.pass) r.detail = std::to_string(points) + " stripe points included";
  return r;
}

// 5. phi is 3-Lipschitz (exact case bound and squared Euclidean bound).
CriterionResult c5_phi_lipschitz(Rng rng) {
  CriterionResult r{5, "phi-three-lipschitz", true, ""};
  Rational worst(0);
  for (int inst = 0; inst < 50 && r.pass; ++inst) {
    const size_t n = rng.below(5) + 1;
    const Rational delta = rng.rational(Rational(1, 64), Rational(1, 8), 64);
    const CoordApproximator A(
        random_disjoint_arrangement(rng, n, delta, kUnit));
    const LipschitzReport rep = verify_three_lipschitz(A, 2000, rng);
    if (!rep.within_case_bound || !rep.within_euclidean) {
      r.pass = false;
      r.detail = "bound violated at instance " + std::to_string(inst) +
                 ", witness p = (" + rep.witness.p.x1.str() + ", " +
                 rep.witness.p.x2.str() + ")";
    }
    worst = max(worst, rep.max_taxicab_ratio);
  }
  if (r.pass) {
    r.detail = "100000 pairs over 50 arrangements, max taxicab ratio " +
               ratio_str(worst);
  }
  return r;
}

// 6. phi approximates the transverse coordinate within N*delta; the
// bundled ladder meets the 2^-j schedule.
CriterionResult c6_phi_approximation(Rng rng) {
  CriterionResult r{6, "phi-approximation", true, ""};
  std::string ladder;
  for (int j = 1; j <= 10 && r.pass; ++j) {
    const CoordApproximator A(bundled_arrangement(j));
    const ApproximationReport rep = verify_approximation(A, 10000, rng);
    const Rational cap = Rational(1) / Rational(1L << j, 1);
    if (!rep.ok) {
      r.pass = false;
      r.detail = "deficit outside [0, N*delta] at j = " + std::to_string(j) +
                 ", witness (" + rep.witness.x1.str() + ", " +
                 rep.witness.x2.str() + ")";
    } else if (rep.max_deficit > cap) {
      r.pass = false;
      r.detail = "sup deficit above 2^-j at j = " + std::to_string(j);
    }
    if (j == 10) ladder = rep.max_deficit.str();
  }
  if (r.pass) {
    r.detail = "10^4 points per rung, j = 1..10; sup deficit at j=10: " +
               ladder;
  }
  return r;
}

// 7. phi is univariate per stripe with one constant offset.
CriterionResult c7_phi_univariate(Rng rng) {
  CriterionResult r{7, "phi-stripe-univariate", true, ""};
  size_t pairs = 0;
  for (int inst = 0; inst < 10 && r.pass; ++inst) {
    const size_t n = rng.below(5) + 1;
    const Rational delta = rng.rational(Rational(1, 64), Rational(1, 8), 64);
    const CoordApproximator A(
        random_disjoint_arrangement(rng, n, delta, kUnit));
    const UnivariateReport rep = verify_stripe_univariate(A, 100, rng);
    pairs += rep.pairs;
    if (!rep.ok) {
      r.pass = false;
      r.detail = "constancy failed at instance " + std::to_string(inst);
    }
  }
  if (r.pass) {
    r.detail = std::to_string(pairs) + " same-abscissa pairs, 100 per stripe";
  }
  return r;
}

// 8. The interval inequality of the planar proof.
CriterionResult c8_interval_inequality(Rng rng) {
  CriterionResult r{8, "interval-inequality", true, ""};
  for (int k = 0; k < 1000000; ++k) {
    Rational a = rng.rational(-2, 2, 256);
    Rational b = rng.rational(-2, 2, 256);
    if (b < a) std::swap(a, b);  // p2 <= p2'
    Rational c = rng.rational(-2, 2, 256);
    Rational d = rng.rational(-2, 2, 256);
    if (c < d) std::swap(c, d);  // q2' <= q2
    if (!interval_inequality(a, b, c, d)) {
      r.pass = false;
      r.detail = "violated at (" + a.str() + ", " + b.str() + ", " + c.str() +
                 ", " + d.str() + ")";
      return r;
    }
  }
  r.detail = "10^6 rational quadruples";
  return r;
}

// 9. 1-D approximate identity ladder.
CriterionResult c9_null1d_ladder(Rng rng) {
  (void)rng;  // fully deterministic fixtures
  CriterionResult r{9, "null1d-approximate-identity", true, ""};
  for (int j = 1; j <= 12 && r.pass; ++j) {
    const OpenCover1D cover = bundled_cover(j);
    const PLFunction phi = build_phi_1d(cover);
    const Rational cap = Rational(1) / Rational(1L << j, 1);
    DeficitReport rep{Rational(0), Rational(0)};
    try {
      rep = identity_deficit(phi, cover);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = std::string("deficit bound failed at j = ") +
                 std::to_string(j) + ": " + e.what();
      break;
    }
    if (rep.max_deficit > cap) {
      r.pass = false;
      r.detail = "max deficit above 2^-j at j = " + std::to_string(j);
      break;
    }
    for (const auto& [lo, hi] : cover.intervals()) {
      const Rational mid = (lo + hi) / 2;
      if (phi.eval(lo) != phi.eval(mid) || phi.eval(mid) != phi.eval(hi)) {
        r.pass = false;
        r.detail = "phi not constant on (" + lo.str() + ", " + hi.str() +
                   ") at j = " + std::to_string(j);
        break;
      }
    }
  }
  if (r.pass) r.detail = "j = 1..12, exact deficits and component constancy";
  return r;
}

// 10. McShane extension properties.
CriterionResult c10_mcshane(Rng rng) {
  CriterionResult r{10, "mcshane-extension", true, ""};
  // Exact 1-D lane.
  for (int inst = 0; inst < 20 && r.pass; ++inst) {
    const size_t n = rng.below(6) + 2;
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> vals;
    for (size_t i = 0; i < n; ++i) {
      Rational x = rng.rational(-2, 2, 64);
      bool dup = false;
      for (const auto& p : pts) dup = dup || p[0] == x;
      if (dup) {
        continue;
      }
      pts.push_back({x});
      vals.push_back(rng.rational(-2, 2, 64));
    }
    if (pts.size() < 2) continue;
    const SampleSet s(1, pts, vals);
    const Rational L = sample_lipschitz_1d(s);
    for (size_t i = 0; i < s.size(); ++i) {
      if (mcshane_extend_1d(s, L, s.points[i][0]) != s.values[i]) {
        r.pass = false;
        r.detail = "restriction mismatch at sample " + std::to_string(i);
      }
    }
    // Lipschitz bound, exact.
    for (int k = 0; k < 250 && r.pass; ++k) {
      const Rational x = rng.rational(-3, 3, 64);
      const Rational y = rng.rational(-3, 3, 64);
      const Rational dv =
          abs(mcshane_extend_1d(s, L, x) - mcshane_extend_1d(s, L, y));
      if (dv > L * abs(x - y)) {
        r.pass = false;
        r.detail = "1-D Lipschitz bound violated";
      }
    }
    // Bounded variant: sup bound with equality at the extremal sample.
    Rational m(0);
    size_t extremal = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (abs(s.values[i]) > m) {
        m = abs(s.values[i]);
        extremal = i;
      }
    }
    for (int k = 0; k < 100 && r.pass; ++k) {
      const Rational q = rng.rational(-5, 5, 64);
      if (abs(bounded_mcshane_extend_1d(s, q)) > m) {
        r.pass = false;
        r.detail = "bounded variant exceeded the sup norm";
      }
    }
    if (r.pass &&
        bounded_mcshane_extend_1d(s, s.points[extremal][0]) !=
            s.values[extremal]) {
      r.pass = false;
      r.detail = "bounded variant missed the extremal sample";
    }
  }
  // Float 2-D lane.
  for (int inst = 0; inst < 5 && r.pass; ++inst) {
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> vals;
    for (int i = 0; i < 6; ++i) {
      pts.push_back({Rational(static_cast<long>(rng.below(9)) - 4, 2),
                     Rational(static_cast<long>(rng.below(9)) - 4, 2)});
      vals.push_back(rng.rational(-2, 2, 16));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    vals.resize(pts.size());
    if (pts.size() < 2) continue;
    const SampleSet s(2, pts, vals);
    const double L = sample_lipschitz(s);
    for (size_t i = 0; i < s.size(); ++i) {
      const std::vector<double> q{s.points[i][0].to_double(),
                                  s.points[i][1].to_double()};
      if (std::abs(mcshane_extend(s, L, q) - s.values[i].to_double()) >
          1e-12) {
        r.pass = false;
        r.detail = "2-D restriction off by more than 1e-12";
      }
    }
    for (int k = 0; k < 1750 && r.pass; ++k) {
      const std::vector<double> x{rng.rational(-3, 3, 64).to_double(),
                                  rng.rational(-3, 3, 64).to_double()};
      const std::vector<double> y{rng.rational(-3, 3, 64).to_double(),
                                  rng.rational(-3, 3, 64).to_double()};
      const double dx = x[0] - y[0], dy = x[1] - y[1];
      const double dist = std::sqrt(dx * dx + dy * dy);
      if (std::abs(mcshane_extend(s, L, x) - mcshane_extend(s, L, y)) >
          L * dist + 1e-12) {
        r.pass = false;
        r.detail = "2-D Lipschitz bound violated";
      }
    }
  }
  if (r.pass) {
    r.detail = "exact 1-D lane (20 sets), float 2-D lane (5 sets), "
               "10^4 query pairs total";
  }
  return r;
}

// 11. The 1-D derivation model: linear, Leibniz, weight on AC parts,
// zero on atom-only measures.
CriterionResult c11_derivation(Rng rng) {
  CriterionResult r{11, "derivation-model", true, ""};
  const Interval dom(Rational(0), Rational(1));
  const StepFunction weight(dom, {Rational(1, 3), Rational(2, 3)},
                            {Rational(1, 2), Rational(2), Rational(1)});
  const StepFunction density(dom, {Rational(1, 2)},
                             {Rational(1), Rational(3, 2)});
  const Measure1D m({{Rational(1, 4), Rational(1)}}, density);

  const PLFunction f({Rational(1, 4), Rational(1, 2)},
                     {Rational(1, 8), Rational(1, 2)}, 1, -2);
  const PLFunction g({Rational(1, 5), Rational(7, 10)},
                     {Rational(0), Rational(1)}, 0, 3);
  const DerivationResult rf = apply_derivation_1d(m, weight, f);
  const DerivationResult rg = apply_derivation_1d(m, weight, g);

  // Linearity: d(2f - 3g) = 2 df - 3 dg piecewise.
  {
    const PLFunction comb =
        add(compose(PLFunction::affine(0, 0, 2), f).canonicalized(),
            compose(PLFunction::affine(0, 0, -3), g).canonicalized());
    const DerivationResult rc = apply_derivation_1d(m, weight, comb);
    const StepFunction expect = add(rf.step.scale(2), rg.step.scale(-3));
    if (!step_equal(rc.step, expect)) {
      r.pass = false;
      r.detail = "linearity failed";
    }
  }
  // Leibniz at 100 non-cut abscissae: d(fg) = f dg + g df, where the
  // left side is weight * (f'g + fg') masked to the support.
  const StepFunction dfs = derivative_step(f, dom);
  const StepFunction dgs = derivative_step(g, dom);
  for (int k = 0; k < 100 && r.pass; ++k) {
    const Rational x = rng.rational(Rational(1, 100), Rational(99, 100), 97);
    Rational lhs, rhs;
    try {
      const Rational fd = dfs.eval_ae(x);
      const Rational gd = dgs.eval_ae(x);
      lhs = weight.eval_ae(x) * (fd * g.eval(x) + f.eval(x) * gd);
      // The support mask: density touching this x.
      if (m.density.eval_ae(x).is_zero()) lhs = Rational(0);
      rhs = f.eval(x) * rg.step.eval_ae(x) + g.eval(x) * rf.step.eval_ae(x);
    } catch (const PreconditionError&) {
      continue;  // landed on a cut; a.e. semantics skip it
    }
    if (lhs != rhs) {
      r.pass = false;
      r.detail = "Leibniz mismatch at x = " + x.str();
    }
  }
  // Identity: result is the weight on the support.
  {
    const DerivationResult rid =
        apply_derivation_1d(m, weight, PLFunction::identity());
    if (!step_equal(rid.step, weight)) {
      r.pass = false;
      r.detail = "identity did not reproduce the weight";
    }
  }
  // Constants: zero.
  {
    const DerivationResult rc =
        apply_derivation_1d(m, weight, PLFunction::constant(Rational(7, 3)));
    if (!rc.step.is_zero()) {
      r.pass = false;
      r.detail = "constant had a nonzero derivation";
    }
  }
  // Atom-only (Cantor-style approximant at triadic centers): zero.
  {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (long i = 0; i < 8; ++i) {
      atoms.emplace_back(Rational(2 * i + 1, 27), Rational(1, 8));
    }
    const Measure1D cantorish(atoms,
                              StepFunction::constant(dom, Rational(0)));
    const DerivationResult rc = apply_derivation_1d(cantorish, weight, f);
    bool zero = rc.step.is_zero();
    for (const auto& [loc, v] : rc.atom_values) {
      (void)loc;
      zero = zero && v.is_zero();
    }
    if (!zero) {
      r.pass = false;
      r.detail = "atom-only measure had a nonzero derivation";
    }
  }
  if (r.pass) {
    r.detail = "linearity, Leibniz at 100 abscissae, identity/constant/"
               "atom-only cases";
  }
  return r;
}

// 12. Projection experiments.
CriterionResult c12_projections(Rng rng) {
  (void)rng;  // deterministic
  CriterionResult r{12, "projections", true, ""};
  // (1/2)^n along (1,0).
  const Direction e1(1, 0);
  Rational expect(1);
  for (int n = 0; n <= 6 && r.pass; ++n) {
    const Rational got = project_length(four_corner(n), e1);
    if (got != expect) {
      r.pass = false;
      r.detail = "length off at depth " + std::to_string(n) + ": got " +
                 got.str();
    }
    expect /= 2;
  }
  // Monotone nonincreasing columns for the bundled directions.
  const std::vector<Direction> dirs{{1, 0}, {0, 1}, {1, 1},
                                    {1, 2}, {2, 1}, {1, 3}};
  for (const Direction& d : dirs) {
    Rational prev(-1);
    for (int n = 0; n <= 6 && r.pass; ++n) {
      const Rational got = project_length(four_corner(n), d);
      if (prev.sign() >= 0 && got > prev) {
        r.pass = false;
        r.detail = "column not monotone for direction " + d.str();
      }
      prev = got;
    }
  }
  // Control segment: vanishes exactly at the orthogonal direction only.
  if (r.pass) {
    const std::pair<Rational, Rational> a{Rational(0), Rational(0)};
    const std::pair<Rational, Rational> b{Rational(1), Rational(1)};
    if (!project_segment(a, b, Direction(1, -1)).is_zero()) {
      r.pass = false;
      r.detail = "control segment did not vanish orthogonally";
    }
    for (const Direction& d : dirs) {
      if (project_segment(a, b, d).is_zero()) {
        r.pass = false;
        r.detail = "control segment vanished at " + d.str();
      }
    }
  }
  if (r.pass) {
    r.detail = "depths 0..6, 6 directions, control segment checks";
  }
  return r;
}

using Cell = CriterionResult (*)(Rng);

constexpr Cell kCells[] = {
    c1_uncross_sort,       c2_uncross_lipschitz,  c3_disjointify_separation,
    c4_disjointify_inclusion, c5_phi_lipschitz,   c6_phi_approximation,
    c7_phi_univariate,     c8_interval_inequality, c9_null1d_ladder,
    c10_mcshane,           c11_derivation,         c12_projections,
};

int thread_cap(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STRIPECOVER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int criterion_count() {
  return static_cast<int>(sizeof(kCells) / sizeof(kCells[0]));
}

CriterionResult run_criterion(int id, uint64_t seed) {
  if (id < 1 || id > criterion_count()) {
    throw PreconditionError("verify: criterion id out of range");
  }
  // Each cell gets an independent substream, so cells are deterministic
  // regardless of which others run or in what order.
  return kCells[id - 1](Rng(seed).fork(static_cast<uint64_t>(id)));
}

std::vector<CriterionResult> run_all(uint64_t seed, int threads) {
  const int count = criterion_count();
  std::vector<CriterionResult> results(count);
  std::atomic<int> next{0};
  const int workers = std::min(thread_cap(threads), count);
  auto work = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      results[i] = run_criterion(i + 1, seed);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return results;
}

std::string verify_csv(const std::vector<CriterionResult>& results,
                       uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << "\n";
  out << "criterion,name,status,detail\n";
  for (const CriterionResult& r : results) {
    std::string detail = r.detail;
    for (char& c : detail) {
      if (c == ',') c = ';';
    }
    out << r.id << ',' << r.name << ',' << (r.pass ? "pass" : "FAIL") << ','
        << detail << '\n';
  }
  return out.str();
}

}  // namespace stripecover
