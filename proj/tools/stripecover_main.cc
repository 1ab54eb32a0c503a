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

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stripecover/coord_approx.h"
#include "stripecover/extension.h"
#include "stripecover/generators.h"
#include "stripecover/json_io.h"
#include "stripecover/svg.h"
#include "stripecover/verify.h"

namespace sc = stripecover;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;       // bad input, schema violation, precondition
constexpr int kVerifyFail = 2;  // a verification failed; witness emitted

std::vector<sc::Rational> parse_tuple(const std::string& text) {
  std::vector<sc::Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    out.push_back(sc::Rational::parse(part));
  }
  if (out.empty()) throw sc::ParseError("empty tuple: '" + text + "'");
  return out;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    sc::save_text(text, path);
  }
}

sc::Interval default_window() {
  return sc::Interval(sc::Rational(-1), sc::Rational(2));
}

struct Options {
  std::string in, out, svg, arrangement, points, samples_file, cover, measure,
      weight, f_file, query, eval, verify_kind, set_name, dir, dirs, csv,
      criterion;
  std::string baseline = "0";
  std::string lipschitz;
  std::string depths = "0,1,2,3,4,5,6";
  bool uncross_first = false;
  bool bounded = false;
  bool all = false;
  int depth = 1;
  uint64_t seed = 7;
  size_t samples = 1000;
  int threads = 0;
};

int cmd_uncross(const Options& opt) {
  const sc::Json j = sc::load_json(opt.in);
  const sc::Arrangement a = sc::arrangement_from_json(j);
  std::vector<sc::PLFunction> sorted = sc::uncross(a.curves());
  const sc::Arrangement out(a.axis(), a.delta(), std::move(sorted));
  sc::save_json(sc::to_json(out), opt.out);
  if (!opt.svg.empty()) {
    sc::save_text(sc::svg_curves(out.curves(), default_window()), opt.svg);
  }
  return kOk;
}

int cmd_disjointify(const Options& opt) {
  const sc::Json j = sc::load_json(opt.in);
  const sc::Arrangement a = sc::arrangement_from_json(j);
  std::vector<sc::PLFunction> curves = a.curves();
  if (opt.uncross_first) curves = sc::uncross(curves);
  const sc::Arrangement out = sc::disjointify(curves, a.delta(), a.axis());
  sc::save_json(sc::to_json(out), opt.out);
  if (!opt.svg.empty()) {
    sc::save_text(sc::svg_arrangement(out, default_window()), opt.svg);
  }
  return kOk;
}

int cmd_covers(const Options& opt) {
  const sc::Arrangement a =
      sc::arrangement_from_json(sc::load_json(opt.arrangement));
  const std::vector<sc::Point> pts =
      sc::points_from_json(sc::load_json(opt.points));
  const sc::CoverReport rep = sc::covers(a, pts);
  if (rep.covered) {
    std::cout << "covered: " << pts.size() << " points\n";
    return kOk;
  }
  sc::Json witness;
  witness["failure"] = "uncovered-points";
  witness["witness"] = sc::to_json(rep.uncovered);
  write_or_print(witness.dump(2) + "\n", opt.out);
  return kVerifyFail;
}

int cmd_phi(const Options& opt) {
  const sc::Arrangement a =
      sc::arrangement_from_json(sc::load_json(opt.arrangement));
  const sc::CoordApproximator A(a, sc::Rational::parse(opt.baseline));
  if (!opt.eval.empty()) {
    const auto p = parse_tuple(opt.eval);
    if (p.size() != 2) throw sc::ParseError("--eval needs \"x,y\"");
    std::cout << A.eval(sc::Point{p[0], p[1]}).str() << "\n";
    return kOk;
  }
  // Verification campaigns over this arrangement.
  sc::Rng rng(opt.seed);
  std::ostringstream csv;
  csv << "# seed=" << opt.seed << "\n";
  bool pass = true;
  sc::Json witness;
  if (opt.verify_kind == "lipschitz") {
    const sc::LipschitzReport rep =
        sc::verify_three_lipschitz(A, opt.samples, rng);
    pass = rep.within_case_bound && rep.within_euclidean;
    csv << "check,pairs,max_taxicab_ratio,status\nlipschitz," << rep.pairs
        << ',' << rep.max_taxicab_ratio.str() << ','
        << (pass ? "pass" : "FAIL") << '\n';
    if (!pass) {
      witness["failure"] = "three-lipschitz";
      witness["p"] = sc::Json::array({sc::to_json(rep.witness.p.x1),
                                      sc::to_json(rep.witness.p.x2)});
      witness["q"] = sc::Json::array({sc::to_json(rep.witness.q.x1),
                                      sc::to_json(rep.witness.q.x2)});
    }
  } else if (opt.verify_kind == "approx") {
    const sc::ApproximationReport rep =
        sc::verify_approximation(A, opt.samples, rng);
    pass = rep.ok;
    csv << "check,points,max_deficit,total_thickness,status\napprox,"
        << rep.points << ',' << rep.max_deficit.str() << ','
        << a.total_thickness().str() << ',' << (pass ? "pass" : "FAIL")
        << '\n';
    if (!pass) {
      witness["failure"] = "approximation";
      witness["point"] = sc::Json::array(
          {sc::to_json(rep.witness.x1), sc::to_json(rep.witness.x2)});
    }
  } else if (opt.verify_kind == "univariate") {
    const sc::UnivariateReport rep =
        sc::verify_stripe_univariate(A, opt.samples, rng);
    pass = rep.ok;
    csv << "check,pairs,status\nunivariate," << rep.pairs << ','
        << (pass ? "pass" : "FAIL") << '\n';
    csv << "stripe,constant\n";
    for (size_t l = 0; l < rep.stripe_constants.size(); ++l) {
      csv << l << ',' << rep.stripe_constants[l].str() << '\n';
    }
    if (!pass) witness["failure"] = "stripe-univariate";
  } else {
    throw sc::ParseError("--verify must be lipschitz, approx or univariate");
  }
  write_or_print(csv.str(), opt.csv);
  if (!pass) {
    std::cout << witness.dump(2) << "\n";
    return kVerifyFail;
  }
  return kOk;
}

int cmd_null1d(const std::string& action, const Options& opt) {
  if (action == "phi") {
    const sc::OpenCover1D cover = sc::cover_from_json(sc::load_json(opt.cover));
    sc::save_json(sc::to_json(sc::build_phi_1d(cover)), opt.out);
    return kOk;
  }
  if (action == "deficit") {
    const sc::OpenCover1D cover = sc::cover_from_json(sc::load_json(opt.cover));
    const sc::DeficitReport rep =
        sc::identity_deficit(sc::build_phi_1d(cover), cover);
    std::cout << "max_deficit," << rep.max_deficit.str() << "\nargmax,"
              << rep.argmax.str() << "\ncover_length,"
              << cover.total_length().str() << "\n";
    return kOk;
  }
  if (action == "derive") {
    const sc::Measure1D m = sc::measure_from_json(sc::load_json(opt.measure));
    const sc::StepFunction w = sc::step_from_json(sc::load_json(opt.weight));
    const sc::PLFunction f = sc::pl_from_json(sc::load_json(opt.f_file));
    const sc::DerivationResult res = sc::apply_derivation_1d(m, w, f);
    sc::Json j;
    j["step"] = sc::to_json(res.step);
    j["atom_values"] = sc::Json::array();
    for (const auto& [loc, v] : res.atom_values) {
      j["atom_values"].push_back(
          sc::Json::array({sc::to_json(loc), sc::to_json(v)}));
    }
    if (opt.out.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      sc::save_json(j, opt.out);
    }
    return kOk;
  }
  throw sc::ParseError("null1d action must be phi, deficit or derive");
}

int cmd_extend(const Options& opt) {
  const sc::SampleSet s =
      sc::samples_from_json(sc::load_json(opt.samples_file));
  const auto q = parse_tuple(opt.query);
  if (q.size() != static_cast<size_t>(s.dim)) {
    throw sc::ParseError("--query has " + std::to_string(q.size()) +
                         " coordinates, samples have dim " +
                         std::to_string(s.dim));
  }
  if (s.dim == 1) {
    const sc::Rational v =
        opt.bounded
            ? sc::bounded_mcshane_extend_1d(s, q[0])
            : sc::mcshane_extend_1d(s,
                                    opt.lipschitz.empty()
                                        ? sc::sample_lipschitz_1d(s)
                                        : sc::Rational::parse(opt.lipschitz),
                                    q[0]);
    std::cout << v.str() << "\n";
    return kOk;
  }
  std::vector<double> qf;
  for (const sc::Rational& c : q) qf.push_back(c.to_double());
  const double v =
      opt.bounded
          ? sc::bounded_mcshane_extend(s, qf)
          : sc::mcshane_extend(s,
                               opt.lipschitz.empty()
                                   ? sc::sample_lipschitz(s)
                                   : sc::Rational::parse(opt.lipschitz)
                                         .to_double(),
                               qf);
  std::cout << v << "\n";
  return kOk;
}

int cmd_project(const Options& opt) {
  if (!opt.dir.empty()) {
    if (opt.set_name != "four-corner") {
      throw sc::ParseError("--set must be four-corner");
    }
    const auto d = parse_tuple(opt.dir);
    if (d.size() != 2 || !d[0].is_integer() || !d[1].is_integer()) {
      throw sc::ParseError("--dir needs integer \"p,q\"");
    }
    const sc::Direction dir(std::stol(d[0].num_str()),
                            std::stol(d[1].num_str()));
    const sc::SquareSet set = sc::four_corner(opt.depth);
    const sc::Rational len = sc::project_length(set, dir);
    std::cout << "exact," << len.str() << "\nnormalized,"
              << len.to_double() / dir.norm() << "\n";
    if (!opt.svg.empty()) sc::save_text(sc::svg_squares(set), opt.svg);
    return kOk;
  }
  // Report grid.
  std::vector<int> depths;
  {
    std::stringstream ss(opt.depths);
    std::string part;
    while (std::getline(ss, part, ',')) depths.push_back(std::stoi(part));
  }
  std::vector<sc::Direction> dirs;
  {
    std::stringstream ss(opt.dirs);
    std::string part;
    while (std::getline(ss, part, ';')) {
      const auto d = parse_tuple(part);
      if (d.size() != 2) throw sc::ParseError("--dirs needs \"p,q;p,q;...\"");
      dirs.emplace_back(std::stol(d[0].num_str()), std::stol(d[1].num_str()));
    }
  }
  if (dirs.empty()) throw sc::ParseError("--dirs is required for --report");
  const auto cells = sc::projection_report(depths, dirs);
  write_or_print(sc::projection_csv(cells), opt.csv);
  return kOk;
}

int cmd_verify(const Options& opt) {
  std::vector<sc::CriterionResult> results;
  if (opt.all) {
    results = sc::run_all(opt.seed, opt.threads);
  } else if (!opt.criterion.empty()) {
    results.push_back(sc::run_criterion(std::stoi(opt.criterion), opt.seed));
  } else {
    throw sc::ParseError("verify needs --all or --criterion N");
  }
  const std::string csv = sc::verify_csv(results, opt.seed);
  if (!opt.csv.empty()) sc::save_text(csv, opt.csv);
  bool all_pass = true;
  for (const sc::CriterionResult& r : results) {
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  " << r.name
              << "  " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stripe covers, coordinate approximators and "
               "projection experiments"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* uncross = app.add_subcommand("uncross", "Sort curves pointwise");
  uncross->add_option("--in", opt.in, "Arrangement JSON")->required();
  uncross->add_option("--out", opt.out, "Output JSON")->required();
  uncross->add_option("--svg", opt.svg, "Figure of the result");

  CLI::App* dis = app.add_subcommand("disjointify",
                                     "Lift ordered stripes apart");
  dis->add_option("--in", opt.in, "Arrangement JSON")->required();
  dis->add_option("--out", opt.out, "Output JSON")->required();
  dis->add_flag("--uncross-first", opt.uncross_first,
                "Sort the curves before lifting");
  dis->add_option("--svg", opt.svg, "Figure of the result");

  CLI::App* cov = app.add_subcommand("covers", "Exact membership check");
  cov->add_option("--arrangement", opt.arrangement, "Arrangement JSON")
      ->required();
  cov->add_option("--points", opt.points, "Points JSON")->required();
  cov->add_option("--out", opt.out, "Witness output (default stdout)");

  CLI::App* phi = app.add_subcommand("phi", "Coordinate approximator");
  phi->add_option("--arrangement", opt.arrangement, "Arrangement JSON")
      ->required();
  phi->add_option("--baseline", opt.baseline, "Baseline y0 (default 0)");
  phi->add_option("--eval", opt.eval, "Evaluate at \"x,y\"");
  phi->add_option("--verify", opt.verify_kind,
                  "lipschitz | approx | univariate");
  phi->add_option("--samples", opt.samples, "Sampling budget");
  phi->add_option("--seed", opt.seed, "RNG seed");
  phi->add_option("--csv", opt.csv, "Report output (default stdout)");

  CLI::App* nul = app.add_subcommand("null1d", "1-D constructions");
  std::string nul_action;
  nul->add_option("action", nul_action, "phi | deficit | derive")->required();
  nul->add_option("--cover", opt.cover, "Cover JSON");
  nul->add_option("--measure", opt.measure, "Measure JSON");
  nul->add_option("--weight", opt.weight, "Step-function JSON");
  nul->add_option("--f", opt.f_file, "PLFunction JSON");
  nul->add_option("--out", opt.out, "Output JSON");

  CLI::App* ext = app.add_subcommand("extend", "McShane extension");
  ext->add_option("--samples", opt.samples_file, "SampleSet JSON")->required();
  ext->add_option("--query", opt.query, "Query point \"x[,y[,z]]\"")
      ->required();
  ext->add_flag("--bounded", opt.bounded, "Clamp to the sample sup norm");
  ext->add_option("--lipschitz", opt.lipschitz,
                  "Extension constant (default: sampled L)");

  CLI::App* proj = app.add_subcommand("project", "Projection experiments");
  proj->add_option("--set", opt.set_name, "four-corner");
  proj->add_option("--depth", opt.depth, "Construction depth");
  proj->add_option("--dir", opt.dir, "Direction \"p,q\"");
  proj->add_flag("--report", opt.all, "Emit the full grid");
  proj->add_option("--depths", opt.depths, "Depths for --report");
  proj->add_option("--dirs", opt.dirs, "Directions \"p,q;p,q\" for --report");
  proj->add_option("--csv", opt.csv, "Report output (default stdout)");
  proj->add_option("--svg", opt.svg, "Figure of the square set");

  CLI::App* ver = app.add_subcommand("verify", "Acceptance campaign");
  ver->add_flag("--all", opt.all, "Run every criterion");
  ver->add_option("--criterion", opt.criterion, "Run one criterion (1-12)");
  ver->add_option("--seed", opt.seed, "RNG seed");
  ver->add_option("--csv", opt.csv, "Report output path");
  ver->add_option("--threads", opt.threads,
                  "Parallel cells (default: STRIPECOVER_THREADS or cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(uncross)) return cmd_uncross(opt);
    if (app.got_subcommand(dis)) return cmd_disjointify(opt);
    if (app.got_subcommand(cov)) return cmd_covers(opt);
    if (app.got_subcommand(phi)) return cmd_phi(opt);
    if (app.got_subcommand(nul)) return cmd_null1d(nul_action, opt);
    if (app.got_subcommand(ext)) return cmd_extend(opt);
    if (app.got_subcommand(proj)) return cmd_project(opt);
    if (app.got_subcommand(ver)) return cmd_verify(opt);
  } catch (const sc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
