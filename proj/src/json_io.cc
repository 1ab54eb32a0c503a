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

#include "stripecover/json_io.h"

#include <fstream>

namespace stripecover {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

// Re-validate library invariants under the parser's field path so the
// diagnostic names the input location.
template <typename Fn>
auto rethrow_at(const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json to_json(const Rational& r) {
  return Json::array({r.num_str(), r.den_str()});
}

Rational rational_from_json(const Json& j, const std::string& path) {
  // Leaf errors always get the field path; there is no inner parser that
  // could have prefixed one already.
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() ||
        !j[1].is_string()) {
      throw ParseError("expected [\"num\",\"den\"] decimal strings");
    }
    return Rational::from_strings(j[0].get<std::string>(),
                                  j[1].get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

namespace {

std::vector<Rational> rational_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Interval interval_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [lo, hi]");
  return rethrow_at(path, [&] {
    return Interval(rational_from_json(j[0], path + "[0]"),
                    rational_from_json(j[1], path + "[1]"));
  });
}

}  // namespace

Json to_json(const PLFunction& f) {
  Json j;
  j["breakpoints"] = Json::array();
  for (const Rational& x : f.breakpoints()) j["breakpoints"].push_back(to_json(x));
  j["values"] = Json::array();
  for (const Rational& y : f.values()) j["values"].push_back(to_json(y));
  j["left_slope"] = to_json(f.left_slope());
  j["right_slope"] = to_json(f.right_slope());
  if (f.domain().has_value()) {
    j["domain"] = Json::array({to_json(f.domain()->lo), to_json(f.domain()->hi)});
  } else {
    j["domain"] = nullptr;
  }
  return j;
}

PLFunction pl_from_json(const Json& j, const std::string& path) {
  std::vector<Rational> xs =
      rational_list(field(j, "breakpoints", path), path + ".breakpoints");
  std::vector<Rational> ys =
      rational_list(field(j, "values", path), path + ".values");
  Rational ls =
      rational_from_json(field(j, "left_slope", path), path + ".left_slope");
  Rational rs =
      rational_from_json(field(j, "right_slope", path), path + ".right_slope");
  std::optional<Interval> domain;
  if (j.contains("domain") && !j["domain"].is_null()) {
    domain = interval_from_json(j["domain"], path + ".domain");
  }
  return rethrow_at(path, [&] {
    return PLFunction(std::move(xs), std::move(ys), std::move(ls),
                      std::move(rs), std::move(domain));
  });
}

Json to_json(const Arrangement& a) {
  Json j;
  j["axis"] = a.axis();
  j["delta"] = to_json(a.delta());
  j["curves"] = Json::array();
  for (const PLFunction& f : a.curves()) j["curves"].push_back(to_json(f));
  return j;
}

Arrangement arrangement_from_json(const Json& j, const std::string& path) {
  const Json& axis = field(j, "axis", path);
  if (!axis.is_number_integer()) fail(path + ".axis", "expected 1 or 2");
  Rational delta = rational_from_json(field(j, "delta", path), path + ".delta");
  const Json& curves = field(j, "curves", path);
  if (!curves.is_array()) fail(path + ".curves", "expected an array");
  std::vector<PLFunction> fs;
  fs.reserve(curves.size());
  for (size_t i = 0; i < curves.size(); ++i) {
    fs.push_back(
        pl_from_json(curves[i], path + ".curves[" + std::to_string(i) + "]"));
  }
  return rethrow_at(path, [&] {
    return Arrangement(axis.get<int>(), std::move(delta), std::move(fs));
  });
}

Json to_json(const SampleSet& s) {
  Json j;
  j["dim"] = s.dim;
  j["points"] = Json::array();
  for (const auto& p : s.points) {
    Json row = Json::array();
    for (const Rational& c : p) row.push_back(to_json(c));
    j["points"].push_back(std::move(row));
  }
  j["values"] = Json::array();
  for (const Rational& v : s.values) j["values"].push_back(to_json(v));
  return j;
}

SampleSet samples_from_json(const Json& j, const std::string& path) {
  const Json& dim = field(j, "dim", path);
  if (!dim.is_number_integer()) fail(path + ".dim", "expected an integer");
  const Json& pts = field(j, "points", path);
  if (!pts.is_array()) fail(path + ".points", "expected an array");
  std::vector<std::vector<Rational>> points;
  points.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    points.push_back(
        rational_list(pts[i], path + ".points[" + std::to_string(i) + "]"));
  }
  std::vector<Rational> values =
      rational_list(field(j, "values", path), path + ".values");
  return rethrow_at(path, [&] {
    return SampleSet(dim.get<int>(), std::move(points), std::move(values));
  });
}

Json to_json(const OpenCover1D& c) {
  Json j;
  j["domain"] = Json::array({to_json(c.domain().lo), to_json(c.domain().hi)});
  j["intervals"] = Json::array();
  for (const auto& [lo, hi] : c.intervals()) {
    j["intervals"].push_back(Json::array({to_json(lo), to_json(hi)}));
  }
  return j;
}

OpenCover1D cover_from_json(const Json& j, const std::string& path) {
  Interval domain = interval_from_json(field(j, "domain", path), path + ".domain");
  const Json& ivs = field(j, "intervals", path);
  if (!ivs.is_array()) fail(path + ".intervals", "expected an array");
  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.reserve(ivs.size());
  for (size_t i = 0; i < ivs.size(); ++i) {
    const std::string p = path + ".intervals[" + std::to_string(i) + "]";
    if (!ivs[i].is_array() || ivs[i].size() != 2) fail(p, "expected [lo, hi]");
    intervals.emplace_back(rational_from_json(ivs[i][0], p + "[0]"),
                           rational_from_json(ivs[i][1], p + "[1]"));
  }
  return rethrow_at(path, [&] {
    return OpenCover1D(std::move(domain), std::move(intervals));
  });
}

Json to_json(const StepFunction& s) {
  Json j;
  j["domain"] = Json::array({to_json(s.domain().lo), to_json(s.domain().hi)});
  j["cuts"] = Json::array();
  for (const Rational& c : s.cuts()) j["cuts"].push_back(to_json(c));
  j["values"] = Json::array();
  for (const Rational& v : s.values()) j["values"].push_back(to_json(v));
  return j;
}

StepFunction step_from_json(const Json& j, const std::string& path) {
  Interval domain = interval_from_json(field(j, "domain", path), path + ".domain");
  std::vector<Rational> cuts =
      rational_list(field(j, "cuts", path), path + ".cuts");
  std::vector<Rational> values =
      rational_list(field(j, "values", path), path + ".values");
  return rethrow_at(path, [&] {
    return StepFunction(std::move(domain), std::move(cuts), std::move(values));
  });
}

Json to_json(const Measure1D& m) {
  Json j;
  j["atoms"] = Json::array();
  for (const auto& [loc, mass] : m.atoms) {
    j["atoms"].push_back(Json::array({to_json(loc), to_json(mass)}));
  }
  j["density"] = to_json(m.density);
  return j;
}

Measure1D measure_from_json(const Json& j, const std::string& path) {
  const Json& atoms = field(j, "atoms", path);
  if (!atoms.is_array()) fail(path + ".atoms", "expected an array");
  std::vector<std::pair<Rational, Rational>> parsed;
  parsed.reserve(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = path + ".atoms[" + std::to_string(i) + "]";
    if (!atoms[i].is_array() || atoms[i].size() != 2) {
      fail(p, "expected [location, mass]");
    }
    parsed.emplace_back(rational_from_json(atoms[i][0], p + "[0]"),
                        rational_from_json(atoms[i][1], p + "[1]"));
  }
  StepFunction density =
      step_from_json(field(j, "density", path), path + ".density");
  return rethrow_at(path, [&] {
    return Measure1D(std::move(parsed), std::move(density));
  });
}

Json to_json(const SquareSet& s) {
  Json j;
  j["generation"] = s.generation;
  j["squares"] = Json::array();
  for (const Square& sq : s.squares) {
    j["squares"].push_back(
        Json::array({to_json(sq.x), to_json(sq.y), to_json(sq.side)}));
  }
  return j;
}

SquareSet squares_from_json(const Json& j, const std::string& path) {
  const Json& gen = field(j, "generation", path);
  if (!gen.is_number_integer()) fail(path + ".generation", "expected an integer");
  const Json& sqs = field(j, "squares", path);
  if (!sqs.is_array()) fail(path + ".squares", "expected an array");
  std::vector<Square> squares;
  squares.reserve(sqs.size());
  for (size_t i = 0; i < sqs.size(); ++i) {
    const std::string p = path + ".squares[" + std::to_string(i) + "]";
    if (!sqs[i].is_array() || sqs[i].size() != 3) {
      fail(p, "expected [x, y, side]");
    }
    squares.push_back({rational_from_json(sqs[i][0], p + "[0]"),
                       rational_from_json(sqs[i][1], p + "[1]"),
                       rational_from_json(sqs[i][2], p + "[2]")});
  }
  return rethrow_at(path, [&] {
    return SquareSet(std::move(squares), gen.get<int>());
  });
}

Json to_json(const std::vector<Point>& pts) {
  Json j;
  j["points"] = Json::array();
  for (const Point& p : pts) {
    j["points"].push_back(Json::array({to_json(p.x1), to_json(p.x2)}));
  }
  return j;
}

std::vector<Point> points_from_json(const Json& j, const std::string& path) {
  const Json& pts = field(j, "points", path);
  if (!pts.is_array()) fail(path + ".points", "expected an array");
  std::vector<Point> out;
  out.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const std::string p = path + ".points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) fail(p, "expected [x1, x2]");
    out.push_back(Point{rational_from_json(pts[i][0], p + "[0]"),
                        rational_from_json(pts[i][1], p + "[1]")});
  }
  return out;
}

Json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ParseError(file + ": " + e.what());
  }
  return j;
}

void save_json(const Json& j, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw Error(file + ": cannot write");
  out << j.dump(2) << '\n';
}

}  // namespace stripecover
