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

#include "stripecover/svg.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace stripecover {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 24.0;

const char* kStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;

  double sx(double x) const {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin);
  }
  double sy(double y) const {
    return kHeight - kMargin -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  }
};

// Float evaluation for rendering only.
double eval_f(const PLFunction& f, double x) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  if (x <= xs.front().to_double()) {
    return ys.front().to_double() +
           f.left_slope().to_double() * (x - xs.front().to_double());
  }
  if (x >= xs.back().to_double()) {
    return ys.back().to_double() +
           f.right_slope().to_double() * (x - xs.back().to_double());
  }
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const double a = xs[i].to_double(), b = xs[i + 1].to_double();
    if (x <= b) {
      const double t = (x - a) / (b - a);
      return ys[i].to_double() * (1 - t) + ys[i + 1].to_double() * t;
    }
  }
  return ys.back().to_double();
}

// Abscissae where a PL function bends inside the window, plus the ends.
std::vector<double> knots(const PLFunction& f, const Interval& window) {
  std::vector<double> xs;
  xs.push_back(window.lo.to_double());
  for (const Rational& x : f.breakpoints()) {
    if (window.lo < x && x < window.hi) xs.push_back(x.to_double());
  }
  xs.push_back(window.hi.to_double());
  return xs;
}

std::string polyline(const PLFunction& f, const Interval& window,
                     const Frame& fr, const char* stroke) {
  std::ostringstream out;
  out << "<polyline fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"1.5\" points=\"";
  for (double x : knots(f, window)) {
    out << fr.sx(x) << ',' << fr.sy(eval_f(f, x)) << ' ';
  }
  out << "\"/>\n";
  return out.str();
}

std::string band(const PLFunction& f, const Rational& half,
                 const Interval& window, const Frame& fr, const char* fill) {
  std::ostringstream out;
  out << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.25\" "
      << "stroke=\"none\" points=\"";
  std::vector<double> xs = knots(f, window);
  const double h = half.to_double();
  for (double x : xs) {
    out << fr.sx(x) << ',' << fr.sy(eval_f(f, x) + h) << ' ';
  }
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    out << fr.sx(*it) << ',' << fr.sy(eval_f(f, *it) - h) << ' ';
  }
  out << "\"/>\n";
  return out.str();
}

std::string header() {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

Frame fit(const std::vector<PLFunction>& curves, const Interval& window,
          double pad) {
  Frame fr{window.lo.to_double(), window.hi.to_double(), 0.0, 1.0};
  if (!curves.empty()) {
    double lo = curves.front().min_on(window).to_double();
    double hi = curves.front().max_on(window).to_double();
    for (const PLFunction& f : curves) {
      lo = std::min(lo, f.min_on(window).to_double());
      hi = std::max(hi, f.max_on(window).to_double());
    }
    if (hi - lo < 1e-9) hi = lo + 1.0;
    fr.y_lo = lo - pad;
    fr.y_hi = hi + pad;
  }
  return fr;
}

}  // namespace

std::string svg_arrangement(const Arrangement& a, const Interval& window) {
  const double pad = a.delta().to_double();
  const Frame fr = fit(a.curves(), window, pad > 0 ? pad : 0.25);
  std::ostringstream out;
  out << header();
  const Rational half = a.delta() / 2;
  for (size_t j = 0; j < a.size(); ++j) {
    out << band(a.curves()[j], half, window, fr,
                kStrokes[j % (sizeof(kStrokes) / sizeof(kStrokes[0]))]);
  }
  for (size_t j = 0; j < a.size(); ++j) {
    out << polyline(a.curves()[j], window, fr,
                    kStrokes[j % (sizeof(kStrokes) / sizeof(kStrokes[0]))]);
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_curves(const std::vector<PLFunction>& curves,
                       const Interval& window) {
  const Frame fr = fit(curves, window, 0.25);
  std::ostringstream out;
  out << header();
  for (size_t j = 0; j < curves.size(); ++j) {
    out << polyline(curves[j], window, fr,
                    kStrokes[j % (sizeof(kStrokes) / sizeof(kStrokes[0]))]);
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_squares(const SquareSet& s) {
  Frame fr{0.0, 1.0, 0.0, 1.0};
  std::ostringstream out;
  out << header();
  for (const Square& sq : s.squares) {
    const double x = fr.sx(sq.x.to_double());
    const double y = fr.sy((sq.y + sq.side).to_double());
    const double w = sq.side.to_double() / (fr.x_hi - fr.x_lo) *
                     (kWidth - 2 * kMargin);
    const double h = sq.side.to_double() / (fr.y_hi - fr.y_lo) *
                     (kHeight - 2 * kMargin);
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"#1f77b4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void save_text(const std::string& text, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw Error(file + ": cannot write");
  out << text;
}

}  // namespace stripecover
