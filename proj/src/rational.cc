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

#include "stripecover/rational.h"

#include <cctype>
#include <ostream>

namespace stripecover {

namespace {

bool is_decimal_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InvariantError("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw InvariantError("rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_strings(const std::string& num,
                                const std::string& den) {
  if (!is_decimal_integer(num)) {
    throw ParseError("rational numerator is not a decimal integer: '" + num +
                     "'");
  }
  if (!is_decimal_integer(den)) {
    throw ParseError("rational denominator is not a decimal integer: '" + den +
                     "'");
  }
  // Explicit base 10: the default base 0 would read leading zeros as
  // octal (decimal fractions produce strings like "025").
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("rational denominator is zero");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::parse(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash != std::string::npos) {
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
  }
  const size_t dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || !is_decimal_integer(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw ParseError("cannot parse rational from '" + text + "'");
    }
    std::string sign;
    std::string digits = whole;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      if (whole[0] == '-') sign = "-";
      digits = whole.substr(1);
    }
    if (digits.empty()) digits = "0";
    if (!is_decimal_integer(digits)) {
      throw ParseError("cannot parse rational from '" + text + "'");
    }
    const std::string num = sign + digits + frac;
    std::string den = "1";
    den.append(frac.size(), '0');
    return from_strings(num, den);
  }
  if (!is_decimal_integer(text)) {
    throw ParseError("cannot parse rational from '" + text + "'");
  }
  return from_strings(text, "1");
}

std::string Rational::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace stripecover
