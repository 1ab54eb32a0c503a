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

#include "stripecover/rng.h"

namespace stripecover {

uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw PreconditionError("rng: below(0)");
  return next() % n;
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw PreconditionError("rng: empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(span));
}

Rational Rng::rational(const Rational& lo, const Rational& hi, long den_max) {
  if (hi < lo) throw PreconditionError("rng: empty rational range");
  if (den_max < 1) throw PreconditionError("rng: den_max < 1");
  const long d = range(1, den_max);
  // Numerator n must satisfy lo <= n/d <= hi, i.e. ceil(lo*d) <= n <= floor(hi*d).
  mpz_class nlo, nhi;
  {
    mpq_class lod = lo.raw() * d;
    mpq_class hid = hi.raw() * d;
    mpz_cdiv_q(nlo.get_mpz_t(), lod.get_num().get_mpz_t(),
               lod.get_den().get_mpz_t());
    mpz_fdiv_q(nhi.get_mpz_t(), hid.get_num().get_mpz_t(),
               hid.get_den().get_mpz_t());
  }
  if (nhi < nlo) {
    // No multiple of 1/d in [lo, hi]; fall back to an endpoint mix.
    return coin() ? lo : hi;
  }
  mpz_class span = nhi - nlo + 1;
  if (span.fits_slong_p()) {
    const long offset = static_cast<long>(below(span.get_si()));
    mpz_class n = nlo + offset;
    return Rational(mpq_class(n, mpz_class(d)));
  }
  // Spans beyond long never occur at desk scale, but stay correct.
  mpz_class n = nlo + mpz_class(static_cast<unsigned long>(next())) % span;
  return Rational(mpq_class(n, mpz_class(d)));
}

Rng Rng::fork(uint64_t stream) const {
  Rng child(state_ ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
  child.next();
  return child;
}

}  // namespace stripecover
