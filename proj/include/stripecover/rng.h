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

#ifndef STRIPECOVER_RNG_H_
#define STRIPECOVER_RNG_H_

#include <cstdint>

#include "stripecover/rational.h"

namespace stripecover {

// Deterministic splitmix64 generator.  All sampled verifications run on
// this so that a (seed, stream) pair reproduces bit-identical runs on
// any platform; std::random distributions are avoided on purpose.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform-ish integer in [0, n); n > 0.  Modulo bias is irrelevant at
  // the sample sizes used here and keeps the stream portable.
  uint64_t below(uint64_t n);
  long range(long lo, long hi);  // inclusive
  bool coin() { return (next() & 1) != 0; }

  // Random rational in [lo, hi] with denominator at most den_max.
  Rational rational(const Rational& lo, const Rational& hi, long den_max);

  // Independent deterministic substream; forking never perturbs the
  // parent stream.
  Rng fork(uint64_t stream) const;

 private:
  uint64_t state_;
};

}  // namespace stripecover

#endif  // STRIPECOVER_RNG_H_
