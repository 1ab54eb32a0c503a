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

#ifndef STRIPECOVER_VERIFY_H_
#define STRIPECOVER_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace stripecover {

// One cell of the verification campaign.  detail is a short
// deterministic summary (witness on failure).
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Number of criteria in the campaign.
int criterion_count();

// Runs one criterion (1-based) with its own substream of the seed.
CriterionResult run_criterion(int id, uint64_t seed);

// Runs all criteria, possibly in parallel (threads <= 0 picks the
// STRIPECOVER_THREADS cap or the hardware count).  Results are ordered
// by id regardless of scheduling.
std::vector<CriterionResult> run_all(uint64_t seed, int threads = 0);

// CSV report: header records the seed, one line per criterion.
std::string verify_csv(const std::vector<CriterionResult>& results,
                       uint64_t seed);

}  // namespace stripecover

#endif  // STRIPECOVER_VERIFY_H_
