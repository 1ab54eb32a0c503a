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

#ifndef STRIPECOVER_ERROR_H_
#define STRIPECOVER_ERROR_H_

#include <stdexcept>
#include <string>

namespace stripecover {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query point lies outside a declared bounded domain, or a value is
// requested where the object leaves it undefined (e.g. a step function
// at one of its cuts).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation precondition does not hold (unordered input to
// disjointify, transversal slope >= 1, empty radius schedule, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A type invariant fails at construction (breakpoints not increasing,
// zero denominator, overlapping cover intervals, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Supplied data contradicts itself (extension constant below the
// sampled Lipschitz constant).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A size or depth cap would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Input file does not match its schema.  The message names the
// offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace stripecover

#endif  // STRIPECOVER_ERROR_H_
