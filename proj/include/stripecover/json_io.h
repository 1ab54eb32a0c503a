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

#ifndef STRIPECOVER_JSON_IO_H_
#define STRIPECOVER_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "stripecover/extension.h"
#include "stripecover/null1d.h"
#include "stripecover/pl_function.h"
#include "stripecover/projections.h"
#include "stripecover/stripes.h"

namespace stripecover {

// Scalars travel as ["num","den"] pairs of decimal strings; a bare
// integer is also accepted on input.  Structures mirror the library
// types one to one.  Parsers throw ParseError naming the offending
// field path; serializers are exact round-trips.

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j,
                            const std::string& path = "rational");

Json to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j, const std::string& path = "plfunction");

Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j,
                                  const std::string& path = "arrangement");

Json to_json(const SampleSet& s);
SampleSet samples_from_json(const Json& j, const std::string& path = "samples");

Json to_json(const OpenCover1D& c);
OpenCover1D cover_from_json(const Json& j, const std::string& path = "cover");

Json to_json(const StepFunction& s);
StepFunction step_from_json(const Json& j, const std::string& path = "step");

Json to_json(const Measure1D& m);
Measure1D measure_from_json(const Json& j, const std::string& path = "measure");

Json to_json(const SquareSet& s);
SquareSet squares_from_json(const Json& j, const std::string& path = "squares");

Json to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j,
                                    const std::string& path = "points");

// File helpers; ParseError on malformed JSON or schema violations.
Json load_json(const std::string& file);
void save_json(const Json& j, const std::string& file);

}  // namespace stripecover

#endif  // STRIPECOVER_JSON_IO_H_
