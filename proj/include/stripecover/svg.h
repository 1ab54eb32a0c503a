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

#ifndef STRIPECOVER_SVG_H_
#define STRIPECOVER_SVG_H_

#include <string>
#include <vector>

#include "stripecover/projections.h"
#include "stripecover/stripes.h"

namespace stripecover {

// Passive figures: deterministic text output, one file per call.

// Curves of an arrangement with their stripes as translucent bands,
// drawn over the given parameter window.
std::string svg_arrangement(const Arrangement& a, const Interval& window);

// Bare curves (e.g. before/after uncrossing).
std::string svg_curves(const std::vector<PLFunction>& curves,
                       const Interval& window);

// Square set (Cantor iterates).
std::string svg_squares(const SquareSet& s);

void save_text(const std::string& text, const std::string& file);

}  // namespace stripecover

#endif  // STRIPECOVER_SVG_H_
