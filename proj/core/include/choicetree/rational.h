// Copyright 2026 The choicetree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOICETREE_RATIONAL_H_
#define CHOICETREE_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace choicetree {

// All utilities, probabilities and expectations are exact rationals.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-'); the result is canonical.
// Throws Error(kInvalidArgument) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest terms, "p/q", integers printed bare.
std::string format_rational(const Rational& value);

}  // namespace choicetree

#endif  // CHOICETREE_RATIONAL_H_
