// Copyright 2026 The tsplift Authors
//
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

#ifndef TSPLIFT_RATIONAL_HPP
#define TSPLIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tsplift {

// All arithmetic in this project is exact. No floating point enters any
// computation; decimals appear only as display annotations.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or "-p/q" (arbitrary precision). Throws InputError on
/// anything else, including q = 0.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering; integers render without the "/1".
std::string rational_to_string(const Rational& r);

/// Truncated decimal rendering with `digits` places, for report annotations
/// only. Deterministic (round toward zero).
std::string rational_to_decimal(const Rational& r, int digits = 12);

/// Exact sum of a vector of rationals.
Rational rational_sum(const std::vector<Rational>& values);

}  // namespace tsplift

#endif  // TSPLIFT_RATIONAL_HPP
