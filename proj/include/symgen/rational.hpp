// Copyright 2026 The symgen Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace symgen {

// Exact density arithmetic. All "exact" statistics in the library are
// carried as arbitrary-precision rationals; floating point appears only in
// empirical estimates and entropy values.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

double to_double(const Rat& r);

// num/den as "p/q" (or "p" when q == 1).
std::string rat_str(const Rat& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Exact midpoint of an open interval, used wherever a construction has a
// free choice inside a feasible interval.
inline Rat midpoint(const Rat& lo, const Rat& hi) { return (lo + hi) / 2; }

// floor(num/den) for nonnegative rationals.
BigInt floor_rat(const Rat& r);
BigInt ceil_rat(const Rat& r);

std::int64_t to_int64(const BigInt& v);

}  // namespace symgen
