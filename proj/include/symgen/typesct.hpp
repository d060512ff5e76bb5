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
//
// Method-of-types toolkit: type classes, counting bounds, and the relative
// type estimates that power the relative generator codec.

#pragma once

#include <cstdint>
#include <vector>

#include "symgen/rational.hpp"
#include "symgen/sequence.hpp"

namespace symgen {

struct EmpiricalDistribution {
  std::vector<Rat> probs;       // indexed by symbol, sums to one
  std::int64_t sample_n = 0;    // denominator when derived from a word

  void validate() const;
};

EmpiricalDistribution type_of(const Window& x);

// l1 distance between distributions (padded with zeros to equal size).
double l1_distance(const std::vector<double>& p, const std::vector<double>& q);

struct TypeClassInfo {
  BigInt exact;               // multinomial coefficient
  double log2_lower, log2_upper;  // the two bounds, in log2
  double nH;                  // n * H(P)
};
// Exact type class size with the standard sandwich
// 2^{nH}/(n+1)^{|Delta|} <= |T| <= 2^{nH}; both bounds are asserted.
TypeClassInfo type_class_size(const EmpiricalDistribution& P, int alphabet_size);

// Number of n-types over an alphabet of size d: C(n+d-1, d-1), together
// with the coarse bound (n+1)^d which it never exceeds.
BigInt count_types(std::int64_t n, int d);

struct EntropyBoundedCount {
  bool exact_available = false;
  BigInt exact;
  double log2_bound;  // log2((n+1)^d * 2^{nh})
};
// #{x in Delta^n : H(P_x) < h}; exact by enumeration while d^n stays below
// the cap, bound-only above it.
EntropyBoundedCount count_entropy_bounded(std::int64_t n, int d, double h,
                                          bool bound_only = false);

// Joint distribution on a product alphabet (rows: first component).
struct JointDistribution {
  int d1 = 0, d2 = 0;
  std::vector<double> p;  // row-major, d1*d2 entries summing to one

  double at(int a, int b) const { return p[static_cast<std::size_t>(a) * d2 + b]; }
  std::vector<double> marginal1() const;
  double cond_entropy_2_given_1() const;  // H(xi2 | xi1), base 2
  void validate() const;
};

JointDistribution joint_type_of(const std::vector<Sym>& y, const std::vector<Sym>& z,
                                int d1, int d2, std::int64_t k);

struct RelativeTypeParams {
  double epsilon = 0;
  double delta0 = 0;
  double delta = 0;  // = epsilon * delta0 / 3
  std::int64_t k = 1;
  JointDistribution P;  // over the k-block product alphabet
  int base_d1 = 0, base_d2 = 0;
};

// delta0 from a certified entropy-continuity modulus: small enough that any
// Q within delta0 of P keeps the first-component support and moves every
// conditional entropy by less than epsilon/2, and k*delta0*log2|Delta2| stays
// below epsilon/2.
RelativeTypeParams derive_delta(const JointDistribution& P, double epsilon,
                                std::int64_t k, int base_d1, int base_d2);

struct RelativeTypeBound {
  double log2_bound;             // log2((n+1)^{d1 d2} 2^{|J|(H+eps)})
  double log2_bound_simplified;  // without the polynomial factor
  bool exact_available = false;
  BigInt exact;                  // enumerated count when feasible
  std::int64_t j_size = 0;
};

// Bound (and small-n exact count) for the number of second components z
// such that (y, z) matches P within delta globally and on each interval.
RelativeTypeBound relative_type_bound(const RelativeTypeParams& params,
                                      const std::vector<Sym>& y,
                                      const std::vector<std::pair<std::int64_t, std::int64_t>>&
                                          intervals);

// Higher-block version: constraints on k-block empirical distributions,
// exponent (1/k) H + eps; intervals must have length at least 4k/epsilon.
RelativeTypeBound relative_type_bound_blocks(
    const RelativeTypeParams& params, const std::vector<Sym>& y,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals);

}  // namespace symgen
