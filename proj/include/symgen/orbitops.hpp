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
// Density-controlled subset selection and equivariant greedy partial
// injections: the toolkit for moving data around an orbit.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symgen/indexset.hpp"
#include "symgen/rational.hpp"
#include "symgen/sequence.hpp"

namespace symgen {

struct SelectionParams {
  Rat t1, t2;
  Rat beta1, beta2;       // interior thirds of (t1, t2)
  std::int64_t block_n;   // marker spacing actually used
};

// Equivariant subset J of I with s_low(J) >= t1 * s_low(I) and
// s_low(I \ J) >= (1 - t2) * s_low(I); the aperiodic parameter y supplies
// the marker that breaks any periodicity of I. Guarantees are exact
// rational inequalities when y and I are both exact.
IndexSet select_subset(const Sequence& y, const IndexSet& I, const Rat& t1,
                       const Rat& t2, SelectionParams* params_out = nullptr);

// Same with uniform densities s*.
IndexSet select_subset_uniform(const Sequence& y, const IndexSet& I, const Rat& t1,
                               const Rat& t2, SelectionParams* params_out = nullptr);

// The r_n bounds of the disjoint-family induction, exposed for audits:
// feasible interval (lo_n, hi_n) and the chosen r_n^- < r_n^+ inside it.
struct FamilyStage {
  Rat lo, hi, r_minus, r_plus;
};
std::vector<FamilyStage> disjoint_family_bounds(const std::vector<Rat>& t);

// Pairwise disjoint J_n subseteq I with s*_low(J_n) >= t_n * s*_low(I),
// for sum t_n < 1 with margin.
std::vector<IndexSet> select_disjoint_family(const Sequence& y, const IndexSet& I,
                                             const std::vector<Rat>& t);

struct PartialInjection {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // sorted by domain point
  std::vector<std::int64_t> unassigned;  // domain points left free (boundary)
  std::optional<std::int64_t> displacement_bound;
  std::int64_t range_lo = 0, range_hi = 0;  // inspected range

  // Present when the injection stabilized to an exact periodic pattern:
  // f(i + period) = f(i) + period everywhere.
  std::optional<std::int64_t> period;
  std::optional<Rat> exact_domain_density;  // per-period count / period

  // Present on exact eventually periodic inputs: the assignment is
  // left/right-periodic outside [stable_core_lo, stable_core_hi), and
  // `pairs` faithfully covers [stable_lo, stable_hi).
  std::optional<std::int64_t> left_period, right_period;
  std::int64_t stable_core_lo = 0, stable_core_hi = 0;
  std::int64_t stable_lo = 0, stable_hi = 0;

  bool injective() const;
  std::optional<std::int64_t> image_of(std::int64_t i) const;
  std::vector<std::int64_t> image_points() const;
};

// Stage-k greedy matching: at stage k assign every still-free i in I to
// i + k when that point of J is free. With s_cap, J is first shrunk via
// select_subset so the image density stays below the cap. When lower_variant
// is set the precondition uses lower densities instead of upper ones.
PartialInjection greedy_injection(const Sequence& y, const IndexSet& I, const IndexSet& J,
                                  std::int64_t lo, std::int64_t hi,
                                  std::optional<Rat> s_cap = std::nullopt,
                                  bool lower_variant = false);

// Uniform-density variant: requires s*_high(I) < s*_low(J), yields bounded
// displacement, and preserves uniform densities exactly on periodic
// indicators.
PartialInjection greedy_injection_uniform(const Sequence& y, const IndexSet& I,
                                          const IndexSet& J, std::int64_t lo,
                                          std::int64_t hi);

}  // namespace symgen
