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

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "symgen/rational.hpp"
#include "symgen/sequence.hpp"

namespace symgen {

// Exact density bundle for subsets of Z in indicator form. The chain
// star_low <= s_low <= s_high <= star_high always holds.
struct ExactDensities {
  Rat s_low, s_high;        // lower/upper forward density (equal for EP indicators)
  Rat star_low, star_high;  // lower/upper uniform density
};

// Indicator of a subset of Z that is eventually periodic on both sides:
// left cycle on (-inf, core_origin), core, right cycle on [core_end, inf).
struct PeriodicIndicator {
  std::vector<std::uint8_t> left, core, right;  // left/right nonempty
  std::int64_t core_origin = 0;

  std::int64_t core_end() const { return core_origin + static_cast<std::int64_t>(core.size()); }
  bool at(std::int64_t i) const;
  bool empty() const;       // no ones anywhere
  bool full() const;        // all ones
  bool bounded_above() const;  // right cycle has no ones
  bool bounded_below() const;

  std::int64_t count(std::int64_t lo, std::int64_t hi) const;  // |I cap [lo,hi)|
  std::vector<std::int64_t> positions(std::int64_t lo, std::int64_t hi) const;
  std::optional<std::int64_t> next_one(std::int64_t i) const;  // least one >= i
  std::optional<std::int64_t> prev_one(std::int64_t i) const;  // greatest one <= i

  ExactDensities densities() const;
  Rat forward_density() const { return densities().s_low; }

  PeriodicIndicator shifted() const;  // S I = I - 1
  // Least-period cycles, tail-consistent core symbols absorbed.
  PeriodicIndicator reduced() const;
  // Exact set equality.
  bool equals(const PeriodicIndicator& o) const;

  static PeriodicIndicator empty_set();
  static PeriodicIndicator all();
  // Residue class {i : i mod m == r (mod m)}.
  static PeriodicIndicator residues(std::int64_t m, std::int64_t r);
  static PeriodicIndicator from_cycle(const std::vector<std::uint8_t>& cycle);
};

// Eventually periodic structure bounds used by the local-rule engine.
struct EpStructure {
  std::int64_t left_len = 1, right_len = 1;
  std::int64_t core_lo = 0, core_hi = 0;  // pure tails outside [core_lo, core_hi)
};

EpStructure structure_of(const PeriodicIndicator& p);
EpStructure structure_of(const EventuallyPeriodicSeq& s);
// lcm of cycle lengths, hull of cores widened by `radius`. Throws if the
// exact computation would exceed the desk-scale span cap.
EpStructure combine_structures(const std::vector<EpStructure>& in, std::int64_t radius);

// Builds the indicator whose value at i is value_at(i), given that value_at
// is left_len-periodic below core_lo and right_len-periodic above core_hi
// (i.e. it was produced by a radius-bounded local rule over inputs with this
// structure). The result is reduced.
PeriodicIndicator build_indicator(const EpStructure& st,
                                  const std::function<bool(std::int64_t)>& value_at);

// Sequence analogue of build_indicator: symbol_at must be periodic with the
// structure's tail lengths outside its core.
EventuallyPeriodicSeq build_ep_sequence(const EpStructure& st, const Alphabet& alphabet,
                                        const std::function<Sym(std::int64_t)>& symbol_at);

PeriodicIndicator ind_union(const PeriodicIndicator& a, const PeriodicIndicator& b);
PeriodicIndicator ind_intersect(const PeriodicIndicator& a, const PeriodicIndicator& b);
PeriodicIndicator ind_minus(const PeriodicIndicator& a, const PeriodicIndicator& b);
PeriodicIndicator ind_complement(const PeriodicIndicator& a);

// Finite subset of a host window [host_lo, host_hi).
struct FiniteIndexSet {
  std::int64_t host_lo = 0, host_hi = 0;
  std::vector<std::int64_t> points;  // strictly increasing, inside the host

  void validate() const;
};

// The universal currency of the selection/injection machinery: either a
// finite list relative to a host window (empirical statistics) or a periodic
// indicator (exact statistics).
class IndexSet {
 public:
  IndexSet() : rep_(FiniteIndexSet{}) {}
  explicit IndexSet(FiniteIndexSet f);
  explicit IndexSet(PeriodicIndicator p) : rep_(std::move(p)) {}

  static IndexSet finite(std::int64_t host_lo, std::int64_t host_hi,
                         std::vector<std::int64_t> points);

  bool exact() const { return std::holds_alternative<PeriodicIndicator>(rep_); }
  const PeriodicIndicator& indicator() const;  // throws if finite form
  const FiniteIndexSet& finite_form() const;   // throws if indicator form

  bool contains(std::int64_t i) const;
  std::int64_t count(std::int64_t lo, std::int64_t hi) const;
  std::vector<std::int64_t> positions(std::int64_t lo, std::int64_t hi) const;
  std::optional<std::int64_t> next(std::int64_t i) const;  // least element >= i
  bool empty_on(std::int64_t lo, std::int64_t hi) const { return count(lo, hi) == 0; }

  // The range on which the set is faithfully known: the host window for the
  // finite form, the requested fallback for indicators.
  std::pair<std::int64_t, std::int64_t> known_range(std::int64_t fallback_lo,
                                                    std::int64_t fallback_hi) const;

  IndexSet shifted() const;

  // Exact densities (indicator form only).
  ExactDensities exact_densities() const;
  // Empirical forward density over [lo, hi).
  Rat empirical_density(std::int64_t lo, std::int64_t hi) const;
  // Empirical uniform densities: extremes of window counts at width w.
  std::pair<Rat, Rat> empirical_uniform(std::int64_t lo, std::int64_t hi,
                                        std::int64_t w) const;

 private:
  std::variant<FiniteIndexSet, PeriodicIndicator> rep_;
};

// Set algebra. Exact when both operands are exact; otherwise materialized
// over the intersection of known ranges.
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_minus(const IndexSet& a, const IndexSet& b);
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);

}  // namespace symgen
