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
// Allocations: injective (position, bit-index) -> position maps built from
// omega-covers, and the two-set encoder/decoder they induce. The engine
// behind every generator pipeline.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgen/errors.hpp"
#include "symgen/indexset.hpp"
#include "symgen/orbitops.hpp"
#include "symgen/sequence.hpp"

namespace symgen {

// The static name of position i: the fixed-width per-symbol codes of the
// next ceil(B / code_bits) symbols, truncated to B bits. Recovering every
// name recovers the sequence content.
std::vector<std::uint8_t> static_name(const Window& x, std::int64_t i, int bits);
// Number of symbols a B-bit name reads.
std::int64_t static_name_span(const Alphabet& a, int bits);

struct OmegaCoverDesc {
  std::vector<IndexSet> sets;
  // Optional grouping for condition (b): group_of[i] is the group of set i;
  // empty means ungrouped (condition (a)).
  std::vector<int> group_of;
};

struct CertificateReport {
  bool pass = false;
  bool exact = false;
  Rat total;     // sum of upper densities (a) or the grouped sum (b)
  Rat sup_star;  // sup of uniform upper densities (b)
  std::string detail;
};

// Condition (a): sum of upper densities below one.
CertificateReport check_condition_a(const OmegaCoverDesc& cover, std::int64_t lo,
                                    std::int64_t hi);
// Condition (b): within-group disjointness plus the grouped uniform bound.
CertificateReport check_condition_b(const OmegaCoverDesc& cover, std::int64_t lo,
                                    std::int64_t hi);

struct AllocationStageReport {
  std::size_t set_index = 0;
  Rat cap;            // the density cap s_i (condition (a) only)
  Rat free_density;   // lower density of the remaining free set afterwards
};

// F(n, j) = f_{i(n,j)}(n) where i(n, j) is the j-th set containing n and
// the f_i are greedy injections into the still-free positions.
struct Allocation {
  OmegaCoverDesc cover;
  std::vector<PartialInjection> injections;
  int bits = 0;
  std::int64_t range_lo = 0, range_hi = 0;
  bool grouped = false;
  std::vector<AllocationStageReport> stages;

  // The j-th (0-based) set index containing n, in input order.
  std::optional<std::size_t> set_index_of(std::int64_t n, int j) const;
  std::optional<std::int64_t> position(std::int64_t n, int j) const;  // F(n, j)
  // Positions in [lo, hi) whose B name bits all route.
  std::vector<std::int64_t> covered_positions() const;
};

Allocation build_allocation_a(const Sequence& y, const OmegaCoverDesc& cover, int bits,
                              std::int64_t lo, std::int64_t hi);
Allocation build_allocation_b(const Sequence& y, const OmegaCoverDesc& cover, int bits,
                              std::int64_t lo, std::int64_t hi);

// Output symbol stream over {0,1} on [origin, origin + bits.size()).
struct CodeStream {
  std::vector<std::uint8_t> bits;
  std::int64_t origin = 0;
};

struct AllocEncodeResult {
  CodeStream stream;
  std::vector<std::int64_t> covered;    // fully routed positions
  std::vector<std::int64_t> shortfall;  // positions with unroutable name bits
};

// Writes bit j of the static name of every coverable position i at
// F(i, j); unused output cells stay zero.
AllocEncodeResult encode_with_allocation(const Window& x, const Allocation& alloc);

// name(i)_j = w[F(i, j)]; exact inverse of encode on covered positions.
std::map<std::int64_t, std::vector<std::uint8_t>> decode_with_allocation(
    const CodeStream& w, const Allocation& alloc);

}  // namespace symgen
