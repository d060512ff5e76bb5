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
// The relative generator codec and the truncated-countable-alphabet
// generator built on top of it. Every encoder is paired with a decoder and
// every per-interval capacity claim is asserted at encode time.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgen/alloc.hpp"
#include "symgen/errors.hpp"
#include "symgen/indexset.hpp"
#include "symgen/orbitops.hpp"
#include "symgen/rational.hpp"
#include "symgen/sequence.hpp"
#include "symgen/typesct.hpp"

namespace symgen {

// Output cells over {1..Q} plus the two bracket symbols, placed on a subset
// of the line. kAbsent marks cells outside the carrier set I; kBlank cells
// are finalized to digit 1 before shipping.
struct BracketStream {
  static constexpr std::int32_t kAbsent = -9;
  static constexpr std::int32_t kBlank = 0;
  static constexpr std::int32_t kOpen = -1;
  static constexpr std::int32_t kClose = -2;

  std::int64_t origin = 0;
  int q = 2;
  std::vector<std::int32_t> cells;  // kAbsent / kBlank / kOpen / kClose / 1..Q

  std::int32_t at(std::int64_t i) const;
  void set(std::int64_t i, std::int32_t v);
};

struct KriegerOptions {
  bool toy_schedule = true;   // geometric level growth instead of the 4L^2/eps^4 recursion
  std::int64_t k = 1;         // block length of the statistics
  double delta_floor = 0.0;   // widen the ball (toy runs); 0 keeps the derived delta
  std::int64_t l0_cap = 0;    // 0: range/8
  int max_levels = 6;
};

// Everything the decoder needs. The manifest is authoritative; the paper
// recovers these from (P*, z) in the infinite setting, which plug-in
// estimates cannot reproduce at window scale.
struct KriegerManifest {
  int Q = 2;
  std::int64_t k = 1;
  std::int64_t range_lo = 0, range_hi = 0;
  double epsilon = 0, delta = 0;
  double h_rel = 0;          // plug-in h(x|z), bits
  double s_star_I = 0;
  std::int64_t L0 = 0;
  std::vector<std::int64_t> levels;  // L_1, L_2, ...
  Rat split_t1, split_t2;            // the I'/I'' selection parameters
  std::vector<Rat> leftover_t;       // disjoint-family parameters inside I''
  std::vector<double> p_star;        // joint k-block table (z-part major), quantized
  int d1 = 0, d2 = 0;                // base alphabet sizes (y, z)
};

struct RelativeEncodeResult {
  BracketStream w;
  KriegerManifest manifest;
  std::vector<std::int64_t> interior;  // y-positions guaranteed decodable
  std::int64_t intervals_encoded = 0;
  std::int64_t leftover_encoded = 0;
};

// The full relative pipeline: parameter derivation, I'/I'' split, good
// scales, marker-guided interval selection, per-interval rank coding with
// capacity asserts, and leftover injection coding.
RelativeEncodeResult relative_encode(const Window& y, const Window& z, const IndexSet& I,
                                     int Q, const KriegerOptions& opt = {});

// Exact inverse on the interior; returns recovered y symbols by position.
std::map<std::int64_t, Sym> relative_decode(const Window& z, const BracketStream& w,
                                            const IndexSet& I,
                                            const KriegerManifest& manifest);

// Bracket-symbol elimination for a finished stream: substitute the two
// reserved words for [ and ] in the carrier-cell word. Payload digit runs
// must avoid both words (checked; a collision is an encoder bug).
std::vector<int> reduce_bracket_alphabet(const BracketStream& w,
                                         const std::vector<int>& a_open,
                                         const std::vector<int>& a_close);
// Inverse: locate the reserved words and restore bracket cells.
BracketStream expand_bracket_alphabet(const std::vector<int>& tokens,
                                      const BracketStream& carrier_template,
                                      const std::vector<int>& a_open,
                                      const std::vector<int>& a_close);

struct InvariantDataResult {
  std::vector<std::uint8_t> stream_bits;  // over the carrier set, by cell order
  std::vector<std::int64_t> carrier;      // the carrier positions (I)
  std::size_t bits_encoded = 0;           // prefix of y_data that fit
  std::vector<Rat> family_t;              // 3^-n selection parameters used
};

// Writes bit n of y_data constantly on the n-th disjoint subset J_n of I;
// the decoder recomputes the J_n from (x, I) and reads one representative.
InvariantDataResult invariant_data_encode(const Sequence& x, const IndexSet& I,
                                          const std::vector<std::uint8_t>& y_data,
                                          std::size_t max_bits);
std::vector<std::uint8_t> invariant_data_decode(const Sequence& x, const IndexSet& I,
                                                const InvariantDataResult& layout);

struct CountableGenManifest {
  int Q = 4;
  int truncation = 1;              // named symbols
  std::int64_t range = 0;
  std::int64_t M = 0;
  Rat rho;                         // scaffold occupancy as measured
  Rat rho0;
  std::vector<Rat> rho_n;          // level budgets
  std::vector<Rat> freq_table;     // named symbol frequencies
  std::vector<KriegerManifest> level_manifests;
};

struct CountableGenResult {
  std::vector<int> w;  // symbols 1..Q over [0, range)
  CountableGenManifest manifest;
  std::vector<std::int64_t> interior;
};

// Scaffold + empirical-distribution header + per-level relative coding of
// the truncation tower. x must be a window over Alphabet::truncated(K).
CountableGenResult countable_generator_encode(const Window& x, int Q,
                                              const KriegerOptions& opt = {});
// Recovers the truncated view of x on the interior.
std::map<std::int64_t, Sym> countable_generator_decode(const std::vector<int>& w,
                                                       const CountableGenManifest& m,
                                                       const KriegerOptions& opt = {});

}  // namespace symgen
