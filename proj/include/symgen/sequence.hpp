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
#include <string>
#include <variant>
#include <vector>

namespace symgen {

// Symbols are indices into an Alphabet. The token order is total and fixed;
// it is what lexicographic tie-breaking refers to throughout the library.
using Sym = std::int32_t;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet binary();                 // {"0", "1"}
  static Alphabet indexed(int n);           // {"0", "1", ..., "n-1"}
  // Truncated countable alphabet: {"1", ..., "n"} plus a reserved overflow
  // token "*" as the last symbol.
  static Alphabet truncated(int n);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(Sym s) const { return tokens_.at(s); }
  Sym index_of(const std::string& token) const;  // throws if unknown
  bool has(const std::string& token) const;
  const std::vector<std::string>& tokens() const { return tokens_; }
  bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

  // Bits of the fixed-width per-symbol code (0 for a one-symbol alphabet).
  int code_bits() const;

 private:
  std::vector<std::string> tokens_;
};

// A finite word placed on the integer line: symbols at [origin, origin+size).
struct Window {
  Alphabet alphabet;
  std::vector<Sym> data;
  std::int64_t origin = 0;

  std::int64_t lo() const { return origin; }
  std::int64_t hi() const { return origin + static_cast<std::int64_t>(data.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(data.size()); }
  Sym at(std::int64_t i) const;  // i must lie in [lo, hi)
  Window sub(std::int64_t a, std::int64_t b) const;  // [a, b) must be inside

  // Content shifted left by one: (Sx)_i = x_{i+1}, same origin, one shorter.
  Window shifted() const;

  // Least period of the content, scanning p = 1..size-1; nullopt if none
  // (period means data[i] == data[i+p] for all valid i).
  std::optional<std::int64_t> content_period() const;
  // Aperiodicity test used as a precondition: no period <= size/2.
  bool aperiodic_window() const;
};

Window make_window(const Alphabet& a, const std::string& chars, std::int64_t origin = 0);

// left_cycle^inf core right_cycle^inf. The left cycle repeats on
// (-inf, core_origin) aligned so one copy ends at core_origin-1; the right
// cycle repeats on [core_origin + |core|, inf).
struct EventuallyPeriodicSeq {
  Alphabet alphabet;
  std::vector<Sym> left_cycle;   // nonempty
  std::vector<Sym> core;         // may be empty
  std::vector<Sym> right_cycle;  // nonempty
  std::int64_t core_origin = 0;

  std::int64_t core_end() const { return core_origin + static_cast<std::int64_t>(core.size()); }
  Sym at(std::int64_t i) const;
  Window materialize(std::int64_t a, std::int64_t b) const;

  // Exact test: is the bi-infinite sequence periodic (some finite period)?
  bool periodic() const;
  EventuallyPeriodicSeq shifted() const;  // (Sx)_i = x_{i+1}

  // Canonical form: cycles reduced to least period, core trimmed against
  // both tails. Two descriptors of the same sequence normalize identically
  // up to cycle rotation anchored at the trimmed core.
  EventuallyPeriodicSeq normalized() const;

  void validate() const;  // throws std::invalid_argument on bad descriptor
};

EventuallyPeriodicSeq make_periodic(const Alphabet& a, const std::string& cycle);
EventuallyPeriodicSeq make_ep(const Alphabet& a, const std::string& left,
                              const std::string& core, const std::string& right,
                              std::int64_t core_origin = 0);

// One run per block index: a pure function n -> (symbol, run_length),
// deterministic and replayable. Defined on [0, horizon).
struct BlockScheduleSeq {
  Alphabet alphabet;
  std::function<std::pair<Sym, std::uint64_t>(std::uint64_t)> rule;
  std::int64_t horizon = 0;
  std::string descriptor;  // human-readable, round-trips through the CLI

  Window materialize_prefix(std::int64_t n) const;  // [0, min(n, horizon))
};

// Runs 0^1 1^2 0^4 1^8 ...: run n is symbol (n mod 2) repeated 2^n times.
// The canonical divergent fixture.
BlockScheduleSeq doubling_schedule(std::int64_t horizon);
// Alternating runs: len_0 = m0, len_{n+1} = ceil(len_n * num / den). A growth
// ratio slightly above one keeps the running averages oscillating while
// upcrossings still accumulate at desk scale.
BlockScheduleSeq geometric_alternating_schedule(std::int64_t horizon, std::int64_t m0,
                                                std::int64_t growth_num,
                                                std::int64_t growth_den);

using Sequence = std::variant<Window, EventuallyPeriodicSeq, BlockScheduleSeq>;

const Alphabet& sequence_alphabet(const Sequence& s);
// Materializes [a, b); for BlockScheduleSeq a must be >= 0.
Window sequence_materialize(const Sequence& s, std::int64_t a, std::int64_t b);
Sequence sequence_shifted(const Sequence& s);

}  // namespace symgen
