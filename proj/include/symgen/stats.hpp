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
#include <vector>

#include "symgen/indexset.hpp"
#include "symgen/rational.hpp"
#include "symgen/sequence.hpp"

namespace symgen {

// Word frequencies / subset densities. Estimates are stored as exact count
// ratios; `exact` says whether they are limits (eventually periodic input)
// or finite-sample statistics.
struct FreqStats {
  std::vector<std::pair<std::int64_t, Rat>> trace;  // (N, S_N), forward averages
  Rat s_low, s_high;
  Rat star_low, star_high;
  bool exact = false;
  std::int64_t sample_length = 0;  // inspected length when empirical
};

// All start positions of `a` fully inside `x` (overlapping occurrences).
struct OccurrenceResult {
  std::int64_t count = 0;
  IndexSet positions;
};
OccurrenceResult count_occurrences(const Window& x, const Window& a);

// Exact occurrence indicator of a word in an eventually periodic sequence.
PeriodicIndicator ep_occurrences(const EventuallyPeriodicSeq& x,
                                 const std::vector<Sym>& word);

// Frequencies of a word in a sequence. For eventually periodic inputs all
// four densities are exact; for windows and block schedules they are
// empirical over the materialized range, with S_N reported on the grid.
FreqStats freq_stats(const Sequence& x, const std::vector<Sym>& word,
                     const std::vector<std::int64_t>& n_grid);
// Densities of an index set, same convention.
FreqStats freq_stats(const IndexSet& A, const std::vector<std::int64_t>& n_grid);

// k-th higher block code: output symbol i is x_i ... x_{i+k-1}.
Window higher_block(const Window& x, std::int64_t k);

// H(P_x) of a window, base-2.
double empirical_entropy(const Window& x);
// H-tilde of a sub-probability vector: the missing mass 1 - sum is treated
// as one extra atom. Entries must be nonnegative with sum <= 1 (+eps).
double empirical_entropy(const std::vector<double>& freqs);
double entropy_of_distribution(const std::vector<double>& probs);  // plain H

// Plug-in entropy rate estimate (1/k) H(P_{x^(k)}).
double block_entropy_rate(const Window& x, std::int64_t k);

enum class Regime { kNull, kDivergent, kPositiveRegular, kInconclusive };

struct RegimeReport {
  Regime verdict = Regime::kInconclusive;
  bool exact = false;
  std::vector<std::pair<std::int64_t, Rat>> trace;  // the S_N evidence
  Rat density;                                      // exact case only
};

// Exact verdict on eventually periodic inputs; heuristic (tau-thresholded
// oscillation test over the N grid) otherwise. The S_N trace ships with the
// verdict so callers can audit it.
RegimeReport classify_regime(const Sequence& x, const IndexSet& A,
                             const std::vector<std::int64_t>& n_grid, double tau);

}  // namespace symgen
