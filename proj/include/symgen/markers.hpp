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
#include "symgen/stats.hpp"

namespace symgen {

// Marks that are N-separated (consecutive gaps >= N) and (N+1)-dense
// (gaps <= N+1).
struct MarkerSeq {
  std::int64_t n = 0;
  IndexSet positions;
  bool aperiodic = false;
  bool exact = false;  // indicator form with exact statistics
};

// The lexicographically least word of the least length n with more than
// 1/eps distinct n-subwords, among those occurring in x with lower
// frequency < eps. Exact frequencies on eventually periodic inputs,
// plain window frequencies otherwise.
Window low_freq_word(const Sequence& x, const Rat& eps);

// Marker pipeline: rare word -> occurrence set -> N^2-thinning -> unbounded
// extension by arithmetic progressions of step N^2 -> gap fill via the
// representation L = m*N + n*(N+1) with n < N.
MarkerSeq n_marker(const Sequence& x, std::int64_t N);

// Aperiodicity-preserving variant: start the pipeline at 2N^2, break any
// periodicity of the marks, then replace each inter-mark block by
// 1 (0^{N-1} 1)^{k1} (0^N 1)^{k2} with k2 minimal and k1, k2 >= 1.
MarkerSeq aperiodic_marker(const Sequence& x, std::int64_t N);

// Deterministic N-marker for scales where no sufficiently rare word can
// exist in the sample (N^2 above the window span). Anchors marks at local
// lexicographic minima of the content. Window inputs only; used by the
// relative generator machinery, which only needs determinism.
MarkerSeq scale_marker(const Window& x, std::int64_t N);

// L = m*N + n*(N+1) with 0 <= n < N; requires L >= N^2 - 1.
std::pair<std::int64_t, std::int64_t> gap_fill_mn(std::int64_t L, std::int64_t N);

// Minimal k2 >= 1 with k1*N + k2*(N+1) = gap and k1 >= 1; throws when the
// gap is too small (below 2N^2 feasibility is not guaranteed).
std::pair<std::int64_t, std::int64_t> block_replacement_counts(std::int64_t gap,
                                                               std::int64_t N);

// Gap check: consecutive differences all in {N, N+1}.
bool is_n_marker(const std::vector<std::int64_t>& marks, std::int64_t N);

// Consecutive marker blocks [u_k, u_{k+1}) covering [lo, hi) as far as the
// marks allow.
std::vector<std::pair<std::int64_t, std::int64_t>> marker_blocks(
    const MarkerSeq& m, std::int64_t lo, std::int64_t hi);

}  // namespace symgen
