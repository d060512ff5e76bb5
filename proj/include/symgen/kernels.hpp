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
// Data-parallel inner loops. Each kernel has a serial reference
// implementation (the oracle in tests) and an OpenMP variant used by the
// library; bench/kernels_bench.cpp compares them.

#pragma once

#include <cstdint>
#include <vector>

#include "symgen/sequence.hpp"

namespace symgen::kernels {

// All start positions of `word` inside `text` (overlapping occurrences),
// relative to the start of `text`.
std::vector<std::int64_t> occurrences_serial(const std::vector<Sym>& text,
                                             const std::vector<Sym>& word);
std::vector<std::int64_t> occurrences(const std::vector<Sym>& text,
                                      const std::vector<Sym>& word);
// KMP scan, O(|text| + |word|); used when the word is long.
std::vector<std::int64_t> occurrences_kmp(const std::vector<Sym>& text,
                                          const std::vector<Sym>& word);

// Number of distinct length-n subwords, via 128-bit rolling hashes. With a
// truly adversarial input a hash collision could undercount by one; callers
// only use this to pick a search length, and verify the chosen word itself
// directly.
std::int64_t distinct_subword_count(const std::vector<Sym>& text, std::int64_t n);

// prefix[i] = number of ones among bits[0..i).
std::vector<std::int64_t> prefix_counts(const std::vector<std::uint8_t>& bits);

// For each start position i, the number of upcrossings of (a_num/den_a,
// b_num/den_b) by the running averages S_m = (#ones in bits[i..i+m)) / m,
// m = 1..N (clipped to the array end), capped at k_cap. Exact integer
// comparisons throughout.
std::vector<std::int32_t> upcross_counts_serial(const std::vector<std::uint8_t>& bits,
                                                std::int64_t a_num, std::int64_t a_den,
                                                std::int64_t b_num, std::int64_t b_den,
                                                std::int64_t N, std::int32_t k_cap);
std::vector<std::int32_t> upcross_counts(const std::vector<std::uint8_t>& bits,
                                         std::int64_t a_num, std::int64_t a_den,
                                         std::int64_t b_num, std::int64_t b_den,
                                         std::int64_t N, std::int32_t k_cap);

// For each start position, the time n of the k-th upcrossing (the least
// horizon with k upcrossings), or -1 when fewer than k occur within N.
std::vector<std::int64_t> upcross_kth_times_serial(const std::vector<std::uint8_t>& bits,
                                                   std::int64_t a_num, std::int64_t a_den,
                                                   std::int64_t b_num, std::int64_t b_den,
                                                   std::int64_t N, std::int32_t k);
std::vector<std::int64_t> upcross_kth_times(const std::vector<std::uint8_t>& bits,
                                            std::int64_t a_num, std::int64_t a_den,
                                            std::int64_t b_num, std::int64_t b_den,
                                            std::int64_t N, std::int32_t k);

// Extremes of #ones over every width-w window of bits.
std::pair<std::int64_t, std::int64_t> window_count_extremes_serial(
    const std::vector<std::uint8_t>& bits, std::int64_t w);
std::pair<std::int64_t, std::int64_t> window_count_extremes(
    const std::vector<std::uint8_t>& bits, std::int64_t w);

}  // namespace symgen::kernels
