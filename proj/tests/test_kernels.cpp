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
// The OpenMP kernels must agree with their serial references bit for bit.

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "symgen/kernels.hpp"

using namespace symgen;

namespace {

std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::int64_t n, double p) {
  std::bernoulli_distribution d(p);
  std::vector<std::uint8_t> bits;
  for (std::int64_t i = 0; i < n; ++i) bits.push_back(d(rng) ? 1 : 0);
  return bits;
}

}  // namespace

TEST_CASE("parallel occurrence scan equals serial") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> b(0, 1);
  std::vector<Sym> text, word;
  for (int i = 0; i < 100000; ++i) text.push_back(b(rng));
  for (int i = 0; i < 4; ++i) word.push_back(b(rng));
  CHECK(kernels::occurrences(text, word) == kernels::occurrences_serial(text, word));
}

TEST_CASE("parallel upcross counts equal serial") {
  std::mt19937_64 rng(43);
  for (double p : {0.2, 0.5}) {
    auto bits = random_bits(rng, 50000, p);
    auto par = kernels::upcross_counts(bits, 2, 5, 3, 5, 500, 10);
    auto ser = kernels::upcross_counts_serial(bits, 2, 5, 3, 5, 500, 10);
    CHECK(par == ser);
  }
  std::vector<std::uint8_t> tiny{1, 0, 0, 1, 1, 1, 0};
  CHECK(kernels::upcross_counts(tiny, 1, 3, 2, 3, 7, 5) ==
        kernels::upcross_counts_serial(tiny, 1, 3, 2, 3, 7, 5));
  CHECK_THROWS_AS(kernels::upcross_counts(tiny, 2, 3, 1, 3, 7, 5), std::invalid_argument);
}

TEST_CASE("upcross counting against a hand trace") {
  // Ones then zeros: the running average starts at 1 and decays; with
  // a=0.4, b=0.6 there is exactly one dip-and-recover in this trace.
  std::vector<std::uint8_t> bits{0, 0, 0, 1, 1, 1, 1, 1, 1};
  auto c = kernels::upcross_counts_serial(bits, 2, 5, 3, 5, 9, 10);
  CHECK(c[0] == 1);  // S_1..S_3 = 0 < 0.4, then S_9 = 6/9 > 0.6
  std::vector<std::uint8_t> allOnes(16, 1);
  auto c1 = kernels::upcross_counts_serial(allOnes, 2, 5, 3, 5, 16, 10);
  CHECK(c1[0] == 0);  // never below a
}

TEST_CASE("parallel window extremes equal serial") {
  std::mt19937_64 rng(47);
  auto bits = random_bits(rng, 60000, 0.3);
  for (std::int64_t w : {7, 64, 1000}) {
    auto a = kernels::window_count_extremes(bits, w);
    auto b = kernels::window_count_extremes_serial(bits, w);
    CHECK(a == b);
  }
  CHECK_THROWS_AS(kernels::window_count_extremes(bits, 0), std::invalid_argument);
}
