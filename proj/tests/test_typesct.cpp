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

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "symgen/typesct.hpp"

using namespace symgen;

TEST_CASE("type_of basics") {
  auto bin = Alphabet::binary();
  auto t = type_of(make_window(bin, "0011"));
  CHECK(t.probs[0] == Rat(1, 2));
  CHECK(t.probs[1] == Rat(1, 2));
  Alphabet ab({"a", "b"});
  auto t2 = type_of(make_window(ab, "aaab"));
  CHECK(t2.probs[0] == Rat(3, 4));
  CHECK(t2.probs[1] == Rat(1, 4));

  std::mt19937_64 rng(5);
  Window w{bin, {}, 0};
  std::bernoulli_distribution d(0.37);
  std::int64_t ones = 0;
  for (int i = 0; i < 1000; ++i) {
    w.data.push_back(d(rng) ? 1 : 0);
    ones += w.data.back();
  }
  auto t3 = type_of(w);
  CHECK(t3.probs[1] == Rat(ones, 1000));
}

TEST_CASE("type_class_size hand cases") {
  EmpiricalDistribution half{{Rat(1, 2), Rat(1, 2)}, 4};
  auto info = type_class_size(half, 2);
  CHECK(info.exact == 6);  // C(4,2)
  CHECK(info.log2_upper == doctest::Approx(4.0));
  CHECK(info.log2_lower == doctest::Approx(4.0 - 2 * std::log2(5.0)));

  EmpiricalDistribution degen{{Rat(1), Rat(0)}, 3};
  auto d = type_class_size(degen, 2);
  CHECK(d.exact == 1);
  CHECK(d.nH == doctest::Approx(0.0));
  CHECK_THROWS_AS(type_class_size(EmpiricalDistribution{{Rat(1, 3), Rat(2, 3)}, 4}, 2),
                  std::invalid_argument);
}

TEST_CASE("type theorem exhaustive for n <= 12 and |D| <= 3") {
  // Enumerate D^n, bucket by type, and check the multinomial and both
  // bounds for every observed type.
  for (int d = 2; d <= 3; ++d) {
    for (std::int64_t n = 1; n <= (d == 2 ? 12 : 9); ++n) {
      std::map<std::vector<std::int64_t>, std::int64_t> buckets;
      std::int64_t total = 1;
      for (std::int64_t i = 0; i < n; ++i) total *= d;
      for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> counts(d, 0);
        std::int64_t v = code;
        for (std::int64_t i = 0; i < n; ++i) {
          counts[v % d]++;
          v /= d;
        }
        buckets[counts]++;
      }
      CHECK(BigInt(static_cast<std::int64_t>(buckets.size())) == count_types(n, d));
      for (const auto& [counts, size] : buckets) {
        EmpiricalDistribution P;
        P.sample_n = n;
        for (auto c : counts) P.probs.emplace_back(c, n);
        auto info = type_class_size(P, d);
        CHECK(info.exact == size);
      }
    }
  }
}

TEST_CASE("count_types hand cases") {
  CHECK(count_types(4, 2) == 5);
  CHECK(count_types(1, 5) == 5);
  // Exhaustive vs closed form for n <= 20, d <= 4 happens in the acceptance
  // suite; spot-check one here.
  CHECK(count_types(6, 3) == 28);
}

TEST_CASE("count_entropy_bounded") {
  // Vacuous threshold: every word qualifies.
  auto all = count_entropy_bounded(6, 2, 1.5);
  CHECK(all.exact == 64);
  // Tiny threshold: only the two constant words.
  auto constants = count_entropy_bounded(8, 2, 1e-6);
  CHECK(constants.exact == 2);
  auto mid = count_entropy_bounded(8, 2, 0.5);
  CHECK(mid.exact_available);
  CHECK(to_double(Rat(mid.exact)) <= std::pow(2.0, mid.log2_bound) + 1e-9);
  CHECK_THROWS_AS(count_entropy_bounded(100, 2, 0.5), std::invalid_argument);
  auto bound_only = count_entropy_bounded(100, 2, 0.5, true);
  CHECK_FALSE(bound_only.exact_available);
}

TEST_CASE("derive_delta") {
  JointDistribution uni{2, 2, {0.25, 0.25, 0.25, 0.25}};
  auto p = derive_delta(uni, 0.2, 1, 2, 2);
  CHECK(p.delta0 <= 0.1 + 1e-12);  // the merge term (eps/2)/log2(2)
  CHECK(p.delta == doctest::Approx(0.2 * p.delta0 / 3));

  // Degenerate second alphabet: conditional entropy is identically zero and
  // only the support/merge terms bind.
  JointDistribution single{2, 1, {0.5, 0.5}};
  auto q = derive_delta(single, 0.2, 1, 2, 1);
  CHECK(q.delta0 > 0);

  // Random audit: distributions within delta0 keep support and move
  // conditional entropies by less than eps/2.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double H = uni.cond_entropy_2_given_1();
  for (int trial = 0; trial < 1000; ++trial) {
    JointDistribution Q = uni;
    double shift = 0;
    for (std::size_t i = 0; i + 1 < Q.p.size(); ++i) {
      double e = u(rng) * p.delta0 / 8;
      Q.p[i] += e;
      shift -= e;
    }
    Q.p.back() += shift;
    if (l1_distance(Q.p, uni.p) >= p.delta0) continue;
    bool neg = false;
    for (double v : Q.p) neg = neg || v < 0;
    if (neg) continue;
    CHECK(std::abs(Q.cond_entropy_2_given_1() - H) < 0.1 + 1e-9);
  }
}

TEST_CASE("relative_type_bound enumerations") {
  std::mt19937_64 rng(13);
  // Deterministic coupling z = y: conditional entropy 0, so the count is
  // dominated by the polynomial factor.
  {
    std::vector<Sym> y(10);
    for (auto& s : y) s = static_cast<Sym>(rng() % 2);
    std::vector<Sym> z = y;
    auto P = joint_type_of(y, z, 2, 2, 1);
    auto params = derive_delta(P, 0.3, 1, 2, 2);
    auto b = relative_type_bound(params, y, {});
    REQUIRE(b.exact_available);
    CHECK(b.exact >= 1);  // the true z qualifies
    CHECK(to_double(Rat(b.exact)) <= std::pow(2.0, b.log2_bound) + 1e-9);
  }
  // Singleton second alphabet: exactly one candidate.
  {
    std::vector<Sym> y(8, 0);
    std::vector<Sym> z(8, 0);
    auto P = joint_type_of(y, z, 2, 1, 1);
    auto params = derive_delta(P, 0.3, 1, 2, 1);
    auto b = relative_type_bound(params, y, {});
    REQUIRE(b.exact_available);
    CHECK(b.exact == 1);
  }
  // Interval constraints: uniform P over 2x2, one interval of length 4.
  {
    std::vector<Sym> y{0, 1, 0, 1, 1, 0, 1, 0};
    std::vector<Sym> z{0, 0, 1, 1, 0, 1, 0, 1};
    auto P = joint_type_of(y, z, 2, 2, 1);
    auto params = derive_delta(P, 0.4, 1, 2, 2);
    auto b = relative_type_bound(params, y, {{0, 4}});
    REQUIRE(b.exact_available);
    CHECK(to_double(Rat(b.exact)) <= std::pow(2.0, b.log2_bound) + 1e-9);
    CHECK(b.j_size == 4);
  }
  {
    // J empty: |J| > eps n fails.
    std::vector<Sym> y0(8, 0), z0(8, 0);
    auto P0 = joint_type_of(y0, z0, 2, 2, 1);
    auto params0 = derive_delta(P0, 0.3, 1, 2, 2);
    std::vector<std::pair<std::int64_t, std::int64_t>> whole{{0, 8}};
    CHECK_THROWS_AS(relative_type_bound(params0, y0, whole), std::invalid_argument);
  }
}

TEST_CASE("relative_type_bound_blocks") {
  std::mt19937_64 rng(17);
  std::vector<Sym> y(12), z(12);
  for (auto& s : y) s = static_cast<Sym>(rng() % 2);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = y[i] ^ static_cast<Sym>(rng() % 2);
  auto P2 = joint_type_of(y, z, 2, 2, 2);
  auto params2 = derive_delta(P2, 0.5, 2, 2, 2);
  auto b2 = relative_type_bound_blocks(params2, y, {});
  REQUIRE(b2.exact_available);
  CHECK(to_double(Rat(b2.exact)) <= std::pow(2.0, b2.log2_bound) + 1e-9);

  // k = 1 must agree with the plain version.
  auto P1 = joint_type_of(y, z, 2, 2, 1);
  auto params1 = derive_delta(P1, 0.5, 1, 2, 2);
  auto plain = relative_type_bound(params1, y, {});
  auto viaBlocks = relative_type_bound_blocks(params1, y, {});
  CHECK(plain.exact == viaBlocks.exact);

  // Slack violation: interval too short for the eps/4 margin.
  CHECK_THROWS_AS(relative_type_bound_blocks(params2, y, {{0, 2}}),
                  std::invalid_argument);
}

TEST_CASE("randomized relative type bounds hold") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 6 + static_cast<std::int64_t>(rng() % 5);
    std::vector<Sym> y(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
    for (auto& s : y) s = static_cast<Sym>(rng() % 2);
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] = (rng() % 4 == 0) ? static_cast<Sym>(rng() % 2) : y[i];
    auto P = joint_type_of(y, z, 2, 2, 1);
    auto params = derive_delta(P, 0.25 + 0.1 * static_cast<double>(rng() % 4), 1, 2, 2);
    auto b = relative_type_bound(params, y, {});
    REQUIRE(b.exact_available);
    CHECK(to_double(Rat(b.exact)) <= std::pow(2.0, b.log2_bound) + 1e-9);
  }
}
