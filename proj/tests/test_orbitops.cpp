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

#include <random>

#include "doctest.h"
#include "symgen/orbitops.hpp"

using namespace symgen;

namespace {

EventuallyPeriodicSeq aperiodic_ep() {
  return make_ep(Alphabet::binary(), "0010011", "11011", "0010111", 0);
}

Window random_window(std::mt19937_64& rng, std::int64_t n, double p) {
  Window w;
  w.alphabet = Alphabet::binary();
  w.origin = 0;
  std::bernoulli_distribution d(p);
  for (std::int64_t i = 0; i < n; ++i) w.data.push_back(d(rng) ? 1 : 0);
  return w;
}

IndexSet random_periodic_set(std::mt19937_64& rng, std::int64_t period, double p) {
  std::bernoulli_distribution d(p);
  std::vector<std::uint8_t> cyc;
  bool any = false;
  for (std::int64_t i = 0; i < period; ++i) {
    cyc.push_back(d(rng) ? 1 : 0);
    any = any || cyc.back();
  }
  if (!any) cyc[0] = 1;
  return IndexSet(PeriodicIndicator::from_cycle(cyc));
}

}  // namespace

TEST_CASE("select_subset exact density floors on periodic inputs") {
  auto y = aperiodic_ep();
  IndexSet evens(PeriodicIndicator::residues(2, 0));
  auto J = select_subset(Sequence(y), evens, Rat(3, 10), Rat(7, 10));
  REQUIRE(J.exact());
  auto dI = evens.exact_densities();
  auto dJ = J.exact_densities();
  auto rest = set_minus(evens, J);
  auto dR = rest.exact_densities();
  CHECK(dJ.s_low >= Rat(3, 10) * dI.s_low);
  CHECK(dR.s_low >= (1 - Rat(7, 10)) * dI.s_low);
  // J really is a subset.
  CHECK(set_minus(J, evens).indicator().empty());

  CHECK_THROWS_AS(select_subset(Sequence(y), evens, Rat(1, 2), Rat(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("select_subset degenerate cases") {
  auto y = aperiodic_ep();
  IndexSet empty(PeriodicIndicator::empty_set());
  auto J = select_subset(Sequence(y), empty, Rat(1, 4), Rat(1, 2));
  CHECK(J.indicator().empty());

  // t1 = 0: the J floor is vacuous but the complement floor still binds.
  IndexSet evens(PeriodicIndicator::residues(2, 0));
  auto J0 = select_subset(Sequence(y), evens, Rat(0), Rat(1, 2));
  auto rest = set_minus(evens, J0);
  CHECK(rest.exact_densities().s_low >= Rat(1, 2) * evens.exact_densities().s_low);
}

TEST_CASE("select_subset_uniform exact floors") {
  auto y = aperiodic_ep();
  IndexSet full(PeriodicIndicator::all());
  auto J = select_subset_uniform(Sequence(y), full, Rat(1, 2), Rat(9, 10));
  CHECK(J.exact_densities().star_low >= Rat(1, 2));

  IndexSet thirds(PeriodicIndicator::residues(3, 0));
  auto J3 = select_subset_uniform(Sequence(y), thirds, Rat(1, 2), Rat(9, 10));
  CHECK(J3.exact_densities().star_low >= Rat(1, 6));
}

TEST_CASE("select_subset randomized exact cases") {
  std::mt19937_64 rng(101);
  auto y = aperiodic_ep();
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::int64_t> period(2, 9);
    IndexSet I = random_periodic_set(rng, period(rng), 0.5);
    std::uniform_real_distribution<double> u(0.05, 0.45);
    Rat t1(static_cast<std::int64_t>(u(rng) * 1000), 1000);
    Rat t2 = t1 + Rat(static_cast<std::int64_t>(u(rng) * 1000) + 50, 1000);
    if (t2 >= 1) t2 = Rat(99, 100);
    auto J = select_subset(Sequence(y), I, t1, t2);
    auto rest = set_minus(I, J);
    CHECK(J.exact_densities().s_low >= t1 * I.exact_densities().s_low);
    CHECK(rest.exact_densities().s_low >= (1 - t2) * I.exact_densities().s_low);
    CHECK(set_minus(J, I).indicator().empty());
  }
}

TEST_CASE("disjoint family bounds follow the induction") {
  auto st = disjoint_family_bounds({Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  REQUIRE(st.size() == 3);
  CHECK(st[0].lo == Rat(1, 4));
  CHECK(st[0].hi == Rat(1, 2));
  CHECK(st[0].r_minus == Rat(3, 8));  // midpoint of the feasible interval

  auto one = disjoint_family_bounds({Rat(9, 10)});
  CHECK(one[0].r_minus == Rat(19, 20));  // midpoint of (0.9, 1.0)

  CHECK_THROWS_AS(disjoint_family_bounds({Rat(1, 2), Rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("disjoint family randomized symbolic audit") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> k(1, 5);
    std::vector<Rat> t;
    Rat sum(0);
    for (int i = 0, n = k(rng); i < n; ++i) {
      std::uniform_int_distribution<std::int64_t> num(1, 100);
      Rat v(num(rng), 1000);
      if (sum + v < Rat(95, 100)) {
        t.push_back(v);
        sum += v;
      }
    }
    if (t.empty()) t.push_back(Rat(1, 10));
    // Throws if either induction inequality fails.
    CHECK_NOTHROW(disjoint_family_bounds(t));
  }
}

TEST_CASE("select_disjoint_family produces disjoint exact subsets") {
  auto y = aperiodic_ep();
  IndexSet full(PeriodicIndicator::all());
  std::vector<Rat> t{Rat(1, 3), Rat(1, 6)};
  auto fam = select_disjoint_family(Sequence(y), full, t);
  REQUIRE(fam.size() == 2);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam[i].exact_densities().star_low >= t[i]);
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      CHECK(set_intersect(fam[i], fam[j]).indicator().empty());
  }
  // Deep equal-weight families exceed the exact desk-scale cap loudly.
  CHECK_THROWS_AS(select_disjoint_family(Sequence(y), full,
                                         {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 8)}),
                  std::invalid_argument);
}

TEST_CASE("greedy_injection on residue classes") {
  auto y = aperiodic_ep();
  IndexSet I(PeriodicIndicator::residues(3, 0));
  IndexSet J(ind_complement(I.indicator()));
  auto f = greedy_injection(Sequence(y), I, J, -300, 300);
  CHECK(f.injective());
  CHECK(f.period.has_value());
  // First stage k=1 assigns every i -> i+1.
  for (const auto& [i, fi] : f.pairs) CHECK(fi == i + 1);

  IndexSet evens(PeriodicIndicator::residues(2, 0));
  IndexSet odds(PeriodicIndicator::residues(2, 1));
  CHECK_THROWS_AS(greedy_injection(Sequence(y), evens, odds, -100, 100),
                  std::invalid_argument);
}

TEST_CASE("greedy_injection random windows verified by brute force") {
  std::mt19937_64 rng(107);
  auto y = random_window(rng, 4000, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const std::int64_t n = 100000;
    std::bernoulli_distribution di(0.2), dj(0.5);
    std::vector<std::int64_t> ip, jp;
    for (std::int64_t i = 0; i < n; ++i) {
      if (di(rng)) ip.push_back(i);
      if (dj(rng)) jp.push_back(i);
    }
    IndexSet I = IndexSet::finite(0, n, std::move(ip));
    IndexSet J = IndexSet::finite(0, n, std::move(jp));
    auto f = greedy_injection(Sequence(y), I, J, 0, n);
    CHECK(f.injective());
    // Image within J; domain within I; totality except near the right edge.
    for (const auto& [i, fi] : f.pairs) {
      CHECK(I.contains(i));
      CHECK(J.contains(fi));
      CHECK(fi >= i);
    }
    for (std::int64_t u : f.unassigned) CHECK(u > n - 2000);
  }
}

TEST_CASE("greedy_injection_uniform has bounded displacement and exact densities") {
  auto y = aperiodic_ep();
  IndexSet I(PeriodicIndicator::residues(4, 0));
  IndexSet J(PeriodicIndicator::residues(2, 1));
  auto f = greedy_injection_uniform(Sequence(y), I, J, -500, 500);
  CHECK(f.injective());
  REQUIRE(f.displacement_bound.has_value());
  REQUIRE(f.period.has_value());
  // Image density equals domain density (bounded displacement preserves
  // uniform densities).
  const std::int64_t p = *f.period;
  std::int64_t domPerPeriod = I.count(0, p);
  std::vector<std::int64_t> img = f.image_points();
  std::int64_t imgPerPeriod = 0;
  for (std::int64_t v : img)
    if (v >= 0 && v < p) ++imgPerPeriod;
  CHECK(domPerPeriod == imgPerPeriod);

  IndexSet empty(PeriodicIndicator::empty_set());
  auto fe = greedy_injection_uniform(Sequence(y), empty, J, -100, 100);
  CHECK(fe.pairs.empty());
  CHECK(*fe.displacement_bound == 0);
}

TEST_CASE("greedy_injection_uniform randomized periodic instances") {
  std::mt19937_64 rng(109);
  auto y = aperiodic_ep();
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<std::int64_t> period(3, 8);
    IndexSet I = random_periodic_set(rng, period(rng), 0.25);
    IndexSet J = random_periodic_set(rng, period(rng), 0.8);
    auto dI = I.exact_densities();
    auto dJ = J.exact_densities();
    if (!(dI.star_high < dJ.star_low)) continue;
    auto f = greedy_injection_uniform(Sequence(y), I, J, -400, 400);
    CHECK(f.injective());
    REQUIRE(f.period.has_value());
    const std::int64_t p = *f.period;
    // Exhaustive check over one full period: image behaves periodically and
    // uniform densities match.
    std::int64_t dom = 0, img = 0;
    for (std::int64_t i = 0; i < p; ++i) {
      if (I.contains(i)) ++dom;
      auto fi = f.image_of(i);
      if (fi) {
        CHECK(J.contains(*fi));
        auto fip = f.image_of(i + p);
        REQUIRE(fip.has_value());
        CHECK(*fip == *fi + p);
      }
      if (I.contains(i)) ++img;  // totality: every domain point is mapped
    }
    CHECK(dom == img);
  }
}

TEST_CASE("selection equivariance on the shift") {
  auto y = aperiodic_ep();
  IndexSet I(PeriodicIndicator::residues(3, 1));
  auto J = select_subset(Sequence(y), I, Rat(1, 4), Rat(3, 4));
  auto Jsh = select_subset(Sequence(y.shifted()), I.shifted(), Rat(1, 4), Rat(3, 4));
  CHECK(Jsh.indicator().equals(J.indicator().shifted()));
}
