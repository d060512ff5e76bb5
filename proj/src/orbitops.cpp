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

#include "symgen/orbitops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symgen/markers.hpp"

namespace symgen {

namespace {

Rat lower_density(const IndexSet& I, bool uniform) {
  if (I.exact()) {
    auto d = I.exact_densities();
    return uniform ? d.star_low : d.s_low;
  }
  const auto& f = I.finite_form();
  if (f.host_hi == f.host_lo) return Rat(0);
  if (!uniform) return I.empirical_density(f.host_lo, f.host_hi);
  const std::int64_t w = std::max<std::int64_t>(1, (f.host_hi - f.host_lo) / 16);
  return I.empirical_uniform(f.host_lo, f.host_hi, w).first;
}

Rat upper_density(const IndexSet& I, bool uniform) {
  if (I.exact()) {
    auto d = I.exact_densities();
    return uniform ? d.star_high : d.s_high;
  }
  const auto& f = I.finite_form();
  if (f.host_hi == f.host_lo) return Rat(0);
  if (!uniform) return I.empirical_density(f.host_lo, f.host_hi);
  const std::int64_t w = std::max<std::int64_t>(1, (f.host_hi - f.host_lo) / 16);
  return I.empirical_uniform(f.host_lo, f.host_hi, w).second;
}

// Per-block membership: J takes the floor(beta2 * |I cap U|) smallest
// elements of each marker block's intersection with I.
std::vector<std::int64_t> selected_points(const PeriodicIndicator& ind,
                                          const std::vector<std::int64_t>& mpts,
                                          const Rat& beta2) {
  std::vector<std::int64_t> selected;
  for (std::size_t b = 0; b + 1 < mpts.size(); ++b) {
    auto block = ind.positions(mpts[b], mpts[b + 1]);
    const std::int64_t keep =
        to_int64(floor_rat(beta2 * Rat(static_cast<std::int64_t>(block.size()))));
    for (std::int64_t j = 0; j < keep; ++j)
      selected.push_back(block[static_cast<std::size_t>(j)]);
  }
  return selected;
}

IndexSet select_impl(const Sequence& y, const IndexSet& I, const Rat& t1, const Rat& t2,
                     bool uniform, SelectionParams* params_out,
                     std::int64_t block_floor) {
  if (!(t1 < t2) || t1 < 0 || t2 > 1)
    throw std::invalid_argument("need 0 <= t1 < t2 <= 1");
  SelectionParams sp;
  sp.t1 = t1;
  sp.t2 = t2;
  sp.beta1 = t1 + (t2 - t1) / 3;
  sp.beta2 = t1 + 2 * (t2 - t1) / 3;

  const Rat s = lower_density(I, uniform);
  std::int64_t N =
      s == 0 ? 2 : to_int64(floor_rat(1 / ((sp.beta2 - sp.beta1) * s))) + 1;
  N = std::max({N, std::int64_t{2}, block_floor});

  const bool exact = I.exact() && std::holds_alternative<EventuallyPeriodicSeq>(y);
  for (int attempt = 0; attempt < 40; ++attempt, N *= 2) {
    MarkerSeq z = n_marker(y, N);
    sp.block_n = N;
    if (exact) {
      const PeriodicIndicator& marks = z.positions.indicator();
      const PeriodicIndicator& ind = I.indicator();
      EpStructure st =
          combine_structures({structure_of(marks), structure_of(ind)}, 2 * (N + 1) + 2);
      const std::int64_t eval_lo = st.core_lo - st.left_len - (N + 2);
      const std::int64_t eval_hi = st.core_hi + st.right_len + (N + 2);
      auto mpts = marks.positions(eval_lo - (N + 2), eval_hi + (N + 2));
      auto selected = selected_points(ind, mpts, sp.beta2);
      PeriodicIndicator J = build_indicator(st, [&](std::int64_t i) {
        return std::binary_search(selected.begin(), selected.end(), i);
      });
      // The construction only guarantees the density floors for large
      // enough block size; verify them exactly and retry coarser if needed.
      IndexSet Jset(J);
      IndexSet rest = set_minus(I, Jset);
      const Rat sj = lower_density(Jset, uniform);
      const Rat sr = lower_density(rest, uniform);
      if (sj >= t1 * s && sr >= (1 - t2) * s) {
        if (params_out) *params_out = sp;
        return Jset;
      }
      continue;
    }
    // Window path: empirical guarantees, boundary blocks included as-is.
    auto [lo, hi] = I.known_range(0, 0);
    auto marks = z.positions.positions(lo, hi);
    std::vector<std::int64_t> pts;
    for (std::size_t b = 0; b + 1 < marks.size(); ++b) {
      const std::int64_t u = marks[b], v = marks[b + 1];
      auto block_pts = I.positions(u, v);
      const std::int64_t keep =
          to_int64(floor_rat(sp.beta2 * Rat(static_cast<std::int64_t>(block_pts.size()))));
      for (std::int64_t j = 0; j < keep; ++j)
        pts.push_back(block_pts[static_cast<std::size_t>(j)]);
    }
    std::sort(pts.begin(), pts.end());
    if (params_out) *params_out = sp;
    return IndexSet::finite(lo, hi, std::move(pts));
  }
  throw std::runtime_error("selection block size diverged without meeting density floors");
}

}  // namespace

IndexSet select_subset(const Sequence& y, const IndexSet& I, const Rat& t1, const Rat& t2,
                       SelectionParams* params_out) {
  return select_impl(y, I, t1, t2, /*uniform=*/false, params_out, 0);
}

IndexSet select_subset_uniform(const Sequence& y, const IndexSet& I, const Rat& t1,
                               const Rat& t2, SelectionParams* params_out) {
  return select_impl(y, I, t1, t2, /*uniform=*/true, params_out, 0);
}

std::vector<FamilyStage> disjoint_family_bounds(const std::vector<Rat>& t) {
  std::vector<FamilyStage> stages;
  Rat a(1);  // prod_{i<n} (1 - r_i^+)
  for (std::size_t n = 0; n < t.size(); ++n) {
    Rat tail(0);
    for (std::size_t i = n + 1; i < t.size(); ++i) tail += t[i];
    FamilyStage st;
    st.lo = t[n] / a;
    st.hi = 1 - tail / a;
    if (!(st.lo < st.hi) || st.hi > 1 || st.lo < 0)
      throw std::invalid_argument(
          "infeasible r interval at stage " + std::to_string(n + 1) +
          ": the t_n margin (sum below one) is too small");
    st.r_minus = midpoint(st.lo, st.hi);
    st.r_plus = midpoint(st.r_minus, st.hi);
    stages.push_back(st);
    a *= (1 - st.r_plus);
  }
  // The proof's two invariants, asserted symbolically.
  Rat prod(1);
  for (std::size_t n = 0; n < stages.size(); ++n) {
    if (!(stages[n].r_minus * prod > t[n]))
      throw std::logic_error("family induction invariant 1 failed");
    prod *= (1 - stages[n].r_plus);
    Rat tail(0);
    for (std::size_t i = n + 1; i < t.size(); ++i) tail += t[i];
    if (!(prod > tail)) throw std::logic_error("family induction invariant 2 failed");
  }
  return stages;
}

std::vector<IndexSet> select_disjoint_family(const Sequence& y, const IndexSet& I,
                                             const std::vector<Rat>& t) {
  auto stages = disjoint_family_bounds(t);
  // One shared block size for every stage, computed from the symbolic
  // density floors: a fresh marker per stage would compound cycle lengths
  // on exact inputs.
  const Rat s0 = I.exact() ? I.exact_densities().star_low : Rat(1);
  std::int64_t block_floor = 2;
  Rat a(1);
  for (const auto& st : stages) {
    const Rat gap = (st.r_plus - st.r_minus) / 3;  // the beta wedge
    const Rat s_bound = a * s0;
    if (s_bound > 0) {
      const std::int64_t need = to_int64(floor_rat(1 / (gap * s_bound))) + 1;
      block_floor = std::max(block_floor, need);
    }
    a *= (1 - st.r_plus);
  }
  if (block_floor > 4096)
    throw std::invalid_argument(
        "disjoint family stages too deep for exact construction: required "
        "marker spacing " +
        std::to_string(block_floor) + " exceeds the desk-scale cap");
  std::vector<IndexSet> out;
  IndexSet rest = I;
  for (const auto& st : stages) {
    IndexSet J = select_impl(y, rest, st.r_minus, st.r_plus, /*uniform=*/true, nullptr,
                             block_floor);
    rest = set_minus(rest, J);
    out.push_back(std::move(J));
  }
  return out;
}

bool PartialInjection::injective() const {
  std::vector<std::int64_t> imgs;
  imgs.reserve(pairs.size());
  for (const auto& [i, fi] : pairs) imgs.push_back(fi);
  std::sort(imgs.begin(), imgs.end());
  return std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
}

std::optional<std::int64_t> PartialInjection::image_of(std::int64_t i) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), i,
                             [](const auto& p, std::int64_t v) { return p.first < v; });
  if (it == pairs.end() || it->first != i) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> PartialInjection::image_points() const {
  std::vector<std::int64_t> v;
  v.reserve(pairs.size());
  for (const auto& [i, fi] : pairs) v.push_back(fi);
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

// The stage-k greedy matching over [lo, hi). Returns pairs sorted by domain
// point; k_used reports the largest stage that assigned anything.
std::vector<std::pair<std::int64_t, std::int64_t>> greedy_core(
    const std::vector<std::int64_t>& dom, const IndexSet& J, std::int64_t lo,
    std::int64_t hi, std::int64_t* k_used, std::vector<std::int64_t>* unassigned) {
  std::vector<std::uint8_t> taken(static_cast<std::size_t>(hi - lo), 0);
  std::vector<std::int64_t> remaining = dom;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  *k_used = 0;
  const std::int64_t k_cap = hi - lo;
  for (std::int64_t k = 0; k <= k_cap && !remaining.empty(); ++k) {
    std::vector<std::int64_t> still;
    for (std::int64_t i : remaining) {
      const std::int64_t tgt = i + k;
      if (tgt >= lo && tgt < hi && J.contains(tgt) &&
          !taken[static_cast<std::size_t>(tgt - lo)]) {
        taken[static_cast<std::size_t>(tgt - lo)] = 1;
        pairs.emplace_back(i, tgt);
        *k_used = std::max(*k_used, k);
      } else {
        still.push_back(i);
      }
    }
    remaining.swap(still);
  }
  *unassigned = std::move(remaining);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// Exact path for eventually periodic indicators: run the greedy over a
// widening span until the assignment is verifiably tail-periodic and total
// away from the span boundaries, then record the stabilized pattern.
PartialInjection ep_greedy_stabilized(const IndexSet& I, const IndexSet& J) {
  PeriodicIndicator Ind = I.indicator().reduced();
  PeriodicIndicator Jnd = J.indicator().reduced();
  EpStructure is = structure_of(Ind), js = structure_of(Jnd);
  const std::int64_t pl = std::lcm(is.left_len, js.left_len);
  const std::int64_t pr = std::lcm(is.right_len, js.right_len);
  const std::int64_t c_lo = std::min(is.core_lo, js.core_lo);
  const std::int64_t c_hi = std::max(is.core_hi, js.core_hi);
  const std::int64_t base =
      16 * std::max({pl, pr, std::int64_t{8}}) + (c_hi - c_lo);

  for (std::int64_t margin = base; margin <= (std::int64_t{1} << 22); margin *= 4) {
    const std::int64_t lo = c_lo - 3 * margin, hi = c_hi + 3 * margin;
    auto dom = I.positions(lo, hi);
    std::int64_t k_used = 0;
    std::vector<std::int64_t> un;
    auto pairs = greedy_core(dom, J, lo, hi, &k_used, &un);
    PartialInjection f;
    f.pairs = std::move(pairs);

    bool stable = true;
    std::int64_t disp = 0;
    // Totality on the central zone.
    for (std::int64_t u : un)
      if (u >= c_lo - 2 * margin && u < c_hi + 2 * margin) stable = false;
    // Tail periodicity of the assignment over long probe stretches.
    for (std::int64_t i = c_lo - 2 * margin; i < c_lo - margin && stable; ++i) {
      if (!I.contains(i)) continue;
      auto a = f.image_of(i);
      auto b = f.image_of(i - pl);
      stable = a && b && *b == *a - pl;
    }
    for (std::int64_t i = c_hi + margin; i < c_hi + 2 * margin && stable; ++i) {
      if (!I.contains(i)) continue;
      auto a = f.image_of(i);
      auto b = f.image_of(i + pr);
      stable = a && b && *b == *a + pr;
    }
    if (!stable) continue;
    for (const auto& [i, fi] : f.pairs)
      if (i >= c_lo - 2 * margin && i < c_hi + 2 * margin)
        disp = std::max<std::int64_t>(disp, std::llabs(fi - i));

    // Keep the faithful middle only.
    std::vector<std::pair<std::int64_t, std::int64_t>> middle;
    for (const auto& pr_ : f.pairs)
      if (pr_.first >= c_lo - 2 * margin && pr_.first < c_hi + 2 * margin)
        middle.push_back(pr_);
    f.pairs = std::move(middle);
    f.unassigned.clear();
    f.range_lo = c_lo - 2 * margin;
    f.range_hi = c_hi + 2 * margin;
    f.stable_lo = f.range_lo;
    f.stable_hi = f.range_hi;
    f.left_period = pl;
    f.right_period = pr;
    f.stable_core_lo = c_lo - margin;
    f.stable_core_hi = c_hi + margin;
    f.displacement_bound = disp + 1;  // strict bound |f(i) - i| < M
    f.exact_domain_density = Ind.densities().s_low;
    // Fully periodic pattern (no core perturbation): report the period.
    const std::int64_t p = std::lcm(pl, pr);
    bool whole = true;
    for (std::int64_t i = f.stable_lo; i + p < f.stable_hi && whole; ++i) {
      if (!I.contains(i)) continue;
      auto a = f.image_of(i);
      auto b = f.image_of(i + p);
      whole = a && b && *b == *a + p;
    }
    if (whole) f.period = p;
    return f;
  }
  throw std::runtime_error("greedy injection did not stabilize to a periodic pattern");
}

}  // namespace

PartialInjection greedy_injection(const Sequence& y, const IndexSet& I, const IndexSet& J,
                                  std::int64_t lo, std::int64_t hi,
                                  std::optional<Rat> s_cap, bool lower_variant) {
  const bool exact = I.exact() && J.exact();
  const Rat di = lower_variant ? lower_density(I, false) : upper_density(I, false);
  const Rat dj = lower_variant ? lower_density(J, false) : upper_density(J, false);
  if (!(di < dj))
    throw std::invalid_argument("density precondition violated: need s(I) < s(J)");
  IndexSet target = J;
  if (s_cap) {
    if (!(di < *s_cap && *s_cap < dj))
      throw std::invalid_argument("image cap must lie strictly between the densities");
    target = select_subset(y, J, di / dj, *s_cap / dj);
  }
  if (exact && target.exact()) return ep_greedy_stabilized(I, target);
  auto [klo, khi] = I.known_range(lo, hi);
  const std::int64_t rlo = std::max(lo, klo), rhi = std::min(hi, khi);
  auto dom = I.positions(rlo, rhi);
  PartialInjection f;
  std::int64_t k_used = 0;
  f.pairs = greedy_core(dom, target, rlo, rhi, &k_used, &f.unassigned);
  f.range_lo = rlo;
  f.range_hi = rhi;
  f.displacement_bound = k_used + 1;
  return f;
}

PartialInjection greedy_injection_uniform(const Sequence& y, const IndexSet& I,
                                          const IndexSet& J, std::int64_t lo,
                                          std::int64_t hi) {
  (void)y;
  const Rat di = upper_density(I, true);
  const Rat dj = lower_density(J, true);
  if (I.exact() && I.indicator().empty()) {
    PartialInjection f;
    f.range_lo = lo;
    f.range_hi = hi;
    f.displacement_bound = 0;
    f.period = 1;
    f.exact_domain_density = Rat(0);
    return f;
  }
  if (!(di < dj))
    throw std::invalid_argument(
        "uniform density precondition violated: need s*_high(I) < s*_low(J)");
  if (I.exact() && J.exact()) return ep_greedy_stabilized(I, J);
  auto [klo, khi] = I.known_range(lo, hi);
  const std::int64_t rlo = std::max(lo, klo), rhi = std::min(hi, khi);
  auto dom = I.positions(rlo, rhi);
  PartialInjection f;
  std::int64_t k_used = 0;
  f.pairs = greedy_core(dom, J, rlo, rhi, &k_used, &f.unassigned);
  f.range_lo = rlo;
  f.range_hi = rhi;
  f.displacement_bound = k_used + 1;
  return f;
}

}  // namespace symgen
