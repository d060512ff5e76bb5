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

#include "symgen/indexset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symgen {

namespace {

constexpr std::int64_t kMaxExactSpan = std::int64_t{1} << 23;

std::int64_t mod64(std::int64_t i, std::int64_t m) {
  std::int64_t r = i % m;
  return r < 0 ? r + m : r;
}

std::int64_t ones(const std::vector<std::uint8_t>& v) {
  return std::count(v.begin(), v.end(), std::uint8_t{1});
}

// Ones of the periodic extension of `cyc` over [lo, hi), where index i maps
// to cyc[mod(i - anchor, |cyc|)].
std::int64_t cycle_count(const std::vector<std::uint8_t>& cyc, std::int64_t anchor,
                         std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return 0;
  const std::int64_t m = static_cast<std::int64_t>(cyc.size());
  const std::int64_t len = hi - lo;
  const std::int64_t full = len / m;
  std::int64_t c = full * ones(cyc);
  for (std::int64_t i = lo + full * m; i < hi; ++i) c += cyc[mod64(i - anchor, m)];
  return c;
}

std::int64_t least_cycle_period(const std::vector<std::uint8_t>& c) {
  const std::int64_t n = static_cast<std::int64_t>(c.size());
  for (std::int64_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::int64_t i = p; i < n && ok; ++i) ok = c[i] == c[i % p];
    if (ok) return p;
  }
  return n;
}

}  // namespace

bool PeriodicIndicator::at(std::int64_t i) const {
  if (i < core_origin)
    return left[mod64(i - core_origin, static_cast<std::int64_t>(left.size()))] != 0;
  if (i < core_end()) return core[static_cast<std::size_t>(i - core_origin)] != 0;
  return right[mod64(i - core_end(), static_cast<std::int64_t>(right.size()))] != 0;
}

bool PeriodicIndicator::empty() const {
  return ones(left) == 0 && ones(core) == 0 && ones(right) == 0;
}

bool PeriodicIndicator::full() const {
  return ones(left) == static_cast<std::int64_t>(left.size()) &&
         ones(core) == static_cast<std::int64_t>(core.size()) &&
         ones(right) == static_cast<std::int64_t>(right.size());
}

bool PeriodicIndicator::bounded_above() const { return ones(right) == 0; }
bool PeriodicIndicator::bounded_below() const { return ones(left) == 0; }

std::int64_t PeriodicIndicator::count(std::int64_t lo, std::int64_t hi) const {
  if (hi <= lo) return 0;
  std::int64_t c = 0;
  const std::int64_t a = core_origin, b = core_end();
  c += cycle_count(left, a, lo, std::min(hi, a));
  for (std::int64_t i = std::max(lo, a); i < std::min(hi, b); ++i)
    c += core[static_cast<std::size_t>(i - a)];
  c += cycle_count(right, b, std::max(lo, b), hi);
  return c;
}

std::vector<std::int64_t> PeriodicIndicator::positions(std::int64_t lo,
                                                       std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = lo; i < hi; ++i)
    if (at(i)) out.push_back(i);
  return out;
}

std::optional<std::int64_t> PeriodicIndicator::next_one(std::int64_t i) const {
  const std::int64_t a = core_origin, b = core_end();
  const std::int64_t l = static_cast<std::int64_t>(left.size());
  const std::int64_t r = static_cast<std::int64_t>(right.size());
  if (i < a) {
    if (ones(left) > 0) {
      for (std::int64_t j = i; j < std::min(a, i + l); ++j)
        if (at(j)) return j;
    }
    i = a;
  }
  for (std::int64_t j = std::max(i, a); j < b; ++j)
    if (at(j)) return j;
  if (ones(right) == 0) return std::nullopt;
  for (std::int64_t j = std::max(i, b); j < std::max(i, b) + r; ++j)
    if (at(j)) return j;
  return std::nullopt;  // unreachable with ones in the right cycle
}

std::optional<std::int64_t> PeriodicIndicator::prev_one(std::int64_t i) const {
  const std::int64_t a = core_origin, b = core_end();
  const std::int64_t l = static_cast<std::int64_t>(left.size());
  const std::int64_t r = static_cast<std::int64_t>(right.size());
  if (i >= b) {
    if (ones(right) > 0) {
      for (std::int64_t j = i; j > std::max(b - 1, i - r); --j)
        if (at(j)) return j;
    }
    i = b - 1;
  }
  for (std::int64_t j = std::min(i, b - 1); j >= a; --j)
    if (at(j)) return j;
  if (ones(left) == 0) return std::nullopt;
  for (std::int64_t j = std::min(i, a - 1); j > std::min(i, a - 1) - l; --j)
    if (at(j)) return j;
  return std::nullopt;
}

ExactDensities PeriodicIndicator::densities() const {
  const Rat dl(ones(left), static_cast<std::int64_t>(left.size()));
  const Rat dr(ones(right), static_cast<std::int64_t>(right.size()));
  ExactDensities d;
  // Forward averages see only the right tail in the limit; uniform densities
  // see the extremes over both tails (the finite core washes out).
  d.s_low = d.s_high = dr;
  d.star_low = std::min(dl, dr);
  d.star_high = std::max(dl, dr);
  return d;
}

PeriodicIndicator PeriodicIndicator::shifted() const {
  PeriodicIndicator p = *this;
  p.core_origin -= 1;
  return p;
}

PeriodicIndicator PeriodicIndicator::reduced() const {
  PeriodicIndicator p = *this;
  auto reduce = [](std::vector<std::uint8_t>& c) {
    c.resize(static_cast<std::size_t>(least_cycle_period(c)));
  };
  reduce(p.left);
  reduce(p.right);
  const std::int64_t r = static_cast<std::int64_t>(p.right.size());
  const std::int64_t l = static_cast<std::int64_t>(p.left.size());
  while (!p.core.empty() && p.core.back() == p.right[static_cast<std::size_t>(r - 1)]) {
    p.core.pop_back();
    std::rotate(p.right.begin(), p.right.end() - 1, p.right.end());
  }
  while (!p.core.empty() && p.core.front() == p.left.front()) {
    p.core.erase(p.core.begin());
    std::rotate(p.left.begin(), p.left.begin() + 1, p.left.end());
    p.core_origin += 1;
  }
  (void)l;
  return p;
}

bool PeriodicIndicator::equals(const PeriodicIndicator& o) const {
  const std::int64_t l = std::lcm(static_cast<std::int64_t>(left.size()),
                                  static_cast<std::int64_t>(o.left.size()));
  const std::int64_t r = std::lcm(static_cast<std::int64_t>(right.size()),
                                  static_cast<std::int64_t>(o.right.size()));
  const std::int64_t lo = std::min(core_origin, o.core_origin) - l;
  const std::int64_t hi = std::max(core_end(), o.core_end()) + r;
  // Both are periodic outside the hull of the cores, so agreement on one
  // lcm window on each side extends to all of Z.
  for (std::int64_t i = lo; i < hi; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

PeriodicIndicator PeriodicIndicator::empty_set() {
  return PeriodicIndicator{{0}, {}, {0}, 0};
}

PeriodicIndicator PeriodicIndicator::all() { return PeriodicIndicator{{1}, {}, {1}, 0}; }

PeriodicIndicator PeriodicIndicator::residues(std::int64_t m, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(m), 0);
  c[static_cast<std::size_t>(mod64(r, m))] = 1;
  return from_cycle(c);
}

PeriodicIndicator PeriodicIndicator::from_cycle(const std::vector<std::uint8_t>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("cycle must be nonempty");
  // Anchored at 0: position i has cycle[i mod |cycle|].
  return PeriodicIndicator{cycle, {}, cycle, 0}.reduced();
}

EpStructure structure_of(const PeriodicIndicator& p) {
  return EpStructure{static_cast<std::int64_t>(p.left.size()),
                     static_cast<std::int64_t>(p.right.size()), p.core_origin,
                     p.core_end()};
}

EpStructure structure_of(const EventuallyPeriodicSeq& s) {
  return EpStructure{static_cast<std::int64_t>(s.left_cycle.size()),
                     static_cast<std::int64_t>(s.right_cycle.size()), s.core_origin,
                     s.core_end()};
}

EpStructure combine_structures(const std::vector<EpStructure>& in, std::int64_t radius) {
  if (in.empty()) throw std::invalid_argument("no structures to combine");
  EpStructure out = in[0];
  for (std::size_t i = 1; i < in.size(); ++i) {
    out.left_len = std::lcm(out.left_len, in[i].left_len);
    out.right_len = std::lcm(out.right_len, in[i].right_len);
    out.core_lo = std::min(out.core_lo, in[i].core_lo);
    out.core_hi = std::max(out.core_hi, in[i].core_hi);
    if (out.left_len > kMaxExactSpan || out.right_len > kMaxExactSpan)
      throw std::length_error("exact eventually-periodic computation exceeds span cap");
  }
  out.core_lo -= radius;
  out.core_hi += radius;
  const std::int64_t span = (out.core_hi - out.core_lo) + out.left_len + out.right_len;
  if (span > kMaxExactSpan)
    throw std::length_error("exact eventually-periodic computation exceeds span cap");
  return out;
}

PeriodicIndicator build_indicator(const EpStructure& st,
                                  const std::function<bool(std::int64_t)>& value_at) {
  PeriodicIndicator p;
  p.core_origin = st.core_lo;
  p.left.resize(static_cast<std::size_t>(st.left_len));
  p.right.resize(static_cast<std::size_t>(st.right_len));
  for (std::int64_t j = 0; j < st.left_len; ++j) {
    const std::int64_t i = st.core_lo - st.left_len + j;
    p.left[static_cast<std::size_t>(mod64(i - st.core_lo, st.left_len))] =
        value_at(i) ? 1 : 0;
  }
  for (std::int64_t i = st.core_lo; i < st.core_hi; ++i)
    p.core.push_back(value_at(i) ? 1 : 0);
  for (std::int64_t j = 0; j < st.right_len; ++j) {
    const std::int64_t i = st.core_hi + j;
    p.right[static_cast<std::size_t>(j)] = value_at(i) ? 1 : 0;
  }
  return p.reduced();
}

EventuallyPeriodicSeq build_ep_sequence(const EpStructure& st, const Alphabet& alphabet,
                                        const std::function<Sym(std::int64_t)>& symbol_at) {
  EventuallyPeriodicSeq s;
  s.alphabet = alphabet;
  s.core_origin = st.core_lo;
  s.left_cycle.resize(static_cast<std::size_t>(st.left_len));
  s.right_cycle.resize(static_cast<std::size_t>(st.right_len));
  for (std::int64_t j = 0; j < st.left_len; ++j) {
    const std::int64_t i = st.core_lo - st.left_len + j;
    s.left_cycle[static_cast<std::size_t>(j)] = symbol_at(i);
  }
  for (std::int64_t i = st.core_lo; i < st.core_hi; ++i) s.core.push_back(symbol_at(i));
  for (std::int64_t j = 0; j < st.right_len; ++j)
    s.right_cycle[static_cast<std::size_t>(j)] = symbol_at(st.core_hi + j);
  s.validate();
  return s.normalized();
}

namespace {
PeriodicIndicator pointwise(const PeriodicIndicator& a, const PeriodicIndicator& b,
                            const std::function<bool(bool, bool)>& op) {
  EpStructure st = combine_structures({structure_of(a), structure_of(b)}, 0);
  return build_indicator(st, [&](std::int64_t i) { return op(a.at(i), b.at(i)); });
}
}  // namespace

PeriodicIndicator ind_union(const PeriodicIndicator& a, const PeriodicIndicator& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

PeriodicIndicator ind_intersect(const PeriodicIndicator& a, const PeriodicIndicator& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

PeriodicIndicator ind_minus(const PeriodicIndicator& a, const PeriodicIndicator& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && !y; });
}

PeriodicIndicator ind_complement(const PeriodicIndicator& a) {
  return build_indicator(structure_of(a), [&](std::int64_t i) { return !a.at(i); });
}

void FiniteIndexSet::validate() const {
  if (host_lo > host_hi) throw std::invalid_argument("bad host window");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < host_lo || points[i] >= host_hi)
      throw std::invalid_argument("index outside host window");
    if (i > 0 && points[i] <= points[i - 1])
      throw std::invalid_argument("indices must be strictly increasing");
  }
}

IndexSet::IndexSet(FiniteIndexSet f) : rep_(std::move(f)) {
  std::get<FiniteIndexSet>(rep_).validate();
}

IndexSet IndexSet::finite(std::int64_t host_lo, std::int64_t host_hi,
                          std::vector<std::int64_t> points) {
  return IndexSet(FiniteIndexSet{host_lo, host_hi, std::move(points)});
}

const PeriodicIndicator& IndexSet::indicator() const {
  if (!exact()) throw std::logic_error("IndexSet is not in indicator form");
  return std::get<PeriodicIndicator>(rep_);
}

const FiniteIndexSet& IndexSet::finite_form() const {
  if (exact()) throw std::logic_error("IndexSet is not in finite form");
  return std::get<FiniteIndexSet>(rep_);
}

bool IndexSet::contains(std::int64_t i) const {
  if (exact()) return indicator().at(i);
  const auto& f = finite_form();
  return std::binary_search(f.points.begin(), f.points.end(), i);
}

std::int64_t IndexSet::count(std::int64_t lo, std::int64_t hi) const {
  if (exact()) return indicator().count(lo, hi);
  const auto& f = finite_form();
  auto a = std::lower_bound(f.points.begin(), f.points.end(), lo);
  auto b = std::lower_bound(f.points.begin(), f.points.end(), hi);
  return b - a;
}

std::vector<std::int64_t> IndexSet::positions(std::int64_t lo, std::int64_t hi) const {
  if (exact()) return indicator().positions(lo, hi);
  const auto& f = finite_form();
  auto a = std::lower_bound(f.points.begin(), f.points.end(), lo);
  auto b = std::lower_bound(f.points.begin(), f.points.end(), hi);
  return std::vector<std::int64_t>(a, b);
}

std::optional<std::int64_t> IndexSet::next(std::int64_t i) const {
  if (exact()) return indicator().next_one(i);
  const auto& f = finite_form();
  auto it = std::lower_bound(f.points.begin(), f.points.end(), i);
  if (it == f.points.end()) return std::nullopt;
  return *it;
}

std::pair<std::int64_t, std::int64_t> IndexSet::known_range(std::int64_t fallback_lo,
                                                            std::int64_t fallback_hi) const {
  if (exact()) return {fallback_lo, fallback_hi};
  const auto& f = finite_form();
  return {f.host_lo, f.host_hi};
}

IndexSet IndexSet::shifted() const {
  if (exact()) return IndexSet(indicator().shifted());
  FiniteIndexSet f = finite_form();
  f.host_lo -= 1;
  f.host_hi -= 1;
  for (auto& p : f.points) p -= 1;
  return IndexSet(std::move(f));
}

ExactDensities IndexSet::exact_densities() const { return indicator().densities(); }

Rat IndexSet::empirical_density(std::int64_t lo, std::int64_t hi) const {
  if (hi <= lo) throw std::invalid_argument("empty range");
  return Rat(count(lo, hi), hi - lo);
}

std::pair<Rat, Rat> IndexSet::empirical_uniform(std::int64_t lo, std::int64_t hi,
                                                std::int64_t w) const {
  if (w < 1 || lo + w > hi) throw std::invalid_argument("bad uniform-density window");
  std::int64_t c = count(lo, lo + w);
  std::int64_t mn = c, mx = c;
  for (std::int64_t i = lo + 1; i + w <= hi; ++i) {
    c += (contains(i + w - 1) ? 1 : 0) - (contains(i - 1) ? 1 : 0);
    mn = std::min(mn, c);
    mx = std::max(mx, c);
  }
  return {Rat(mn, w), Rat(mx, w)};
}

namespace {
IndexSet materialized_binop(const IndexSet& a, const IndexSet& b,
                            const std::function<bool(bool, bool)>& op) {
  auto [alo, ahi] = a.known_range(std::numeric_limits<std::int64_t>::min(),
                                  std::numeric_limits<std::int64_t>::max());
  auto [blo, bhi] = b.known_range(alo, ahi);
  const std::int64_t lo = std::max(alo, blo), hi = std::min(ahi, bhi);
  std::vector<std::int64_t> pts;
  for (std::int64_t i = lo; i < hi; ++i)
    if (op(a.contains(i), b.contains(i))) pts.push_back(i);
  return IndexSet::finite(lo, hi, std::move(pts));
}
}  // namespace

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  if (a.exact() && b.exact()) return IndexSet(ind_union(a.indicator(), b.indicator()));
  return materialized_binop(a, b, [](bool x, bool y) { return x || y; });
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  if (a.exact() && b.exact()) return IndexSet(ind_minus(a.indicator(), b.indicator()));
  return materialized_binop(a, b, [](bool x, bool y) { return x && !y; });
}

IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  if (a.exact() && b.exact()) return IndexSet(ind_intersect(a.indicator(), b.indicator()));
  return materialized_binop(a, b, [](bool x, bool y) { return x && y; });
}

}  // namespace symgen
