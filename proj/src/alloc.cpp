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

#include "symgen/alloc.hpp"

#include <algorithm>

namespace symgen {

namespace {

Rat upper_density_of(const IndexSet& s, std::int64_t lo, std::int64_t hi, bool uniform) {
  if (s.exact()) {
    auto d = s.exact_densities();
    return uniform ? d.star_high : d.s_high;
  }
  if (!uniform) return s.empirical_density(lo, hi);
  const std::int64_t w = std::max<std::int64_t>(1, (hi - lo) / 16);
  return s.empirical_uniform(lo, hi, w).second;
}

std::string rat_detail(const char* label, const Rat& v) {
  return std::string(label) + " = " + rat_str(v);
}

}  // namespace

std::int64_t static_name_span(const Alphabet& a, int bits) {
  const int b = a.code_bits();
  if (b == 0) {
    if (bits != 0)
      throw std::invalid_argument("one-symbol alphabet carries zero-bit names");
    return 0;
  }
  return (bits + b - 1) / b;
}

std::vector<std::uint8_t> static_name(const Window& x, std::int64_t i, int bits) {
  const int b = x.alphabet.code_bits();
  const std::int64_t span = static_name_span(x.alphabet, bits);
  if (i < x.lo() || i + span > x.hi())
    throw std::out_of_range("static name window leaves the sample");
  std::vector<std::uint8_t> name;
  name.reserve(static_cast<std::size_t>(bits));
  for (std::int64_t j = 0; j < span && static_cast<int>(name.size()) < bits; ++j) {
    const Sym s = x.at(i + j);
    for (int t = b - 1; t >= 0 && static_cast<int>(name.size()) < bits; --t)
      name.push_back(static_cast<std::uint8_t>((s >> t) & 1));
  }
  return name;
}

CertificateReport check_condition_a(const OmegaCoverDesc& cover, std::int64_t lo,
                                    std::int64_t hi) {
  CertificateReport rep;
  rep.exact = true;
  rep.total = 0;
  for (const auto& s : cover.sets) {
    rep.exact = rep.exact && s.exact();
    rep.total += upper_density_of(s, lo, hi, /*uniform=*/false);
  }
  rep.pass = rep.total < 1;
  rep.detail = rat_detail("sum of upper densities", rep.total);
  return rep;
}

CertificateReport check_condition_b(const OmegaCoverDesc& cover, std::int64_t lo,
                                    std::int64_t hi) {
  CertificateReport rep;
  if (cover.group_of.size() != cover.sets.size())
    throw std::invalid_argument("condition (b) needs a grouping");
  rep.exact = true;
  rep.sup_star = 0;
  for (const auto& s : cover.sets) {
    rep.exact = rep.exact && s.exact();
    rep.sup_star = std::max(rep.sup_star, upper_density_of(s, lo, hi, true));
  }
  // Pairwise disjointness within each group.
  for (std::size_t i = 0; i < cover.sets.size(); ++i)
    for (std::size_t j = i + 1; j < cover.sets.size(); ++j) {
      if (cover.group_of[i] != cover.group_of[j]) continue;
      auto inter = set_intersect(cover.sets[i], cover.sets[j]);
      const bool empty = inter.exact() ? inter.indicator().empty()
                                       : inter.finite_form().points.empty();
      if (!empty) {
        rep.pass = false;
        rep.detail = "sets " + std::to_string(i) + " and " + std::to_string(j) +
                     " overlap inside group " + std::to_string(cover.group_of[i]);
        return rep;
      }
    }
  // Grouped union bound over the full (finite) family.
  rep.total = 0;
  std::map<int, IndexSet> unions;
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    auto it = unions.find(cover.group_of[i]);
    if (it == unions.end())
      unions.emplace(cover.group_of[i], cover.sets[i]);
    else
      it->second = set_union(it->second, cover.sets[i]);
  }
  for (const auto& [g, u] : unions) {
    (void)g;
    rep.total += upper_density_of(u, lo, hi, true);
  }
  rep.pass = rep.total < 1 - rep.sup_star;
  rep.detail = rat_detail("grouped uniform sum", rep.total) + ", " +
               rat_detail("sup", rep.sup_star);
  return rep;
}

std::optional<std::size_t> Allocation::set_index_of(std::int64_t n, int j) const {
  int seen = 0;
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    if (!cover.sets[i].contains(n)) continue;
    if (seen == j) return i;
    ++seen;
  }
  return std::nullopt;
}

std::optional<std::int64_t> Allocation::position(std::int64_t n, int j) const {
  auto i = set_index_of(n, j);
  if (!i) return std::nullopt;
  return injections[*i].image_of(n);
}

std::vector<std::int64_t> Allocation::covered_positions() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = range_lo; n < range_hi; ++n) {
    bool ok = true;
    for (int j = 0; j < bits && ok; ++j) ok = position(n, j).has_value();
    if (ok) out.push_back(n);
  }
  return out;
}

namespace {

Allocation build_impl(const Sequence& y, const OmegaCoverDesc& cover, int bits,
                      std::int64_t lo, std::int64_t hi, bool grouped) {
  if (bits < 0) throw std::invalid_argument("negative name width");
  Allocation alloc;
  alloc.cover = cover;
  alloc.bits = bits;
  alloc.range_lo = lo;
  alloc.range_hi = hi;
  alloc.grouped = grouped;

  CertificateReport cert = grouped ? check_condition_b(cover, lo, hi)
                                   : check_condition_a(cover, lo, hi);
  if (!cert.pass)
    throw CertificateError(std::string("omega-cover certificate failed: ") +
                           cert.detail);

  std::vector<std::uint8_t> taken(static_cast<std::size_t>(hi - lo), 0);
  Rat cap_budget(0);  // sum of s_j for condition (a)
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    // Free positions left for this stage.
    std::vector<std::int64_t> free_pts;
    for (std::int64_t p = lo; p < hi; ++p)
      if (!taken[static_cast<std::size_t>(p - lo)]) free_pts.push_back(p);
    IndexSet free_set = IndexSet::finite(lo, hi, std::move(free_pts));

    PartialInjection f;
    AllocationStageReport stage;
    stage.set_index = i;
    if (!grouped) {
      // Stage feasibility per the remaining-density estimate: the images
      // written so far occupy at most the summed domain densities (an
      // injection moves, never multiplies, mass at window scale), so room
      // remains whenever the certificate holds.
      const Rat su = upper_density_of(cover.sets[i], lo, hi, false);
      const Rat room = 1 - cap_budget;
      if (!(su < room))
        throw CertificateError("no room left at set " + std::to_string(i) + ": " +
                               rat_detail("upper density", su) + ", " +
                               rat_detail("room", room));
      stage.cap = su;  // achieved image density bound
      cap_budget += su;
      f = greedy_injection(y, cover.sets[i], free_set, lo, hi);
    } else {
      // Stage feasibility via the grouped union bound: the images taken so
      // far have uniform density at most the grouped sum of domains.
      std::map<int, IndexSet> dom_unions;
      for (std::size_t j = 0; j < i; ++j) {
        auto it = dom_unions.find(cover.group_of[j]);
        if (it == dom_unions.end())
          dom_unions.emplace(cover.group_of[j], cover.sets[j]);
        else
          it->second = set_union(it->second, cover.sets[j]);
      }
      Rat grouped_sum(0);
      for (const auto& [g, u] : dom_unions) {
        (void)g;
        grouped_sum += upper_density_of(u, lo, hi, true);
      }
      const Rat si = upper_density_of(cover.sets[i], lo, hi, true);
      if (!(grouped_sum < 1 - si))
        throw CertificateError(
            "grouped certificate failed at set " + std::to_string(i) + ": " +
            rat_detail("grouped sum", grouped_sum) + " vs 1 - " + rat_str(si));
      f = greedy_injection_uniform(y, cover.sets[i], free_set, lo, hi);
    }
    for (const auto& [n, fn] : f.pairs) {
      if (taken[static_cast<std::size_t>(fn - lo)])
        throw std::logic_error("allocation image collision");
      taken[static_cast<std::size_t>(fn - lo)] = 1;
    }
    std::int64_t free_count = 0;
    for (auto v : taken) free_count += v ? 0 : 1;
    stage.free_density = Rat(free_count, hi - lo);
    alloc.stages.push_back(stage);
    alloc.injections.push_back(std::move(f));
  }
  return alloc;
}

}  // namespace

Allocation build_allocation_a(const Sequence& y, const OmegaCoverDesc& cover, int bits,
                              std::int64_t lo, std::int64_t hi) {
  return build_impl(y, cover, bits, lo, hi, /*grouped=*/false);
}

Allocation build_allocation_b(const Sequence& y, const OmegaCoverDesc& cover, int bits,
                              std::int64_t lo, std::int64_t hi) {
  return build_impl(y, cover, bits, lo, hi, /*grouped=*/true);
}

AllocEncodeResult encode_with_allocation(const Window& x, const Allocation& alloc) {
  AllocEncodeResult res;
  res.stream.origin = alloc.range_lo;
  res.stream.bits.assign(static_cast<std::size_t>(alloc.range_hi - alloc.range_lo), 0);
  std::vector<std::uint8_t> written(res.stream.bits.size(), 0);
  const std::int64_t span = static_name_span(x.alphabet, alloc.bits);
  for (std::int64_t n = alloc.range_lo; n < alloc.range_hi; ++n) {
    if (n < x.lo() || n + span > x.hi()) {
      res.shortfall.push_back(n);
      continue;
    }
    std::vector<std::int64_t> cells;
    bool ok = true;
    for (int j = 0; j < alloc.bits && ok; ++j) {
      auto p = alloc.position(n, j);
      ok = p.has_value() && *p >= alloc.range_lo && *p < alloc.range_hi;
      if (ok) cells.push_back(*p);
    }
    if (!ok) {
      res.shortfall.push_back(n);
      continue;
    }
    auto name = static_name(x, n, alloc.bits);
    for (int j = 0; j < alloc.bits; ++j) {
      const std::size_t cell = static_cast<std::size_t>(cells[j] - alloc.range_lo);
      if (written[cell]) throw std::logic_error("allocation wrote one cell twice");
      written[cell] = 1;
      res.stream.bits[cell] = name[static_cast<std::size_t>(j)];
    }
    res.covered.push_back(n);
  }
  return res;
}

std::map<std::int64_t, std::vector<std::uint8_t>> decode_with_allocation(
    const CodeStream& w, const Allocation& alloc) {
  std::map<std::int64_t, std::vector<std::uint8_t>> names;
  for (std::int64_t n : alloc.covered_positions()) {
    std::vector<std::uint8_t> name;
    bool ok = true;
    for (int j = 0; j < alloc.bits && ok; ++j) {
      auto p = alloc.position(n, j);
      ok = p.has_value();
      if (!ok) break;
      const std::int64_t cell = *p - w.origin;
      if (cell < 0 || cell >= static_cast<std::int64_t>(w.bits.size()))
        throw std::out_of_range("allocation range exceeds the code stream");
      name.push_back(w.bits[static_cast<std::size_t>(cell)]);
    }
    if (ok) names.emplace(n, std::move(name));
  }
  return names;
}

}  // namespace symgen
