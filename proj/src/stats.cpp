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

#include "symgen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "symgen/kernels.hpp"

namespace symgen {

namespace {

std::vector<std::uint8_t> occurrence_bits(const Window& x, const std::vector<Sym>& word) {
  const std::int64_t n = x.size();
  const std::int64_t m = static_cast<std::int64_t>(word.size());
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  if (m > n) return bits;
  for (std::int64_t p : kernels::occurrences(x.data, word))
    bits[static_cast<std::size_t>(p)] = 1;
  return bits;
}

// Empirical tail extremes of S_N: running extremes of prefix averages over
// N in [N_max/16, N_max], plus uniform-window extremes at a width of
// N_max/16. Small-N transients are excluded on purpose.
void fill_empirical(FreqStats& fs, const std::vector<std::uint8_t>& bits) {
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  if (n < 16) throw std::invalid_argument("sample too short for empirical stats");
  auto prefix = kernels::prefix_counts(bits);
  const std::int64_t n_floor = std::max<std::int64_t>(1, n / 16);
  Rat lo(1), hi(0);
  for (std::int64_t N = n_floor; N <= n; ++N) {
    Rat s(prefix[static_cast<std::size_t>(N)], N);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  fs.s_low = lo;
  fs.s_high = hi;
  const std::int64_t w = std::max<std::int64_t>(1, n / 16);
  auto [mn, mx] = kernels::window_count_extremes(bits, w);
  fs.star_low = Rat(mn, w);
  fs.star_high = Rat(mx, w);
  fs.exact = false;
  fs.sample_length = n;
}

void fill_trace(FreqStats& fs, const std::vector<std::uint8_t>& bits,
                const std::vector<std::int64_t>& n_grid) {
  auto prefix = kernels::prefix_counts(bits);
  for (std::int64_t N : n_grid) {
    if (N < 1 || N > static_cast<std::int64_t>(bits.size()))
      throw std::invalid_argument("N_max exceeds window length");
    fs.trace.emplace_back(N, Rat(prefix[static_cast<std::size_t>(N)], N));
  }
}

}  // namespace

OccurrenceResult count_occurrences(const Window& x, const Window& a) {
  if (!(x.alphabet == a.alphabet)) throw std::invalid_argument("alphabet mismatch");
  if (a.size() == 0) throw std::invalid_argument("empty search word");
  auto rel = kernels::occurrences(x.data, a.data);
  std::vector<std::int64_t> abs;
  abs.reserve(rel.size());
  for (std::int64_t p : rel) abs.push_back(p + x.origin);
  const std::int64_t host_hi = std::max(x.lo(), x.hi() - a.size() + 1);
  OccurrenceResult res{static_cast<std::int64_t>(abs.size()),
                       IndexSet::finite(x.lo(), host_hi, std::move(abs))};
  return res;
}

PeriodicIndicator ep_occurrences(const EventuallyPeriodicSeq& x,
                                 const std::vector<Sym>& word) {
  if (word.empty()) throw std::invalid_argument("empty search word");
  const std::int64_t m = static_cast<std::int64_t>(word.size());
  EpStructure st = combine_structures({structure_of(x)}, m);
  return build_indicator(st, [&](std::int64_t i) {
    for (std::int64_t j = 0; j < m; ++j)
      if (x.at(i + j) != word[static_cast<std::size_t>(j)]) return false;
    return true;
  });
}

FreqStats freq_stats(const Sequence& x, const std::vector<Sym>& word,
                     const std::vector<std::int64_t>& n_grid) {
  FreqStats fs;
  if (std::holds_alternative<EventuallyPeriodicSeq>(x)) {
    const auto& ep = std::get<EventuallyPeriodicSeq>(x);
    PeriodicIndicator occ = ep_occurrences(ep, word);
    ExactDensities d = occ.densities();
    fs.s_low = d.s_low;
    fs.s_high = d.s_high;
    fs.star_low = d.star_low;
    fs.star_high = d.star_high;
    fs.exact = true;
    for (std::int64_t N : n_grid) {
      if (N < 1) throw std::invalid_argument("bad N in grid");
      fs.trace.emplace_back(N, Rat(occ.count(0, N), N));
    }
    return fs;
  }
  Window w = std::holds_alternative<Window>(x)
                 ? std::get<Window>(x)
                 : std::get<BlockScheduleSeq>(x).materialize_prefix(
                       n_grid.empty() ? std::int64_t{1} << 20
                                      : *std::max_element(n_grid.begin(), n_grid.end()));
  auto bits = occurrence_bits(w, word);
  fill_trace(fs, bits, n_grid);
  fill_empirical(fs, bits);
  return fs;
}

FreqStats freq_stats(const IndexSet& A, const std::vector<std::int64_t>& n_grid) {
  FreqStats fs;
  if (A.exact()) {
    ExactDensities d = A.exact_densities();
    fs.s_low = d.s_low;
    fs.s_high = d.s_high;
    fs.star_low = d.star_low;
    fs.star_high = d.star_high;
    fs.exact = true;
    for (std::int64_t N : n_grid) fs.trace.emplace_back(N, Rat(A.count(0, N), N));
    return fs;
  }
  const auto& f = A.finite_form();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(f.host_hi - f.host_lo), 0);
  for (std::int64_t p : f.points) bits[static_cast<std::size_t>(p - f.host_lo)] = 1;
  auto prefix = kernels::prefix_counts(bits);
  for (std::int64_t N : n_grid) {
    if (N < 1 || N > static_cast<std::int64_t>(bits.size()))
      throw std::invalid_argument("N_max exceeds host window");
    fs.trace.emplace_back(N, Rat(prefix[static_cast<std::size_t>(N)], N));
  }
  fill_empirical(fs, bits);
  return fs;
}

Window higher_block(const Window& x, std::int64_t k) {
  if (k < 1 || k > x.size()) throw std::invalid_argument("block length out of range");
  const int d = x.alphabet.size();
  double tokens = std::pow(static_cast<double>(d), static_cast<double>(k));
  if (tokens > static_cast<double>(1 << 20))
    throw std::invalid_argument("product alphabet too large to materialize");
  bool single_char = true;
  for (const auto& t : x.alphabet.tokens()) single_char = single_char && t.size() == 1;
  // Product alphabet in lexicographic order of the k-tuples.
  std::vector<std::string> toks;
  std::vector<Sym> tuple(static_cast<std::size_t>(k), 0);
  const std::int64_t total = static_cast<std::int64_t>(std::llround(tokens));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t v = idx;
    std::string t;
    for (std::int64_t j = k - 1; j >= 0; --j) {
      tuple[static_cast<std::size_t>(j)] = static_cast<Sym>(v % d);
      v /= d;
    }
    for (std::int64_t j = 0; j < k; ++j) {
      if (!t.empty() && !single_char) t += ",";
      t += x.alphabet.token(tuple[static_cast<std::size_t>(j)]);
    }
    toks.push_back(std::move(t));
  }
  Window out;
  out.alphabet = Alphabet(std::move(toks));
  out.origin = x.origin;
  for (std::int64_t i = 0; i + k <= x.size(); ++i) {
    std::int64_t code = 0;
    for (std::int64_t j = 0; j < k; ++j)
      code = code * d + x.data[static_cast<std::size_t>(i + j)];
    out.data.push_back(static_cast<Sym>(code));
  }
  return out;
}

double entropy_of_distribution(const std::vector<double>& probs) {
  double h = 0;
  for (double p : probs) {
    if (p < -1e-12) throw std::invalid_argument("negative probability");
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

double empirical_entropy(const Window& x) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(x.alphabet.size()), 0);
  for (Sym s : x.data) counts[static_cast<std::size_t>(s)]++;
  std::vector<double> probs;
  for (auto c : counts) probs.push_back(static_cast<double>(c) / x.size());
  return entropy_of_distribution(probs);
}

double empirical_entropy(const std::vector<double>& freqs) {
  double rho = 0;
  for (double p : freqs) {
    if (p < -1e-12) throw std::invalid_argument("negative frequency");
    rho += p;
  }
  if (rho > 1 + 1e-9) throw std::invalid_argument("frequencies sum above one");
  std::vector<double> probs = freqs;
  probs.push_back(std::max(0.0, 1.0 - rho));  // the defect as one extra atom
  return entropy_of_distribution(probs);
}

double block_entropy_rate(const Window& x, std::int64_t k) {
  if (k < 1 || k > std::max<std::int64_t>(1, x.size() / 10))
    throw std::invalid_argument("block length out of estimation range");
  std::map<std::vector<Sym>, std::int64_t> counts;
  for (std::int64_t i = 0; i + k <= x.size(); ++i) {
    std::vector<Sym> key(x.data.begin() + i, x.data.begin() + i + k);
    counts[key]++;
  }
  const double n = static_cast<double>(x.size() - k + 1);
  double h = 0;
  for (const auto& [key, c] : counts) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h / static_cast<double>(k);
}

RegimeReport classify_regime(const Sequence& x, const IndexSet& A,
                             const std::vector<std::int64_t>& n_grid, double tau) {
  if (n_grid.empty()) throw std::invalid_argument("empty N grid");
  RegimeReport rep;
  if (std::holds_alternative<EventuallyPeriodicSeq>(x) && A.exact()) {
    const auto& ind = A.indicator();
    ExactDensities d = ind.densities();
    rep.exact = true;
    rep.density = d.s_low;
    for (std::int64_t N : n_grid) rep.trace.emplace_back(N, Rat(ind.count(0, N), N));
    if (ind.empty()) throw std::invalid_argument("A does not occur");
    rep.verdict = d.s_low == 0 ? Regime::kNull : Regime::kPositiveRegular;
    return rep;
  }
  std::int64_t range_hi = A.known_range(0, *std::max_element(n_grid.begin(), n_grid.end())).second;
  Rat mn(1), mx(0);
  for (std::int64_t N : n_grid) {
    if (N < 1) throw std::invalid_argument("bad N in grid");
    if (N > range_hi) continue;
    auto [lo, unused] = A.known_range(0, N);
    (void)unused;
    Rat s(A.count(lo, lo + N), N);
    rep.trace.emplace_back(N, s);
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }
  if (rep.trace.size() < 2) {
    rep.verdict = Regime::kInconclusive;
    return rep;
  }
  const Rat t = Rat(static_cast<std::int64_t>(std::llround(tau * 1e9)), 1000000000);
  if (mx - mn > t)
    rep.verdict = Regime::kDivergent;
  else if (mx < t)
    rep.verdict = Regime::kNull;
  else
    rep.verdict = Regime::kPositiveRegular;
  return rep;
}

}  // namespace symgen
