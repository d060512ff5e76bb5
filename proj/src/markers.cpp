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

#include "symgen/markers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symgen/kernels.hpp"

namespace symgen {

namespace {

std::int64_t mod64(std::int64_t i, std::int64_t m) {
  std::int64_t r = i % m;
  return r < 0 ? r + m : r;
}

bool indicator_is_periodic(const PeriodicIndicator& p) {
  const std::int64_t l = static_cast<std::int64_t>(p.left.size());
  const std::int64_t r = static_cast<std::int64_t>(p.right.size());
  const std::int64_t period = std::lcm(l, r);
  for (std::int64_t i = p.core_origin - period; i < p.core_end(); ++i)
    if (p.at(i) != (p.right[mod64(i - p.core_end(), r)] != 0)) return false;
  return true;
}

void require_aperiodic(const Sequence& x) {
  if (std::holds_alternative<EventuallyPeriodicSeq>(x)) {
    if (std::get<EventuallyPeriodicSeq>(x).periodic())
      throw std::invalid_argument("input sequence is periodic");
    return;
  }
  if (std::holds_alternative<Window>(x)) {
    if (!std::get<Window>(x).aperiodic_window())
      throw std::invalid_argument("input window has a period below half its length");
  }
}

// Fill [u, v) with marks u + m'N (m' <= m) then u + mN + n'(N+1) (n' <= n).
void fill_gap(std::int64_t u, std::int64_t v, std::int64_t N,
              std::vector<std::int64_t>* out) {
  auto [m, n] = gap_fill_mn(v - u, N);
  for (std::int64_t j = 1; j <= m; ++j) out->push_back(u + j * N);
  for (std::int64_t j = 1; j <= n; ++j) out->push_back(u + m * N + j * (N + 1));
}

// --- low-frequency word search -------------------------------------------

struct SearchText {
  Window text;        // the faithful sample we search in
  bool ep = false;    // exact statistics available
  const EventuallyPeriodicSeq* seq = nullptr;
};

// Sample long enough that every subword of length <= n of the bi-infinite
// sequence occurs in it.
Window ep_sample(const EventuallyPeriodicSeq& ep, std::int64_t n) {
  const std::int64_t l = static_cast<std::int64_t>(ep.left_cycle.size());
  const std::int64_t r = static_cast<std::int64_t>(ep.right_cycle.size());
  return ep.materialize(ep.core_origin - l - n, ep.core_end() + r + n);
}

Rat ep_word_lower_freq(const EventuallyPeriodicSeq& ep, const std::vector<Sym>& word) {
  // Forward lower frequency is the density of tail occurrences; a word has
  // positive tail frequency iff it occurs with a start inside one right
  // cycle beyond the core.
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  const std::int64_t r = static_cast<std::int64_t>(ep.right_cycle.size());
  Window tail = ep.materialize(ep.core_end(), ep.core_end() + r + n - 1);
  auto hits = kernels::occurrences_kmp(tail.data, word);
  std::int64_t in_cycle = 0;
  for (std::int64_t h : hits)
    if (h < r) ++in_cycle;
  return Rat(in_cycle, r);
}

// Lexicographically smallest length-n subword strictly greater than `prev`
// (or the overall smallest when prev is empty). Returns nullopt when no
// subword qualifies.
std::optional<std::vector<Sym>> next_lex_subword(const Window& w, std::int64_t n,
                                                 const std::vector<Sym>& prev) {
  const std::int64_t starts = w.size() - n + 1;
  std::int64_t best = -1;
  auto cmp = [&](std::int64_t a, std::int64_t b) {  // content at a < content at b
    for (std::int64_t j = 0; j < n; ++j) {
      const Sym x = w.data[static_cast<std::size_t>(a + j)];
      const Sym y = w.data[static_cast<std::size_t>(b + j)];
      if (x != y) return x < y;
    }
    return false;
  };
  auto gt_prev = [&](std::int64_t a) {
    if (prev.empty()) return true;
    for (std::int64_t j = 0; j < n; ++j) {
      const Sym x = w.data[static_cast<std::size_t>(a + j)];
      if (x != prev[static_cast<std::size_t>(j)]) return x > prev[static_cast<std::size_t>(j)];
    }
    return false;
  };
  for (std::int64_t i = 0; i < starts; ++i) {
    if (!gt_prev(i)) continue;
    if (best < 0 || cmp(i, best)) best = i;
  }
  if (best < 0) return std::nullopt;
  return std::vector<Sym>(w.data.begin() + best, w.data.begin() + best + n);
}

}  // namespace

std::pair<std::int64_t, std::int64_t> gap_fill_mn(std::int64_t L, std::int64_t N) {
  if (L < N * N - 1) throw std::invalid_argument("gap too short for marker fill");
  const std::int64_t n = L % N;
  const std::int64_t m = (L - n * (N + 1)) / N;
  return {m, n};
}

std::pair<std::int64_t, std::int64_t> block_replacement_counts(std::int64_t gap,
                                                               std::int64_t N) {
  // k1*N + k2*(N+1) = gap forces k2 = gap mod N; minimality picks the
  // representative in [1, N].
  const std::int64_t k2 = gap % N == 0 ? N : gap % N;
  const std::int64_t k1 = (gap - k2 * (N + 1)) / N;
  if (k1 < 1 || k1 * N + k2 * (N + 1) != gap)
    throw std::invalid_argument("block gap below 2N^2: no feasible (k1, k2)");
  return {k1, k2};
}

bool is_n_marker(const std::vector<std::int64_t>& marks, std::int64_t N) {
  for (std::size_t i = 1; i < marks.size(); ++i) {
    const std::int64_t g = marks[i] - marks[i - 1];
    if (g != N && g != N + 1) return false;
  }
  return marks.size() >= 2;
}

Window low_freq_word(const Sequence& x, const Rat& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must be in (0, 1)");
  require_aperiodic(x);
  const bool is_ep = std::holds_alternative<EventuallyPeriodicSeq>(x);
  const EventuallyPeriodicSeq* ep =
      is_ep ? &std::get<EventuallyPeriodicSeq>(x) : nullptr;
  Window base = is_ep ? Window{}
                      : (std::holds_alternative<Window>(x)
                             ? std::get<Window>(x)
                             : std::get<BlockScheduleSeq>(x).materialize_prefix(
                                   std::get<BlockScheduleSeq>(x).horizon));

  const std::int64_t threshold = to_int64(ceil_rat(1 / eps));  // need N_n > 1/eps

  // Least qualifying length. Complexity is nondecreasing for bi-infinite
  // sequences, so the eventually periodic case can binary search; windows
  // scan linearly (their tail complexity decays).
  std::int64_t n_star = -1;
  if (is_ep) {
    std::int64_t lo = 1, hi = 1;
    auto count_at = [&](std::int64_t n) {
      Window s = ep_sample(*ep, n);
      return kernels::distinct_subword_count(s.data, n);
    };
    while (Rat(count_at(hi)) * eps <= 1) {
      hi *= 2;
      if (hi > (std::int64_t{1} << 22))
        throw std::length_error("low-frequency word search exceeded the length cap");
    }
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (Rat(count_at(mid)) * eps > 1)
        hi = mid;
      else
        lo = mid + 1;
    }
    n_star = lo;
  } else {
    for (std::int64_t n = 1; n <= base.size(); ++n) {
      if (Rat(kernels::distinct_subword_count(base.data, n)) * eps > 1) {
        n_star = n;
        break;
      }
      if (n > base.size() / 2)
        throw std::invalid_argument(
            "sample complexity stays below 1/eps: no qualifying word length");
    }
    if (n_star < 0)
      throw std::invalid_argument(
          "sample complexity stays below 1/eps: no qualifying word length");
  }

  Window sample = is_ep ? ep_sample(*ep, n_star) : base;
  const std::int64_t starts = sample.size() - n_star + 1;
  std::vector<Sym> prev;
  // Words failing the frequency test are enumerated in lexicographic order;
  // at most 1/eps of them can fail, and for eventually periodic inputs only
  // tail words (at most one right cycle's worth) can.
  for (std::int64_t round = 0; round <= threshold + 2; ++round) {
    auto cand = next_lex_subword(sample, n_star, prev);
    if (!cand) break;
    const Rat freq =
        is_ep ? ep_word_lower_freq(*ep, *cand)
              : Rat(static_cast<std::int64_t>(
                        kernels::occurrences_kmp(sample.data, *cand).size()),
                    starts);
    if (freq < eps) {
      Window w;
      w.alphabet = sequence_alphabet(x);
      w.data = *cand;
      w.origin = 0;
      return w;
    }
    prev = *cand;
  }
  throw std::logic_error("no low-frequency word at the pigeonhole length");
}

namespace {

// --- eventually periodic marker pipeline ----------------------------------
//
// Works on a materialized list of positions over a span wide enough that
// every query the final indicator construction makes is faithful, then
// rebuilds the indicator with binary-search lookups.

struct EpMarkerResult {
  std::vector<std::int64_t> marks;  // faithful on [faithful_lo, faithful_hi)
  std::int64_t faithful_lo, faithful_hi;
  std::int64_t left_len, right_len;  // tail periods of the true mark set
  std::int64_t core_lo, core_hi;     // aperiodic zone bounds
};

EpMarkerResult ep_marker_pipeline(const EventuallyPeriodicSeq& x, std::int64_t N) {
  const std::int64_t N2 = N * N;
  Window a = low_freq_word(Sequence(x), Rat(1, N2));
  const std::int64_t wl = a.size();
  const std::int64_t l = static_cast<std::int64_t>(x.left_cycle.size());
  const std::int64_t r = static_cast<std::int64_t>(x.right_cycle.size());

  // Occurrence starts are periodic with period l (resp. r) outside
  // [occ_lo, occ_hi).
  const std::int64_t occ_lo = x.core_origin - wl;
  const std::int64_t occ_hi = x.core_end();

  // The aperiodic zone of the final marks: occurrence core widened by the
  // thinning lookahead plus the largest possible fill reach.
  const std::int64_t reach = N2 + std::max<std::int64_t>(N2, std::lcm(l, r)) + 2 * N + 4;
  std::int64_t core_lo = occ_lo - reach;
  std::int64_t core_hi = occ_hi + reach;

  // Faithful span: one tail period past the core on each side, plus slack
  // consumed by thinning and fill lookups.
  const std::int64_t slack = N2 + reach;
  const std::int64_t S_lo = core_lo - std::max(l, N2) - slack;
  const std::int64_t S_hi = core_hi + std::max(r, N2) + slack;
  if (S_hi - S_lo > (std::int64_t{1} << 24))
    throw std::length_error("marker span exceeds the desk-scale cap");

  Window text = x.materialize(S_lo, S_hi + wl - 1);
  std::vector<std::int64_t> occ;
  for (std::int64_t h : kernels::occurrences_kmp(text.data, a.data))
    occ.push_back(h + S_lo);

  // Thin: keep occurrences with no successor within N^2. Survivors whose
  // lookahead extends past the span are suspect and dropped.
  std::vector<std::int64_t> surv;
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (i + 1 == occ.size() || occ[i + 1] >= occ[i] + N2)
      if (occ[i] <= S_hi - N2) surv.push_back(occ[i]);
  if (surv.empty()) throw std::logic_error("thinning removed every occurrence");

  // Tail occupancy is a property of the thinned set: survivors are
  // l-periodic on (-inf, occ_lo - N^2) and r-periodic on [occ_hi, inf), so
  // one period window decides each side.
  auto any_surv_in = [&](std::int64_t a_, std::int64_t b_) {
    auto it = std::lower_bound(surv.begin(), surv.end(), a_);
    return it != surv.end() && *it < b_;
  };
  const bool left_tail_occupied = any_surv_in(occ_lo - N2 - l, occ_lo - N2);
  const bool right_tail_occupied = any_surv_in(occ_hi, occ_hi + r);
  const std::int64_t left_len = left_tail_occupied ? l : N2;
  const std::int64_t right_len = right_tail_occupied ? r : N2;

  // Unoccupied tails must really be empty of survivors (periodicity makes
  // the probe window decisive).
  if (!left_tail_occupied && surv.front() < occ_lo - N2)
    throw std::logic_error("survivor below an unoccupied left tail");
  if (!right_tail_occupied && surv.back() >= occ_hi)
    throw std::logic_error("survivor inside an unoccupied right tail");

  // Extend by +-N^2 progressions when a side has no surviving marks.
  std::vector<std::int64_t> ext;
  if (!left_tail_occupied) {
    for (std::int64_t p = surv.front() - N2; p >= S_lo; p -= N2) ext.push_back(p);
    std::reverse(ext.begin(), ext.end());
  }
  ext.insert(ext.end(), surv.begin(), surv.end());
  if (!right_tail_occupied) {
    for (std::int64_t p = surv.back() + N2; p <= S_hi; p += N2) ext.push_back(p);
  }
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());

  std::vector<std::int64_t> marks;
  marks.reserve(ext.size() * 4);
  for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
    marks.push_back(ext[i]);
    fill_gap(ext[i], ext[i + 1], N, &marks);
  }
  if (!ext.empty()) marks.push_back(ext.back());
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  EpMarkerResult res;
  res.marks = std::move(marks);
  res.faithful_lo = S_lo + slack;
  res.faithful_hi = S_hi - slack;
  res.left_len = left_len;
  res.right_len = right_len;
  res.core_lo = core_lo;
  res.core_hi = core_hi;
  return res;
}

PeriodicIndicator indicator_from_marks(const EpMarkerResult& m) {
  EpStructure st{m.left_len, m.right_len, m.core_lo, m.core_hi};
  if (m.core_lo - m.left_len < m.faithful_lo || m.core_hi + m.right_len > m.faithful_hi)
    throw std::logic_error("marker span does not cover the indicator structure");
  return build_indicator(st, [&](std::int64_t i) {
    return std::binary_search(m.marks.begin(), m.marks.end(), i);
  });
}

struct WindowMarksForward {
  std::int64_t lo = 0, hi = 0;
  std::vector<std::int64_t> marks;  // may extend past the host window
};

WindowMarksForward window_marker_pipeline(const Window& x, std::int64_t N) {
  const std::int64_t N2 = N * N;
  if (x.size() < N2) throw std::invalid_argument("window shorter than N^2");
  Window a = low_freq_word(Sequence(x), Rat(1, N2));
  std::vector<std::int64_t> occ;
  for (std::int64_t h : kernels::occurrences_kmp(x.data, a.data))
    occ.push_back(h + x.origin);

  std::vector<std::int64_t> surv;
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (i + 1 == occ.size() || occ[i + 1] >= occ[i] + N2) surv.push_back(occ[i]);
  if (surv.empty()) throw std::logic_error("thinning removed every occurrence");

  // Extend one step past both edges so the fill covers boundary segments.
  std::vector<std::int64_t> ext;
  for (std::int64_t p = surv.front(); p >= x.lo() - N2; p -= N2) ext.push_back(p);
  std::reverse(ext.begin(), ext.end());
  ext.insert(ext.end(), surv.begin(), surv.end());
  for (std::int64_t p = surv.back() + N2; p <= x.hi() + N2; p += N2) ext.push_back(p);
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());

  std::vector<std::int64_t> marks;
  for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
    marks.push_back(ext[i]);
    fill_gap(ext[i], ext[i + 1], N, &marks);
  }
  marks.push_back(ext.back());
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return WindowMarksForward{x.lo(), x.hi(), std::move(marks)};
}

MarkerSeq finish_window_marker(const WindowMarksForward& wm, std::int64_t N) {
  std::vector<std::int64_t> in_range;
  for (std::int64_t p : wm.marks)
    if (p >= wm.lo && p < wm.hi) in_range.push_back(p);
  MarkerSeq ms;
  ms.n = N;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(wm.hi - wm.lo), 0);
  for (std::int64_t p : in_range) bits[static_cast<std::size_t>(p - wm.lo)] = 1;
  Window indicator{Alphabet::binary(), std::vector<Sym>(bits.begin(), bits.end()),
                   wm.lo};
  ms.aperiodic = indicator.aperiodic_window();
  ms.positions = IndexSet::finite(wm.lo, wm.hi, std::move(in_range));
  ms.exact = false;
  return ms;
}

// Strict local lexicographic minimality of the content word at each mark.
template <typename WordLess>
bool is_anchor(const std::vector<std::int64_t>& marks, std::size_t idx, std::int64_t K,
               const WordLess& word_less) {
  for (std::size_t j = 0; j < marks.size(); ++j) {
    if (j == idx || std::llabs(marks[j] - marks[idx]) > K) continue;
    if (!word_less(marks[idx], marks[j])) return false;
  }
  return true;
}

}  // namespace

MarkerSeq n_marker(const Sequence& x, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("marker spacing must be >= 2");
  require_aperiodic(x);
  if (std::holds_alternative<EventuallyPeriodicSeq>(x)) {
    auto res = ep_marker_pipeline(std::get<EventuallyPeriodicSeq>(x), N);
    PeriodicIndicator marks = indicator_from_marks(res);
    MarkerSeq ms;
    ms.n = N;
    ms.aperiodic = !indicator_is_periodic(marks);
    ms.positions = IndexSet(std::move(marks));
    ms.exact = true;
    return ms;
  }
  const Window& w = std::holds_alternative<Window>(x)
                        ? std::get<Window>(x)
                        : throw std::invalid_argument("n_marker needs window or EP input");
  return finish_window_marker(window_marker_pipeline(w, N), N);
}

MarkerSeq aperiodic_marker(const Sequence& x, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("marker spacing must be >= 2");
  require_aperiodic(x);
  const std::int64_t NN2 = 2 * N * N;  // start the pipeline at 2N^2

  if (std::holds_alternative<EventuallyPeriodicSeq>(x)) {
    const auto& ep = std::get<EventuallyPeriodicSeq>(x);
    auto stage1 = ep_marker_pipeline(ep, NN2);
    PeriodicIndicator sparse = indicator_from_marks(stage1);
    if (indicator_is_periodic(sparse)) {
      // Delete the successor of every content-anchored mark. The anchors
      // are an equivariant function of x, so aperiodicity of x transfers.
      PeriodicIndicator reduced = sparse.reduced();
      const std::int64_t p = std::lcm(static_cast<std::int64_t>(reduced.left.size()),
                                      static_cast<std::int64_t>(reduced.right.size()));
      const std::int64_t wlen = std::min<std::int64_t>(std::max<std::int64_t>(p, 8), 256);
      const std::int64_t K = std::min<std::int64_t>(2 * p + NN2, 1 << 15);
      auto word_less = [&](std::int64_t u, std::int64_t v) {
        for (std::int64_t j = 0; j < wlen; ++j)
          if (ep.at(u + j) != ep.at(v + j)) return ep.at(u + j) < ep.at(v + j);
        return false;
      };
      std::vector<std::int64_t> marks = stage1.marks;
      std::vector<std::int64_t> pruned;
      for (std::size_t i = 0; i < marks.size(); ++i) {
        const bool drop = i > 0 && is_anchor(marks, i - 1, K, word_less);
        if (!drop) pruned.push_back(marks[i]);
      }
      stage1.marks = std::move(pruned);
      sparse = indicator_from_marks(stage1);
      if (indicator_is_periodic(sparse))
        throw std::runtime_error(
            "could not break marker periodicity at desk scale (the nested "
            "intersection stage is infeasible here)");
    }

    // Replace each inter-mark block by 1 (0^{N-1}1)^{k1} (0^N 1)^{k2}.
    std::vector<std::int64_t> out_marks;
    const auto& sm = stage1.marks;
    for (std::size_t i = 0; i + 1 < sm.size(); ++i) {
      auto [k1, k2] = block_replacement_counts(sm[i + 1] - sm[i], N);
      out_marks.push_back(sm[i]);
      for (std::int64_t j = 1; j <= k1; ++j) out_marks.push_back(sm[i] + j * N);
      for (std::int64_t j = 1; j <= k2; ++j)
        out_marks.push_back(sm[i] + k1 * N + j * (N + 1));
    }
    if (!sm.empty()) out_marks.push_back(sm.back());
    std::sort(out_marks.begin(), out_marks.end());
    out_marks.erase(std::unique(out_marks.begin(), out_marks.end()), out_marks.end());
    EpMarkerResult res = stage1;
    res.marks = std::move(out_marks);
    PeriodicIndicator out = indicator_from_marks(res);
    MarkerSeq ms;
    ms.n = N;
    ms.aperiodic = !indicator_is_periodic(out);
    ms.positions = IndexSet(std::move(out));
    ms.exact = true;
    return ms;
  }

  const Window& w = std::holds_alternative<Window>(x)
                        ? std::get<Window>(x)
                        : throw std::invalid_argument("aperiodic_marker needs window or EP");
  auto stage1 = window_marker_pipeline(w, NN2);
  {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(w.size()), 0);
    for (std::int64_t p : stage1.marks)
      if (p >= w.lo() && p < w.hi()) bits[static_cast<std::size_t>(p - w.lo())] = 1;
    Window ind{Alphabet::binary(), std::vector<Sym>(bits.begin(), bits.end()), w.lo()};
    auto per = ind.content_period();
    if (per && *per <= w.size() / 2) {
      const std::int64_t p = *per;
      const std::int64_t wlen = std::min<std::int64_t>(std::max<std::int64_t>(p, 8), 256);
      const std::int64_t K = std::min<std::int64_t>(2 * p + NN2, 1 << 15);
      auto word_less = [&](std::int64_t u, std::int64_t v) {
        for (std::int64_t j = 0; j < wlen; ++j) {
          const bool ub = u + j >= w.lo() && u + j < w.hi();
          const bool vb = v + j >= w.lo() && v + j < w.hi();
          if (!ub || !vb) return ub < vb;
          if (w.at(u + j) != w.at(v + j)) return w.at(u + j) < w.at(v + j);
        }
        return false;
      };
      std::vector<std::int64_t> pruned;
      for (std::size_t i = 0; i < stage1.marks.size(); ++i) {
        const bool drop = i > 0 && is_anchor(stage1.marks, i - 1, K, word_less);
        if (!drop) pruned.push_back(stage1.marks[i]);
      }
      stage1.marks = std::move(pruned);
    }
  }
  std::vector<std::int64_t> out_marks;
  for (std::size_t i = 0; i + 1 < stage1.marks.size(); ++i) {
    const std::int64_t u = stage1.marks[i], v = stage1.marks[i + 1];
    auto [k1, k2] = block_replacement_counts(v - u, N);
    out_marks.push_back(u);
    for (std::int64_t j = 1; j <= k1; ++j) out_marks.push_back(u + j * N);
    for (std::int64_t j = 1; j <= k2; ++j) out_marks.push_back(u + k1 * N + j * (N + 1));
  }
  if (!stage1.marks.empty()) out_marks.push_back(stage1.marks.back());
  std::sort(out_marks.begin(), out_marks.end());
  out_marks.erase(std::unique(out_marks.begin(), out_marks.end()), out_marks.end());
  return finish_window_marker(WindowMarksForward{w.lo(), w.hi(), std::move(out_marks)},
                              N);
}

MarkerSeq scale_marker(const Window& x, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("marker spacing must be >= 2");
  const std::int64_t N2 = N * N;
  const std::int64_t wlen = 24;
  // Pre-marks: strict local lexicographic minima of the content.
  std::vector<std::int64_t> pre;
  for (std::int64_t u = x.lo(); u < x.hi(); ++u) {
    bool minimal = true;
    for (std::int64_t v = std::max(x.lo(), u - N); v <= std::min(x.hi() - 1, u + N) && minimal;
         ++v) {
      if (v == u) continue;
      bool less = false;
      for (std::int64_t j = 0; j < wlen; ++j) {
        const bool ub = u + j < x.hi(), vb = v + j < x.hi();
        if (!ub || !vb) {
          less = ub < vb;
          break;
        }
        if (x.at(u + j) != x.at(v + j)) {
          less = x.at(u + j) < x.at(v + j);
          break;
        }
      }
      minimal = less;
    }
    if (minimal) pre.push_back(u);
  }
  std::vector<std::int64_t> surv;
  for (std::int64_t p : pre)
    if (surv.empty() || p >= surv.back() + N2) surv.push_back(p);
  if (surv.empty()) surv.push_back(x.lo() + x.size() / 2);
  std::vector<std::int64_t> ext;
  for (std::int64_t p = surv.front(); p >= x.lo() - N2; p -= N2) ext.push_back(p);
  std::reverse(ext.begin(), ext.end());
  ext.insert(ext.end(), surv.begin(), surv.end());
  for (std::int64_t p = surv.back() + N2; p <= x.hi() + N2; p += N2) ext.push_back(p);
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  std::vector<std::int64_t> marks;
  for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
    marks.push_back(ext[i]);
    fill_gap(ext[i], ext[i + 1], N, &marks);
  }
  marks.push_back(ext.back());
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return finish_window_marker(WindowMarksForward{x.lo(), x.hi(), std::move(marks)}, N);
}

std::vector<std::pair<std::int64_t, std::int64_t>> marker_blocks(const MarkerSeq& m,
                                                                 std::int64_t lo,
                                                                 std::int64_t hi) {
  auto pts = m.positions.positions(lo, hi);
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) blocks.emplace_back(pts[i], pts[i + 1]);
  return blocks;
}

}  // namespace symgen
