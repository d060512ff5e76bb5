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

#include "symgen/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symgen::kernels {

std::vector<std::int64_t> occurrences_serial(const std::vector<Sym>& text,
                                             const std::vector<Sym>& word) {
  if (word.empty()) throw std::invalid_argument("empty search word");
  std::vector<std::int64_t> out;
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  const std::int64_t m = static_cast<std::int64_t>(word.size());
  for (std::int64_t i = 0; i + m <= n; ++i) {
    bool hit = true;
    for (std::int64_t j = 0; j < m && hit; ++j) hit = text[i + j] == word[j];
    if (hit) out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> occurrences(const std::vector<Sym>& text,
                                      const std::vector<Sym>& word) {
  if (word.empty()) throw std::invalid_argument("empty search word");
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  const std::int64_t m = static_cast<std::int64_t>(word.size());
  if (n < (std::int64_t{1} << 14)) return occurrences_serial(text, word);
  const std::int64_t total = n - m + 1;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(std::max<std::int64_t>(total, 0)), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    bool h = true;
    for (std::int64_t j = 0; j < m && h; ++j) h = text[i + j] == word[j];
    hit[static_cast<std::size_t>(i)] = h ? 1 : 0;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < total; ++i)
    if (hit[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::vector<std::int64_t> occurrences_kmp(const std::vector<Sym>& text,
                                          const std::vector<Sym>& word) {
  if (word.empty()) throw std::invalid_argument("empty search word");
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  const std::int64_t m = static_cast<std::int64_t>(word.size());
  std::vector<std::int64_t> out;
  if (m > n) return out;
  std::vector<std::int64_t> fail(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 1; i < m; ++i) {
    std::int64_t k = fail[i - 1];
    while (k > 0 && word[i] != word[k]) k = fail[k - 1];
    if (word[i] == word[k]) ++k;
    fail[i] = k;
  }
  std::int64_t k = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    while (k > 0 && text[i] != word[k]) k = fail[k - 1];
    if (text[i] == word[k]) ++k;
    if (k == m) {
      out.push_back(i - m + 1);
      k = fail[k - 1];
    }
  }
  return out;
}

std::int64_t distinct_subword_count(const std::vector<Sym>& text, std::int64_t n) {
  const std::int64_t len = static_cast<std::int64_t>(text.size());
  if (n < 1 || n > len) return 0;
  constexpr std::uint64_t kMod1 = 0xFFFFFFFFFFFFFFC5ull;  // treated as wrap-around base ring
  constexpr std::uint64_t kBase1 = 1000003, kBase2 = 998244353;
  (void)kMod1;
  std::uint64_t pow1 = 1, pow2 = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    pow1 *= kBase1;
    pow2 *= kBase2;
  }
  std::vector<std::uint64_t> keys;
  keys.reserve(static_cast<std::size_t>(len - n + 1));
  std::uint64_t h1 = 0, h2 = 0;
  for (std::int64_t i = 0; i < len; ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(text[i]) + 1;
    h1 = h1 * kBase1 + v;
    h2 = h2 * kBase2 + v;
    if (i >= n) {
      const std::uint64_t u = static_cast<std::uint64_t>(text[i - n]) + 1;
      h1 -= u * pow1;
      h2 -= u * pow2;
    }
    if (i >= n - 1) keys.push_back(h1 * 0x9E3779B97F4A7C15ull ^ h2);
  }
  std::sort(keys.begin(), keys.end());
  return std::unique(keys.begin(), keys.end()) - keys.begin();
}

std::vector<std::int64_t> prefix_counts(const std::vector<std::uint8_t>& bits) {
  std::vector<std::int64_t> p(bits.size() + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) p[i + 1] = p[i] + (bits[i] ? 1 : 0);
  return p;
}

namespace {

inline std::int32_t upcross_at(const std::vector<std::int64_t>& prefix, std::int64_t n,
                               std::int64_t i, std::int64_t a_num, std::int64_t a_den,
                               std::int64_t b_num, std::int64_t b_den, std::int64_t N,
                               std::int32_t k_cap) {
  const std::int64_t m_max = std::min(N, n - i);
  std::int32_t count = 0;
  bool below_seen = false;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const std::int64_t c = prefix[i + m] - prefix[i];
    if (!below_seen) {
      if (c * a_den < a_num * m) below_seen = true;
    } else if (c * b_den > b_num * m) {
      ++count;
      below_seen = false;
      if (count >= k_cap) break;
    }
  }
  return count;
}

}  // namespace

std::vector<std::int32_t> upcross_counts_serial(const std::vector<std::uint8_t>& bits,
                                                std::int64_t a_num, std::int64_t a_den,
                                                std::int64_t b_num, std::int64_t b_den,
                                                std::int64_t N, std::int32_t k_cap) {
  if (a_num * b_den >= b_num * a_den) throw std::invalid_argument("need a < b");
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  auto prefix = prefix_counts(bits);
  std::vector<std::int32_t> out(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        upcross_at(prefix, n, i, a_num, a_den, b_num, b_den, N, k_cap);
  return out;
}

std::vector<std::int32_t> upcross_counts(const std::vector<std::uint8_t>& bits,
                                         std::int64_t a_num, std::int64_t a_den,
                                         std::int64_t b_num, std::int64_t b_den,
                                         std::int64_t N, std::int32_t k_cap) {
  if (a_num * b_den >= b_num * a_den) throw std::invalid_argument("need a < b");
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  if (n < (std::int64_t{1} << 12))
    return upcross_counts_serial(bits, a_num, a_den, b_num, b_den, N, k_cap);
  auto prefix = prefix_counts(bits);
  std::vector<std::int32_t> out(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        upcross_at(prefix, n, i, a_num, a_den, b_num, b_den, N, k_cap);
  return out;
}

namespace {

inline std::int64_t kth_upcross_time(const std::vector<std::int64_t>& prefix,
                                     std::int64_t n, std::int64_t i, std::int64_t a_num,
                                     std::int64_t a_den, std::int64_t b_num,
                                     std::int64_t b_den, std::int64_t N,
                                     std::int32_t k) {
  const std::int64_t m_max = std::min(N, n - i);
  std::int32_t count = 0;
  bool below_seen = false;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const std::int64_t c = prefix[i + m] - prefix[i];
    if (!below_seen) {
      if (c * a_den < a_num * m) below_seen = true;
    } else if (c * b_den > b_num * m) {
      ++count;
      below_seen = false;
      if (count >= k) return m;
    }
  }
  return -1;
}

}  // namespace

std::vector<std::int64_t> upcross_kth_times_serial(const std::vector<std::uint8_t>& bits,
                                                   std::int64_t a_num, std::int64_t a_den,
                                                   std::int64_t b_num, std::int64_t b_den,
                                                   std::int64_t N, std::int32_t k) {
  if (a_num * b_den >= b_num * a_den) throw std::invalid_argument("need a < b");
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  auto prefix = prefix_counts(bits);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), -1);
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        kth_upcross_time(prefix, n, i, a_num, a_den, b_num, b_den, N, k);
  return out;
}

std::vector<std::int64_t> upcross_kth_times(const std::vector<std::uint8_t>& bits,
                                            std::int64_t a_num, std::int64_t a_den,
                                            std::int64_t b_num, std::int64_t b_den,
                                            std::int64_t N, std::int32_t k) {
  if (a_num * b_den >= b_num * a_den) throw std::invalid_argument("need a < b");
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  if (n < (std::int64_t{1} << 12))
    return upcross_kth_times_serial(bits, a_num, a_den, b_num, b_den, N, k);
  auto prefix = prefix_counts(bits);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), -1);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        kth_upcross_time(prefix, n, i, a_num, a_den, b_num, b_den, N, k);
  return out;
}

std::pair<std::int64_t, std::int64_t> window_count_extremes_serial(
    const std::vector<std::uint8_t>& bits, std::int64_t w) {
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  if (w < 1 || w > n) throw std::invalid_argument("bad window width");
  std::int64_t c = 0;
  for (std::int64_t i = 0; i < w; ++i) c += bits[i] ? 1 : 0;
  std::int64_t mn = c, mx = c;
  for (std::int64_t i = 1; i + w <= n; ++i) {
    c += (bits[i + w - 1] ? 1 : 0) - (bits[i - 1] ? 1 : 0);
    mn = std::min(mn, c);
    mx = std::max(mx, c);
  }
  return {mn, mx};
}

std::pair<std::int64_t, std::int64_t> window_count_extremes(
    const std::vector<std::uint8_t>& bits, std::int64_t w) {
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  if (w < 1 || w > n) throw std::invalid_argument("bad window width");
  if (n < (std::int64_t{1} << 14)) return window_count_extremes_serial(bits, w);
  auto prefix = prefix_counts(bits);
  std::int64_t mn = std::numeric_limits<std::int64_t>::max();
  std::int64_t mx = std::numeric_limits<std::int64_t>::min();
  const std::int64_t starts = n - w + 1;
#pragma omp parallel for schedule(static) reduction(min : mn) reduction(max : mx)
  for (std::int64_t i = 0; i < starts; ++i) {
    const std::int64_t c = prefix[i + w] - prefix[i];
    mn = std::min(mn, c);
    mx = std::max(mx, c);
  }
  return {mn, mx};
}

}  // namespace symgen::kernels
