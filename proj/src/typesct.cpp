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

#include "symgen/typesct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symgen {

namespace {

constexpr std::int64_t kEnumerationCap = std::int64_t{1} << 20;

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

double entropy_bits(const std::vector<double>& p) {
  double h = 0;
  for (double v : p)
    if (v > 1e-15) h -= v * std::log2(v);
  return h;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > kEnumerationCap * 64) return kEnumerationCap * 64 + 1;
    r *= b;
  }
  return r;
}

double log2_bigint(const BigInt& v) {
  if (v <= 0) return -1e300;
  return static_cast<double>(msb(v)) +
         std::log2(to_double(Rat(v, BigInt(1) << msb(v))));
}

}  // namespace

void EmpiricalDistribution::validate() const {
  Rat sum(0);
  for (const Rat& p : probs) {
    if (p < 0) throw std::invalid_argument("negative probability");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("probabilities must sum to one");
}

EmpiricalDistribution type_of(const Window& x) {
  if (x.size() < 1) throw std::invalid_argument("empty word has no type");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(x.alphabet.size()), 0);
  for (Sym s : x.data) counts[static_cast<std::size_t>(s)]++;
  EmpiricalDistribution d;
  d.sample_n = x.size();
  for (std::int64_t c : counts) d.probs.emplace_back(c, x.size());
  d.validate();
  return d;
}

double l1_distance(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0;
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    s += std::abs(a - b);
  }
  return s;
}

TypeClassInfo type_class_size(const EmpiricalDistribution& P, int alphabet_size) {
  P.validate();
  const std::int64_t n = P.sample_n;
  if (n < 1) throw std::invalid_argument("distribution is not an n-type");
  BigInt size = factorial(n);
  std::vector<double> probs;
  for (const Rat& p : P.probs) {
    Rat cnt = p * n;
    if (denominator(cnt) != 1)
      throw std::invalid_argument("distribution is not an n-type");
    size /= factorial(to_int64(numerator(cnt)));
    probs.push_back(to_double(p));
  }
  TypeClassInfo info;
  info.exact = size;
  info.nH = static_cast<double>(n) * entropy_bits(probs);
  const double poly = alphabet_size * std::log2(static_cast<double>(n + 1));
  info.log2_lower = info.nH - poly;
  info.log2_upper = info.nH;
  const double log2_exact = log2_bigint(size);
  if (log2_exact > info.log2_upper + 1e-6 || log2_exact < info.log2_lower - 1e-6)
    throw std::logic_error("type class size escaped the sandwich bounds");
  return info;
}

BigInt count_types(std::int64_t n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  BigInt exact = binomial(n + d - 1, d - 1);
  BigInt bound = 1;
  for (int i = 0; i < d; ++i) bound *= (n + 1);
  if (exact > bound) throw std::logic_error("type count exceeded (n+1)^d");
  return exact;
}

EntropyBoundedCount count_entropy_bounded(std::int64_t n, int d, double h,
                                          bool bound_only) {
  if (h <= 0) throw std::invalid_argument("entropy threshold must be positive");
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  EntropyBoundedCount res;
  res.log2_bound = d * std::log2(static_cast<double>(n + 1)) + n * h;
  const std::int64_t total = ipow(d, n);
  if (bound_only) return res;
  if (total > kEnumerationCap)
    throw std::invalid_argument("enumeration above cap: pass bound_only");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
  BigInt hits = 0;
  for (std::int64_t code = 0; code < total; ++code) {
    std::fill(counts.begin(), counts.end(), 0);
    std::int64_t v = code;
    for (std::int64_t i = 0; i < n; ++i) {
      counts[static_cast<std::size_t>(v % d)]++;
      v /= d;
    }
    double hh = 0;
    for (std::int64_t c : counts)
      if (c > 0) {
        const double p = static_cast<double>(c) / static_cast<double>(n);
        hh -= p * std::log2(p);
      }
    if (hh < h) ++hits;
  }
  res.exact_available = true;
  res.exact = hits;
  if (hits > 0 && log2_bigint(hits) > res.log2_bound + 1e-6)
    throw std::logic_error("entropy-bounded count exceeded its bound");
  return res;
}

std::vector<double> JointDistribution::marginal1() const {
  std::vector<double> m(static_cast<std::size_t>(d1), 0.0);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) m[static_cast<std::size_t>(a)] += at(a, b);
  return m;
}

double JointDistribution::cond_entropy_2_given_1() const {
  auto m = marginal1();
  double h = 0;
  for (int a = 0; a < d1; ++a) {
    if (m[static_cast<std::size_t>(a)] < 1e-15) continue;
    double ha = 0;
    for (int b = 0; b < d2; ++b) {
      const double c = at(a, b) / m[static_cast<std::size_t>(a)];
      if (c > 1e-15) ha -= c * std::log2(c);
    }
    h += m[static_cast<std::size_t>(a)] * ha;
  }
  return h;
}

void JointDistribution::validate() const {
  if (d1 < 1 || d2 < 1 || p.size() != static_cast<std::size_t>(d1) * d2)
    throw std::invalid_argument("malformed joint distribution");
  double s = 0;
  for (double v : p) {
    if (v < -1e-12) throw std::invalid_argument("negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("joint distribution must sum to one");
}

JointDistribution joint_type_of(const std::vector<Sym>& y, const std::vector<Sym>& z,
                                int d1, int d2, std::int64_t k) {
  if (y.size() != z.size()) throw std::invalid_argument("component length mismatch");
  const std::int64_t n = static_cast<std::int64_t>(y.size());
  if (n < k || k < 1) throw std::invalid_argument("word shorter than the block length");
  const std::int64_t rows = ipow(d1, k), cols = ipow(d2, k);
  if (rows * cols > (std::int64_t{1} << 26))
    throw std::invalid_argument("k-block product alphabet too large");
  JointDistribution J;
  J.d1 = static_cast<int>(rows);
  J.d2 = static_cast<int>(cols);
  J.p.assign(static_cast<std::size_t>(rows * cols), 0.0);
  const std::int64_t starts = n - k + 1;
  for (std::int64_t i = 0; i < starts; ++i) {
    std::int64_t a = 0, b = 0;
    for (std::int64_t j = 0; j < k; ++j) {
      a = a * d1 + y[static_cast<std::size_t>(i + j)];
      b = b * d2 + z[static_cast<std::size_t>(i + j)];
    }
    J.p[static_cast<std::size_t>(a) * J.d2 + b] += 1.0 / static_cast<double>(starts);
  }
  return J;
}

RelativeTypeParams derive_delta(const JointDistribution& P, double epsilon,
                                std::int64_t k, int base_d1, int base_d2) {
  P.validate();
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (base_d2 < 1) throw std::invalid_argument("empty second alphabet");
  auto m = P.marginal1();
  double m_min = 2.0;
  for (double v : m)
    if (v > 1e-15) m_min = std::min(m_min, v);
  if (m_min > 1.5) throw std::invalid_argument("conditioning is empty: no support");

  const double log_d2 = std::max(1e-12, std::log2(static_cast<double>(base_d2)));
  const double term_merge = (epsilon / 2) / (static_cast<double>(k) * log_d2);
  const double term_support = m_min / 2;

  // Largest delta for which the conditional l1 deviation eta =
  // 2 delta / (m_min - delta) keeps every conditional entropy within
  // epsilon/2, via the modulus |H(Q') - H(Q)| <= eta log2(|support|/eta).
  const double d2_block =
      std::max(2.0, std::pow(static_cast<double>(base_d2), static_cast<double>(k)));
  auto modulus_ok = [&](double delta) {
    if (delta >= m_min) return false;
    const double eta = 2 * delta / (m_min - delta);
    if (eta > 0.5) return false;
    if (eta < 1e-300) return true;
    return eta * std::log2(d2_block / eta) <= epsilon / 2;
  };
  double lo = 0.0, hi = term_support;
  for (int it = 0; it < 80; ++it) {
    const double mid = (lo + hi) / 2;
    if (modulus_ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  const double term_entropy = lo;

  RelativeTypeParams params;
  params.epsilon = epsilon;
  params.delta0 = std::min({term_merge, term_support, term_entropy});
  params.delta = epsilon * params.delta0 / 3;
  params.k = k;
  params.P = P;
  params.base_d1 = base_d1;
  params.base_d2 = base_d2;
  if (params.delta0 <= 0)
    throw std::invalid_argument("could not derive a positive delta0");
  return params;
}

namespace {

std::vector<double> pair_block_type(const std::vector<Sym>& y, const std::vector<Sym>& z,
                                    std::int64_t lo, std::int64_t hi, int d1, int d2,
                                    std::int64_t k) {
  const std::int64_t rows = ipow(d1, k), cols = ipow(d2, k);
  std::vector<double> t(static_cast<std::size_t>(rows * cols), 0.0);
  const std::int64_t starts = hi - lo - k + 1;
  if (starts < 1) return t;
  for (std::int64_t i = lo; i + k <= hi; ++i) {
    std::int64_t a = 0, b = 0;
    for (std::int64_t j = 0; j < k; ++j) {
      a = a * d1 + y[static_cast<std::size_t>(i + j)];
      b = b * d2 + z[static_cast<std::size_t>(i + j)];
    }
    t[static_cast<std::size_t>(a * cols + b)] += 1.0 / static_cast<double>(starts);
  }
  return t;
}

RelativeTypeBound relative_bound_impl(
    const RelativeTypeParams& params, const std::vector<Sym>& y,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals,
    bool higher_block) {
  const std::int64_t n = static_cast<std::int64_t>(y.size());
  const std::int64_t k = higher_block ? params.k : 1;
  std::vector<std::uint8_t> in_interval(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : intervals) {
    if (a < 0 || b > n || a >= b) throw std::invalid_argument("bad interval");
    if (higher_block) {
      const std::int64_t min_len = static_cast<std::int64_t>(
          std::ceil(4.0 * static_cast<double>(k) / params.epsilon));
      if (b - a < min_len)
        throw std::invalid_argument("interval shorter than required length " +
                                    std::to_string(min_len));
    }
    for (std::int64_t i = a; i < b; ++i) {
      if (in_interval[static_cast<std::size_t>(i)])
        throw std::invalid_argument("intervals overlap");
      in_interval[static_cast<std::size_t>(i)] = 1;
    }
  }
  std::int64_t j_size = 0;
  for (auto v : in_interval) j_size += v ? 0 : 1;
  if (!(static_cast<double>(j_size) > params.epsilon * static_cast<double>(n)))
    throw std::invalid_argument("|J| must exceed epsilon * n");

  const double H = params.P.cond_entropy_2_given_1();
  const double exponent =
      higher_block ? H / static_cast<double>(params.k) : H;
  RelativeTypeBound out;
  out.j_size = j_size;
  out.log2_bound_simplified =
      static_cast<double>(j_size) * (exponent + params.epsilon);
  out.log2_bound = static_cast<double>(params.P.d1) * params.P.d2 *
                       std::log2(static_cast<double>(n + 1)) +
                   out.log2_bound_simplified;

  const std::int64_t total = ipow(params.base_d2, n);
  if (total <= kEnumerationCap) {
    BigInt hits = 0;
    std::vector<Sym> z(static_cast<std::size_t>(n), 0);
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t v = code;
      for (std::int64_t i = 0; i < n; ++i) {
        z[static_cast<std::size_t>(i)] = static_cast<Sym>(v % params.base_d2);
        v /= params.base_d2;
      }
      auto full = pair_block_type(y, z, 0, n, params.base_d1, params.base_d2, k);
      if (l1_distance(full, params.P.p) >= params.delta) continue;
      bool ok = true;
      for (auto [a, b] : intervals) {
        auto sub = pair_block_type(y, z, a, b, params.base_d1, params.base_d2, k);
        if (l1_distance(sub, params.P.p) >= params.delta) {
          ok = false;
          break;
        }
      }
      if (ok) ++hits;
    }
    out.exact_available = true;
    out.exact = hits;
    if (hits > 0 && log2_bigint(hits) > out.log2_bound + 1e-6)
      throw std::logic_error("relative type count exceeded its bound");
  }
  return out;
}

}  // namespace

RelativeTypeBound relative_type_bound(
    const RelativeTypeParams& params, const std::vector<Sym>& y,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals) {
  return relative_bound_impl(params, y, intervals, /*higher_block=*/false);
}

RelativeTypeBound relative_type_bound_blocks(
    const RelativeTypeParams& params, const std::vector<Sym>& y,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals) {
  if (params.k < 1) throw std::invalid_argument("k must be >= 1");
  if (params.k == 1) return relative_bound_impl(params, y, intervals, false);
  return relative_bound_impl(params, y, intervals, /*higher_block=*/true);
}

}  // namespace symgen
