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

#include "symgen/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symgen {

namespace {

std::int64_t mod64(std::int64_t i, std::int64_t m) {
  std::int64_t r = i % m;
  return r < 0 ? r + m : r;
}

// Least period of a finite word via the KMP failure function. A word of
// length n has period p iff the failure function of the whole word is n-p.
std::int64_t least_word_period(const std::vector<Sym>& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (n <= 1) return 1;
  std::vector<std::int64_t> fail(n, 0);
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return n - fail[n - 1];
}

std::vector<Sym> rot_left(std::vector<Sym> v) {
  std::rotate(v.begin(), v.begin() + 1, v.end());
  return v;
}

std::vector<Sym> rot_right(std::vector<Sym> v) {
  std::rotate(v.begin(), v.end() - 1, v.end());
  return v;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  std::set<std::string> seen(tokens_.begin(), tokens_.end());
  if (seen.size() != tokens_.size())
    throw std::invalid_argument("alphabet tokens must be distinct");
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::indexed(int n) {
  std::vector<std::string> t;
  for (int i = 0; i < n; ++i) t.push_back(std::to_string(i));
  return Alphabet(std::move(t));
}

Alphabet Alphabet::truncated(int n) {
  std::vector<std::string> t;
  for (int i = 1; i <= n; ++i) t.push_back(std::to_string(i));
  t.push_back("*");
  return Alphabet(std::move(t));
}

Sym Alphabet::index_of(const std::string& token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == token) return static_cast<Sym>(i);
  throw std::invalid_argument("unknown symbol token '" + token + "'");
}

bool Alphabet::has(const std::string& token) const {
  return std::find(tokens_.begin(), tokens_.end(), token) != tokens_.end();
}

int Alphabet::code_bits() const {
  int bits = 0;
  while ((1 << bits) < size()) ++bits;
  return bits;
}

Sym Window::at(std::int64_t i) const {
  if (i < lo() || i >= hi()) throw std::out_of_range("Window::at outside window");
  return data[static_cast<std::size_t>(i - origin)];
}

Window Window::sub(std::int64_t a, std::int64_t b) const {
  if (a < lo() || b > hi() || a > b) throw std::out_of_range("Window::sub outside window");
  Window w;
  w.alphabet = alphabet;
  w.origin = a;
  w.data.assign(data.begin() + (a - origin), data.begin() + (b - origin));
  return w;
}

Window Window::shifted() const {
  if (data.empty()) throw std::invalid_argument("cannot shift empty window");
  Window w;
  w.alphabet = alphabet;
  w.origin = origin;
  w.data.assign(data.begin() + 1, data.end());
  return w;
}

std::optional<std::int64_t> Window::content_period() const {
  if (data.size() <= 1) return std::nullopt;
  std::int64_t p = least_word_period(data);
  if (p >= size()) return std::nullopt;
  return p;
}

bool Window::aperiodic_window() const {
  auto p = content_period();
  return !p || *p > size() / 2;
}

Window make_window(const Alphabet& a, const std::string& chars, std::int64_t origin) {
  Window w;
  w.alphabet = a;
  w.origin = origin;
  for (char c : chars) w.data.push_back(a.index_of(std::string(1, c)));
  return w;
}

void EventuallyPeriodicSeq::validate() const {
  if (left_cycle.empty() || right_cycle.empty())
    throw std::invalid_argument("EventuallyPeriodicSeq cycles must be nonempty");
  auto check = [&](const std::vector<Sym>& v) {
    for (Sym s : v)
      if (s < 0 || s >= alphabet.size())
        throw std::invalid_argument("symbol outside alphabet");
  };
  check(left_cycle);
  check(core);
  check(right_cycle);
}

Sym EventuallyPeriodicSeq::at(std::int64_t i) const {
  if (i < core_origin)
    return left_cycle[mod64(i - core_origin, static_cast<std::int64_t>(left_cycle.size()))];
  if (i < core_end()) return core[static_cast<std::size_t>(i - core_origin)];
  return right_cycle[mod64(i - core_end(), static_cast<std::int64_t>(right_cycle.size()))];
}

Window EventuallyPeriodicSeq::materialize(std::int64_t a, std::int64_t b) const {
  if (a > b) throw std::invalid_argument("bad materialize range");
  Window w;
  w.alphabet = alphabet;
  w.origin = a;
  w.data.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t i = a; i < b; ++i) w.data.push_back(at(i));
  return w;
}

bool EventuallyPeriodicSeq::periodic() const {
  const std::int64_t l = static_cast<std::int64_t>(left_cycle.size());
  const std::int64_t r = static_cast<std::int64_t>(right_cycle.size());
  const std::int64_t period = std::lcm(l, r);
  // Periodic iff the whole sequence equals the right-cycle extension; both
  // tails are cyclic, so checking one lcm window left of the core suffices.
  for (std::int64_t i = core_origin - period; i < core_end(); ++i)
    if (at(i) != right_cycle[mod64(i - core_end(), r)]) return false;
  return true;
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::shifted() const {
  EventuallyPeriodicSeq s = *this;
  s.core_origin -= 1;
  return s;
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::normalized() const {
  EventuallyPeriodicSeq s = *this;
  // Reduce cycles to their least cyclic period (it divides the length).
  auto reduce = [](std::vector<Sym>& c) {
    const std::int64_t n = static_cast<std::int64_t>(c.size());
    for (std::int64_t p = 1; p <= n / 2; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (std::int64_t i = p; i < n && ok; ++i) ok = c[i] == c[i % p];
      if (ok) {
        c.resize(static_cast<std::size_t>(p));
        return;
      }
    }
  };
  reduce(s.left_cycle);
  reduce(s.right_cycle);
  const std::int64_t r = static_cast<std::int64_t>(s.right_cycle.size());
  const std::int64_t l = static_cast<std::int64_t>(s.left_cycle.size());
  // Absorb core symbols that already agree with the adjacent tail.
  while (!s.core.empty() && s.core.back() == s.right_cycle[static_cast<std::size_t>(r - 1)]) {
    s.core.pop_back();
    s.right_cycle = rot_right(s.right_cycle);
  }
  while (!s.core.empty() && s.core.front() == s.left_cycle[0]) {
    s.core.erase(s.core.begin());
    s.left_cycle = rot_left(s.left_cycle);
    s.core_origin += 1;
  }
  if (s.core.empty()) {
    // Slide the junction left as far as the tails agree (bounded for
    // aperiodic descriptors; periodic ones stabilize after one lcm).
    std::int64_t guard = std::lcm(l, r) + 1;
    while (guard-- > 0 &&
           s.left_cycle[mod64(-1, l)] == s.right_cycle[static_cast<std::size_t>(r - 1)]) {
      if (s.periodic()) break;
      s.core_origin -= 1;
      s.right_cycle = rot_right(s.right_cycle);
      s.left_cycle = rot_right(s.left_cycle);
    }
  }
  return s;
}

EventuallyPeriodicSeq make_periodic(const Alphabet& a, const std::string& cycle) {
  return make_ep(a, cycle, "", cycle, 0);
}

EventuallyPeriodicSeq make_ep(const Alphabet& a, const std::string& left,
                              const std::string& core, const std::string& right,
                              std::int64_t core_origin) {
  EventuallyPeriodicSeq s;
  s.alphabet = a;
  s.core_origin = core_origin;
  auto conv = [&](const std::string& str, std::vector<Sym>& out) {
    for (char c : str) out.push_back(a.index_of(std::string(1, c)));
  };
  conv(left, s.left_cycle);
  conv(core, s.core);
  conv(right, s.right_cycle);
  s.validate();
  return s;
}

Window BlockScheduleSeq::materialize_prefix(std::int64_t n) const {
  Window w;
  w.alphabet = alphabet;
  w.origin = 0;
  const std::int64_t limit = std::min(n, horizon);
  std::uint64_t block = 0;
  while (static_cast<std::int64_t>(w.data.size()) < limit) {
    auto [sym, len] = rule(block++);
    if (len == 0) throw std::logic_error("block schedule produced a zero-length run");
    for (std::uint64_t j = 0; j < len && static_cast<std::int64_t>(w.data.size()) < limit; ++j)
      w.data.push_back(sym);
  }
  return w;
}

BlockScheduleSeq doubling_schedule(std::int64_t horizon) {
  BlockScheduleSeq s;
  s.alphabet = Alphabet::binary();
  s.horizon = horizon;
  s.descriptor = "doubling";
  s.rule = [](std::uint64_t n) {
    const std::uint64_t len = n < 63 ? (std::uint64_t{1} << n)
                                     : std::numeric_limits<std::uint64_t>::max();
    return std::make_pair(static_cast<Sym>(n % 2), len);
  };
  return s;
}

BlockScheduleSeq geometric_alternating_schedule(std::int64_t horizon, std::int64_t m0,
                                                std::int64_t growth_num,
                                                std::int64_t growth_den) {
  if (m0 < 1 || growth_num <= growth_den || growth_den < 1)
    throw std::invalid_argument("geometric schedule needs m0 >= 1 and growth > 1");
  BlockScheduleSeq s;
  s.alphabet = Alphabet::binary();
  s.horizon = horizon;
  s.descriptor = "geometric " + std::to_string(m0) + " " + std::to_string(growth_num) +
                 "/" + std::to_string(growth_den);
  s.rule = [m0, growth_num, growth_den](std::uint64_t n) {
    std::int64_t len = m0;
    for (std::uint64_t i = 0; i < n; ++i) {
      len = (len * growth_num + growth_den - 1) / growth_den;
      if (len > (std::int64_t{1} << 40)) break;  // run already exceeds any horizon
    }
    return std::make_pair(static_cast<Sym>(n % 2), static_cast<std::uint64_t>(len));
  };
  return s;
}

const Alphabet& sequence_alphabet(const Sequence& s) {
  return std::visit([](const auto& v) -> const Alphabet& { return v.alphabet; }, s);
}

Window sequence_materialize(const Sequence& s, std::int64_t a, std::int64_t b) {
  if (std::holds_alternative<Window>(s)) {
    const auto& w = std::get<Window>(s);
    return w.sub(std::max(a, w.lo()), std::min(b, w.hi()));
  }
  if (std::holds_alternative<EventuallyPeriodicSeq>(s))
    return std::get<EventuallyPeriodicSeq>(s).materialize(a, b);
  const auto& bs = std::get<BlockScheduleSeq>(s);
  if (a < 0) throw std::invalid_argument("block schedules are defined on [0, horizon)");
  Window full = bs.materialize_prefix(b);
  return full.sub(std::min(a, full.hi()), std::min(b, full.hi()));
}

Sequence sequence_shifted(const Sequence& s) {
  if (std::holds_alternative<Window>(s)) return std::get<Window>(s).shifted();
  if (std::holds_alternative<EventuallyPeriodicSeq>(s))
    return std::get<EventuallyPeriodicSeq>(s).shifted();
  throw std::invalid_argument("block schedules do not support shifting");
}

}  // namespace symgen
