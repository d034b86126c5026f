/*
 *   Copyright 2026 The twoside Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Reference implementations used only by tests. Each one follows the
// textbook definition directly and shares no code path with the library
// routine it checks.
#ifndef TWOSIDE_TESTS_ORACLES_HPP
#define TWOSIDE_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoside/digital.hpp"
#include "twoside/finite_field.hpp"

namespace oracle {

using twoside::DigitalValue;

// Digit sum through the decimal string; ∞ maps to a huge sentinel.
inline std::uint64_t digit_sum(DigitalValue a) {
  if (a.is_infinite()) return ~std::uint64_t{0};
  std::uint64_t s = 0;
  for (char c : std::to_string(a.value())) s += static_cast<std::uint64_t>(c - '0');
  return s;
}

// Numeric comparison on ties; ∞ only ties with ∞.
inline bool numerically_less(DigitalValue a, DigitalValue b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

// ⊕ case by case.
inline DigitalValue add(DigitalValue g1, DigitalValue g2) {
  const auto d1 = oracle::digit_sum(g1), d2 = oracle::digit_sum(g2);
  if (d2 < d1) return g1;
  if (d2 > d1) return g2;
  return numerically_less(g1, g2) ? g2 : g1;
}

// ⊗ case by case.
inline DigitalValue mul(DigitalValue g1, DigitalValue g2) {
  const auto d1 = oracle::digit_sum(g1), d2 = oracle::digit_sum(g2);
  if (d1 < d2) return g1;
  if (d1 > d2) return g2;
  return numerically_less(g1, g2) ? g1 : g2;
}

inline bool leq(DigitalValue a, DigitalValue b) { return oracle::add(a, b) == b; }

using DMatrix = std::vector<std::vector<DigitalValue>>;

inline DMatrix matmul(const DMatrix& a, const DMatrix& b) {
  const std::size_t n = a.size();
  DMatrix c(n, std::vector<DigitalValue>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DigitalValue acc{0};
      for (std::size_t k = 0; k < n; ++k) acc = oracle::add(acc, oracle::mul(a[i][k], b[k][j]));
      c[i][j] = acc;
    }
  return c;
}

// {0, ..., bound} ∪ {∞}.
inline std::vector<DigitalValue> bounded_domain(std::uint64_t bound) {
  std::vector<DigitalValue> d;
  for (std::uint64_t v = 0; v <= bound; ++v) d.emplace_back(v);
  d.push_back(DigitalValue::infinity());
  return d;
}

// ≤_W-largest x in the domain with x ⊗ h ⊕ y = y.
inline DigitalValue max_component(DigitalValue h, DigitalValue y, const std::vector<DigitalValue>& domain) {
  std::optional<DigitalValue> best;
  for (auto x : domain)
    if (oracle::add(oracle::mul(x, h), y) == y && (!best || oracle::leq(*best, x))) best = x;
  return *best;  // 0 always qualifies
}

inline std::vector<DigitalValue> evaluate(const std::vector<std::vector<DigitalValue>>& columns,
                                          const std::vector<DigitalValue>& z) {
  std::vector<DigitalValue> out(columns.front().size(), DigitalValue{0});
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = oracle::add(out[l], oracle::mul(z[k], columns[k][l]));
  return out;
}

// All solutions over domain^K (K ≤ 2 keeps this tractable).
inline std::vector<std::vector<DigitalValue>> all_solutions(const std::vector<std::vector<DigitalValue>>& columns,
                                                            const std::vector<DigitalValue>& target,
                                                            const std::vector<DigitalValue>& domain) {
  std::vector<std::vector<DigitalValue>> sols;
  std::vector<std::size_t> idx(columns.size(), 0);
  for (;;) {
    std::vector<DigitalValue> z;
    for (auto i : idx) z.push_back(domain[i]);
    if (evaluate(columns, z) == target) sols.push_back(z);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == domain.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return sols;
}

// Exhaustive search for z in F_p^c with A z = b; A given as rows.
inline std::optional<std::vector<std::uint32_t>> fp_exhaustive(std::uint32_t p,
                                                              const std::vector<std::vector<std::uint32_t>>& a,
                                                              const std::vector<std::uint32_t>& b, std::size_t cols) {
  std::vector<std::uint32_t> z(cols, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc += static_cast<std::uint64_t>(a[i][j]) * z[j];
      ok = acc % p == b[i] % p;
    }
    if (ok) return z;
    std::size_t pos = 0;
    while (pos < cols && ++z[pos] == p) z[pos++] = 0;
    if (pos == cols) return std::nullopt;
  }
}

// D_2m as permutations of the m-gon vertices: x: v ↦ v+1, y: v ↦ -v.
// x^i y^k acts as v ↦ i + (-1)^k v. Composition (g h)(v) = g(h(v)).
struct DihedralPerm {
  std::uint32_t m;
  std::vector<std::uint32_t> image(std::uint32_t i, std::uint32_t k) const {
    std::vector<std::uint32_t> out(m);
    for (std::uint32_t v = 0; v < m; ++v) out[v] = (i + (k ? (m - v) % m : v)) % m;
    return out;
  }
  // Product as (i, k), found by matching the composed permutation.
  std::pair<std::uint32_t, std::uint32_t> mul(std::uint32_t i1, std::uint32_t k1, std::uint32_t i2,
                                              std::uint32_t k2) const {
    const auto g = image(i1, k1), h = image(i2, k2);
    std::vector<std::uint32_t> gh(m);
    for (std::uint32_t v = 0; v < m; ++v) gh[v] = g[h[v]];
    for (std::uint32_t k = 0; k < 2; ++k)
      for (std::uint32_t i = 0; i < m; ++i)
        if (image(i, k) == gh && (m > 2 || k == (k1 ^ k2))) return {i, k};
    return {0, 0};
  }
};

}  // namespace oracle

#endif  // TWOSIDE_TESTS_ORACLES_HPP
