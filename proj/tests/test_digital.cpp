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

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "twoside/digital.hpp"

using twoside::DigitalValue;
using twoside::digit_sum;
using twoside::kInfiniteDigitSum;
using twoside::leq_w;

namespace {

const DigitalValue kInf = DigitalValue::infinity();

DigitalValue d(std::uint64_t v) { return DigitalValue{v}; }

// Random values biased toward small magnitudes, plus occasional ∞ and 0.
DigitalValue random_value(std::mt19937_64& rng) {
  switch (rng() % 8) {
    case 0: return kInf;
    case 1: return d(0);
    case 2: return d(rng());
    case 3: return d(rng() % 1000000000);
    default: return d(rng() % 1000);
  }
}

// Three distinct values sharing one digit sum, e.g. {19, 28, 37} or {5, 14, 50}.
std::vector<DigitalValue> tie_triple(std::mt19937_64& rng) {
  const std::uint64_t target = 1 + rng() % 30;
  std::vector<DigitalValue> pool;
  for (std::uint64_t v = 0; v < 100000 && pool.size() < 64; ++v)
    if (digit_sum(d(v)) == target) pool.push_back(d(v));
  return {pool[rng() % pool.size()], pool[rng() % pool.size()], pool[rng() % pool.size()]};
}

}  // namespace

TEST_CASE("digit_sum") {
  CHECK(digit_sum(d(123)) == 6);
  CHECK(digit_sum(d(0)) == 0);
  CHECK(digit_sum(kInf) == kInfiniteDigitSum);
  CHECK(digit_sum(d(18446744073709551615ULL)) == 87);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = d(rng() % 1000000 + 1);
    CHECK(digit_sum(v) > 0);
    CHECK(digit_sum(v) == oracle::digit_sum(v));
  }
}

TEST_CASE("add and mul on the worked values") {
  CHECK(add(d(19), d(5)) == d(19));
  CHECK(add(d(23), d(41)) == d(41));
  CHECK(mul(d(19), d(5)) == d(5));
  CHECK(mul(d(23), d(41)) == d(23));
  CHECK(add(kInf, kInf) == kInf);
  for (auto a : {d(0), d(7), d(999), kInf}) {
    CHECK(add(a, a) == a);
    CHECK(mul(a, kInf) == a);
  }
}

TEST_CASE("leq_w") {
  CHECK(leq_w(d(5), d(19)));
  CHECK_FALSE(leq_w(d(28), d(19)));
  CHECK(leq_w(d(19), d(28)));
  CHECK(leq_w(d(123456), kInf));
  CHECK(leq_w(kInf, kInf));
  CHECK_FALSE(leq_w(kInf, d(99)));
}

TEST_CASE("operations agree with the case-by-case definition") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_value(rng), b = random_value(rng);
    CHECK(add(a, b) == oracle::add(a, b));
    CHECK(mul(a, b) == oracle::mul(a, b));
    CHECK(leq_w(a, b) == (add(a, b) == b));
  }
}

TEST_CASE("semiring axioms on random and tied triples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 4000; ++i) {
    std::vector<DigitalValue> t;
    if (i % 2 == 0)
      t = {random_value(rng), random_value(rng), random_value(rng)};
    else
      t = tie_triple(rng);
    const auto a = t[0], b = t[1], c = t[2];
    CAPTURE(twoside::to_string(a));
    CAPTURE(twoside::to_string(b));
    CAPTURE(twoside::to_string(c));

    // selection
    CHECK((add(a, b) == a || add(a, b) == b));
    CHECK((mul(a, b) == a || mul(a, b) == b));
    // commutativity
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    // associativity
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    // distributivity, both sides
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(add(b, c), a) == add(mul(b, a), mul(c, a)));
    // identities and absorption
    CHECK(add(d(0), a) == a);
    CHECK(mul(kInf, a) == a);
    CHECK(mul(d(0), a) == d(0));
    CHECK(add(kInf, a) == kInf);
    // a ⊗ b lies below both factors
    CHECK(leq_w(mul(a, b), a));
    CHECK(leq_w(mul(a, b), b));
    // partial order
    CHECK(leq_w(a, a));
    if (leq_w(a, b) && leq_w(b, a)) CHECK(a == b);
    if (leq_w(a, b) && leq_w(b, c)) CHECK(leq_w(a, c));
    // ⊕ is the join
    CHECK(leq_w(a, add(a, b)));
    CHECK(leq_w(b, add(a, b)));
  }
}

TEST_CASE("parse and print") {
  CHECK(twoside::parse_digital("inf") == kInf);
  CHECK(twoside::parse_digital("0") == d(0));
  CHECK(twoside::parse_digital("18446744073709551615") == d(18446744073709551615ULL));
  CHECK_THROWS_AS(twoside::parse_digital("18446744073709551616"), std::out_of_range);
  CHECK_THROWS_AS(twoside::parse_digital(""), std::invalid_argument);
  CHECK_THROWS_AS(twoside::parse_digital("-3"), std::invalid_argument);
  CHECK_THROWS_AS(twoside::parse_digital("12x"), std::invalid_argument);
  CHECK_THROWS_AS(twoside::parse_digital("Inf"), std::invalid_argument);
  CHECK(twoside::to_string(kInf) == "inf");
  CHECK(twoside::to_string(d(4711)) == "4711");
}
