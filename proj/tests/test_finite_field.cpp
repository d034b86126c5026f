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

#include "oracles.hpp"
#include "twoside/finite_field.hpp"

using namespace twoside;

TEST_CASE("prime field") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("prime factors") {
  CHECK(prime_factors(1) == std::vector<std::uint64_t>{});
  CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
  CHECK(prime_factors(255) == std::vector<std::uint64_t>{3, 5, 17});
}

TEST_CASE("F_4 arithmetic") {
  const FieldCtx f4 = FieldCtx::with_modulus(2, {1, 1, 1});
  const auto u = f4.element({0, 1}), u1 = f4.element({1, 1});
  CHECK(f4.mul(u, u1) == f4.one());
  CHECK(f4.mul(u, u) == u1);
  CHECK(f4.multiplicative_order(u) == 3);
  CHECK(f4.t() == u);
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{2, 3}, {3, 2}, {5, 1}, {7, 3}, {2, 8}, {13, 4}}) {
    const FieldCtx f = FieldCtx::create(p, n, 100 + p + n);
    std::mt19937_64 rng(p * 31 + n);
    auto rnd = [&] { return f.element_from_index(rng() % f.order()); };
    for (int i = 0; i < 200; ++i) {
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(f.add(a, b), b) == a);
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.index_of(a) < f.order());
      CHECK(f.element_from_index(f.index_of(a)) == a);
    }
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK(f.pow(f.t(), f.order() - 1) == f.one());
  }
}

TEST_CASE("find_irreducible") {
  const Poly lin = find_irreducible(2, 1, 1);
  CHECK(lin.size() == 2);
  CHECK(lin[1] == 1);

  CHECK(find_irreducible(2, 2, 1) == Poly{1, 1, 1});
  CHECK(find_irreducible(2, 2, 99) == Poly{1, 1, 1});

  const PrimeField f3(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Poly q = find_irreducible(3, 2, seed);
    for (FpWord x = 0; x < 3; ++x) CHECK(poly::eval(f3, q, x) != 0);
  }

  CHECK(find_irreducible(5, 4, 3) == find_irreducible(5, 4, 3));
  CHECK_FALSE(is_irreducible(PrimeField(2), {1, 0, 1}));     // (x+1)^2
  CHECK_FALSE(is_irreducible(PrimeField(2), {1, 0, 1, 0, 1}));  // (x^2+x+1)^2
  CHECK(is_irreducible(PrimeField(2), {1, 1, 0, 0, 1}));     // x^4 + x + 1
}

TEST_CASE("with_modulus validation") {
  CHECK_THROWS_AS(FieldCtx::with_modulus(2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::with_modulus(2, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::with_modulus(3, {1, 1, 2}), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(FieldCtx::create(65521, 3, 1), std::invalid_argument);        // order above 2^40
  const FieldCtx f4 = FieldCtx::with_modulus(2, {1, 1, 1});
  CHECK_THROWS_AS(FieldCtx::with_generator(2, {1, 1, 1}, f4.one()), std::invalid_argument);
  CHECK(FieldCtx::with_generator(2, {1, 1, 1}, f4.element({1, 1})).t() == f4.element({1, 1}));
}

TEST_CASE("find_primitive") {
  const FieldCtx f5 = FieldCtx::with_modulus(5, {0, 1});
  CHECK(f5.t() == f5.from_prime(2));
  // 2, 4, 3, 1
  std::vector<FpWord> powers;
  for (std::uint64_t e = 1; e <= 4; ++e) powers.push_back(f5.pow(f5.t(), e).coeffs[0]);
  CHECK(powers == std::vector<FpWord>{2, 4, 3, 1});

  for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{2, 2}, {3, 2}, {2, 3}, {7, 1}, {3, 4}}) {
    const FieldCtx f = FieldCtx::create(p, n, 5);
    const auto t = f.t();
    CHECK(f.pow(t, f.order() - 1) == f.one());
    auto acc = f.one();
    for (std::uint64_t k = 1; k < f.order() - 1; ++k) {
      acc = f.mul(acc, t);
      CHECK(acc != f.one());
    }
  }
  CHECK(FieldCtx::create(3, 3, 42) == FieldCtx::create(3, 3, 42));
}

TEST_CASE("gauss_solve worked systems") {
  const PrimeField f2(2), f5(5);
  FpMatrix id(2, 2);
  id.at(0, 0) = id.at(1, 1) = 1;
  CHECK(gauss_solve(f2, id, {1, 1}) == std::vector<FpWord>{1, 1});

  FpMatrix dep(2, 2);
  dep.at(0, 0) = 1, dep.at(0, 1) = 2, dep.at(1, 0) = 2, dep.at(1, 1) = 4;
  CHECK(gauss_solve(f5, dep, {3, 6}) == std::vector<FpWord>{3, 0});
  CHECK(gauss_solve(f5, dep, {3, 1}));  // 2 * 3 = 1 mod 5
  CHECK_FALSE(gauss_solve(f5, dep, {3, 2}));
  CHECK(rank(f5, dep) == 1);

  CHECK_THROWS_AS(gauss_solve(f5, dep, {1}), std::invalid_argument);
}

TEST_CASE("gauss_solve matches exhaustive search") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 3;
      FpMatrix a(r, c);
      std::vector<std::vector<FpWord>> rows(r, std::vector<FpWord>(c));
      std::vector<FpWord> b(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) rows[i][j] = a.at(i, j) = static_cast<FpWord>(rng() % p);
        b[i] = static_cast<FpWord>(rng() % p);
      }
      const auto z = gauss_solve(f, a, b);
      const auto brute = oracle::fp_exhaustive(p, rows, b, c);
      CHECK(z.has_value() == brute.has_value());
      if (z) CHECK(mat_vec(f, a, *z) == b);
    }
  }
}

TEST_CASE("gauss_solve on consistent random systems") {
  std::mt19937_64 rng(32);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      FpMatrix a(r, c);
      for (auto& w : a.data) w = static_cast<FpWord>(rng() % p);
      std::vector<FpWord> z(c);
      for (auto& w : z) w = static_cast<FpWord>(rng() % p);
      const auto b = mat_vec(f, a, z);
      const auto sol = gauss_solve(f, a, b);
      REQUIRE(sol);
      CHECK(mat_vec(f, a, *sol) == b);
    }
  }
}
