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

#include <stdexcept>

#include "oracles.hpp"
#include "twoside/digital_kex.hpp"

using namespace twoside;

namespace {

const DigitalValue kInf = DigitalValue::infinity();
DigitalValue d(std::uint64_t v) { return DigitalValue{v}; }

DigitalCirculant identity_circulant(std::size_t n) {
  DigitalCirculant c{std::vector<DigitalValue>(n, d(0))};
  c.first_column[0] = kInf;
  return c;
}

}  // namespace

TEST_CASE("keygen") {
  SUBCASE("1x1 public key selects among its factors") {
    const DigitalParams params = make_digital_params(1, 5);
    const auto kp = digital_keygen(params, 6);
    const auto expect = mul(mul(kp.a1.first_column[0], params.m.at(0, 0)), kp.a2.first_column[0]);
    CHECK(kp.pk.at(0, 0) == expect);
  }
  SUBCASE("identity keys leave M unchanged") {
    const DigitalParams params = make_digital_params(4, 7);
    CHECK(digital_public_key(params, identity_circulant(4), identity_circulant(4)) == params.m);
  }
  SUBCASE("deterministic per seed") {
    const DigitalParams params = make_digital_params(5, 8);
    const auto a = digital_keygen(params, 9), b = digital_keygen(params, 9);
    CHECK(a.a1 == b.a1);
    CHECK(a.a2 == b.a2);
    CHECK(a.pk == b.pk);
    CHECK_FALSE(digital_keygen(params, 10).a1 == a.a1);
  }
  SUBCASE("entries are finite and within the bound") {
    const DigitalParams params = make_digital_params(6, 11, 1000);
    const auto kp = digital_keygen(params, 12);
    for (const auto& c : {kp.a1, kp.a2})
      for (auto v : c.first_column) {
        CHECK_FALSE(v.is_infinite());
        CHECK(v.value() <= 1000);
      }
  }
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(make_digital_params(0, 1), std::invalid_argument);
  DigitalParams p = make_digital_params(3, 1);
  p.n = 4;
  CHECK_THROWS_AS(digital_keygen(p, 1), std::invalid_argument);
}

TEST_CASE("shared key") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = run_digital_exchange(3, seed);
    REQUIRE(t.secrets);
    CHECK(t.keys_agree);
    const auto& s = *t.secrets;
    // B1 A1 M A2 B2 through the reference product.
    const auto direct = oracle::matmul(
        oracle::matmul(oracle::matmul(oracle::matmul(circulant_expand(s.bob.a1).rows(), circulant_expand(s.alice.a1).rows()),
                                      t.params.m.rows()),
                       circulant_expand(s.alice.a2).rows()),
        circulant_expand(s.bob.a2).rows());
    CHECK(s.shared_key.rows() == direct);
  }

  const DigitalParams params = make_digital_params(3, 40);
  const DigitalKeyPair ident{identity_circulant(3), identity_circulant(3), params.m};
  const auto other = digital_keygen(params, 41);
  CHECK(digital_shared_key(ident, other.pk) == other.pk);
}

TEST_CASE("attack recovers the shared key") {
  SUBCASE("identity keys for Alice") {
    const DigitalParams params = make_digital_params(3, 50);
    const auto bob = digital_keygen(params, 51);
    const auto r = digital_attack(params, params.m, bob.pk);
    REQUIRE(r.key);
    CHECK(*r.key == bob.pk);
  }
  SUBCASE("worked 2x2 matrix") {
    DigitalParams params;
    params.n = 2;
    params.m = DigitalMatrix::from_rows({{d(19), d(5)}, {d(7), d(28)}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto alice = digital_keygen(params, 2 * seed), bob = digital_keygen(params, 2 * seed + 1);
      const auto r = digital_attack(params, alice.pk, bob.pk);
      REQUIRE(r.key);
      CHECK(r.unknowns == 4);
      CHECK(r.equations == 4);
      CHECK(*r.key == digital_shared_key(alice, bob.pk));
      CHECK(*r.key == digital_shared_key(bob, alice.pk));
    }
  }
  SUBCASE("seeded campaign, n in 2..8") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::size_t n = 2 + seed % 7;
      const auto t = run_digital_exchange(n, 1000 + seed);
      const auto r = digital_attack(t.params, t.alice_pk, t.bob_pk);
      REQUIRE(r.key);
      CHECK(r.unknowns == n * n);
      CHECK(*r.key == t.secrets->shared_key);
    }
  }
  SUBCASE("infinity entries in the private keys") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto t = run_digital_exchange(4, 2000 + seed, 1000, true);
      CHECK(t.keys_agree);
      const auto r = digital_attack(t.params, t.alice_pk, t.bob_pk);
      REQUIRE(r.key);
      CHECK(*r.key == t.secrets->shared_key);
    }
  }
  SUBCASE("any verified solution gives the key, not only the maximal one") {
    const auto t = run_digital_exchange(3, 77);
    const auto sys = digital_attack_system(t.params, t.alice_pk);
    // Honest coefficients z_ij = a1_i ⊗ a2_j.
    std::vector<DigitalValue> honest;
    for (auto a : t.secrets->alice.a1.first_column)
      for (auto b : t.secrets->alice.a2.first_column) honest.push_back(mul(a, b));
    REQUIRE(verify(sys, honest));
    const auto gens = circulant_generators<DigitalSemiring>(3);
    DigitalMatrix key = DigitalMatrix::zero(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        key = mat_add(key, scalar_mul(honest[i * 3 + j], mat_mul(mat_mul(gens[i], t.bob_pk), gens[j])));
    CHECK(key == t.secrets->shared_key);
  }
}

TEST_CASE("corrupted public key makes the system inconsistent") {
  auto t = run_digital_exchange(3, 88);
  // δ = 126 exceeds every entry the honest products can reach.
  t.alice_pk.at(1, 2) = d(99999999999999ULL);
  const auto r = digital_attack(t.params, t.alice_pk, t.bob_pk);
  CHECK_FALSE(r.key);
}
