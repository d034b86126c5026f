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

#include "twoside/digital_kex.hpp"

#include <chrono>
#include <stdexcept>

#include "twoside/random.hpp"

namespace twoside {

namespace {

DigitalValue sample_entry(Rng& rng, std::uint64_t bound, bool allow_infinity) {
  if (allow_infinity) {
    // ∞ with probability 1/10.
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return DigitalValue::infinity();
  }
  return DigitalValue{std::uniform_int_distribution<std::uint64_t>(0, bound)(rng)};
}

DigitalCirculant sample_circulant(Rng& rng, const DigitalParams& params) {
  DigitalCirculant c;
  c.first_column.reserve(params.n);
  for (std::size_t i = 0; i < params.n; ++i)
    c.first_column.push_back(sample_entry(rng, params.entry_bound, params.allow_infinity));
  return c;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void DigitalParams::validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (m.n() != n) throw std::invalid_argument("public matrix M must be n x n");
}

DigitalParams make_digital_params(std::size_t n, std::uint64_t seed, std::uint64_t entry_bound) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  Rng rng(seed);
  DigitalParams params;
  params.n = n;
  params.entry_bound = entry_bound;
  params.m = DigitalMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) params.m.at(i, j) = sample_entry(rng, entry_bound, false);
  return params;
}

DigitalMatrix digital_public_key(const DigitalParams& params, const DigitalCirculant& a1,
                                 const DigitalCirculant& a2) {
  params.validate();
  if (a1.n() != params.n || a2.n() != params.n)
    throw std::invalid_argument("private circulants must have dimension n");
  return mat_mul(mat_mul(circulant_expand(a1), params.m), circulant_expand(a2));
}

DigitalKeyPair digital_keygen(const DigitalParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);
  DigitalKeyPair kp;
  kp.a1 = sample_circulant(rng, params);
  kp.a2 = sample_circulant(rng, params);
  kp.pk = digital_public_key(params, kp.a1, kp.a2);
  return kp;
}

DigitalMatrix digital_shared_key(const DigitalKeyPair& own, const DigitalMatrix& other_pk) {
  return mat_mul(mat_mul(circulant_expand(own.a1), other_pk), circulant_expand(own.a2));
}

DigitalSystem digital_attack_system(const DigitalParams& params, const DigitalMatrix& target_pk) {
  params.validate();
  if (target_pk.n() != params.n) throw std::invalid_argument("public key must be n x n");
  const auto gens = circulant_generators<DigitalSemiring>(params.n);
  auto cols = flatten_two_sided(params.m, gens, gens);
  return DigitalSystem{std::move(cols.columns), flatten(target_pk)};
}

DigitalAttackResult digital_attack(const DigitalParams& params, const DigitalMatrix& alice_pk,
                                   const DigitalMatrix& bob_pk) {
  if (bob_pk.n() != params.n) throw std::invalid_argument("public key must be n x n");
  DigitalAttackResult result;
  const auto start = std::chrono::steady_clock::now();
  const DigitalSystem sys = digital_attack_system(params, alice_pk);
  result.unknowns = sys.unknowns();
  result.equations = sys.equations();
  auto z = maximal_solution(sys);
  result.solve_ms = elapsed_ms(start);
  if (!z) return result;

  const auto gens = circulant_generators<DigitalSemiring>(params.n);
  const std::size_t n = params.n;
  DigitalMatrix key = DigitalMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DigitalMatrix left = mat_mul(gens[i], bob_pk);
    for (std::size_t j = 0; j < n; ++j)
      key = mat_add(key, scalar_mul((*z)[i * n + j], mat_mul(left, gens[j])));
  }
  result.coefficients = std::move(*z);
  result.key = std::move(key);
  return result;
}

DigitalTranscript run_digital_exchange(std::size_t n, std::uint64_t seed, std::uint64_t entry_bound,
                                       bool allow_infinity) {
  DigitalTranscript t;
  t.params = make_digital_params(n, derive_seed(seed, 0), entry_bound);
  t.params.allow_infinity = allow_infinity;
  DigitalSecrets s;
  s.alice = digital_keygen(t.params, derive_seed(seed, 1));
  s.bob = digital_keygen(t.params, derive_seed(seed, 2));
  t.alice_pk = s.alice.pk;
  t.bob_pk = s.bob.pk;
  const DigitalMatrix ka = digital_shared_key(s.alice, t.bob_pk);
  const DigitalMatrix kb = digital_shared_key(s.bob, t.alice_pk);
  t.keys_agree = ka == kb;
  s.shared_key = ka;
  t.secrets = std::move(s);
  return t;
}

}  // namespace twoside
