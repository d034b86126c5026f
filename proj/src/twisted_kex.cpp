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

#include "twoside/twisted_kex.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "twoside/random.hpp"

namespace twoside {

TwistedParams make_twisted_params(std::uint32_t p, std::size_t n, std::uint32_t m, std::uint64_t seed,
                                  HSampling sampling) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  TwistedRing ring(FieldCtx::create(p, n, derive_seed(seed, 0)), m);
  const FieldCtx& f = ring.field();

  TwistedElement h;
  switch (sampling) {
    case HSampling::FullSupport: {
      Rng rng(derive_seed(seed, 1));
      std::uniform_int_distribution<std::uint64_t> nonzero(1, f.order() - 1);
      h = ring.zero();
      for (auto& c : h.coeffs) c = f.element_from_index(nonzero(rng));
      break;
    }
    case HSampling::Uniform:
      h = ring.sample_uniform(derive_seed(seed, 1));
      break;
    case HSampling::ZeroDivisor: {
      TwistedElement norm = ring.zero();
      for (std::uint32_t i = 0; i < m; ++i) norm.coeffs[ring.index({i, 0})] = f.one();
      h = ring.mul(ring.sample_R1(derive_seed(seed, 1)), norm);
      break;
    }
  }
  return TwistedParams{std::move(ring), std::move(h)};
}

TwistedElement twisted_public_key(const TwistedParams& params, const TwistedElement& g,
                                  const TwistedElement& k) {
  return params.ring.mul(params.ring.mul(g, params.h), k);
}

TwistedKeyPair twisted_keygen(const TwistedParams& params, std::uint64_t seed) {
  TwistedKeyPair kp;
  kp.g = params.ring.sample_R1(derive_seed(seed, 0));
  kp.k = params.ring.sample_A2(derive_seed(seed, 1));
  kp.pk = twisted_public_key(params, kp.g, kp.k);
  return kp;
}

TwistedElement twisted_shared_key(const TwistedParams& params, const TwistedKeyPair& own,
                                  const TwistedElement& other_pk) {
  const TwistedRing& r = params.ring;
  return r.mul(r.mul(own.g, other_pk), r.adjoint(own.k));
}

TwistedAttackResult twisted_attack(const TwistedParams& params, const TwistedElement& alice_pk,
                                   const TwistedElement& bob_pk, const TwistedAttackOptions& options) {
  const TwistedRing& r = params.ring;
  const FieldCtx& f = r.field();
  r.check(alice_pk);
  r.check(bob_pk);

  const auto start = std::chrono::steady_clock::now();
  const auto left = r.basis_R1().elements;
  const auto right = r.basis_A2().elements;
  const std::size_t unknowns = left.size() * right.size();
  const std::size_t equations = r.size() * f.n();

  std::vector<std::size_t> order = options.column_order;
  if (order.empty()) {
    order.resize(unknowns);
    for (std::size_t c = 0; c < unknowns; ++c) order[c] = c;
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool valid = sorted.size() == unknowns;
    for (std::size_t c = 0; valid && c < sorted.size(); ++c) valid = sorted[c] == c;
    if (!valid) throw std::invalid_argument("column_order must be a permutation of the unknowns");
  }

  std::vector<std::size_t> column_of(unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) column_of[order[col]] = col;

  // Column `col` of the system holds the F_p coordinates of L_i h M_j, (i, j) = order[col].
  FpMatrix a(equations, unknowns);
  for (std::size_t i = 0; i < left.size(); ++i) {
    const TwistedElement lh = r.mul(left[i], params.h);
    for (std::size_t j = 0; j < right.size(); ++j) {
      const auto v = r.flatten(r.mul(lh, right[j]));
      const std::size_t col = column_of[i * right.size() + j];
      for (std::size_t row = 0; row < equations; ++row) a.at(row, col) = v[row];
    }
  }

  TwistedAttackResult result;
  result.unknowns = unknowns;
  result.equations = equations;
  result.rank = rank(f.prime_field(), a);
  auto solution = gauss_solve(f.prime_field(), std::move(a), r.flatten(alice_pk));
  result.solve_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!solution) return result;

  result.coefficients.assign(unknowns, 0);
  for (std::size_t col = 0; col < unknowns; ++col) result.coefficients[order[col]] = (*solution)[col];

  TwistedElement key = r.zero();
  for (std::size_t i = 0; i < left.size(); ++i) {
    const TwistedElement lp = r.mul(left[i], bob_pk);
    for (std::size_t j = 0; j < right.size(); ++j) {
      const FpWord z = result.coefficients[i * right.size() + j];
      if (z == 0) continue;
      key = r.add(key, r.scale(z, r.mul(lp, r.adjoint(right[j]))));
    }
  }
  result.key = std::move(key);
  return result;
}

TwistedTranscript run_twisted_exchange(TwistedParams params, std::uint64_t seed) {
  TwistedSecrets s;
  s.alice = twisted_keygen(params, derive_seed(seed, 2));
  s.bob = twisted_keygen(params, derive_seed(seed, 3));
  TwistedTranscript t{std::move(params), s.alice.pk, s.bob.pk, false, std::nullopt};
  const TwistedElement ka = twisted_shared_key(t.params, s.alice, t.bob_pk);
  const TwistedElement kb = twisted_shared_key(t.params, s.bob, t.alice_pk);
  t.keys_agree = ka == kb;
  s.shared_key = ka;
  t.secrets = std::move(s);
  return t;
}

TwistedTranscript run_twisted_exchange(std::uint32_t p, std::size_t n, std::uint32_t m, std::uint64_t seed,
                                       HSampling sampling) {
  return run_twisted_exchange(make_twisted_params(p, n, m, seed, sampling), seed);
}

}  // namespace twoside
