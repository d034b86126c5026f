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

#ifndef TWOSIDE_TWISTED_KEX_HPP
#define TWOSIDE_TWISTED_KEX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twoside/twisted_ring.hpp"

namespace twoside {

/// How the public element h is drawn.
enum class HSampling {
  /// Every coefficient nonzero.
  FullSupport,
  /// Uniform over R, zeros allowed.
  Uniform,
  /// s · (1 + x + ... + x^{m-1}) for random s in R1; annihilated by 1 - x.
  ZeroDivisor,
};

struct TwistedParams {
  TwistedRing ring;
  TwistedElement h;
};

/// Validated (p, n, m) triple; throws std::invalid_argument on bad input.
TwistedParams make_twisted_params(std::uint32_t p, std::size_t n, std::uint32_t m, std::uint64_t seed,
                                  HSampling sampling = HSampling::FullSupport);

struct TwistedKeyPair {
  TwistedElement g;  // in R1
  TwistedElement k;  // in A2
  TwistedElement pk;
};

TwistedKeyPair twisted_keygen(const TwistedParams& params, std::uint64_t seed);

/// g · h · k.
TwistedElement twisted_public_key(const TwistedParams& params, const TwistedElement& g,
                                  const TwistedElement& k);

/// g · other_pk · k*.
TwistedElement twisted_shared_key(const TwistedParams& params, const TwistedKeyPair& own,
                                  const TwistedElement& other_pk);

struct TwistedAttackOptions {
  /// Order in which the (i, j) unknowns become matrix columns. Empty means
  /// natural order. Must be a permutation of 0..unknowns-1 otherwise.
  std::vector<std::size_t> column_order;
};

struct TwistedAttackResult {
  std::optional<TwistedElement> key;
  /// z_ij in natural (i, j) row-major order, over F_p.
  std::vector<FpWord> coefficients;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  double solve_ms = 0.0;
};

/**
 * Recovers the shared key from h, pk_A and pk_B.
 *
 * Writes pk_A = Σ z_ij L_i h M_j over F_p, with L_i running over the R1
 * basis and M_j over the A2 basis, solves by Gaussian elimination and
 * returns Σ z_ij L_i pk_B M_j*. R1 is commutative and d M_j* = M_j d* on A2,
 * so every solution z yields g_B pk_A k_B*.
 */
TwistedAttackResult twisted_attack(const TwistedParams& params, const TwistedElement& alice_pk,
                                   const TwistedElement& bob_pk, const TwistedAttackOptions& options = {});

struct TwistedSecrets {
  TwistedKeyPair alice;
  TwistedKeyPair bob;
  TwistedElement shared_key;
};

struct TwistedTranscript {
  TwistedParams params;
  TwistedElement alice_pk;
  TwistedElement bob_pk;
  bool keys_agree = false;
  std::optional<TwistedSecrets> secrets;
};

TwistedTranscript run_twisted_exchange(std::uint32_t p, std::size_t n, std::uint32_t m, std::uint64_t seed,
                                       HSampling sampling = HSampling::FullSupport);

/// Honest exchange on already-built parameters.
TwistedTranscript run_twisted_exchange(TwistedParams params, std::uint64_t seed);

}  // namespace twoside

#endif  // TWOSIDE_TWISTED_KEX_HPP
