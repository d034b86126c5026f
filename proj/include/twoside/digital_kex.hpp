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

#ifndef TWOSIDE_DIGITAL_KEX_HPP
#define TWOSIDE_DIGITAL_KEX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twoside/digital.hpp"
#include "twoside/idempotent_solver.hpp"
#include "twoside/semiring_matrix.hpp"

namespace twoside {

using DigitalMatrix = Matrix<DigitalSemiring>;
using DigitalCirculant = Circulant<DigitalSemiring>;

inline constexpr std::uint64_t kDefaultEntryBound = 1'000'000'000;

/// Public parameters of the circulant exchange over Mat_n(W).
struct DigitalParams {
  std::size_t n = 0;
  DigitalMatrix m;
  std::uint64_t entry_bound = kDefaultEntryBound;
  /// Lets sampled private entries be ∞ as well as finite values.
  bool allow_infinity = false;

  /// Throws std::invalid_argument if n is zero or M is not n×n.
  void validate() const;
};

/// Samples M with entries uniform in [0, entry_bound].
DigitalParams make_digital_params(std::size_t n, std::uint64_t seed,
                                  std::uint64_t entry_bound = kDefaultEntryBound);

struct DigitalKeyPair {
  DigitalCirculant a1;
  DigitalCirculant a2;
  DigitalMatrix pk;
};

/// A1 ⊗ M ⊗ A2.
DigitalMatrix digital_public_key(const DigitalParams& params, const DigitalCirculant& a1,
                                 const DigitalCirculant& a2);

DigitalKeyPair digital_keygen(const DigitalParams& params, std::uint64_t seed);

/// A1 ⊗ other_pk ⊗ A2.
DigitalMatrix digital_shared_key(const DigitalKeyPair& own, const DigitalMatrix& other_pk);

/// The n²-unknown system pk = ⊕ z_ij C_i ⊗ M ⊗ C_j.
DigitalSystem digital_attack_system(const DigitalParams& params, const DigitalMatrix& target_pk);

struct DigitalAttackResult {
  /// Recovered shared key; empty when the solver found no verified solution.
  std::optional<DigitalMatrix> key;
  std::vector<DigitalValue> coefficients;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  double solve_ms = 0.0;
};

/**
 * Recovers the shared key from public data only.
 *
 * Solves pk_A = ⊕ z_ij C_i ⊗ M ⊗ C_j for the maximal z, then returns
 * ⊕ z_ij C_i ⊗ pk_B ⊗ C_j. Since Bob's keys commute with every C_i, this is
 * B1 ⊗ pk_A ⊗ B2 for any solution z.
 */
DigitalAttackResult digital_attack(const DigitalParams& params, const DigitalMatrix& alice_pk,
                                   const DigitalMatrix& bob_pk);

/// Private half of a transcript. Never consulted by the attack.
struct DigitalSecrets {
  DigitalKeyPair alice;
  DigitalKeyPair bob;
  DigitalMatrix shared_key;
};

struct DigitalTranscript {
  DigitalParams params;
  DigitalMatrix alice_pk;
  DigitalMatrix bob_pk;
  bool keys_agree = false;
  std::optional<DigitalSecrets> secrets;
};

/// Runs an honest exchange. Parameters, Alice and Bob draw from distinct
/// streams of `seed`.
DigitalTranscript run_digital_exchange(std::size_t n, std::uint64_t seed,
                                       std::uint64_t entry_bound = kDefaultEntryBound,
                                       bool allow_infinity = false);

}  // namespace twoside

#endif  // TWOSIDE_DIGITAL_KEX_HPP
