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

#ifndef TWOSIDE_IDEMPOTENT_SOLVER_HPP
#define TWOSIDE_IDEMPOTENT_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twoside/digital.hpp"
#include "twoside/semiring_matrix.hpp"

namespace twoside {

/// The one-sided system ⊕_k z_k ⊗ H_k = Y with scalar unknowns z_k.
template <IdempotentSemiring S>
struct LinearSystem {
  using value_type = typename S::value_type;

  std::vector<std::vector<value_type>> columns;
  std::vector<value_type> target;

  /// Throws std::invalid_argument unless there is at least one column and
  /// every column has the target's length.
  void validate() const {
    if (columns.empty()) throw std::invalid_argument("linear system has no columns");
    for (const auto& col : columns)
      if (col.size() != target.size())
        throw std::invalid_argument("column length does not match target length");
  }

  std::size_t unknowns() const { return columns.size(); }
  std::size_t equations() const { return target.size(); }
};

/// ⊕_k z_k ⊗ H_k, componentwise.
template <IdempotentSemiring S>
std::vector<typename S::value_type> evaluate(const LinearSystem<S>& sys,
                                             const std::vector<typename S::value_type>& z) {
  if (z.size() != sys.columns.size())
    throw std::invalid_argument("solution length does not match the number of columns");
  std::vector<typename S::value_type> out(sys.target.size(), S::zero());
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t l = 0; l < out.size(); ++l)
      out[l] = S::add(out[l], S::mul(z[k], sys.columns[k][l]));
  return out;
}

template <IdempotentSemiring S>
bool verify(const LinearSystem<S>& sys, const std::vector<typename S::value_type>& z) {
  return evaluate(sys, z) == sys.target;
}

/**
 * Maximal solution of an idempotent linear system.
 *
 * `max_component(h, y)` must return max{x : x ⊗ h ⊕ y = y}. Each coordinate
 * z_k is the ≤-least of these maxima over the components of column k, so the
 * candidate values must be totally ordered by S::leq (chain semirings). If no
 * component constrains z_k, it is S::top().
 *
 * The candidate is returned only if it solves the system; in that case every
 * other solution is coordinatewise ≤ it.
 */
template <IdempotentSemiring S, class MaxComponent>
std::optional<std::vector<typename S::value_type>> maximal_solution(const LinearSystem<S>& sys,
                                                                    MaxComponent&& max_component) {
  sys.validate();
  std::vector<typename S::value_type> z;
  z.reserve(sys.columns.size());
  for (const auto& col : sys.columns) {
    auto zk = S::top();
    for (std::size_t l = 0; l < col.size(); ++l) {
      auto bound = max_component(col[l], sys.target[l]);
      if (S::leq(bound, zk)) zk = bound;
    }
    z.push_back(zk);
  }
  if (!verify(sys, z)) return std::nullopt;
  return z;
}

/// max{x ∈ W : x ⊗ h ⊕ y = y}: ∞ when h ≤_W y, otherwise y itself.
DigitalValue max_component(DigitalValue h, DigitalValue y);

using DigitalSystem = LinearSystem<DigitalSemiring>;

std::optional<std::vector<DigitalValue>> maximal_solution(const DigitalSystem& sys);

}  // namespace twoside

#endif  // TWOSIDE_IDEMPOTENT_SOLVER_HPP
