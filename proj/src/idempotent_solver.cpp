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

#include "twoside/idempotent_solver.hpp"

namespace twoside {

DigitalValue max_component(DigitalValue h, DigitalValue y) {
  // x ⊗ h ≤ y holds for every x once h ≤ y; otherwise x ⊗ h ∈ {x, h} forces x ≤ y.
  return leq_w(h, y) ? DigitalValue::infinity() : y;
}

std::optional<std::vector<DigitalValue>> maximal_solution(const DigitalSystem& sys) {
  return maximal_solution(sys, [](DigitalValue h, DigitalValue y) { return max_component(h, y); });
}

}  // namespace twoside
