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

#ifndef TWOSIDE_DIGITAL_HPP
#define TWOSIDE_DIGITAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace twoside {

/// Digit sum of a digital value. Finite sums never exceed 9 * 20 = 180.
using DigitSum = std::uint32_t;

/// Digit sum assigned to infinity; strictly above every finite digit sum.
inline constexpr DigitSum kInfiniteDigitSum = std::numeric_limits<DigitSum>::max();

/**
 * An element of the digital semiring W = N ∪ {∞}.
 *
 * Finite values live in the 64-bit unsigned range. Addition keeps the operand
 * with the larger base-10 digit sum (numeric max on ties) and multiplication
 * keeps the one with the smaller digit sum (numeric min on ties). Both are
 * selections, so no arithmetic ever leaves the range of the inputs.
 *
 * With δ(∞) above every finite digit sum, 0 is the additive identity and the
 * multiplicative zero, and ∞ is the multiplicative identity and additive top.
 */
class DigitalValue {
 public:
  constexpr DigitalValue() = default;
  constexpr explicit DigitalValue(std::uint64_t value) : value_(value) {}

  static constexpr DigitalValue infinity() {
    DigitalValue v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }

  /// Magnitude of a finite value. Meaningless for infinity (returns 0).
  constexpr std::uint64_t value() const { return infinite_ ? 0 : value_; }

  friend constexpr bool operator==(const DigitalValue&, const DigitalValue&) = default;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

DigitSum digit_sum(DigitalValue a);

/// Position of `a` in the total order ≤_W, as a lexicographic key.
std::strong_ordering compare_w(DigitalValue a, DigitalValue b);

DigitalValue add(DigitalValue a, DigitalValue b);
DigitalValue mul(DigitalValue a, DigitalValue b);

/// a ≤_W b, i.e. add(a, b) == b.
bool leq_w(DigitalValue a, DigitalValue b);

/// Parses a decimal literal or the token "inf". Throws std::invalid_argument
/// on malformed input and std::out_of_range past 2^64 - 1.
DigitalValue parse_digital(std::string_view text);

std::string to_string(DigitalValue a);

/// Semiring descriptor for W, consumed by the generic matrix and solver code.
struct DigitalSemiring {
  using value_type = DigitalValue;

  static value_type zero() { return DigitalValue{0}; }
  static value_type one() { return DigitalValue::infinity(); }
  static value_type top() { return DigitalValue::infinity(); }
  static value_type add(value_type a, value_type b) { return twoside::add(a, b); }
  static value_type mul(value_type a, value_type b) { return twoside::mul(a, b); }
  static bool leq(value_type a, value_type b) { return leq_w(a, b); }
};

}  // namespace twoside

#endif  // TWOSIDE_DIGITAL_HPP
