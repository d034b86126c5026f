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

#include "twoside/digital.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace twoside {

DigitSum digit_sum(DigitalValue a) {
  if (a.is_infinite()) return kInfiniteDigitSum;
  DigitSum sum = 0;
  for (std::uint64_t v = a.value(); v != 0; v /= 10) sum += static_cast<DigitSum>(v % 10);
  return sum;
}

std::strong_ordering compare_w(DigitalValue a, DigitalValue b) {
  if (auto c = digit_sum(a) <=> digit_sum(b); c != 0) return c;
  // Equal digit sums: both infinite, or both finite.
  if (a.is_infinite()) return std::strong_ordering::equal;
  return a.value() <=> b.value();
}

DigitalValue add(DigitalValue a, DigitalValue b) { return compare_w(a, b) < 0 ? b : a; }

DigitalValue mul(DigitalValue a, DigitalValue b) { return compare_w(a, b) < 0 ? a : b; }

bool leq_w(DigitalValue a, DigitalValue b) { return compare_w(a, b) <= 0; }

DigitalValue parse_digital(std::string_view text) {
  if (text == "inf") return DigitalValue::infinity();
  if (text.empty()) throw std::invalid_argument("empty digital literal");
  std::uint64_t v = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (ec == std::errc::result_out_of_range)
    throw std::out_of_range("digital literal exceeds 64 bits: " + std::string(text));
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("malformed digital literal: " + std::string(text));
  return DigitalValue{v};
}

std::string to_string(DigitalValue a) {
  return a.is_infinite() ? std::string("inf") : std::to_string(a.value());
}

}  // namespace twoside
