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

#ifndef TWOSIDE_TWISTED_RING_HPP
#define TWOSIDE_TWISTED_RING_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "twoside/finite_field.hpp"

namespace twoside {

/// x^i y^k in D_2m = <x, y | x^m = y^2 = 1, y x = x^{-1} y>.
struct DihedralElement {
  std::uint32_t i = 0;
  std::uint32_t k = 0;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// Group law: x^i y^k · x^j y^l = x^{i + (-1)^k j} y^{k+l}.
DihedralElement dihedral_mul(std::uint32_t m, DihedralElement g, DihedralElement h);

/// Element of K^α D_2m, dense over the 2m group elements.
/// Coefficient of x^i y^k sits at index k·m + i.
struct TwistedElement {
  std::vector<FieldElement> coeffs;

  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

enum class SubspaceLabel { R1, A1, A2 };

std::string_view to_string(SubspaceLabel label);

/// F_p basis of one of the distinguished subspaces.
struct SubspaceBasis {
  SubspaceLabel label;
  std::vector<TwistedElement> elements;
};

/**
 * The twisted group ring R = K^α D_2m over K = F_{p^n}.
 *
 * Multiplication extends (a·g)(b·h) = ab·α(g,h)·gh bilinearly, with
 * α(x^i, ·) = 1 and α(x^i y, x^j y^l) = τ^j, j taken in [0, m).
 *
 * The twist τ is t^((q-1)/gcd(m, q-1)), the element of largest order with
 * τ^m = 1. α is a 2-cocycle exactly when τ^m = 1; τ = t whenever (q-1) | m.
 *
 * The adjoint scales the coefficient of x^i y^k by τ^{-i}.
 */
class TwistedRing {
 public:
  /// Throws std::invalid_argument if m < 1.
  TwistedRing(FieldCtx field, std::uint32_t m);

  const FieldCtx& field() const { return field_; }
  std::uint32_t m() const { return m_; }
  const FieldElement& twist() const { return twist_; }

  /// Number of group elements, 2m.
  std::size_t size() const { return 2 * static_cast<std::size_t>(m_); }
  std::size_t index(DihedralElement g) const { return g.k * m_ + g.i; }
  DihedralElement group_element(std::size_t index) const;

  FieldElement cocycle(DihedralElement g, DihedralElement h) const;

  TwistedElement zero() const;
  TwistedElement one() const;
  /// c · g.
  TwistedElement monomial(const FieldElement& c, DihedralElement g) const;

  TwistedElement add(const TwistedElement& a, const TwistedElement& b) const;
  TwistedElement sub(const TwistedElement& a, const TwistedElement& b) const;
  TwistedElement neg(const TwistedElement& a) const;
  TwistedElement scale(const FieldElement& c, const TwistedElement& a) const;
  TwistedElement scale(FpWord c, const TwistedElement& a) const;
  TwistedElement mul(const TwistedElement& a, const TwistedElement& b) const;
  TwistedElement adjoint(const TwistedElement& a) const;

  /// Supported on rotations only (K C_m).
  bool in_R1(const TwistedElement& a) const;
  /// Supported on reflections only (K C_m y).
  bool in_R2(const TwistedElement& a) const;
  /// In R1 with r_i = r_{m-i}.
  bool in_A1(const TwistedElement& a) const;
  /// In R2 with r_i = r_{m-i}.
  bool in_A2(const TwistedElement& a) const;

  /// {t^a x^j : 0 ≤ a < n, 0 ≤ j < m}.
  SubspaceBasis basis_R1() const;
  /// {t^a y} ∪ {t^a (x^j + x^{m-j}) y : 1 ≤ j < m/2} ∪ {t^a x^{m/2} y if m even}.
  SubspaceBasis basis_A2() const;
  /// basis_A2 without the y factor.
  SubspaceBasis basis_A1() const;

  /// Uniform F_p-combinations of the respective basis, deterministic per seed.
  TwistedElement sample_R1(std::uint64_t seed) const;
  TwistedElement sample_A2(std::uint64_t seed) const;
  TwistedElement sample_A1(std::uint64_t seed) const;
  /// Uniform over all of R.
  TwistedElement sample_uniform(std::uint64_t seed) const;

  /// F_p coordinates: n coefficients per group element, in index order.
  std::vector<FpWord> flatten(const TwistedElement& a) const;
  TwistedElement unflatten(const std::vector<FpWord>& v) const;

  /// Throws std::invalid_argument unless `a` has 2m well-formed coefficients.
  void check(const TwistedElement& a) const;

 private:
  SubspaceBasis symmetric_basis(SubspaceLabel label, std::uint32_t k) const;
  TwistedElement sample_span(const SubspaceBasis& basis, std::uint64_t seed) const;
  bool symmetric_on(const TwistedElement& a, std::uint32_t k) const;

  FieldCtx field_;
  std::uint32_t m_;
  FieldElement twist_;
  std::vector<FieldElement> twist_pow_;      // τ^j, 0 ≤ j < m
  std::vector<FieldElement> twist_inv_pow_;  // τ^{-j}, 0 ≤ j < m
  std::vector<FieldElement> t_pow_;          // t^a, 0 ≤ a < n
};

}  // namespace twoside

#endif  // TWOSIDE_TWISTED_RING_HPP
