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

#include "twoside/twisted_ring.hpp"

#include <numeric>
#include <stdexcept>

#include "twoside/random.hpp"

namespace twoside {

DihedralElement dihedral_mul(std::uint32_t m, DihedralElement g, DihedralElement h) {
  if (m == 0) throw std::invalid_argument("dihedral order parameter must be positive");
  const std::uint32_t j = h.i % m;
  const std::uint32_t rot = g.k == 0 ? (g.i + j) % m : (g.i + m - j) % m;
  return {rot, g.k ^ h.k};
}

std::string_view to_string(SubspaceLabel label) {
  switch (label) {
    case SubspaceLabel::R1: return "R1";
    case SubspaceLabel::A1: return "A1";
    case SubspaceLabel::A2: return "A2";
  }
  return "?";
}

TwistedRing::TwistedRing(FieldCtx field, std::uint32_t m) : field_(std::move(field)), m_(m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const std::uint64_t group = field_.order() - 1;
  twist_ = field_.pow(field_.t(), group / std::gcd<std::uint64_t>(m, group));
  const FieldElement twist_inv = field_.inv(twist_);
  twist_pow_.reserve(m);
  twist_inv_pow_.reserve(m);
  FieldElement up = field_.one(), down = field_.one();
  for (std::uint32_t j = 0; j < m; ++j) {
    twist_pow_.push_back(up);
    twist_inv_pow_.push_back(down);
    up = field_.mul(up, twist_);
    down = field_.mul(down, twist_inv);
  }
  FieldElement tp = field_.one();
  for (std::size_t a = 0; a < field_.n(); ++a) {
    t_pow_.push_back(tp);
    tp = field_.mul(tp, field_.t());
  }
}

DihedralElement TwistedRing::group_element(std::size_t index) const {
  return {static_cast<std::uint32_t>(index % m_), static_cast<std::uint32_t>(index / m_)};
}

FieldElement TwistedRing::cocycle(DihedralElement g, DihedralElement h) const {
  return g.k == 0 ? field_.one() : twist_pow_[h.i % m_];
}

void TwistedRing::check(const TwistedElement& a) const {
  if (a.coeffs.size() != size())
    throw std::invalid_argument("twisted ring element must have 2m coefficients");
  for (const auto& c : a.coeffs) {
    if (c.coeffs.size() != field_.n()) throw std::invalid_argument("coefficient from a different field");
    for (auto w : c.coeffs)
      if (w >= field_.p()) throw std::invalid_argument("coefficient not reduced mod p");
  }
}

TwistedElement TwistedRing::zero() const {
  return TwistedElement{std::vector<FieldElement>(size(), field_.zero())};
}

TwistedElement TwistedRing::one() const { return monomial(field_.one(), {0, 0}); }

TwistedElement TwistedRing::monomial(const FieldElement& c, DihedralElement g) const {
  TwistedElement out = zero();
  out.coeffs[index({g.i % m_, g.k & 1u})] = c;
  return out;
}

TwistedElement TwistedRing::add(const TwistedElement& a, const TwistedElement& b) const {
  check(a);
  check(b);
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g) out.coeffs[g] = field_.add(a.coeffs[g], b.coeffs[g]);
  return out;
}

TwistedElement TwistedRing::sub(const TwistedElement& a, const TwistedElement& b) const {
  check(a);
  check(b);
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g) out.coeffs[g] = field_.sub(a.coeffs[g], b.coeffs[g]);
  return out;
}

TwistedElement TwistedRing::neg(const TwistedElement& a) const { return sub(zero(), a); }

TwistedElement TwistedRing::scale(const FieldElement& c, const TwistedElement& a) const {
  check(a);
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g) out.coeffs[g] = field_.mul(c, a.coeffs[g]);
  return out;
}

TwistedElement TwistedRing::scale(FpWord c, const TwistedElement& a) const {
  check(a);
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g) out.coeffs[g] = field_.scale(c, a.coeffs[g]);
  return out;
}

TwistedElement TwistedRing::mul(const TwistedElement& a, const TwistedElement& b) const {
  check(a);
  check(b);
  TwistedElement out = zero();
  for (std::size_t gi = 0; gi < size(); ++gi) {
    if (field_.is_zero(a.coeffs[gi])) continue;
    const DihedralElement g = group_element(gi);
    for (std::size_t hi = 0; hi < size(); ++hi) {
      if (field_.is_zero(b.coeffs[hi])) continue;
      const DihedralElement h = group_element(hi);
      FieldElement term = field_.mul(a.coeffs[gi], b.coeffs[hi]);
      if (g.k == 1) term = field_.mul(term, twist_pow_[h.i]);
      auto& slot = out.coeffs[index(dihedral_mul(m_, g, h))];
      slot = field_.add(slot, term);
    }
  }
  return out;
}

TwistedElement TwistedRing::adjoint(const TwistedElement& a) const {
  check(a);
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g)
    out.coeffs[g] = field_.mul(a.coeffs[g], twist_inv_pow_[group_element(g).i]);
  return out;
}

bool TwistedRing::in_R1(const TwistedElement& a) const {
  check(a);
  for (std::uint32_t i = 0; i < m_; ++i)
    if (!field_.is_zero(a.coeffs[index({i, 1})])) return false;
  return true;
}

bool TwistedRing::in_R2(const TwistedElement& a) const {
  check(a);
  for (std::uint32_t i = 0; i < m_; ++i)
    if (!field_.is_zero(a.coeffs[index({i, 0})])) return false;
  return true;
}

bool TwistedRing::symmetric_on(const TwistedElement& a, std::uint32_t k) const {
  for (std::uint32_t i = 1; i < m_; ++i)
    if (a.coeffs[index({i, k})] != a.coeffs[index({m_ - i, k})]) return false;
  return true;
}

bool TwistedRing::in_A1(const TwistedElement& a) const { return in_R1(a) && symmetric_on(a, 0); }

bool TwistedRing::in_A2(const TwistedElement& a) const { return in_R2(a) && symmetric_on(a, 1); }

SubspaceBasis TwistedRing::basis_R1() const {
  SubspaceBasis basis{SubspaceLabel::R1, {}};
  for (const auto& ta : t_pow_)
    for (std::uint32_t j = 0; j < m_; ++j) basis.elements.push_back(monomial(ta, {j, 0}));
  return basis;
}

SubspaceBasis TwistedRing::symmetric_basis(SubspaceLabel label, std::uint32_t k) const {
  SubspaceBasis basis{label, {}};
  for (const auto& ta : t_pow_) {
    basis.elements.push_back(monomial(ta, {0, k}));
    for (std::uint32_t j = 1; 2 * j < m_; ++j)
      basis.elements.push_back(add(monomial(ta, {j, k}), monomial(ta, {m_ - j, k})));
    if (m_ % 2 == 0) basis.elements.push_back(monomial(ta, {m_ / 2, k}));
  }
  return basis;
}

SubspaceBasis TwistedRing::basis_A2() const { return symmetric_basis(SubspaceLabel::A2, 1); }

SubspaceBasis TwistedRing::basis_A1() const { return symmetric_basis(SubspaceLabel::A1, 0); }

TwistedElement TwistedRing::sample_span(const SubspaceBasis& basis, std::uint64_t seed) const {
  Rng rng(seed);
  std::uniform_int_distribution<FpWord> coeff(0, field_.p() - 1);
  TwistedElement out = zero();
  for (const auto& e : basis.elements) out = add(out, scale(coeff(rng), e));
  return out;
}

TwistedElement TwistedRing::sample_R1(std::uint64_t seed) const { return sample_span(basis_R1(), seed); }

TwistedElement TwistedRing::sample_A2(std::uint64_t seed) const { return sample_span(basis_A2(), seed); }

TwistedElement TwistedRing::sample_A1(std::uint64_t seed) const { return sample_span(basis_A1(), seed); }

TwistedElement TwistedRing::sample_uniform(std::uint64_t seed) const {
  Rng rng(seed);
  std::uniform_int_distribution<FpWord> coeff(0, field_.p() - 1);
  std::vector<FpWord> v(size() * field_.n());
  for (auto& w : v) w = coeff(rng);
  return unflatten(v);
}

std::vector<FpWord> TwistedRing::flatten(const TwistedElement& a) const {
  check(a);
  std::vector<FpWord> out;
  out.reserve(size() * field_.n());
  for (const auto& c : a.coeffs) out.insert(out.end(), c.coeffs.begin(), c.coeffs.end());
  return out;
}

TwistedElement TwistedRing::unflatten(const std::vector<FpWord>& v) const {
  const std::size_t n = field_.n();
  if (v.size() != size() * n) throw std::invalid_argument("flattened element has the wrong length");
  TwistedElement out = zero();
  for (std::size_t g = 0; g < size(); ++g)
    out.coeffs[g] = field_.element(std::vector<FpWord>(v.begin() + static_cast<std::ptrdiff_t>(g * n),
                                                       v.begin() + static_cast<std::ptrdiff_t>((g + 1) * n)));
  return out;
}

}  // namespace twoside
