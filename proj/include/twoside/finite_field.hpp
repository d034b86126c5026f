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

#ifndef TWOSIDE_FINITE_FIELD_HPP
#define TWOSIDE_FINITE_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace twoside {

using FpWord = std::uint32_t;

/// Little-endian coefficient vector over F_p.
using Poly = std::vector<FpWord>;

bool is_prime(std::uint64_t v);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// F_p for a prime p < 2^16.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  /// Throws std::invalid_argument unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  FpWord reduce(std::int64_t v) const;
  FpWord add(FpWord a, FpWord b) const { return (a + b) % p_; }
  FpWord sub(FpWord a, FpWord b) const { return (a + p_ - b) % p_; }
  FpWord neg(FpWord a) const { return (p_ - a) % p_; }
  FpWord mul(FpWord a, FpWord b) const {
    return static_cast<FpWord>(static_cast<std::uint64_t>(a) * b % p_);
  }
  FpWord pow(FpWord a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  FpWord inv(FpWord a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

namespace poly {
void trim(Poly& a);
/// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& a);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly rem(const PrimeField& f, Poly a, const Poly& b);
/// Monic gcd.
Poly gcd(const PrimeField& f, Poly a, Poly b);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& modulus);
FpWord eval(const PrimeField& f, const Poly& a, FpWord x);
}  // namespace poly

/// Ben-Or test: no factor of degree ≤ deg/2 divides the polynomial.
bool is_irreducible(const PrimeField& f, const Poly& modulus);

/// Random monic irreducible polynomial of degree n, deterministic per seed.
Poly find_irreducible(std::uint32_t p, std::size_t n, std::uint64_t seed);

/// Element of F_{p^n}: n coefficients over F_p, little-endian in the
/// polynomial basis of the context's modulus.
struct FieldElement {
  std::vector<FpWord> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/**
 * F_{p^n} = F_p[u] / (modulus) together with a primitive element t.
 *
 * Immutable once built. Elements carry only coefficients; every operation
 * goes through the context that owns the representation.
 */
class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxOrder = 1ULL << 40;

  /// Random irreducible modulus and the first primitive element.
  static FieldCtx create(std::uint32_t p, std::size_t n, std::uint64_t seed);

  /// Validates the modulus (monic, irreducible) and finds t.
  static FieldCtx with_modulus(std::uint32_t p, Poly modulus);

  /// Validates the modulus and that t generates the multiplicative group.
  static FieldCtx with_generator(std::uint32_t p, Poly modulus, FieldElement t);

  const PrimeField& prime_field() const { return fp_; }
  std::uint32_t p() const { return fp_.p(); }
  std::size_t n() const { return n_; }
  /// p^n.
  std::uint64_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }
  const FieldElement& t() const { return t_; }

  FieldElement zero() const { return FieldElement{std::vector<FpWord>(n_, 0)}; }
  FieldElement one() const;
  FieldElement from_prime(FpWord c) const;
  /// Validates length and reduces coefficients mod p.
  FieldElement element(std::vector<FpWord> coeffs) const;
  /// The element whose coefficients are the base-p digits of `index`.
  FieldElement element_from_index(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(FpWord c, const FieldElement& a) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  /// a^e for a signed exponent; a must be nonzero when e < 0.
  FieldElement pow_signed(const FieldElement& a, std::int64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElement& a) const;
  bool is_primitive(const FieldElement& a) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.fp_ == b.fp_ && a.modulus_ == b.modulus_ && a.t_ == b.t_;
  }

 private:
  FieldCtx(std::uint32_t p, Poly modulus);
  void check_element(const FieldElement& a) const;

  PrimeField fp_;
  std::size_t n_ = 0;
  std::uint64_t order_ = 0;
  Poly modulus_;
  FieldElement t_;
  std::vector<std::uint64_t> group_order_factors_;

  friend FieldElement find_primitive(const FieldCtx& ctx);
};

/// Smallest-index element of multiplicative order p^n - 1.
FieldElement find_primitive(const FieldCtx& ctx);

/// Dense r×c matrix over F_p, row-major.
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FpWord> data;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  FpWord& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  FpWord at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::vector<FpWord> mat_vec(const PrimeField& f, const FpMatrix& a, const std::vector<FpWord>& z);

std::size_t rank(const PrimeField& f, FpMatrix a);

/**
 * One solution of A z = b over F_p by Gauss-Jordan elimination, with every
 * free variable set to zero; nullopt if the system is inconsistent.
 * Throws std::invalid_argument if b does not have A.rows entries.
 */
std::optional<std::vector<FpWord>> gauss_solve(const PrimeField& f, FpMatrix a, std::vector<FpWord> b);

}  // namespace twoside

#endif  // TWOSIDE_FINITE_FIELD_HPP
