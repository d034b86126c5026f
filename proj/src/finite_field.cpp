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

#include "twoside/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twoside/random.hpp"

namespace twoside {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxPrime) throw std::invalid_argument("p must be below 65536");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

FpWord PrimeField::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  return static_cast<FpWord>(((v % m) + m) % m);
}

FpWord PrimeField::pow(FpWord a, std::uint64_t e) const {
  FpWord result = 1 % p_;
  FpWord base = a % p_;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FpWord PrimeField::inv(FpWord a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in F_p");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------- polynomials

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % f.p();
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly rem(const PrimeField& f, Poly a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  const FpWord lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  trim(a);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const FpWord q = f.mul(a[static_cast<std::size_t>(da)], lead_inv);
    const std::size_t shift = static_cast<std::size_t>(da - db);
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[shift + static_cast<std::size_t>(i)];
      slot = f.sub(slot, f.mul(q, b[static_cast<std::size_t>(i)]));
    }
    trim(a);
  }
  return a;
}

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FpWord lead_inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& modulus) {
  Poly result = rem(f, Poly{1}, modulus);
  base = rem(f, std::move(base), modulus);
  for (; e != 0; e >>= 1) {
    if (e & 1) result = rem(f, mul(f, result, base), modulus);
    base = rem(f, mul(f, base, base), modulus);
  }
  return result;
}

FpWord eval(const PrimeField& f, const Poly& a, FpWord x) {
  FpWord acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

}  // namespace poly

bool is_irreducible(const PrimeField& f, const Poly& modulus) {
  Poly g = modulus;
  poly::trim(g);
  const int n = poly::degree(g);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly x_pow = x;  // x^(p^i) mod g
  for (int i = 1; i <= n / 2; ++i) {
    x_pow = poly::powmod(f, x_pow, f.p(), g);
    if (poly::degree(poly::gcd(f, g, poly::sub(f, x_pow, x))) > 0) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  const PrimeField f(p);
  Rng rng(seed);
  std::uniform_int_distribution<FpWord> coeff(0, p - 1);
  for (;;) {
    Poly candidate(n + 1);
    for (std::size_t i = 0; i < n; ++i) candidate[i] = coeff(rng);
    candidate[n] = 1;
    if (is_irreducible(f, candidate)) return candidate;
  }
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, Poly modulus) : fp_(p), modulus_(std::move(modulus)) {
  poly::trim(modulus_);
  const int deg = poly::degree(modulus_);
  if (deg < 1) throw std::invalid_argument("modulus must have degree at least 1");
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (auto c : modulus_)
    if (c >= p) throw std::invalid_argument("modulus coefficients must be reduced mod p");
  n_ = static_cast<std::size_t>(deg);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (order > kMaxOrder / p) throw std::invalid_argument("field order p^n exceeds 2^40");
    order *= p;
  }
  order_ = order;
  if (!is_irreducible(fp_, modulus_)) throw std::invalid_argument("modulus must be irreducible");
  group_order_factors_ = prime_factors(order_ - 1);
}

FieldCtx FieldCtx::create(std::uint32_t p, std::size_t n, std::uint64_t seed) {
  return with_modulus(p, find_irreducible(p, n, seed));
}

FieldCtx FieldCtx::with_modulus(std::uint32_t p, Poly modulus) {
  FieldCtx ctx(p, std::move(modulus));
  ctx.t_ = find_primitive(ctx);
  return ctx;
}

FieldCtx FieldCtx::with_generator(std::uint32_t p, Poly modulus, FieldElement t) {
  FieldCtx ctx(p, std::move(modulus));
  ctx.check_element(t);
  if (!ctx.is_primitive(t)) throw std::invalid_argument("t must generate the multiplicative group");
  ctx.t_ = std::move(t);
  return ctx;
}

void FieldCtx::check_element(const FieldElement& a) const {
  if (a.coeffs.size() != n_)
    throw std::invalid_argument("field element must have " + std::to_string(n_) + " coefficients");
  for (auto c : a.coeffs)
    if (c >= p()) throw std::invalid_argument("field element coefficient not reduced mod p");
}

FieldElement FieldCtx::one() const { return from_prime(1); }

FieldElement FieldCtx::from_prime(FpWord c) const {
  FieldElement e = zero();
  e.coeffs[0] = c % p();
  return e;
}

FieldElement FieldCtx::element(std::vector<FpWord> coeffs) const {
  if (coeffs.size() != n_)
    throw std::invalid_argument("field element must have " + std::to_string(n_) + " coefficients");
  for (auto& c : coeffs) c %= p();
  return FieldElement{std::move(coeffs)};
}

FieldElement FieldCtx::element_from_index(std::uint64_t index) const {
  FieldElement e = zero();
  for (std::size_t i = 0; i < n_; ++i, index /= p()) e.coeffs[i] = static_cast<FpWord>(index % p());
  return e;
}

std::uint64_t FieldCtx::index_of(const FieldElement& a) const {
  std::uint64_t index = 0;
  for (std::size_t i = n_; i-- > 0;) index = index * p() + a.coeffs[i];
  return index;
}

bool FieldCtx::is_zero(const FieldElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](FpWord c) { return c == 0; });
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = fp_.add(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = fp_.sub(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = fp_.neg(a.coeffs[i]);
  return out;
}

FieldElement FieldCtx::scale(FpWord c, const FieldElement& a) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = fp_.mul(c % p(), a.coeffs[i]);
  return out;
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  if (n_ == 1) return FieldElement{{fp_.mul(a.coeffs[0], b.coeffs[0])}};
  // Schoolbook product followed by reduction with the monic modulus.
  std::vector<std::uint64_t> acc(2 * n_ - 1, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) acc[i + j] += static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j];
  }
  for (auto& c : acc) c %= p();
  for (std::size_t d = acc.size(); d-- > n_;) {
    const std::uint64_t lead = acc[d];
    if (lead == 0) continue;
    acc[d] = 0;
    for (std::size_t i = 0; i < n_; ++i)
      acc[d - n_ + i] = (acc[d - n_ + i] + (p() - lead) * modulus_[i]) % p();
  }
  FieldElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = static_cast<FpWord>(acc[i]);
  return out;
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in F_q");
  return pow(a, order_ - 2);
}

FieldElement FieldCtx::pow_signed(const FieldElement& a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  // Exponents live modulo q - 1 on the multiplicative group.
  const auto group = static_cast<std::int64_t>(order_ - 1);
  return pow(inv(a), static_cast<std::uint64_t>((-e) % group));
}

std::uint64_t FieldCtx::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (auto q : group_order_factors_)
    while (ord % q == 0 && pow(a, ord / q) == one()) ord /= q;
  return ord;
}

bool FieldCtx::is_primitive(const FieldElement& a) const {
  return !is_zero(a) && multiplicative_order(a) == order_ - 1;
}

FieldElement find_primitive(const FieldCtx& ctx) {
  for (std::uint64_t idx = 1; idx < ctx.order(); ++idx) {
    FieldElement a = ctx.element_from_index(idx);
    if (ctx.is_primitive(a)) return a;
  }
  throw std::logic_error("no primitive element found; modulus is not irreducible");
}

// ---------------------------------------------------------------- linear algebra

std::vector<FpWord> mat_vec(const PrimeField& f, const FpMatrix& a, const std::vector<FpWord>& z) {
  if (z.size() != a.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<FpWord> out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) acc = (acc + static_cast<std::uint64_t>(a.at(i, j)) * z[j]) % f.p();
    out[i] = static_cast<FpWord>(acc);
  }
  return out;
}

namespace {

// Gauss-Jordan on [A | b] in place; returns pivot columns (one per pivot row, in order).
std::vector<std::size_t> reduce_rows(const PrimeField& f, FpMatrix& a, std::vector<FpWord>* b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(row, j));
      if (b) std::swap((*b)[sel], (*b)[row]);
    }
    const FpWord scale = f.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = f.mul(a.at(row, j), scale);
    if (b) (*b)[row] = f.mul((*b)[row], scale);
    for (std::size_t i = 0; i < a.rows; ++i) {
      const FpWord factor = a.at(i, col);
      if (i == row || factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(row, j)));
      if (b) (*b)[i] = f.sub((*b)[i], f.mul(factor, (*b)[row]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& f, FpMatrix a) { return reduce_rows(f, a, nullptr).size(); }

std::optional<std::vector<FpWord>> gauss_solve(const PrimeField& f, FpMatrix a, std::vector<FpWord> b) {
  if (b.size() != a.rows) throw std::invalid_argument("gauss_solve: right-hand side length mismatch");
  if (a.data.size() != a.rows * a.cols) throw std::invalid_argument("gauss_solve: malformed matrix");
  for (auto& v : a.data) v %= f.p();
  for (auto& v : b) v %= f.p();
  const auto pivots = reduce_rows(f, a, &b);
  for (std::size_t i = pivots.size(); i < a.rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<FpWord> z(a.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = b[r];
  return z;
}

}  // namespace twoside
