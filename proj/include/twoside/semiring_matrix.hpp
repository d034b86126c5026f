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

#ifndef TWOSIDE_SEMIRING_MATRIX_HPP
#define TWOSIDE_SEMIRING_MATRIX_HPP

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twoside {

/**
 * A semiring descriptor: a type exposing `value_type` and static `zero`,
 * `one`, `add` and `mul`. Values must be equality comparable.
 */
template <class S>
concept Semiring = requires(typename S::value_type a, typename S::value_type b) {
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::add(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { a == b } -> std::convertible_to<bool>;
};

/// Additively idempotent semiring with its induced order a ≤ b ⇔ a + b = b.
template <class S>
concept IdempotentSemiring = Semiring<S> && requires(typename S::value_type a, typename S::value_type b) {
  { S::leq(a, b) } -> std::convertible_to<bool>;
};

/// Square n×n matrix over a semiring, row-major.
template <Semiring S>
class Matrix {
 public:
  using value_type = typename S::value_type;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n, S::zero()) {}

  /// Builds from nested rows; throws std::invalid_argument if not square.
  static Matrix from_rows(const std::vector<std::vector<value_type>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix zero(std::size_t n) { return Matrix(n); }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S::one();
    return m;
  }

  std::size_t n() const { return n_; }

  // Proxy references keep std::vector<bool> storage usable.
  typename std::vector<value_type>::reference at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  typename std::vector<value_type>::const_reference at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  /// Entries in row-major order.
  const std::vector<value_type>& entries() const { return entries_; }

  std::vector<std::vector<value_type>> rows() const {
    std::vector<std::vector<value_type>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> entries_;
};

namespace detail {
inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}
}  // namespace detail

template <Semiring S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_dim(a.n(), b.n(), "mat_add");
  Matrix<S> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out.at(i, j) = S::add(a.at(i, j), b.at(i, j));
  return out;
}

template <Semiring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_dim(a.n(), b.n(), "mat_mul");
  const std::size_t n = a.n();
  Matrix<S> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto acc = S::zero();
      for (std::size_t k = 0; k < n; ++k) acc = S::add(acc, S::mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

/// Entrywise z ⊗ A. Equals mat_mul(z·I, A) when z is central.
template <Semiring S>
Matrix<S> scalar_mul(const typename S::value_type& z, const Matrix<S>& a) {
  Matrix<S> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out.at(i, j) = S::mul(z, a.at(i, j));
  return out;
}

/// Circulant matrix given by its first column (c_0, ..., c_{n-1}).
/// Expansion: C(i, j) = c[(i - j) mod n].
template <Semiring S>
struct Circulant {
  std::vector<typename S::value_type> first_column;

  std::size_t n() const { return first_column.size(); }
  friend bool operator==(const Circulant&, const Circulant&) = default;
};

template <Semiring S>
Matrix<S> circulant_expand(const Circulant<S>& c) {
  const std::size_t n = c.n();
  Matrix<S> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = c.first_column[(i + n - j) % n];
  return out;
}

/// True iff every entry agrees with the first column under the circulant layout.
template <Semiring S>
bool is_circulant(const Matrix<S>& a) {
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a.at(i, j) == a.at((i + n - j) % n, 0))) return false;
  return true;
}

/// C_i = Circ(e_i), with the multiplicative identity at position i.
template <Semiring S>
std::vector<Matrix<S>> circulant_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("circulant_generators: n must be positive");
  std::vector<Matrix<S>> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Circulant<S> e{std::vector<typename S::value_type>(n, S::zero())};
    e.first_column[i] = S::one();
    gens.push_back(circulant_expand(e));
  }
  return gens;
}

/// Row-major flattening of a matrix.
template <Semiring S>
std::vector<typename S::value_type> flatten(const Matrix<S>& a) {
  return a.entries();
}

/**
 * Coefficient columns of the two-sided system Y = ⊕_{i,j} z_ij L_i ⊗ M ⊗ R_j.
 *
 * `columns[k]` is the flattened product for the pair `index[k] = (i, j)`;
 * pairs are ordered row-major in (i, j).
 */
template <Semiring S>
struct TwoSidedColumns {
  std::vector<std::vector<typename S::value_type>> columns;
  std::vector<std::pair<std::size_t, std::size_t>> index;
};

template <Semiring S>
TwoSidedColumns<S> flatten_two_sided(const Matrix<S>& m, const std::vector<Matrix<S>>& left,
                                     const std::vector<Matrix<S>>& right) {
  TwoSidedColumns<S> out;
  out.columns.reserve(left.size() * right.size());
  out.index.reserve(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Matrix<S> lm = mat_mul(left[i], m);
    for (std::size_t j = 0; j < right.size(); ++j) {
      out.columns.push_back(flatten(mat_mul(lm, right[j])));
      out.index.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace twoside

#endif  // TWOSIDE_SEMIRING_MATRIX_HPP
