/**************************************************************************
 * Copyright 2026 The linset Authors
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
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linset/elem.hpp"
#include "linset/error.hpp"

namespace linset {

// Dense row-major matrix of field elements. The field is supplied separately to
// each algorithm, so one Matrix type serves F_p, F_q and F_{q^n}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, kZero) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "row length differs from matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void truncate_rows(std::size_t n) {
    rows_ = n;
    data_.resize(rows_ * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  const std::vector<Elem>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
concept ScalarField = requires(const F& f, Elem a, Elem b) {
  { f.add(a, b) } -> std::same_as<Elem>;
  { f.sub(a, b) } -> std::same_as<Elem>;
  { f.mul(a, b) } -> std::same_as<Elem>;
  { f.neg(a) } -> std::same_as<Elem>;
  { f.inv(a) } -> std::same_as<Elem>;
};

// Arithmetic modulo a prime p; Elem values are the residues 0..p-1.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t characteristic() const noexcept { return p_; }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Elem{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return Elem{a.value >= b.value ? a.value - b.value : static_cast<std::uint32_t>(std::uint64_t{a.value} + p_ - b.value)};
  }
  Elem neg(Elem a) const noexcept { return Elem{a.value == 0 ? 0 : p_ - a.value}; }
  Elem mul(Elem a, Elem b) const noexcept {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  Elem inv(Elem a) const {
    if (a.value == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero in prime field");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.value;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
      std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (t < 0) t += p_;
    return Elem{static_cast<std::uint32_t>(t)};
  }

 private:
  std::uint32_t p_;
};

// Row echelon data: the reduced matrix plus its pivot column indices.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

// In-place reduced row echelon form. Zero rows are dropped. Returns pivot columns.
template <ScalarField F>
std::vector<std::size_t> rref_in_place(const F& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m(sel, c) == kZero) ++sel;
    if (sel == rows) continue;
    m.swap_rows(sel, rank);
    Elem inv = f.inv(m(rank, c));
    if (inv != kOne)
      for (std::size_t j = c; j < cols; ++j) m(rank, j) = f.mul(m(rank, j), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Elem factor = m(r, c);
      if (factor == kZero) continue;
      for (std::size_t j = c; j < cols; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  return pivots;
}

template <ScalarField F>
Echelon echelon(const F& f, Matrix m) {
  auto pivots = rref_in_place(f, m);
  return Echelon{std::move(m), std::move(pivots)};
}

// Rank by forward elimination only; destroys the input.
template <ScalarField F>
std::size_t rank_in_place(const F& f, Matrix& m) {
  std::size_t rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m(sel, c) == kZero) ++sel;
    if (sel == rows) continue;
    m.swap_rows(sel, rank);
    Elem inv = f.inv(m(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Elem factor = m(r, c);
      if (factor == kZero) continue;
      factor = f.mul(factor, inv);
      for (std::size_t j = c; j < cols; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

template <ScalarField F>
std::size_t rank(const F& f, Matrix m) {
  return rank_in_place(f, m);
}

// Canonical basis (rows, in reduced echelon form) of {x : M x = 0}.
template <ScalarField F>
Matrix nullspace(const F& f, const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(f, r);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, cols);
  std::vector<Elem> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), kZero);
    v[free] = kOne;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.append_row(v);
  }
  if (basis.rows() > 0) rref_in_place(f, basis);
  return basis;
}

// One solution of M x = b, or nullopt when the system is inconsistent.
template <ScalarField F>
std::optional<std::vector<Elem>> try_solve(const F& f, const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref_in_place(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Elem> x(m.cols(), kZero);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

template <ScalarField F>
std::vector<Elem> solve(const F& f, const Matrix& m, std::span<const Elem> b) {
  auto x = try_solve(f, m, b);
  if (!x) throw Error(ErrorKind::NoSolution, "linear system is inconsistent");
  return *x;
}

template <ScalarField F>
Matrix multiply(const F& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem aik = a(i, k);
      if (aik == kZero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

template <ScalarField F>
std::optional<Matrix> inverse(const F& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = kOne;
  }
  auto pivots = rref_in_place(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

// A subspace of F^N held as a canonical reduced echelon basis: equal spaces
// have identical basis matrices.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  template <ScalarField F>
  static RowSpace span(const F& f, std::size_t ambient, Matrix rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
      throw Error(ErrorKind::ShapeMismatch, "spanning vectors have the wrong length");
    RowSpace s(ambient);
    if (rows.rows() == 0) return s;
    s.pivots_ = rref_in_place(f, rows);
    s.basis_ = std::move(rows);
    return s;
  }

  template <ScalarField F>
  static RowSpace whole(const F& f, std::size_t ambient) {
    return span(f, ambient, Matrix::identity(ambient));
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Reduces v modulo the span; the result is zero iff v is contained.
  template <ScalarField F>
  void reduce(const F& f, std::span<Elem> v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Elem factor = v[pivots_[i]];
      if (factor == kZero) continue;
      auto row = basis_.row(i);
      for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(factor, row[j]));
    }
  }

  template <ScalarField F>
  bool contains(const F& f, std::span<const Elem> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
    std::vector<Elem> w(v.begin(), v.end());
    reduce(f, std::span<Elem>(w));
    for (Elem e : w)
      if (e != kZero) return false;
    return true;
  }

  // Coordinates of a contained vector with respect to the canonical basis.
  std::vector<Elem> coordinates_of_member(std::span<const Elem> v) const {
    std::vector<Elem> c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  template <ScalarField F>
  RowSpace sum(const F& f, const RowSpace& other) const {
    check_ambient(other);
    Matrix rows = basis_;
    for (std::size_t i = 0; i < other.dim(); ++i) rows.append_row(other.basis_.row(i));
    if (rows.cols() == 0) rows = Matrix(0, ambient_);
    return span(f, ambient_, std::move(rows));
  }

  // {w : w . v = 0 for all v in the space}
  template <ScalarField F>
  RowSpace annihilator(const F& f) const {
    if (dim() == 0) return whole(f, ambient_);
    RowSpace s(ambient_);
    s.basis_ = nullspace(f, basis_);
    if (s.basis_.rows() > 0) {
      Matrix tmp = s.basis_;
      s.pivots_ = rref_in_place(f, tmp);
      s.basis_ = std::move(tmp);
    }
    return s;
  }

  template <ScalarField F>
  RowSpace intersect(const F& f, const RowSpace& other) const {
    check_ambient(other);
    // (A ∩ B) = ann(ann A + ann B)
    return annihilator(f).sum(f, other.annihilator(f)).annihilator(f);
  }

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_.data() == b.basis_.data();
  }

 private:
  void check_ambient(const RowSpace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambients");
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace linset
