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

#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linset/extension.hpp"
#include "linset/subspace.hpp"

namespace linset {

// A q-polynomial sum_i c_i x^{q^i} in L_{n,q} = L/(x^{q^n} - x); always n coefficients.
class LinPoly {
 public:
  explicit LinPoly(ExtPtr ext);  // zero polynomial
  LinPoly(ExtPtr ext, std::vector<Elem> coeffs);

  static LinPoly zero(ExtPtr ext) { return LinPoly(std::move(ext)); }
  static LinPoly identity(ExtPtr ext) { return monomial(std::move(ext), kOne, 0); }
  // c x^{q^i}, i reduced mod n
  static LinPoly monomial(ExtPtr ext, Elem c, std::int64_t i);
  // Tr_{q^n/q^t}(x)
  static LinPoly trace(ExtPtr ext, unsigned t);
  static LinPoly random(ExtPtr ext, std::mt19937_64& rng, std::optional<unsigned> max_qdegree = std::nullopt);

  const ExtPtr& ext() const noexcept { return ext_; }
  unsigned n() const noexcept { return ext_->n(); }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(unsigned i) const { return coeffs_.at(i); }

  bool is_zero() const noexcept;
  std::optional<unsigned> q_degree() const noexcept;
  // f = lambda x for some lambda
  bool is_scalar_multiple_of_x() const noexcept;

  Elem eval(Elem x) const;
  // f(x) for every encoding x, indexed by encoding.
  std::vector<Elem> eval_table() const;

  LinPoly operator+(const LinPoly& g) const;
  LinPoly operator-(const LinPoly& g) const;
  LinPoly operator-() const;
  // alpha f(x)
  LinPoly scale(Elem alpha) const;
  // f(alpha x)
  LinPoly scale_input(Elem alpha) const;
  // f ∘ g
  LinPoly compose(const LinPoly& g) const;
  // coefficients mapped by x -> x^{p^r}
  LinPoly twist(unsigned r) const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) { return a.ext_ == b.ext_ && a.coeffs_ == b.coeffs_; }

  // n x n matrix over F_q: column j = coordinates of f(basis_j), rows in the fixed basis.
  Matrix matrix() const;
  Matrix matrix(std::span<const Elem> basis) const;
  std::size_t rank() const;
  FqSubspace kernel() const;
  FqSubspace image() const;

  // "c0,c1,...,c_{n-1}" of encodings
  std::string literal() const;
  // human-readable "3*x^q2 + x"
  std::string to_string() const;

 private:
  void check_same(const LinPoly& g) const;

  ExtPtr ext_;
  std::vector<Elem> coeffs_;
};

// Unique f with f(y_i) = w_i, for an F_q-basis y_0..y_{n-1}.
LinPoly interpolate(const ExtPtr& ext, std::span<const std::pair<Elem, Elem>> pairs);
// Inverse of an invertible q-polynomial, nullopt when singular.
std::optional<LinPoly> invert(const LinPoly& f);
// f is F_{q^s}-linear; checks the coefficient support against pointwise semilinearity.
bool is_sublinear(const LinPoly& f, unsigned s);

// Parses either a comma list of n encodings or a sum of terms "c*x^qI", "x^q", "x".
LinPoly parse_linpoly(const ExtPtr& ext, const std::string& text);

}  // namespace linset
