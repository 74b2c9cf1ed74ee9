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
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "linset/field.hpp"
#include "linset/linalg.hpp"

namespace linset {

// The subfield F_q of a FieldCtx, q = p^e, with scalars stored as field encodings.
// For e = 1 the encodings coincide with residues mod p, so arithmetic is plain
// modular arithmetic.
class Scalars {
 public:
  Scalars(FieldPtr ctx, unsigned e);

  std::uint64_t size() const noexcept { return q_; }
  unsigned exponent() const noexcept { return e_; }

  Elem add(Elem a, Elem b) const { return e_ == 1 ? prime_.add(a, b) : ctx_->add(a, b); }
  Elem sub(Elem a, Elem b) const { return e_ == 1 ? prime_.sub(a, b) : ctx_->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return e_ == 1 ? prime_.mul(a, b) : ctx_->mul(a, b); }
  Elem neg(Elem a) const { return e_ == 1 ? prime_.neg(a) : ctx_->neg(a); }
  Elem inv(Elem a) const { return e_ == 1 ? prime_.inv(a) : ctx_->inv(a); }

  // All q scalars in increasing encoding order; index 0 is zero and index 1 is one.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  Elem random(std::mt19937_64& rng) const {
    return elements_[std::uniform_int_distribution<std::size_t>(0, elements_.size() - 1)(rng)];
  }

 private:
  FieldPtr ctx_;
  unsigned e_;
  std::uint64_t q_;
  PrimeField prime_;
  std::vector<Elem> elements_;
};

class Extension;
using ExtPtr = std::shared_ptr<const Extension>;

// F_{q^n} regarded as an n-dimensional F_q-space inside one ambient FieldCtx.
// The fixed F_q-basis is (1, a, ..., a^{n-1}) with a the root of the modulus;
// every coordinate vector in the library refers to it.
class Extension {
 public:
  static ExtPtr make(FieldPtr ctx, std::uint64_t q);

  const FieldCtx& field() const noexcept { return *ctx_; }
  const FieldPtr& field_ptr() const noexcept { return ctx_; }
  const Scalars& scalars() const noexcept { return scalars_; }
  std::uint64_t q() const noexcept { return q_; }
  unsigned e() const noexcept { return e_; }
  unsigned n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return ctx_->order(); }

  const std::vector<Elem>& basis() const noexcept { return basis_; }
  std::vector<Elem> coords(Elem x) const;
  void coords_into(Elem x, std::span<Elem> out) const;
  Elem from_coords(std::span<const Elem> c) const;

  // x^{q^i}, i taken modulo n
  Elem frob(Elem x, std::int64_t i) const;
  // q^i as an integer (i <= n)
  std::uint64_t q_power(unsigned i) const { return q_pow_.at(i); }

  bool divides_n(unsigned t) const noexcept { return t >= 1 && n_ % t == 0; }
  bool in_subfield(Elem x, unsigned t) const;
  // Canonical F_q-basis of F_{q^t} (reduced echelon in coordinates).
  const std::vector<Elem>& subfield_basis(unsigned t) const;
  // All elements of F_{q^t}, zero first.
  std::vector<Elem> subfield_elements(unsigned t) const;

  // Relative trace and norm F_{q^n} -> F_{q^t}.
  Elem trace(Elem x, unsigned t) const;
  Elem norm(Elem x, unsigned t) const;

  // Dual basis with respect to (x, y) -> Tr_{q^n/q}(xy).
  std::vector<Elem> dual_basis(std::span<const Elem> basis) const;

  // Matrix over F_q whose columns are the coordinates of the given elements.
  Matrix coordinate_matrix(std::span<const Elem> elems) const;
  // F_q-rank of a list of field elements.
  std::size_t rank_of(std::span<const Elem> elems) const;

 private:
  Extension(FieldPtr ctx, unsigned e);

  FieldPtr ctx_;
  unsigned e_;
  unsigned n_;
  std::uint64_t q_;
  Scalars scalars_;
  std::vector<std::uint64_t> q_pow_;
  std::vector<Elem> basis_;
  Matrix to_prime_coords_;  // inverse of the (beta_l a^j) digit matrix, e > 1 only
  std::vector<Elem> prime_sub_basis_;
  std::vector<unsigned> divisors_;
  std::vector<std::vector<Elem>> sub_bases_;
};

}  // namespace linset
