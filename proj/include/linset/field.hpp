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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "linset/elem.hpp"
#include "linset/error.hpp"

namespace linset {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// The field F_{p^k} = F_p[x]/(m). Immutable after construction; share freely.
//
// Elements are Elem encodings. For p^k <= kTableLimit multiplication, inversion,
// Frobenius and (for odd p) addition run through exp/log/Zech tables; larger
// fields fall back to digit-vector polynomial arithmetic.
class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  // Without a modulus, the lexicographically smallest monic irreducible of
  // degree k (coefficients compared from degree 0 upwards) is chosen.
  static FieldPtr make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  // Coefficients low degree first, length k+1, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool tabled() const noexcept { return !exp_.empty(); }

  // Root of the modulus (the class of x).
  Elem root() const noexcept { return root_; }
  // A generator of the multiplicative group (smallest encoding with full order).
  Elem primitive() const noexcept { return primitive_; }

  Elem element(std::uint64_t encoding) const;
  bool valid(Elem a) const noexcept { return a.value < order_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // a^{p^j}
  Elem frob(Elem a, std::uint64_t j) const;
  // Integer multiple n·a.
  Elem times(Elem a, std::uint64_t n) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> d) const;

  // Discrete log to the primitive element (tabled fields only, a != 0).
  std::uint32_t log(Elem a) const { return log_[a.value]; }
  Elem exp(std::uint64_t i) const { return exp_[i % (order_ - 1)]; }

  // Positive divisors of k in increasing order.
  const std::vector<unsigned>& divisors() const noexcept { return divisors_; }
  // F_p-basis (reduced echelon in digit coordinates) of the fixed field of x -> x^{p^d}.
  const std::vector<Elem>& subfield_basis(unsigned d) const;
  bool in_subfield(Elem a, unsigned d) const;

  Elem random(std::mt19937_64& rng) const {
    return Elem{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, order_ - 1)(rng))};
  }

  // "p^k" or "p^k/c0,c1,...,ck"
  std::string spec_string() const;

 private:
  FieldCtx() = default;

  Elem slow_add(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t e) const;
  void build_tables();
  void build_subfields();

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t order_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i, i <= k
  Elem root_{};
  Elem primitive_{};
  bool caller_modulus_ = false;

  std::vector<Elem> exp_;           // length 2(Q-1)
  std::vector<std::uint32_t> log_;  // length Q
  std::vector<std::int32_t> zech_;  // log(1 + g^i), -1 for zero (odd p)
  Elem minus_one_{};

  std::vector<unsigned> divisors_;
  std::vector<std::vector<Elem>> subfields_;  // indexed like divisors_
};

// An element bundled with its field, for value-style arithmetic.
class FieldElem {
 public:
  FieldElem(FieldPtr ctx, Elem e) : ctx_(std::move(ctx)), e_(e) {
    if (!ctx_->valid(e_)) throw Error(ErrorKind::BadParameters, "encoding exceeds field order");
  }
  static FieldElem from_encoding(FieldPtr ctx, std::uint64_t v) { return FieldElem(ctx, ctx->element(v)); }

  const FieldPtr& ctx() const noexcept { return ctx_; }
  Elem elem() const noexcept { return e_; }
  std::uint32_t encoding() const noexcept { return e_.value; }
  std::vector<std::uint32_t> digits() const { return ctx_->digits(e_); }
  bool is_zero() const noexcept { return e_ == kZero; }

  FieldElem inv() const { return {ctx_, ctx_->inv(e_)}; }
  FieldElem pow(std::uint64_t e) const { return {ctx_, ctx_->pow(e_, e)}; }
  // x^{q^i} with q = p^e_sub; e_sub must divide the field degree.
  FieldElem frobenius(std::int64_t i, std::uint64_t q) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->add(a.e_, b.e_)}; }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->sub(a.e_, b.e_)}; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->mul(a.e_, b.e_)}; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return {a.same(b), a.ctx_->div(a.e_, b.e_)}; }
  FieldElem operator-() const { return {ctx_, ctx_->neg(e_)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.ctx_ == b.ctx_ && a.e_ == b.e_; }

 private:
  const FieldPtr& same(const FieldElem& other) const {
    if (ctx_ != other.ctx_) throw Error(ErrorKind::MixedContexts, "operands belong to different fields");
    return ctx_;
  }

  FieldPtr ctx_;
  Elem e_;
};

// "p^k" or "p^k/c0,c1,..." with modulus coefficients low degree first.
FieldPtr parse_field_spec(const std::string& spec);

bool is_prime(std::uint64_t n) noexcept;
// Exponent e with q = p^e, or nullopt when q is not a power of p.
std::optional<unsigned> log_p(std::uint64_t q, std::uint32_t p) noexcept;

namespace fp_poly {
// Polynomials over F_p, coefficients low degree first, trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;
void trim(Poly& a);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
// x^{p^j} mod m
Poly frobenius_x(const Poly& m, unsigned j, std::uint32_t p);
// Irreducibility sieve: gcd(m, x^{p^j} - x) = 1 for all 1 <= j <= deg/2.
bool is_irreducible(const Poly& m, std::uint32_t p);
}  // namespace fp_poly

}  // namespace linset
