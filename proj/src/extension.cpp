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

#include "linset/extension.hpp"

#include <algorithm>

namespace linset {

Scalars::Scalars(FieldPtr ctx, unsigned e) : ctx_(std::move(ctx)), e_(e), q_(1), prime_(ctx_->characteristic()) {
  for (unsigned i = 0; i < e_; ++i) q_ *= ctx_->characteristic();
  if (e_ == 1) {
    for (std::uint32_t c = 0; c < ctx_->characteristic(); ++c) elements_.push_back(Elem{c});
  } else {
    const auto& basis = ctx_->subfield_basis(e_);
    std::vector<std::uint32_t> idx(e_, 0);
    for (std::uint64_t count = 0; count < q_; ++count) {
      Elem v = kZero;
      for (unsigned l = 0; l < e_; ++l) v = ctx_->add(v, ctx_->times(basis[l], idx[l]));
      elements_.push_back(v);
      for (unsigned l = 0; l < e_; ++l) {
        if (++idx[l] < ctx_->characteristic()) break;
        idx[l] = 0;
      }
    }
    std::sort(elements_.begin(), elements_.end());
  }
}

Extension::Extension(FieldPtr ctx, unsigned e)
    : ctx_(std::move(ctx)), e_(e), n_(ctx_->degree() / e), q_(1), scalars_(ctx_, e) {
  for (unsigned i = 0; i < e_; ++i) q_ *= ctx_->characteristic();
  q_pow_.resize(n_ + 1);
  q_pow_[0] = 1;
  for (unsigned i = 1; i <= n_; ++i) q_pow_[i] = q_pow_[i - 1] * q_;
}

ExtPtr Extension::make(FieldPtr ctx, std::uint64_t q) {
  auto e = log_p(q, ctx->characteristic());
  if (!e || *e == 0 || ctx->degree() % *e != 0)
    throw Error(ErrorKind::InvalidSubfield, "q = " + std::to_string(q) + " is not p^e with e dividing the field degree");
  auto ext = std::shared_ptr<Extension>(new Extension(ctx, *e));
  const FieldCtx& f = *ext->ctx_;
  Elem power = kOne;
  for (unsigned j = 0; j < ext->n_; ++j) {
    ext->basis_.push_back(power);
    power = f.mul(power, f.root());
  }
  if (ext->e_ > 1) {
    ext->prime_sub_basis_ = f.subfield_basis(ext->e_);
    const unsigned k = f.degree();
    Matrix m(k, k);
    for (unsigned j = 0; j < ext->n_; ++j)
      for (unsigned l = 0; l < ext->e_; ++l) {
        auto d = f.digits(f.mul(ext->prime_sub_basis_[l], ext->basis_[j]));
        for (unsigned r = 0; r < k; ++r) m(r, j * ext->e_ + l) = Elem{d[r]};
      }
    auto inv = inverse(PrimeField(f.characteristic()), m);
    ensure(inv.has_value(), "power basis is not an F_q-basis");
    ext->to_prime_coords_ = std::move(*inv);
  }
  for (unsigned t = 1; t <= ext->n_; ++t) {
    if (ext->n_ % t != 0) continue;
    Matrix m(ext->n_, ext->n_);
    for (unsigned c = 0; c < ext->n_; ++c) {
      Elem b = ext->basis_[c];
      auto col = ext->coords(f.sub(ext->frob(b, t), b));
      for (unsigned r = 0; r < ext->n_; ++r) m(r, c) = col[r];
    }
    Matrix null = nullspace(ext->scalars_, m);
    std::vector<Elem> basis;
    for (std::size_t i = 0; i < null.rows(); ++i) basis.push_back(ext->from_coords(null.row(i)));
    ensure(basis.size() == t, "subfield has unexpected dimension");
    ext->divisors_.push_back(t);
    ext->sub_bases_.push_back(std::move(basis));
  }
  return ext;
}

void Extension::coords_into(Elem x, std::span<Elem> out) const {
  const FieldCtx& f = *ctx_;
  if (e_ == 1) {
    std::uint32_t v = x.value;
    const std::uint32_t p = f.characteristic();
    for (unsigned i = 0; i < n_; ++i) {
      out[i] = Elem{v % p};
      v /= p;
    }
    return;
  }
  auto d = f.digits(x);
  const unsigned k = f.degree();
  PrimeField fp(f.characteristic());
  for (unsigned j = 0; j < n_; ++j) {
    Elem c = kZero;
    for (unsigned l = 0; l < e_; ++l) {
      Elem lambda = kZero;
      std::size_t row = j * e_ + l;
      for (unsigned r = 0; r < k; ++r) lambda = fp.add(lambda, fp.mul(to_prime_coords_(row, r), Elem{d[r]}));
      c = f.add(c, f.times(prime_sub_basis_[l], lambda.value));
    }
    out[j] = c;
  }
}

std::vector<Elem> Extension::coords(Elem x) const {
  std::vector<Elem> c(n_);
  coords_into(x, c);
  return c;
}

Elem Extension::from_coords(std::span<const Elem> c) const {
  if (c.size() != n_) throw Error(ErrorKind::ShapeMismatch, "coordinate vector has wrong length");
  if (e_ == 1) {
    std::uint64_t v = 0;
    for (unsigned i = n_; i-- > 0;) v = v * ctx_->characteristic() + c[i].value;
    return Elem{static_cast<std::uint32_t>(v)};
  }
  Elem x = kZero;
  for (unsigned j = 0; j < n_; ++j) x = ctx_->add(x, ctx_->mul(c[j], basis_[j]));
  return x;
}

Elem Extension::frob(Elem x, std::int64_t i) const {
  std::int64_t m = n_;
  std::int64_t r = ((i % m) + m) % m;
  return ctx_->frob(x, static_cast<std::uint64_t>(r) * e_);
}

bool Extension::in_subfield(Elem x, unsigned t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NonDivisorDegrees, std::to_string(t) + " does not divide n");
  return frob(x, t) == x;
}

const std::vector<Elem>& Extension::subfield_basis(unsigned t) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == t) return sub_bases_[i];
  throw Error(ErrorKind::NonDivisorDegrees, std::to_string(t) + " does not divide n");
}

std::vector<Elem> Extension::subfield_elements(unsigned t) const {
  const auto& basis = subfield_basis(t);
  const auto& sc = scalars_.elements();
  std::vector<Elem> out;
  std::vector<std::size_t> idx(t, 0);
  for (std::uint64_t count = 0; count < q_pow_[t]; ++count) {
    Elem v = kZero;
    for (unsigned l = 0; l < t; ++l) v = ctx_->add(v, ctx_->mul(sc[idx[l]], basis[l]));
    out.push_back(v);
    for (unsigned l = 0; l < t; ++l) {
      if (++idx[l] < sc.size()) break;
      idx[l] = 0;
    }
  }
  return out;
}

Elem Extension::trace(Elem x, unsigned t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NonDivisorDegrees, std::to_string(t) + " does not divide n");
  Elem s = kZero;
  for (unsigned j = 0; j < n_ / t; ++j) s = ctx_->add(s, frob(x, static_cast<std::int64_t>(t) * j));
  ensure(in_subfield(s, t), "trace left the subfield");
  return s;
}

Elem Extension::norm(Elem x, unsigned t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NonDivisorDegrees, std::to_string(t) + " does not divide n");
  Elem r = ctx_->pow(x, (q_pow_[n_] - 1) / (q_pow_[t] - 1));
  ensure(in_subfield(r, t), "norm left the subfield");
  return r;
}

Matrix Extension::coordinate_matrix(std::span<const Elem> elems) const {
  Matrix m(n_, elems.size());
  std::vector<Elem> c(n_);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    coords_into(elems[j], c);
    for (unsigned r = 0; r < n_; ++r) m(r, j) = c[r];
  }
  return m;
}

std::size_t Extension::rank_of(std::span<const Elem> elems) const {
  Matrix m = coordinate_matrix(elems);
  return rank_in_place(scalars_, m);
}

std::vector<Elem> Extension::dual_basis(std::span<const Elem> b) const {
  if (b.size() != n_) throw Error(ErrorKind::DependentInput, "a basis needs exactly n elements");
  if (rank_of(b) != n_) throw Error(ErrorKind::DependentInput, "elements are F_q-dependent");
  const FieldCtx& f = *ctx_;
  Matrix gram(n_, n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) gram(i, j) = trace(f.mul(b[i], b[j]), 1);
  auto inv = inverse(scalars_, gram);
  if (!inv) throw Error(ErrorKind::DegenerateTraceForm, "trace form Gram matrix is singular");
  std::vector<Elem> dual(n_, kZero);
  for (unsigned j = 0; j < n_; ++j)
    for (unsigned k = 0; k < n_; ++k) dual[j] = f.add(dual[j], f.mul((*inv)(j, k), b[k]));
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) ensure(trace(f.mul(b[i], dual[j]), 1) == (i == j ? kOne : kZero), "dual basis check");
  return dual;
}

}  // namespace linset
