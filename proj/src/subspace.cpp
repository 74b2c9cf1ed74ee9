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

#include "linset/subspace.hpp"

namespace linset {

FqSubspace::FqSubspace(ExtPtr ext, unsigned copies)
    : ext_(std::move(ext)), copies_(copies), space_(std::size_t{copies} * ext_->n()) {
  if (copies != 1 && copies != 2) throw Error(ErrorKind::AmbientMismatch, "ambient must be F_{q^n} or F_{q^n}^2");
}

FqSubspace FqSubspace::span(ExtPtr ext, unsigned copies, std::span<const AmbientVec> vectors) {
  FqSubspace s(std::move(ext), copies);
  Matrix rows(0, s.ambient_dim());
  for (const auto& v : vectors) rows.append_row(s.to_coords(v));
  s.space_ = RowSpace::span(s.ext_->scalars(), s.ambient_dim(), std::move(rows));
  return s;
}

FqSubspace FqSubspace::span_elements(ExtPtr ext, std::span<const Elem> elems) {
  std::vector<AmbientVec> vs;
  vs.reserve(elems.size());
  for (Elem e : elems) vs.push_back({e});
  return span(std::move(ext), 1, vs);
}

FqSubspace FqSubspace::whole(ExtPtr ext, unsigned copies) {
  FqSubspace s(std::move(ext), copies);
  s.space_ = RowSpace::whole(s.ext_->scalars(), s.ambient_dim());
  return s;
}

FqSubspace FqSubspace::from_space(ExtPtr ext, unsigned copies, RowSpace space) {
  FqSubspace s(std::move(ext), copies);
  if (space.ambient() != s.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "row space has wrong ambient");
  s.space_ = std::move(space);
  return s;
}

std::vector<Elem> FqSubspace::to_coords(std::span<const Elem> v) const {
  if (v.size() != copies_) throw Error(ErrorKind::AmbientMismatch, "vector has wrong number of components");
  const unsigned n = ext_->n();
  std::vector<Elem> c(std::size_t{copies_} * n);
  for (unsigned i = 0; i < copies_; ++i) ext_->coords_into(v[i], std::span<Elem>(c).subspan(i * n, n));
  return c;
}

AmbientVec FqSubspace::from_coords(std::span<const Elem> c) const {
  const unsigned n = ext_->n();
  AmbientVec v(copies_);
  for (unsigned i = 0; i < copies_; ++i) v[i] = ext_->from_coords(c.subspan(i * n, n));
  return v;
}

std::vector<AmbientVec> FqSubspace::basis() const {
  std::vector<AmbientVec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(from_coords(space_.basis().row(i)));
  return out;
}

std::vector<Elem> FqSubspace::basis_elements() const {
  if (copies_ != 1) throw Error(ErrorKind::AmbientMismatch, "basis_elements needs an F_{q^n} ambient");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(ext_->from_coords(space_.basis().row(i)));
  return out;
}

bool FqSubspace::contains(std::span<const Elem> v) const { return space_.contains(ext_->scalars(), to_coords(v)); }

void FqSubspace::check_same(const FqSubspace& other) const {
  if (other.ext_ != ext_ && (other.ext_->field_ptr() != ext_->field_ptr() || other.ext_->q() != ext_->q()))
    throw Error(ErrorKind::AmbientMismatch, "subspaces over different fields");
  if (other.copies_ != copies_) throw Error(ErrorKind::AmbientMismatch, "subspaces in different ambients");
}

FqSubspace FqSubspace::sum(const FqSubspace& other) const {
  check_same(other);
  return from_space(ext_, copies_, space_.sum(ext_->scalars(), other.space_));
}

FqSubspace FqSubspace::intersect(const FqSubspace& other) const {
  check_same(other);
  return from_space(ext_, copies_, space_.intersect(ext_->scalars(), other.space_));
}

bool FqSubspace::equals(const FqSubspace& other) const {
  check_same(other);
  return space_ == other.space_;
}

}  // namespace linset
