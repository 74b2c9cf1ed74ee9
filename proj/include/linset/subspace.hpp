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
#include <span>
#include <vector>

#include "linset/extension.hpp"

namespace linset {

// Vector of F_{q^n}^r, r = 1 or 2.
using AmbientVec = std::vector<Elem>;

// F_q-subspace of F_{q^n} (copies = 1) or F_{q^n}^2 (copies = 2), stored in
// canonical reduced echelon form over the extension's fixed F_q-basis.
class FqSubspace {
 public:
  FqSubspace(ExtPtr ext, unsigned copies);

  static FqSubspace span(ExtPtr ext, unsigned copies, std::span<const AmbientVec> vectors);
  static FqSubspace span_elements(ExtPtr ext, std::span<const Elem> elems);
  static FqSubspace whole(ExtPtr ext, unsigned copies);
  static FqSubspace from_space(ExtPtr ext, unsigned copies, RowSpace space);

  const ExtPtr& ext() const noexcept { return ext_; }
  unsigned copies() const noexcept { return copies_; }
  std::size_t ambient_dim() const noexcept { return space_.ambient(); }
  std::size_t dim() const noexcept { return space_.dim(); }
  const RowSpace& space() const noexcept { return space_; }

  std::vector<Elem> to_coords(std::span<const Elem> v) const;
  AmbientVec from_coords(std::span<const Elem> c) const;

  std::vector<AmbientVec> basis() const;
  // Basis as plain field elements (copies = 1 only).
  std::vector<Elem> basis_elements() const;

  bool contains(std::span<const Elem> v) const;
  FqSubspace sum(const FqSubspace& other) const;
  FqSubspace intersect(const FqSubspace& other) const;
  bool equals(const FqSubspace& other) const;
  friend bool operator==(const FqSubspace& a, const FqSubspace& b) { return a.equals(b); }

  // Visits every vector (zero included), in the order of coefficient tuples.
  template <class Fn>
  void for_each_vector(Fn&& fn) const {
    enumerate(false, fn);
  }
  // Visits one representative per 1-dimensional F_q-subspace: first nonzero coefficient 1.
  template <class Fn>
  void for_each_projective(Fn&& fn) const {
    enumerate(true, fn);
  }

 private:
  void check_same(const FqSubspace& other) const;

  template <class Fn>
  void enumerate(bool projective, Fn& fn) const {
    const auto& sc = ext_->scalars();
    const auto& vals = sc.elements();
    const std::size_t d = dim(), amb = ambient_dim();
    const Matrix& b = space_.basis();
    std::vector<std::size_t> idx(d, 0);
    std::vector<Elem> coord(amb);
    auto emit = [&]() {
      std::fill(coord.begin(), coord.end(), kZero);
      for (std::size_t i = 0; i < d; ++i) {
        if (idx[i] == 0) continue;
        Elem c = vals[idx[i]];
        for (std::size_t j = 0; j < amb; ++j) coord[j] = sc.add(coord[j], sc.mul(c, b(i, j)));
      }
      fn(from_coords(coord));
    };
    if (!projective) {
      while (true) {
        emit();
        std::size_t i = 0;
        while (i < d && ++idx[i] == vals.size()) idx[i++] = 0;
        if (i == d) break;
      }
      return;
    }
    // lead position l carries coefficient 1, positions > l are free, < l are zero
    for (std::size_t lead = d; lead-- > 0;) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[lead] = 1;
      while (true) {
        emit();
        std::size_t i = lead + 1;
        while (i < d && ++idx[i] == vals.size()) idx[i++] = 0;
        if (i >= d) break;
      }
    }
  }

  ExtPtr ext_;
  unsigned copies_;
  RowSpace space_;
};

}  // namespace linset
