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

#include <array>

#include "linset/field.hpp"

namespace linset {

// 2x2 matrix [[a, b], [c, d]] over F_{q^n}.
struct Mat2 {
  Elem a, b, c, d;

  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 identity() { return {kOne, kZero, kZero, kOne}; }
  static Mat2 zero() { return {kZero, kZero, kZero, kZero}; }

  bool is_zero() const { return a == kZero && b == kZero && c == kZero && d == kZero; }
  std::array<Elem, 4> entries() const { return {a, b, c, d}; }

  Elem det(const FieldCtx& f) const { return f.sub(f.mul(a, d), f.mul(b, c)); }

  Mat2 plus(const FieldCtx& f, const Mat2& o) const {
    return {f.add(a, o.a), f.add(b, o.b), f.add(c, o.c), f.add(d, o.d)};
  }
  Mat2 minus(const FieldCtx& f, const Mat2& o) const {
    return {f.sub(a, o.a), f.sub(b, o.b), f.sub(c, o.c), f.sub(d, o.d)};
  }
  Mat2 scaled(const FieldCtx& f, Elem s) const { return {f.mul(s, a), f.mul(s, b), f.mul(s, c), f.mul(s, d)}; }
  Mat2 times(const FieldCtx& f, const Mat2& o) const {
    return {f.add(f.mul(a, o.a), f.mul(b, o.c)), f.add(f.mul(a, o.b), f.mul(b, o.d)),
            f.add(f.mul(c, o.a), f.mul(d, o.c)), f.add(f.mul(c, o.b), f.mul(d, o.d))};
  }
  std::array<Elem, 2> apply(const FieldCtx& f, Elem x0, Elem x1) const {
    return {f.add(f.mul(a, x0), f.mul(b, x1)), f.add(f.mul(c, x0), f.mul(d, x1))};
  }
};

}  // namespace linset
