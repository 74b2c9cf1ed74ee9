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
#include <random>
#include <string>
#include <vector>

#include "linset/extension.hpp"

namespace linset {

enum class VerdictMode { Exhaustive, Sampled };

inline const char* to_string(VerdictMode m) { return m == VerdictMode::Exhaustive ? "exhaustive" : "sampled"; }

// Field test for a finite F_q-algebra given by a basis.
template <class T>
struct FieldVerdict {
  bool is_field = true;
  std::optional<T> witness;  // nonzero non-invertible member
  VerdictMode mode = VerdictMode::Exhaustive;
  std::uint64_t checked = 0;
  bool closure_ok = true;    // basis products stay in the algebra
  bool inverses_ok = true;   // inverses of invertible basis elements stay in the algebra
  bool commutative = true;   // on basis pairs
};

inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;
inline constexpr unsigned kRandomCombinations = 10000;

// Ops must provide: T add(T, T), T scale(Elem, T), bool invertible(T), bool is_zero(T),
// T mul(T, T), bool contains(T), std::optional<T> inverse(T), bool equal(T, T).
template <class T, class Ops>
FieldVerdict<T> field_verdict(const std::vector<T>& basis, const T& zero, const Scalars& sc, const Ops& ops,
                              std::uint64_t seed = 0) {
  FieldVerdict<T> v;
  const std::size_t d = basis.size();
  auto record = [&](const T& x) {
    ++v.checked;
    if (!ops.is_zero(x) && !ops.invertible(x) && v.is_field) {
      v.is_field = false;
      v.witness = x;
    }
  };

  std::uint64_t size = 1;
  bool small = true;
  for (std::size_t i = 0; i < d && small; ++i) {
    if (size > kExhaustiveLimit / sc.size()) small = false;
    size *= sc.size();
  }
  const auto& vals = sc.elements();
  if (small) {
    v.mode = VerdictMode::Exhaustive;
    std::vector<std::size_t> idx(d, 0);
    T cur = zero;
    while (true) {
      record(cur);
      if (!v.is_field) break;
      std::size_t i = 0;
      while (i < d) {
        std::size_t old = idx[i];
        idx[i] = (old + 1) % vals.size();
        cur = ops.add(cur, ops.scale(sc.sub(vals[idx[i]], vals[old]), basis[i]));
        if (idx[i] != 0) break;
        ++i;
      }
      if (i == d) break;
    }
  } else {
    v.mode = VerdictMode::Sampled;
    for (std::size_t i = 0; i < d && v.is_field; ++i)
      for (std::size_t a = 1; a < vals.size(); ++a) record(ops.scale(vals[a], basis[i]));
    for (std::size_t i = 0; i < d && v.is_field; ++i)
      for (std::size_t j = i + 1; j < d && v.is_field; ++j)
        for (std::size_t a = 1; a < vals.size(); ++a)
          for (std::size_t b = 1; b < vals.size(); ++b)
            record(ops.add(ops.scale(vals[a], basis[i]), ops.scale(vals[b], basis[j])));
    std::mt19937_64 rng(seed);
    for (unsigned r = 0; r < kRandomCombinations && v.is_field; ++r) {
      T cur = zero;
      for (std::size_t i = 0; i < d; ++i) cur = ops.add(cur, ops.scale(sc.random(rng), basis[i]));
      record(cur);
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    if (ops.invertible(basis[i])) {
      auto inv = ops.inverse(basis[i]);
      if (!inv || !ops.contains(*inv)) v.inverses_ok = false;
    }
    for (std::size_t j = 0; j < d; ++j) {
      T ab = ops.mul(basis[i], basis[j]);
      if (!ops.contains(ab)) v.closure_ok = false;
      if (j > i && !ops.equal(ab, ops.mul(basis[j], basis[i]))) v.commutative = false;
    }
  }
  return v;
}

}  // namespace linset
