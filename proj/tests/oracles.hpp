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


// Brute-force reference implementations used by the unit tests. They rely only on
// field arithmetic and enumeration, never on the library's linear algebra.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "linset/extension.hpp"
#include "linset/linpoly.hpp"
#include "linset/mat2.hpp"

namespace oracle {

using linset::Elem;
using linset::Extension;
using linset::FieldCtx;
using linset::LinPoly;

inline std::vector<Elem> elements(const FieldCtx& f) {
  std::vector<Elem> v;
  v.reserve(f.order());
  for (std::uint64_t i = 0; i < f.order(); ++i) v.push_back(Elem{static_cast<std::uint32_t>(i)});
  return v;
}

// Schoolbook product of digit vectors reduced by the monic modulus.
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) prod[d - k + j] = (prod[d - k + j] + (p - c) * m[j]) % p;
  }
  std::vector<std::uint32_t> r(k, 0);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::vector<std::uint64_t> g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      std::vector<std::uint64_t> r(m.begin(), m.end());
      for (std::size_t top = deg; top >= d; --top) {
        std::uint64_t lead = r[top];
        if (lead != 0)
          for (std::size_t j = 0; j <= d; ++j) r[top - d + j] = (r[top - d + j] + (p - lead) * g[j]) % p;
        if (top == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// f(x) = sum c_i x^{q^i} by repeated powering.
inline Elem eval(const LinPoly& f, Elem x) {
  const Extension& ext = *f.ext();
  const FieldCtx& F = ext.field();
  Elem acc = linset::kZero, y = x;
  for (unsigned i = 0; i < ext.n(); ++i) {
    acc = F.add(acc, F.mul(f.coeff(i), y));
    y = F.pow(y, ext.q());
  }
  return acc;
}

inline std::vector<Elem> table(const LinPoly& f) {
  std::vector<Elem> t;
  for (Elem x : elements(f.ext()->field())) t.push_back(eval(f, x));
  return t;
}

inline bool in_subfield(const Extension& ext, Elem x, unsigned t) {
  return ext.field().pow(x, ext.q_power(t)) == x;
}

inline unsigned log_q(std::uint64_t q, std::uint64_t size) {
  unsigned w = 0;
  for (std::uint64_t s = 1; s < size; s *= q) ++w;
  return w;
}

// F_q-rank of the map x -> values[x] from the size of its image.
inline unsigned rank_from_image(const Extension& ext, const std::vector<Elem>& values) {
  std::set<Elem> img(values.begin(), values.end());
  return log_q(ext.q(), img.size());
}

// Weight of <(1, m)> for each m, from |{y : f(y) = m y}|.
inline std::vector<unsigned> weights(const LinPoly& f) {
  const Extension& ext = *f.ext();
  const FieldCtx& F = ext.field();
  auto vals = table(f);
  std::vector<std::uint64_t> count(F.order(), 1);
  for (std::uint64_t y = 1; y < F.order(); ++y) {
    Elem m = F.div(vals[y], Elem{static_cast<std::uint32_t>(y)});
    ++count[m.value];
  }
  std::vector<unsigned> w(F.order());
  for (std::uint64_t m = 0; m < F.order(); ++m) w[m] = log_q(ext.q(), count[m]);
  return w;
}

struct Flags {
  bool scattered = true, L_pt = true, R_pt = true;
};

// Definitions in terms of pairs y, z with f(y)/y = f(z)/z.
inline Flags scatteredness(const LinPoly& f, unsigned t) {
  const Extension& ext = *f.ext();
  const FieldCtx& F = ext.field();
  auto vals = table(f);
  std::map<Elem, std::vector<Elem>> groups;
  for (std::uint64_t y = 1; y < F.order(); ++y) {
    Elem ye{static_cast<std::uint32_t>(y)};
    groups[F.div(vals[y], ye)].push_back(ye);
  }
  Flags fl;
  for (const auto& [m, ys] : groups)
    for (Elem y : ys)
      for (Elem z : ys) {
        Elem r = F.div(y, z);
        bool in_q = in_subfield(ext, r, 1), in_t = in_subfield(ext, r, t);
        if (!in_q) fl.scattered = false;
        if (!in_t) fl.L_pt = false;
        if (in_t && !in_q) fl.R_pt = false;
      }
  return fl;
}

// A maps the graph into itself, checked point by point.
inline bool stabilizes(const LinPoly& f, const linset::Mat2& A) {
  const FieldCtx& F = f.ext()->field();
  auto vals = table(f);
  for (std::uint64_t y = 0; y < F.order(); ++y) {
    auto [u, v] = A.apply(F, Elem{static_cast<std::uint32_t>(y)}, vals[y]);
    if (vals[u.value] != v) return false;
  }
  return true;
}

// h = a x + b f for some a, b (pointwise).
inline bool in_code_span(const LinPoly& f, const std::vector<Elem>& h) {
  const FieldCtx& F = f.ext()->field();
  auto vals = table(f);
  for (std::uint64_t b = 0; b < F.order(); ++b) {
    Elem be{static_cast<std::uint32_t>(b)};
    // a is forced by the value at 1
    Elem a = F.sub(h[1], F.mul(be, vals[1]));
    bool ok = true;
    for (std::uint64_t y = 0; y < F.order() && ok; ++y) {
      Elem ye{static_cast<std::uint32_t>(y)};
      ok = h[y] == F.add(F.mul(a, ye), F.mul(be, vals[y]));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
