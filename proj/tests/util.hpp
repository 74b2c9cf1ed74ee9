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

#include <random>
#include <vector>

#include "linset/error.hpp"
#include "linset/extension.hpp"
#include "linset/linpoly.hpp"

namespace testutil {

// Kind of the linset::Error thrown by fn, or Internal when nothing is thrown.
template <class Fn>
linset::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const linset::Error& e) {
    return e.kind();
  }
  return linset::ErrorKind::Internal;
}

inline linset::ExtPtr ext(std::uint32_t p, unsigned k, std::uint64_t q) {
  return linset::Extension::make(linset::FieldCtx::make(p, k), q);
}

inline linset::Elem nonzero(const linset::FieldCtx& F, std::mt19937_64& rng) {
  linset::Elem a;
  do a = F.random(rng);
  while (a == linset::kZero);
  return a;
}

inline std::vector<linset::Elem> random_basis(const linset::Extension& e, std::mt19937_64& rng) {
  std::vector<linset::Elem> b;
  do {
    b.clear();
    for (unsigned i = 0; i < e.n(); ++i) b.push_back(e.field().random(rng));
  } while (e.rank_of(b) != e.n());
  return b;
}

}  // namespace testutil
