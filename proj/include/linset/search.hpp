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
#include <string>
#include <vector>

#include "linset/linpoly.hpp"

namespace linset {

enum class Predicate { Scattered, LPt, RPt, NonfieldStab };

const char* to_string(Predicate p);
Predicate parse_predicate(const std::string& name);

struct SearchOptions {
  unsigned max_qdeg = 1;
  Predicate predicate = Predicate::Scattered;
  unsigned t = 0;  // required by L_pt and R_pt
  std::uint64_t budget = std::uint64_t{1} << 16;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SearchHit {
  LinPoly canonical;         // minimum over f -> alpha f(beta x)
  LinPoly first;             // first candidate (in candidate order) with this canonical form
  std::uint64_t first_index = 0;
  std::uint64_t orbit_hits = 0;  // candidates sharing the canonical form
};

struct SearchResult {
  bool exhaustive = false;
  std::uint64_t space = 0;     // Q^{max_qdeg+1}, saturated at UINT64_MAX
  std::uint64_t examined = 0;
  std::uint64_t matches = 0;
  std::vector<SearchHit> hits;  // sorted by canonical coefficients
};

// Canonical representative of {alpha f(beta x) : alpha, beta != 0}: the least coefficient
// vector (compared from c_0) whose lowest nonzero coefficient is 1.
LinPoly canonical_form(const LinPoly& f);

bool satisfies(const LinPoly& f, Predicate p, unsigned t);

SearchResult search(const ExtPtr& ext, const SearchOptions& opts);

}  // namespace linset
