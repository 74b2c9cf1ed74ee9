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
#include <vector>

#include "linset/algebra.hpp"
#include "linset/linpoly.hpp"
#include "linset/mat2.hpp"

namespace linset {

// The F_q-algebra S_f of matrices A with A G_f ⊆ G_f.
struct StabReport {
  LinPoly f;
  unsigned fq_dimension = 0;
  std::optional<std::uint64_t> order{};  // q^dim, empty on overflow
  std::vector<Mat2> basis{};           // canonical: reduced echelon over F_q coordinates
  bool is_field = false;
  std::optional<Mat2> singular_witness{};
  std::optional<unsigned> field_degree{};
  bool closure_checked = false;
  bool closure_ok = false;
  bool commutative = false;
  VerdictMode mode = VerdictMode::Exhaustive;
  std::vector<Mat2> members{};  // filled by the brute-force path only
};

// f ∘ (a x + b f) = c x + d f
bool in_stabilizer(const LinPoly& f, const Mat2& A);

// Solves the n^2 x 4n linear system over F_q.
StabReport compute_stabilizer(const LinPoly& f, std::uint64_t seed = 0);

// Enumerates all q^{4n} matrices; throws BudgetExceeded above the budget.
StabReport brute_force_stabilizer(const LinPoly& f, std::uint64_t budget = std::uint64_t{1} << 24, unsigned workers = 1);

struct AlgebraFacts {
  bool is_field = false;
  std::optional<unsigned> field_degree;
  std::optional<Mat2> witness;
  VerdictMode mode = VerdictMode::Exhaustive;
  bool closure_ok = false;
  bool inverses_ok = false;
  bool commutative = false;
};

AlgebraFacts algebra_report(const StabReport& s, std::uint64_t seed = 0);

// Coordinates of A over F_q: (a, b, c, d) each expanded in the fixed basis.
std::vector<Elem> mat2_coords(const Extension& ext, const Mat2& A);
Mat2 mat2_from_coords(const Extension& ext, std::span<const Elem> c);

// All members of the span of the basis, sorted by encoding; throws BudgetExceeded above the budget.
std::vector<Mat2> enumerate_members(const StabReport& s, std::uint64_t budget = std::uint64_t{1} << 24);

}  // namespace linset
