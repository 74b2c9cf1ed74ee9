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
#include "linset/stabilizer.hpp"

namespace linset {

// F_q-linear rank-metric code of maps D -> F_{q^n}, each stored as a codomain x domain matrix over F_q.
struct RankCode {
  ExtPtr ext;
  std::vector<Elem> domain_basis;  // F_q-basis of the domain D inside F_{q^n}
  unsigned domain_dim = 0;
  unsigned codomain_dim = 0;
  std::vector<Matrix> generators;  // canonical F_q-basis
  RowSpace space;                  // generators flattened row-major
  bool fqn_linear = false;         // closed under left multiplication by F_{q^n}
  bool degenerate = false;         // f ∈ <x>_{F_{q^n}}
  std::optional<LinPoly> f;
  std::vector<Matrix> right_generators;  // C ∘ Z ⊆ C follows from these alone

  unsigned fq_dimension() const { return static_cast<unsigned>(space.dim()); }
};

// Matrix of g restricted to the span of domain_basis.
Matrix map_matrix(const Extension& ext, const LinPoly& g, std::span<const Elem> domain_basis);

// C_f = <x, f>_{F_{q^n}}
RankCode build_code(const LinPoly& f);
// Span of arbitrary codomain x domain matrices.
RankCode code_from_matrices(const ExtPtr& ext, std::vector<Elem> domain_basis, std::span<const Matrix> mats);

bool code_contains(const RankCode& C, const Matrix& M);

inline constexpr std::uint64_t kCodewordBudget = std::uint64_t{1} << 22;

// Minimum rank over nonzero codewords; BudgetExceeded when the projective codewords exceed the budget.
unsigned min_distance(const RankCode& C, std::uint64_t budget = kCodewordBudget);

struct SingletonCheck {
  unsigned code_exponent = 0;   // log_q |C|
  unsigned bound_exponent = 0;  // max(m, n) (min(m, n) - d + 1)
  bool is_mrd = false;
};

SingletonCheck singleton_check(const RankCode& C, unsigned d);

enum class Side { Left, Right };
inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

struct IdealizerReport {
  Side side = Side::Right;
  std::vector<Matrix> basis;  // canonical, square over F_q
  unsigned fq_dimension = 0;
  bool is_field = false;
  std::optional<Matrix> witness;
  VerdictMode mode = VerdictMode::Exhaustive;
  bool contains_identity = false;
  bool closure_ok = false;
};

IdealizerReport idealizer(const RankCode& C, Side side, std::uint64_t seed = 0);
bool in_idealizer(const RankCode& C, Side side, const Matrix& Z);

struct PsiCheck {
  unsigned stabilizer_dim = 0;
  unsigned idealizer_dim = 0;
  bool into = false;       // psi(S_f) ⊆ R(C_f)
  bool injective = false;
  bool products = false;   // psi(A A') = psi(A) ∘ psi(A')
  bool same_verdict = false;
  bool ok() const { return into && injective && products && stabilizer_dim == idealizer_dim; }
};

// psi: [[a,b],[c,d]] -> a x + b f. Throws DegenerateF for f ∈ <x>.
PsiCheck verify_psi(const LinPoly& f);
PsiCheck verify_psi(const LinPoly& f, const StabReport& S, const IdealizerReport& R);

struct RestrictedCode {
  RankCode code;
  unsigned t = 0;
  std::optional<bool> r_pt;      // R-q^t-partial scatteredness of f, when 1 < t < n
  bool injective = false;        // C_f -> restricted code has trivial kernel
  std::optional<unsigned> d;
  bool parameters_ok = false;    // (n, t, q; t - 1) when r_pt holds
};

RestrictedCode restrict_code(const LinPoly& f, unsigned t);

struct LtnqReport {
  unsigned t = 0;
  bool precondition_r_pt = false;         // false means NotRPartiallyScattered was reported
  unsigned right_dim = 0;                 // dim R(C_f)
  unsigned intersection_dim = 0;          // {g ∈ R(C_f) : g(F_{q^t}) ⊆ F_{q^t}}
  std::optional<std::uint64_t> setwise_count;  // members with g(F_{q^t}) = F_{q^t}
  unsigned restricted_right_dim = 0;      // dim R(restricted code)
  bool inclusion_holds = false;
  bool injective = false;
  bool inequality_holds = false;
  std::vector<Matrix> intersection_basis;  // n x n maps
  std::vector<Matrix> restricted_images;   // t x t, coordinates in the subfield basis
};

LtnqReport ltnq_analysis(const LinPoly& f, unsigned t, std::uint64_t seed = 0);

}  // namespace linset
