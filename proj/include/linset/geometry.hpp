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
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "linset/linpoly.hpp"
#include "linset/mat2.hpp"
#include "linset/subspace.hpp"

namespace linset {

// Point of PG(1, q^n) with normalized representative: first nonzero coordinate is 1.
struct ProjPoint {
  Elem x0, x1;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  static ProjPoint normalized(const FieldCtx& f, Elem x0, Elem x1);
};

// Canonical point order: index 0 is <(0,1)>, index i > 0 is <(1, m)> with m of encoding i - 1.
std::uint64_t point_count(const Extension& ext);
ProjPoint point_at(std::uint64_t index);

FqSubspace graph_subspace(const LinPoly& f);

// dim_{F_q}(U ∩ <v>_{F_{q^n}}) for P = <v>.
unsigned point_weight(const FqSubspace& U, const ProjPoint& P);

// Kernels ker(f - m x) for all m, sharing the images of the fixed basis.
class GraphKernels {
 public:
  explicit GraphKernels(const LinPoly& f);

  unsigned dim(Elem m);
  FqSubspace kernel(Elem m);
  // Weight of <(1, m)> in L_f.
  unsigned weight(Elem m) { return dim(m); }

 private:
  void fill(Elem m);

  ExtPtr ext_;
  std::vector<Elem> images_;
  Matrix work_;
  std::vector<Elem> column_;
};

struct WeightSpectrum {
  std::map<unsigned, std::uint64_t> counts;  // weight >= 1 -> number of points
  unsigned max_weight = 0;
  std::uint64_t points = 0;  // |L_U|
  std::size_t rank = 0;
};

WeightSpectrum weight_spectrum(const FqSubspace& U);
WeightSpectrum weight_spectrum(const LinPoly& f);

// Every weight is strictly below n/2.
bool is_low_weight(const LinPoly& f);
bool is_low_weight(const WeightSpectrum& s, unsigned n);

struct ScatterWitness {
  Elem m;  // common value of f(y)/y
  Elem y;
  Elem z;
};

struct Scatteredness {
  unsigned t = 0;
  bool scattered = true;
  bool L_pt = true;
  bool R_pt = true;
  std::optional<ScatterWitness> scattered_witness;
  std::optional<ScatterWitness> L_witness;
  std::optional<ScatterWitness> R_witness;
};

// Requires 1 < t < n with t | n.
Scatteredness scatteredness(const LinPoly& f, unsigned t);

// dim(U ∩ <u>_{F_{q^t}}) <= 1 for every nonzero u in F_{q^n}^2.
bool is_R_pt_subspace(const FqSubspace& U, unsigned t);

struct DirectionProfile {
  ProjPoint direction;
  unsigned weight = 0;
  std::map<std::uint64_t, std::uint64_t> line_sizes;  // |line ∩ G_f| -> number of affine lines
};

struct LineProfile {
  std::vector<DirectionProfile> directions;  // canonical point order, all q^n + 1 directions
  bool consistent = true;                    // sizes are 0 or q^w, with q^{n-w} lines of size q^w
};

// Enumerates every affine line; costs q^{2n} evaluations, capped by budget.
LineProfile line_profile(const LinPoly& f, std::uint64_t budget = std::uint64_t{1} << 24);

struct NotAGraph {
  FqSubspace kernel;  // kernel of the first output coordinate
};

// g with G_g = A G_f^sigma where sigma = x -> x^{p^r}, or NotAGraph.
std::variant<LinPoly, NotAGraph> apply_transform(const Mat2& A, unsigned r, const LinPoly& f);

// {A (u0^sigma, u1^sigma) : (u0, u1) in U}
FqSubspace transform_subspace(const Mat2& A, unsigned r, const FqSubspace& U);

struct SubspacePoly {
  Mat2 A;
  ProjPoint free_point;
  LinPoly g;
};

// Finds the first weight-0 point in canonical order, sends it to <(0,1)> and reads off g with A U = G_g.
SubspacePoly subspace_to_poly(const FqSubspace& U);

}  // namespace linset
