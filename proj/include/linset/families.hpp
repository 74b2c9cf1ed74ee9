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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linset/geometry.hpp"
#include "linset/linpoly.hpp"
#include "linset/subspace.hpp"

namespace linset {

enum class Family {
  Monomial,
  Lp,
  HalfGap,
  CsmzHexa,
  Lz3Quad,
  Trace,
  EtaBinomial,
  DeltaHigh,
  DeltaLow,
  EllTwist,
  Projection,
  CompSubspace,
};

const char* to_string(Family f);
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

// Parameters are strings: integers for s and t, element encodings (or "auto") for
// delta, eta, mu, xi, and comma lists for l, T, S.
struct FamilySpec {
  Family family;
  std::map<std::string, std::string> params;
};

struct Diagnostic {
  std::string condition;
  bool holds;
};

struct FamilyInstance {
  LinPoly f;
  std::map<std::string, std::string> resolved;  // parameters after defaults and "auto"
  std::vector<Diagnostic> diagnostics;
  bool all_hold() const;
};

FamilyInstance make_polynomial(const ExtPtr& ext, const FamilySpec& spec);

// N_{q^t/q}(x) for x ∈ F_{q^t}.
Elem subfield_norm(const Extension& ext, Elem x, unsigned t);

struct EllTwist {
  LinPoly f;                 // l^{q^t} - l in L_{2t,q}
  Elem tau;                  // smallest nonzero encoding with tau^{q^t} + tau = 0
  bool criterion = false;    // l (q even) or tau l(tau x) (q odd) nonsingular on F_{q^t}
  bool L_pt = false;
};

// l given by its t coefficients; n must equal 2t.
EllTwist make_ell_twist(const ExtPtr& ext, const std::vector<Elem>& l, unsigned t);

struct Projection {
  LinPoly p;  // p_{T,S}
  bool idempotent = false;
  bool kernel_is_T = false;
  bool image_is_S = false;
  bool complement_identity = false;  // p_{S,T} = x - p_{T,S}
  bool composition_zero = false;     // p_{T,S} ∘ p_{S,T} = 0
  bool all() const { return idempotent && kernel_is_T && image_is_S && complement_identity && composition_zero; }
};

Projection make_projection(const FqSubspace& T, const FqSubspace& S);
// Closed form only, with no identity checks.
LinPoly projection_polynomial(const FqSubspace& T, const FqSubspace& S);

struct CompSubspace {
  FqSubspace U;
  bool norm_mu_ok = false;  // N_{q^t/q}(mu) != 1
  bool norm_xi_ok = false;  // N_{q^t/q}(-xi^{q^t+1} mu) != (-1)^t
  bool r_pt = false;
  unsigned weight_10 = 0;
  unsigned weight_01 = 0;
  bool hypotheses() const { return norm_mu_ok && norm_xi_ok; }
};

// U = {(v + xi mu v^{q^s}, u + xi u^{q^s}) : u, v ∈ F_{q^t}} inside F_{q^{2t}}^2.
CompSubspace make_comp_subspace(const ExtPtr& ext, Elem mu, Elem xi, unsigned s, unsigned t);

}  // namespace linset
