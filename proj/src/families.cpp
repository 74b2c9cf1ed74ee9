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

#include "linset/families.hpp"

#include <numeric>
#include <sstream>

namespace linset {

namespace {

struct Entry {
  Family family;
  const char* name;
};

constexpr Entry kFamilies[] = {
    {Family::Monomial, "monomial"},        {Family::Lp, "lp"},
    {Family::HalfGap, "half_gap"},         {Family::CsmzHexa, "csmz_hexa"},
    {Family::Lz3Quad, "lz3_quad"},         {Family::Trace, "trace"},
    {Family::EtaBinomial, "eta_binomial"}, {Family::DeltaHigh, "delta_high"},
    {Family::DeltaLow, "delta_low"},       {Family::EllTwist, "ell_twist"},
    {Family::Projection, "projection"},    {Family::CompSubspace, "comp_subspace"},
};

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::MalformedSpec, msg); }

std::uint64_t parse_number(const std::string& key, const std::string& s) {
  if (s.empty()) malformed("parameter '" + key + "' is empty");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') malformed("parameter '" + key + "' is not a number: " + s);
    v = v * 10 + static_cast<unsigned>(ch - '0');
    if (v > (std::uint64_t{1} << 40)) malformed("parameter '" + key + "' is too large");
  }
  return v;
}

class Params {
 public:
  Params(const ExtPtr& ext, const FamilySpec& spec, std::initializer_list<const char*> allowed) : ext_(ext), spec_(spec) {
    for (const auto& [k, v] : spec.params) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) malformed(std::string("unexpected parameter '") + k + "' for family " + to_string(spec.family));
    }
  }

  unsigned integer(const char* key, std::optional<unsigned> fallback = std::nullopt) {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      if (!fallback) malformed(std::string("missing parameter '") + key + "'");
      resolved[key] = std::to_string(*fallback);
      return *fallback;
    }
    auto v = parse_number(key, it->second);
    if (v > 1u << 20) malformed(std::string("parameter '") + key + "' is too large");
    resolved[key] = it->second;
    return static_cast<unsigned>(v);
  }

  // nullopt means "auto"
  std::optional<Elem> element(const char* key) {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end() || it->second == "auto") return std::nullopt;
    auto v = parse_number(key, it->second);
    if (v >= ext_->order()) malformed(std::string("parameter '") + key + "' exceeds the field order");
    resolved[key] = it->second;
    return Elem{static_cast<std::uint32_t>(v)};
  }

  std::vector<Elem> list(const char* key) {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) malformed(std::string("missing parameter '") + key + "'");
    std::vector<Elem> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto v = parse_number(key, item);
      if (v >= ext_->order()) malformed(std::string("parameter '") + key + "' has an entry beyond the field order");
      out.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    resolved[key] = it->second;
    return out;
  }

  std::map<std::string, std::string> resolved;

 private:
  const ExtPtr& ext_;
  const FamilySpec& spec_;
};

unsigned gcd(unsigned a, unsigned b) { return std::gcd(a, b); }

LinPoly sum_terms(const ExtPtr& ext, std::initializer_list<std::pair<Elem, std::int64_t>> terms) {
  LinPoly f = LinPoly::zero(ext);
  for (const auto& [c, i] : terms) f = f + LinPoly::monomial(ext, c, i);
  return f;
}

// Builds the instance for a fixed element parameter; "auto" scans encodings for the first one
// meeting every hypothesis and falls back to the first candidate when none does.
template <class Build>
FamilyInstance with_element(const ExtPtr& ext, Params& params, const char* key, std::optional<Elem> given,
                            Build build) {
  if (given) {
    FamilyInstance inst = build(*given);
    inst.resolved = params.resolved;
    return inst;
  }
  std::optional<FamilyInstance> first;
  for (std::uint64_t v = 1; v < ext->order(); ++v) {
    Elem e{static_cast<std::uint32_t>(v)};
    FamilyInstance inst = build(e);
    inst.resolved = params.resolved;
    inst.resolved[key] = std::to_string(v);
    if (inst.all_hold()) return inst;
    if (!first) first = std::move(inst);
  }
  if (!first) malformed(std::string("no candidate for parameter '") + key + "'");
  return std::move(*first);
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.name;
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (const auto& e : kFamilies)
    if (name == e.name) return e.family;
  throw Error(ErrorKind::MalformedSpec, "unknown family '" + name + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& e : kFamilies) out.push_back(e.family);
    return out;
  }();
  return v;
}

bool FamilyInstance::all_hold() const {
  for (const auto& d : diagnostics)
    if (!d.holds) return false;
  return true;
}

Elem subfield_norm(const Extension& ext, Elem x, unsigned t) {
  if (!ext.divides_n(t)) throw Error(ErrorKind::NonDivisorDegrees, "t must divide n");
  ensure(ext.in_subfield(x, t), "norm argument must lie in the subfield");
  return ext.field().pow(x, (ext.q_power(t) - 1) / (ext.q() - 1));
}

FamilyInstance make_polynomial(const ExtPtr& ext, const FamilySpec& spec) {
  const unsigned n = ext->n();
  const FieldCtx& fc = ext->field();
  const Elem minus_one = fc.neg(kOne);
  const bool q_odd = ext->q() % 2 == 1;
  switch (spec.family) {
    case Family::Monomial: {
      Params p(ext, spec, {"s"});
      unsigned s = p.integer("s", 1u);
      FamilyInstance inst{LinPoly::monomial(ext, kOne, s), p.resolved, {{"gcd(s,n) = 1", gcd(s, n) == 1}}};
      return inst;
    }
    case Family::Lp: {
      Params p(ext, spec, {"s", "delta"});
      unsigned s = p.integer("s", 1u);
      auto given = p.element("delta");
      return with_element(ext, p, "delta", given, [&](Elem delta) {
        LinPoly f = sum_terms(ext, {{delta, s}, {kOne, std::int64_t{n} - s}});
        return FamilyInstance{f, {}, {{"gcd(s,n) = 1", gcd(s, n) == 1}, {"delta != 0", delta != kZero}, {"n >= 4", n >= 4}}};
      });
    }
    case Family::HalfGap: {
      Params p(ext, spec, {"s", "delta"});
      unsigned s = p.integer("s", 1u);
      if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "half_gap needs n even");
      auto given = p.element("delta");
      return with_element(ext, p, "delta", given, [&](Elem delta) {
        LinPoly f = sum_terms(ext, {{delta, s}, {kOne, s + n / 2}});
        return FamilyInstance{f,
                              {},
                              {{"n even", true},
                               {"gcd(s,n) = 1", gcd(s, n) == 1},
                               {"delta != 0", delta != kZero},
                               {"f scattered", delta != kZero && weight_spectrum(f).max_weight <= 1}}};
      });
    }
    case Family::CsmzHexa: {
      Params p(ext, spec, {"delta"});
      if (n != 6) throw Error(ErrorKind::BadParameters, "csmz_hexa lives in L_{6,q}");
      auto given = p.element("delta");
      return with_element(ext, p, "delta", given, [&](Elem delta) {
        LinPoly f = sum_terms(ext, {{kOne, 1}, {kOne, 3}, {delta, 5}});
        return FamilyInstance{
            f, {}, {{"q odd", q_odd}, {"delta^2 + delta = 1", fc.add(fc.mul(delta, delta), delta) == kOne}}};
      });
    }
    case Family::Lz3Quad: {
      Params p(ext, spec, {"s", "t", "eta"});
      if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "lz3_quad needs n = 2t");
      unsigned s = p.integer("s", 1u);
      unsigned t = p.integer("t", n / 2);
      if (2 * t != n) throw Error(ErrorKind::BadParameters, "lz3_quad needs n = 2t");
      auto given = p.element("eta");
      return with_element(ext, p, "eta", given, [&](Elem eta) {
        FamilyInstance inst{LinPoly::zero(ext), {}, {}};
        inst.diagnostics = {{"q odd", q_odd},
                            {"t >= 5", t >= 5},
                            {"gcd(s,n) = 1", gcd(s, n) == 1},
                            {"eta != 0", eta != kZero}};
        if (eta == kZero) {
          inst.f = sum_terms(ext, {{kOne, s}, {kOne, std::int64_t{s} * (t - 1)}});
          inst.diagnostics.push_back({"N_{q^n/q^t}(eta) = -1", false});
          return inst;
        }
        const std::int64_t top = std::int64_t{s} * (2 * t - 1);
        Elem c3 = fc.mul(eta, ext->frob(eta, s));
        Elem c4 = fc.div(eta, ext->frob(eta, top));
        inst.f = sum_terms(ext, {{kOne, s}, {kOne, std::int64_t{s} * (t - 1)}, {c3, std::int64_t{s} * (t + 1)}, {c4, top}});
        inst.diagnostics.push_back({"N_{q^n/q^t}(eta) = -1", ext->norm(eta, t) == minus_one});
        return inst;
      });
    }
    case Family::Trace: {
      Params p(ext, spec, {"t"});
      unsigned t = p.integer("t");
      if (!ext->divides_n(t)) throw Error(ErrorKind::BadParameters, "trace needs t | n");
      return FamilyInstance{LinPoly::trace(ext, t), p.resolved, {{"t' = n/t >= 2", n / t >= 2}}};
    }
    case Family::EtaBinomial: {
      Params p(ext, spec, {"t", "eta"});
      unsigned t = p.integer("t");
      if (!ext->divides_n(t)) throw Error(ErrorKind::BadParameters, "eta_binomial needs t | n");
      auto given = p.element("eta");
      return with_element(ext, p, "eta", given, [&](Elem eta) {
        LinPoly f = sum_terms(ext, {{kOne, 1}, {eta, std::int64_t{t} + 1}});
        return FamilyInstance{f,
                              {},
                              {{"t >= 2", t >= 2},
                               {"t' = n/t > 2", n / t > 2},
                               {"eta != 0", eta != kZero},
                               {"N_{q^n/q^t}(eta) != -1", eta != kZero && ext->norm(eta, t) != minus_one}}};
      });
    }
    case Family::DeltaHigh: {
      Params p(ext, spec, {"delta"});
      auto given = p.element("delta");
      return with_element(ext, p, "delta", given, [&](Elem delta) {
        LinPoly f = sum_terms(ext, {{kOne, 1}, {delta, std::int64_t{n} - 1}});
        return FamilyInstance{f, {}, {{"n > 4", n > 4}, {"N_{q^n/q}(delta) = 1", ext->norm(delta, 1) == kOne}}};
      });
    }
    case Family::DeltaLow: {
      Params p(ext, spec, {"delta"});
      auto given = p.element("delta");
      return with_element(ext, p, "delta", given, [&](Elem delta) {
        LinPoly f = sum_terms(ext, {{kOne, 1}, {delta, 2}});
        return FamilyInstance{f, {}, {{"n > 4", n > 4}, {"delta != 0", delta != kZero}}};
      });
    }
    case Family::EllTwist: {
      Params p(ext, spec, {"t", "l"});
      if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "ell_twist needs n = 2t");
      unsigned t = p.integer("t", n / 2);
      auto l = p.list("l");
      EllTwist tw = make_ell_twist(ext, l, t);
      return FamilyInstance{tw.f,
                            p.resolved,
                            {{"criterion: l (q even) or tau l(tau x) (q odd) nonsingular", tw.criterion},
                             {"L-q^t-partially scattered", tw.L_pt}}};
    }
    case Family::Projection: {
      Params p(ext, spec, {"T", "S"});
      auto T = FqSubspace::span_elements(ext, p.list("T"));
      auto S = FqSubspace::span_elements(ext, p.list("S"));
      Projection pr = make_projection(T, S);
      return FamilyInstance{pr.p,
                            p.resolved,
                            {{"p o p = p", pr.idempotent},
                             {"ker p = T", pr.kernel_is_T},
                             {"im p = S", pr.image_is_S},
                             {"p_{S,T} = x - p_{T,S}", pr.complement_identity},
                             {"p_{T,S} o p_{S,T} = 0", pr.composition_zero}}};
    }
    case Family::CompSubspace: {
      Params p(ext, spec, {"s", "t", "mu", "xi"});
      if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "comp_subspace needs n = 2t");
      unsigned s = p.integer("s", 1u);
      unsigned t = p.integer("t", n / 2);
      if (2 * t != n) throw Error(ErrorKind::BadParameters, "comp_subspace needs n = 2t");
      auto mu = p.element("mu");
      auto xi = p.element("xi");
      auto build = [&](Elem m, Elem x) {
        CompSubspace cs = make_comp_subspace(ext, m, x, s, t);
        SubspacePoly sp = subspace_to_poly(cs.U);
        FamilyInstance inst{sp.g, p.resolved, {}};
        inst.resolved["mu"] = std::to_string(m.value);
        inst.resolved["xi"] = std::to_string(x.value);
        inst.diagnostics = {{"gcd(s,t) = 1", gcd(s, t) == 1},
                            {"N_{q^t/q}(mu) != 1", cs.norm_mu_ok},
                            {"N_{q^t/q}(-xi^{q^t+1} mu) != (-1)^t", cs.norm_xi_ok},
                            {"U is R-q^t-partially scattered", cs.r_pt},
                            {"weights at <(1,0)>, <(0,1)> are (t, t)", cs.weight_10 == t && cs.weight_01 == t}};
        return inst;
      };
      auto candidates = [&](std::optional<Elem> given, bool in_sub) {
        std::vector<Elem> out;
        if (given) return std::vector<Elem>{*given};
        for (std::uint64_t v = 1; v < ext->order(); ++v) {
          Elem e{static_cast<std::uint32_t>(v)};
          if (ext->in_subfield(e, t) == in_sub) out.push_back(e);
        }
        return out;
      };
      std::optional<FamilyInstance> first;
      for (Elem m : candidates(mu, true)) {
        for (Elem x : candidates(xi, false)) {
          CompSubspace cs = make_comp_subspace(ext, m, x, s, t);
          if ((mu && xi) || cs.hypotheses()) return build(m, x);
          if (!first) first = build(m, x);
        }
      }
      if (!first) malformed("no candidate for mu and xi");
      return std::move(*first);
    }
  }
  throw Error(ErrorKind::Internal, "unhandled family");
}

EllTwist make_ell_twist(const ExtPtr& ext, const std::vector<Elem>& l, unsigned t) {
  const unsigned n = ext->n();
  if (t < 2 || n != 2 * t) throw Error(ErrorKind::BadParameters, "ell_twist needs t >= 2 and n = 2t");
  if (l.size() != t) throw Error(ErrorKind::MalformedSpec, "l needs exactly t coefficients");
  for (Elem c : l)
    if (!ext->in_subfield(c, t)) throw Error(ErrorKind::CoefficientsNotInSubfield, "coefficients of l must lie in F_{q^t}");
  const FieldCtx& fc = ext->field();
  std::vector<Elem> coeffs(n, kZero);
  for (unsigned i = 0; i < t; ++i) {
    coeffs[i + t] = fc.add(coeffs[i + t], l[i]);
    coeffs[i] = fc.sub(coeffs[i], l[i]);
  }
  EllTwist out{LinPoly(ext, coeffs), kZero};
  for (std::uint64_t v = 1; v < ext->order(); ++v) {
    Elem e{static_cast<std::uint32_t>(v)};
    if (fc.add(ext->frob(e, t), e) == kZero) {
      out.tau = e;
      break;
    }
  }
  ensure(out.tau != kZero, "no tau with tau^{q^t} + tau = 0");
  auto ell = [&](Elem x) {
    Elem acc = kZero;
    for (unsigned i = 0; i < t; ++i) acc = fc.add(acc, fc.mul(l[i], ext->frob(x, i)));
    return acc;
  };
  const bool even = ext->q() % 2 == 0;
  std::vector<Elem> images;
  for (Elem b : ext->subfield_basis(t))
    images.push_back(even ? ell(b) : fc.mul(out.tau, ell(fc.mul(out.tau, b))));
  out.criterion = ext->rank_of(images) == t;
  out.L_pt = scatteredness(out.f, t).L_pt;
  return out;
}

LinPoly projection_polynomial(const FqSubspace& T, const FqSubspace& S) {
  const auto& ext = T.ext();
  const unsigned n = ext->n();
  const FieldCtx& fc = ext->field();
  std::vector<Elem> B = T.basis_elements();
  const std::size_t t = B.size();
  for (Elem s : S.basis_elements()) B.push_back(s);
  std::vector<Elem> dual = ext->dual_basis(B);
  std::vector<Elem> coeffs(n, kZero);
  for (unsigned j = 0; j < n; ++j)
    for (std::size_t i = t; i < n; ++i) coeffs[j] = fc.add(coeffs[j], fc.mul(B[i], ext->frob(dual[i], j)));
  return LinPoly(ext, std::move(coeffs));
}

Projection make_projection(const FqSubspace& T, const FqSubspace& S) {
  const auto& ext = T.ext();
  if (T.copies() != 1 || S.copies() != 1 || S.ext() != ext)
    throw Error(ErrorKind::AmbientMismatch, "T and S must be subspaces of the same F_{q^n}");
  if (T.dim() + S.dim() != ext->n() || T.intersect(S).dim() != 0)
    throw Error(ErrorKind::NotComplementary, "T and S are not complementary");
  Projection out{projection_polynomial(T, S)};
  const LinPoly& p = out.p;
  const LinPoly other = projection_polynomial(S, T);
  out.idempotent = p.compose(p) == p;
  out.kernel_is_T = p.kernel() == T;
  out.image_is_S = p.image() == S;
  out.complement_identity = other == LinPoly::identity(ext) - p;
  out.composition_zero = p.compose(other).is_zero();
  return out;
}

CompSubspace make_comp_subspace(const ExtPtr& ext, Elem mu, Elem xi, unsigned s, unsigned t) {
  const unsigned n = ext->n();
  if (n != 2 * t) throw Error(ErrorKind::BadParameters, "comp_subspace needs n = 2t");
  if (std::gcd(s, t) != 1) throw Error(ErrorKind::BadParameters, "s must be coprime to t");
  if (mu == kZero || !ext->in_subfield(mu, t)) throw Error(ErrorKind::BadParameters, "mu must lie in F_{q^t}^*");
  if (ext->in_subfield(xi, t)) throw Error(ErrorKind::BadParameters, "xi must lie outside F_{q^t}");
  const FieldCtx& fc = ext->field();
  std::vector<AmbientVec> vs;
  for (Elem v : ext->subfield_basis(t)) {
    Elem vs_ = ext->frob(v, s);
    vs.push_back({fc.add(v, fc.mul(fc.mul(xi, mu), vs_)), kZero});
    vs.push_back({kZero, fc.add(v, fc.mul(xi, vs_))});
  }
  CompSubspace out{FqSubspace::span(ext, 2, vs)};
  ensure(out.U.dim() == n, "U must have rank n");
  const Elem sign = t % 2 == 0 ? kOne : fc.neg(kOne);
  out.norm_mu_ok = subfield_norm(*ext, mu, t) != kOne;
  const Elem arg = fc.neg(fc.mul(fc.mul(ext->frob(xi, t), xi), mu));
  out.norm_xi_ok = subfield_norm(*ext, arg, t) != sign;
  out.r_pt = is_R_pt_subspace(out.U, t);
  out.weight_10 = point_weight(out.U, ProjPoint{kOne, kZero});
  out.weight_01 = point_weight(out.U, ProjPoint{kZero, kOne});
  return out;
}

}  // namespace linset
