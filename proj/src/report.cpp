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


#include "linset/report.hpp"

#include <chrono>

#include "linset/error.hpp"

namespace linset {

namespace {

Json enc(Elem e) { return e.value; }

Json optional_count(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const std::optional<ScatterWitness>& w) {
  if (!w) return nullptr;
  return Json{{"m", enc(w->m)}, {"y", enc(w->y)}, {"z", enc(w->z)}};
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on) {}
  void lap(Json& timing, const char* key) {
    if (!on_) return;
    auto now = std::chrono::steady_clock::now();
    timing[key] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<unsigned> requested_t(const LinPoly& f, const AnalyzeOptions& opts) {
  const unsigned n = f.n();
  if (opts.t.empty()) return proper_divisors(n);
  for (unsigned t : opts.t)
    if (t <= 1 || t >= n || n % t != 0)
      throw Error(ErrorKind::BadDivisor, "t = " + std::to_string(t) + " is not a proper divisor of n = " + std::to_string(n));
  return opts.t;
}

}  // namespace

ExtPtr parse_extension(const std::string& field_spec, std::optional<std::uint64_t> q) {
  FieldPtr ctx = parse_field_spec(field_spec);
  return Extension::make(ctx, q.value_or(ctx->characteristic()));
}

std::vector<unsigned> proper_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned t = 2; t < n; ++t)
    if (n % t == 0) out.push_back(t);
  return out;
}

Json to_json(const Extension& ext) {
  return Json{{"spec", ext.field().spec_string()},
              {"p", ext.field().characteristic()},
              {"k", ext.field().degree()},
              {"q", ext.q()},
              {"n", ext.n()}};
}

Json to_json(const LinPoly& f) {
  Json coeffs = Json::array();
  for (Elem c : f.coeffs()) coeffs.push_back(enc(c));
  auto deg = f.q_degree();
  return Json{{"coeffs", coeffs}, {"text", f.to_string()}, {"q_degree", deg ? Json(*deg) : Json("none")}};
}

Json to_json(const Mat2& A) { return Json{enc(A.a), enc(A.b), enc(A.c), enc(A.d)}; }

Json to_json(const Matrix& M) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Elem e : M.row(r)) row.push_back(enc(e));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const WeightSpectrum& s, unsigned n) {
  Json spec = Json::object();
  for (const auto& [w, c] : s.counts) spec[std::to_string(w)] = c;
  return Json{{"spectrum", spec},
              {"max_weight", s.max_weight},
              {"points", s.points},
              {"rank", s.rank},
              {"low_weight", is_low_weight(s, n)},
              {"scattered", s.max_weight <= 1}};
}

Json to_json(const Scatteredness& s) {
  return Json{{"t", s.t},
              {"scattered", s.scattered},
              {"L_pt", s.L_pt},
              {"R_pt", s.R_pt},
              {"witnesses",
               {{"scattered", witness_json(s.scattered_witness)},
                {"L_pt", witness_json(s.L_witness)},
                {"R_pt", witness_json(s.R_witness)}}}};
}

Json to_json(const StabReport& s) {
  Json basis = Json::array();
  for (const Mat2& A : s.basis) basis.push_back(to_json(A));
  return Json{{"dim", s.fq_dimension},
              {"order", optional_count(s.order)},
              {"basis", basis},
              {"is_field", s.is_field},
              {"field_degree", s.field_degree ? Json(*s.field_degree) : Json(nullptr)},
              {"witness", s.singular_witness ? to_json(*s.singular_witness) : Json(nullptr)},
              {"mode", to_string(s.mode)},
              {"closure_checked", s.closure_checked},
              {"closure_ok", s.closure_ok},
              {"commutative", s.commutative}};
}

Json to_json(const IdealizerReport& r) {
  Json basis = Json::array();
  for (const Matrix& Z : r.basis) basis.push_back(to_json(Z));
  return Json{{"side", to_string(r.side)},
              {"dim", r.fq_dimension},
              {"basis", basis},
              {"is_field", r.is_field},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"mode", to_string(r.mode)},
              {"contains_identity", r.contains_identity},
              {"closure_ok", r.closure_ok}};
}

Json to_json(const PsiCheck& p) {
  return Json{{"stabilizer_dim", p.stabilizer_dim},
              {"idealizer_dim", p.idealizer_dim},
              {"into", p.into},
              {"injective", p.injective},
              {"products", p.products},
              {"same_verdict", p.same_verdict},
              {"ok", p.ok()}};
}

Json to_json(const RestrictedCode& r) {
  return Json{{"t", r.t},
              {"dim", r.code.fq_dimension()},
              {"shape", {r.code.codomain_dim, r.code.domain_dim}},
              {"R_pt", r.r_pt ? Json(*r.r_pt) : Json(nullptr)},
              {"injective", r.injective},
              {"d", r.d ? Json(*r.d) : Json("unknown")},
              {"parameters_ok", r.parameters_ok}};
}

Json to_json(const LtnqReport& r) {
  return Json{{"t", r.t},
              {"precondition_R_pt", r.precondition_r_pt},
              {"right_dim", r.right_dim},
              {"intersection_dim", r.intersection_dim},
              {"setwise_count", optional_count(r.setwise_count)},
              {"restricted_right_dim", r.restricted_right_dim},
              {"inclusion_holds", r.inclusion_holds},
              {"injective", r.injective},
              {"inequality_holds", r.inequality_holds}};
}

Json to_json(const LineProfile& p) {
  Json dirs = Json::array();
  for (const auto& d : p.directions) {
    if (d.weight == 0) continue;
    Json sizes = Json::object();
    for (const auto& [size, count] : d.line_sizes) sizes[std::to_string(size)] = count;
    dirs.push_back(Json{{"direction", {enc(d.direction.x0), enc(d.direction.x1)}}, {"weight", d.weight}, {"lines", sizes}});
  }
  return Json{{"directions_in_D_f", dirs}, {"consistent", p.consistent}};
}

Json stabilizer_report(const LinPoly& f, const AnalyzeOptions& opts) {
  return to_json(compute_stabilizer(f, opts.seed));
}

Json code_report(const LinPoly& f, const AnalyzeOptions& opts) {
  RankCode C = build_code(f);
  Json out{{"dim", C.fq_dimension()}, {"degenerate", C.degenerate}};
  std::optional<unsigned> d;
  try {
    d = min_distance(C, opts.budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
  }
  out["d"] = d ? Json(*d) : Json("unknown");
  if (d) {
    SingletonCheck sc = singleton_check(C, *d);
    out["code_exponent"] = sc.code_exponent;
    out["singleton_bound"] = sc.bound_exponent;
    out["is_mrd"] = sc.is_mrd;
  } else {
    out["code_exponent"] = C.fq_dimension();
    out["singleton_bound"] = nullptr;
    out["is_mrd"] = nullptr;
  }
  IdealizerReport L = idealizer(C, Side::Left, opts.seed);
  IdealizerReport R = idealizer(C, Side::Right, opts.seed);
  out["left"] = to_json(L);
  out["right"] = to_json(R);
  if (C.degenerate) {
    out["psi_ok"] = nullptr;
    out["psi"] = nullptr;
  } else {
    PsiCheck psi = verify_psi(f, compute_stabilizer(f, opts.seed), R);
    out["psi_ok"] = psi.ok();
    out["psi"] = to_json(psi);
  }
  Json restricted = Json::array();
  for (unsigned t : requested_t(f, opts)) {
    Json entry;
    try {
      entry = to_json(restrict_code(f, t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      entry = Json{{"t", t}, {"d", "unknown"}};
    }
    LtnqReport lt = ltnq_analysis(f, t, opts.seed);
    entry["right_idealizer"] = to_json(lt);
    restricted.push_back(entry);
  }
  out["restricted"] = restricted;
  return out;
}

Json analyze(const LinPoly& f, const AnalyzeOptions& opts) {
  const Extension& ext = *f.ext();
  const unsigned n = ext.n();
  Json timing = Json::object();
  Stopwatch sw(opts.timing);

  Json out{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"seed", opts.seed}};
  out["field"] = to_json(ext);
  out["polynomial"] = to_json(f);

  WeightSpectrum spec = weight_spectrum(f);
  Json geo = to_json(spec, n);
  Json partial = Json::array();
  for (unsigned t : requested_t(f, opts)) partial.push_back(to_json(scatteredness(f, t)));
  geo["partial"] = partial;
  Json sub = Json::array();
  for (unsigned s : ext.field().divisors())
    if (s % ext.e() == 0 && is_sublinear(f, s / ext.e())) sub.push_back(s / ext.e());
  geo["sublinear_over"] = sub;
  out["geometry"] = geo;
  sw.lap(timing, "geometry_ms");

  StabReport S = compute_stabilizer(f, opts.seed);
  out["stabilizer"] = to_json(S);
  sw.lap(timing, "stabilizer_ms");

  Json code = code_report(f, opts);
  out["code"] = code;
  sw.lap(timing, "code_ms");

  Json consistency = Json::object();
  if (!f.is_scalar_multiple_of_x() && code["d"].is_number())
    consistency["d_equals_n_minus_max_weight"] = code["d"].get<unsigned>() == n - spec.max_weight;
  else
    consistency["d_equals_n_minus_max_weight"] = nullptr;
  if (!f.is_scalar_multiple_of_x() && code["is_mrd"].is_boolean())
    consistency["mrd_iff_scattered"] = code["is_mrd"].get<bool>() == (spec.max_weight <= 1);
  else
    consistency["mrd_iff_scattered"] = nullptr;
  consistency["psi_ok"] = code["psi_ok"];
  out["consistency"] = consistency;
  out["timing"] = opts.timing ? timing : Json(nullptr);
  return out;
}

Json family_report(const std::string& name, const FamilyInstance& inst) {
  Json diags = Json::array();
  for (const auto& d : inst.diagnostics) diags.push_back(Json{{"condition", d.condition}, {"holds", d.holds}});
  return Json{{"family", name},
              {"params", inst.resolved},
              {"diagnostics", diags},
              {"all_hold", inst.all_hold()},
              {"polynomial", to_json(inst.f)}};
}

Json to_json(const SearchResult& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits)
    hits.push_back(Json{{"canonical", to_json(h.canonical)},
                        {"first", to_json(h.first)},
                        {"first_index", h.first_index},
                        {"orbit_hits", h.orbit_hits}});
  return Json{{"exhaustive", r.exhaustive}, {"space", r.space}, {"examined", r.examined}, {"matches", r.matches}, {"hits", hits}};
}

}  // namespace linset
