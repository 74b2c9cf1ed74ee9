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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linset/acceptance.hpp"
#include "linset/report.hpp"

namespace py = pybind11;
using namespace linset;

namespace {

AnalyzeOptions options(const std::vector<unsigned>& t, std::uint64_t budget, std::uint64_t seed) {
  AnalyzeOptions o;
  o.t = t;
  o.budget = budget;
  o.seed = seed;
  return o;
}

Json with_header(const ExtPtr& ext, const LinPoly& f) { return Json{{"field", to_json(*ext)}, {"polynomial", to_json(f)}}; }

std::string analyze_json(const std::string& field, const std::string& poly, std::optional<std::uint64_t> q,
                         const std::vector<unsigned>& t, std::uint64_t budget, std::uint64_t seed) {
  ExtPtr ext = parse_extension(field, q);
  return analyze(parse_linpoly(ext, poly), options(t, budget, seed)).dump();
}

std::string stabilizer_json(const std::string& field, const std::string& poly, std::optional<std::uint64_t> q,
                            bool brute, std::uint64_t seed) {
  ExtPtr ext = parse_extension(field, q);
  LinPoly f = parse_linpoly(ext, poly);
  StabReport S = compute_stabilizer(f, seed);
  Json j = with_header(ext, f);
  j.update(to_json(S));
  if (brute) {
    StabReport B = brute_force_stabilizer(f);
    j["brute_force"] = Json{{"order", B.members.size()}, {"agree", enumerate_members(S) == B.members}};
  }
  return j.dump();
}

std::string code_json(const std::string& field, const std::string& poly, std::optional<std::uint64_t> q,
                      const std::vector<unsigned>& t, std::uint64_t budget, std::uint64_t seed) {
  ExtPtr ext = parse_extension(field, q);
  LinPoly f = parse_linpoly(ext, poly);
  Json j = with_header(ext, f);
  j.update(code_report(f, options(t, budget, seed)));
  return j.dump();
}

std::string family_json(const std::string& field, const std::string& name, const std::map<std::string, std::string>& params,
                        std::optional<std::uint64_t> q, bool with_analysis) {
  ExtPtr ext = parse_extension(field, q);
  FamilyInstance inst = make_polynomial(ext, FamilySpec{parse_family(name), params});
  Json j{{"field", to_json(*ext)}};
  j.update(family_report(name, inst));
  if (with_analysis) j["analysis"] = analyze(inst.f, AnalyzeOptions{});
  return j.dump();
}

std::string search_json(const std::string& field, unsigned max_qdeg, const std::string& predicate, unsigned t,
                        std::uint64_t budget, std::uint64_t seed, unsigned workers, std::optional<std::uint64_t> q) {
  ExtPtr ext = parse_extension(field, q);
  SearchOptions so;
  so.max_qdeg = max_qdeg;
  so.predicate = parse_predicate(predicate);
  so.t = t;
  so.budget = budget;
  so.seed = seed;
  so.workers = workers;
  Json j{{"field", to_json(*ext)}, {"predicate", to_string(so.predicate)}, {"t", t}, {"max_qdeg", max_qdeg}, {"seed", seed}, {"budget", budget}};
  j.update(to_json(search(ext, so)));
  return j.dump();
}

std::string verify_json(const std::string& tier, const std::vector<int>& only, std::uint64_t seed, unsigned workers) {
  Tier t = parse_tier(tier);
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(t, only, seed, workers)) {
    rows.push_back(to_json(r));
    if (r.ran && !r.passed) all = false;
  }
  return Json{{"tier", to_string(t)}, {"seed", seed}, {"criteria", rows}, {"passed", all}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-returning entry points of the linset C++ library";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("TOOL_VERSION") = kToolVersion;
  py::register_exception<Error>(m, "LinsetError", PyExc_ValueError);

  using py::arg;
  const auto release = py::call_guard<py::gil_scoped_release>();
  m.def("analyze", &analyze_json, arg("field"), arg("poly"), arg("q") = py::none(), arg("t") = std::vector<unsigned>{},
        arg("budget") = kCodewordBudget, arg("seed") = 0, release);
  m.def("stabilizer", &stabilizer_json, arg("field"), arg("poly"), arg("q") = py::none(), arg("brute") = false,
        arg("seed") = 0, release);
  m.def("code", &code_json, arg("field"), arg("poly"), arg("q") = py::none(), arg("t") = std::vector<unsigned>{},
        arg("budget") = kCodewordBudget, arg("seed") = 0, release);
  m.def("family", &family_json, arg("field"), arg("name"), arg("params") = std::map<std::string, std::string>{},
        arg("q") = py::none(), arg("analysis") = false, release);
  m.def("search", &search_json, arg("field"), arg("max_qdeg") = 1, arg("predicate") = "scattered", arg("t") = 0,
        arg("budget") = std::uint64_t{1} << 16, arg("seed") = 0, arg("workers") = 1, arg("q") = py::none(), release);
  m.def("verify", &verify_json, arg("tier") = "fast", arg("only") = std::vector<int>{}, arg("seed") = kAcceptanceSeed,
        arg("workers") = 1, release);
}
