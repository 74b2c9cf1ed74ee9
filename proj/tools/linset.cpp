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


#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linset/acceptance.hpp"
#include "linset/families.hpp"
#include "linset/report.hpp"
#include "linset/search.hpp"

using namespace linset;

namespace {

struct Common {
  std::string field;
  std::optional<std::uint64_t> q;
  std::string poly;
  std::vector<unsigned> t;
  unsigned workers = 1;
  std::uint64_t budget = kCodewordBudget;
  std::uint64_t seed = 0;
  bool pretty = false;
  bool timing = false;
};

void add_field(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "field spec p^k or p^k/c0,...,ck")->required();
  cmd->add_option("--q", c.q, "size of the scalar subfield F_q (default p)");
}
void add_poly(CLI::App* cmd, Common& c) {
  cmd->add_option("--poly", c.poly, "polynomial: c0,...,c_{n-1} or terms like 3*x^q2 + x")->required();
}
void add_run(CLI::App* cmd, Common& c) {
  cmd->add_option("--t", c.t, "divisors t of n, comma-separated or repeated (default all proper divisors)")->delimiter(',');
  cmd->add_option("--workers", c.workers, "worker threads for enumeration loops")->check(CLI::Range(1u, 256u));
  cmd->add_option("--budget", c.budget, "cap on candidates of every enumeration");
  cmd->add_option("--seed", c.seed, "seed for sampled verdicts and searches")->capture_default_str();
  cmd->add_flag("--pretty", c.pretty, "human-readable summary on stderr");
}

AnalyzeOptions options(const Common& c) {
  AnalyzeOptions o;
  o.t = c.t;
  o.budget = c.budget;
  o.seed = c.seed;
  o.timing = c.timing;
  return o;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void summary(const Json& j) {
  auto show = [](const char* k, const Json& v) { std::cerr << "  " << std::left << std::setw(22) << k << v.dump() << "\n"; };
  if (j.contains("polynomial")) show("polynomial", j["polynomial"]["text"]);
  if (j.contains("geometry")) {
    show("spectrum", j["geometry"]["spectrum"]);
    show("max_weight", j["geometry"]["max_weight"]);
    show("low_weight", j["geometry"]["low_weight"]);
    show("scattered", j["geometry"]["scattered"]);
    for (const auto& p : j["geometry"]["partial"])
      std::cerr << "  t=" << p["t"].dump() << "  L_pt=" << p["L_pt"].dump() << "  R_pt=" << p["R_pt"].dump() << "\n";
  }
  const Json* s = j.contains("stabilizer") ? &j["stabilizer"] : (j.contains("dim") && j.contains("mode") ? &j : nullptr);
  if (s) {
    show("|S_f|", (*s)["order"]);
    show("S_f is_field", (*s)["is_field"]);
  }
  const Json* c = j.contains("code") ? &j["code"] : (j.contains("psi_ok") ? &j : nullptr);
  if (c) {
    show("d(C_f)", (*c)["d"]);
    show("is_mrd", (*c)["is_mrd"]);
    show("dim R(C_f)", (*c)["right"]["dim"]);
    show("psi_ok", (*c)["psi_ok"]);
  }
}

Json header(const char* command) {
  return Json{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"command", command}};
}

FamilySpec family_spec(const std::string& name, const std::vector<std::string>& params) {
  FamilySpec spec{parse_family(name), {}};
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ParseError, "--param expects key=value, got '" + kv + "'");
    spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linset: stabilizers, linear sets and rank-metric codes of q-polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common c;
  auto* analyze = app.add_subcommand("analyze", "full report for one polynomial");
  add_field(analyze, c);
  add_poly(analyze, c);
  add_run(analyze, c);
  analyze->add_flag("--timing", c.timing, "include wall-clock timings (breaks byte-identical output)");

  std::string family_name;
  std::vector<std::string> params;
  bool skip_analysis = false;
  auto* fam = app.add_subcommand("family", "instantiate a named family with its hypothesis diagnostics");
  add_field(fam, c);
  add_run(fam, c);
  fam->add_option("--family", family_name, "family name")->required();
  fam->add_option("--param", params, "key=value (repeatable)");
  fam->add_flag("--skip-analysis", skip_analysis, "only build the polynomial and its diagnostics");

  bool brute = false;
  auto* stab = app.add_subcommand("stabilizer", "the stabilizer algebra S_f");
  add_field(stab, c);
  add_poly(stab, c);
  add_run(stab, c);
  stab->add_flag("--brute", brute, "also run the brute-force enumeration and compare");

  auto* code = app.add_subcommand("code", "the rank-metric code C_f, its idealizers and restrictions");
  add_field(code, c);
  add_poly(code, c);
  add_run(code, c);

  unsigned max_qdeg = 1;
  std::string predicate = "scattered";
  unsigned search_t = 0;
  auto* search_cmd = app.add_subcommand("search", "enumerate polynomials of bounded q-degree satisfying a predicate");
  add_field(search_cmd, c);
  search_cmd->add_option("--max-qdeg", max_qdeg, "largest q-degree")->capture_default_str();
  search_cmd->add_option("--predicate", predicate, "scattered | L_pt | R_pt | nonfield_stab")->capture_default_str();
  search_cmd->add_option("--t", search_t, "divisor for L_pt and R_pt");
  search_cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
  search_cmd->add_option("--budget", c.budget, "candidate cap; beyond it candidates are drawn at random");
  search_cmd->add_option("--seed", c.seed, "seed for random draws");
  search_cmd->add_flag("--pretty", c.pretty, "human-readable summary on stderr");

  std::string tier_name;
  std::vector<int> only;
  std::uint64_t verify_seed = kAcceptanceSeed;
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("--tier", tier_name, "fast | slow")->required();
  verify->add_option("--only", only, "criterion ids to run (repeatable)");
  verify->add_option("--seed", verify_seed, "seed for the randomized criteria")->capture_default_str();
  verify->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--pretty", c.pretty, "pass/fail table on stderr");

  std::string kind = "all";
  auto* oracle = app.add_subcommand("oracle", "compare fast routes with brute-force oracles");
  add_field(oracle, c);
  add_poly(oracle, c);
  add_run(oracle, c);
  oracle->add_option("--kind", kind, "stabilizer | weights | distance | all")->capture_default_str()
      ->check(CLI::IsMember({"stabilizer", "weights", "distance", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      ExtPtr ext = parse_extension(c.field, c.q);
      Json j = header("analyze");
      j.update(linset::analyze(parse_linpoly(ext, c.poly), options(c)));
      emit(j);
      if (c.pretty) summary(j);
      return 0;
    }
    if (*fam) {
      ExtPtr ext = parse_extension(c.field, c.q);
      FamilyInstance inst = make_polynomial(ext, family_spec(family_name, params));
      Json j = header("family");
      j["field"] = to_json(*ext);
      j.update(family_report(family_name, inst));
      if (!skip_analysis) j["analysis"] = linset::analyze(inst.f, options(c));
      emit(j);
      if (c.pretty) {
        for (const auto& d : inst.diagnostics) std::cerr << "  [" << (d.holds ? "holds" : "fails") << "] " << d.condition << "\n";
        if (!skip_analysis) summary(j["analysis"]);
      }
      return 0;
    }
    if (*stab) {
      ExtPtr ext = parse_extension(c.field, c.q);
      LinPoly f = parse_linpoly(ext, c.poly);
      const std::uint64_t budget = stab->count("--budget") ? c.budget : std::uint64_t{1} << 24;
      StabReport S = compute_stabilizer(f, c.seed);
      Json j = header("stabilizer");
      j["field"] = to_json(*ext);
      j["polynomial"] = to_json(f);
      j.update(to_json(S));
      int rc = 0;
      if (brute) {
        try {
          StabReport B = brute_force_stabilizer(f, budget, c.workers);
          bool agree = enumerate_members(S, budget) == B.members;
          j["brute_force"] = Json{{"order", B.members.size()}, {"agree", agree}};
          if (!agree) rc = 1;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExceeded) throw;
          j["brute_force"] = Json{{"order", nullptr}, {"agree", nullptr}, {"error", e.what()}};
        }
      }
      emit(j);
      if (c.pretty) summary(j);
      return rc;
    }
    if (*code) {
      ExtPtr ext = parse_extension(c.field, c.q);
      LinPoly f = parse_linpoly(ext, c.poly);
      Json j = header("code");
      j["field"] = to_json(*ext);
      j["polynomial"] = to_json(f);
      j.update(code_report(f, options(c)));
      emit(j);
      if (c.pretty) summary(j);
      return 0;
    }
    if (*search_cmd) {
      ExtPtr ext = parse_extension(c.field, c.q);
      SearchOptions so;
      so.max_qdeg = max_qdeg;
      so.predicate = parse_predicate(predicate);
      so.t = search_t;
      so.budget = search_cmd->count("--budget") ? c.budget : std::uint64_t{1} << 16;
      so.seed = c.seed;
      so.workers = c.workers;
      SearchResult res = linset::search(ext, so);
      Json j = header("search");
      j["field"] = to_json(*ext);
      j["predicate"] = to_string(so.predicate);
      j["t"] = so.t ? Json(so.t) : Json(nullptr);
      j["max_qdeg"] = so.max_qdeg;
      j["seed"] = so.seed;
      j["budget"] = so.budget;
      j.update(to_json(res));
      emit(j);
      if (c.pretty) {
        std::cerr << "  " << res.matches << " matches in " << res.hits.size() << " classes ("
                  << (res.exhaustive ? "exhaustive" : "sampled") << ")\n";
        for (const auto& h : res.hits) std::cerr << "  " << h.canonical.to_string() << "\n";
      }
      return 0;
    }
    if (*verify) {
      Tier tier = parse_tier(tier_name);
      auto results = run_acceptance(tier, only, verify_seed, c.workers);
      Json j = header("verify-paper");
      j["tier"] = to_string(tier);
      j["seed"] = verify_seed;
      Json rows = Json::array();
      bool all = true;
      for (const auto& r : results) {
        rows.push_back(to_json(r));
        if (r.ran && !r.passed) all = false;
      }
      j["criteria"] = rows;
      j["passed"] = all;
      emit(j);
      if (c.pretty) std::cerr << format_table(results);
      return all ? 0 : 1;
    }
    if (*oracle) {
      ExtPtr ext = parse_extension(c.field, c.q);
      LinPoly f = parse_linpoly(ext, c.poly);
      const std::uint64_t budget = oracle->count("--budget") ? c.budget : std::uint64_t{1} << 24;
      Json j = header("oracle");
      j["field"] = to_json(*ext);
      j["polynomial"] = to_json(f);
      bool all = true;
      if (kind == "stabilizer" || kind == "all") {
        StabReport S = compute_stabilizer(f, c.seed);
        StabReport B = brute_force_stabilizer(f, budget, c.workers);
        bool agree = enumerate_members(S, budget) == B.members;
        j["stabilizer"] = Json{{"solver_order", S.order.value_or(0)}, {"brute_order", B.members.size()}, {"agree", agree}};
        all = all && agree;
      }
      if (kind == "weights" || kind == "all") {
        // kernel route against subspace intersections at every point
        FqSubspace G = graph_subspace(f);
        GraphKernels K(f);
        bool agree = point_weight(G, point_at(0)) == 0;
        for (std::uint64_t i = 1; i < point_count(*ext); ++i) {
          ProjPoint P = point_at(i);
          agree = agree && point_weight(G, P) == K.weight(P.x1);
        }
        j["weights"] = Json{{"points", point_count(*ext)}, {"agree", agree}};
        all = all && agree;
      }
      if (kind == "distance" || kind == "all") {
        RankCode C = build_code(f);
        RankCode generic = code_from_matrices(ext, C.domain_basis, C.generators);
        unsigned fast = min_distance(C, budget);
        unsigned slow = min_distance(generic, budget);
        j["distance"] = Json{{"orbit_route", fast}, {"projective_enumeration", slow}, {"agree", fast == slow}};
        all = all && fast == slow;
      }
      j["agree"] = all;
      emit(j);
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "linset: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "linset: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
