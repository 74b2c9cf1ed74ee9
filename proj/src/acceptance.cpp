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


#include "linset/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "linset/families.hpp"

namespace linset {

const char* to_string(Tier t) { return t == Tier::Fast ? "fast" : "slow"; }

Tier parse_tier(const std::string& name) {
  if (name == "fast") return Tier::Fast;
  if (name == "slow") return Tier::Slow;
  throw Error(ErrorKind::ParseError, "tier must be 'fast' or 'slow', got '" + name + "'");
}

namespace {

ExtPtr ext_of(std::uint32_t p, unsigned k) { return Extension::make(FieldCtx::make(p, k), p); }

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

FamilyInstance family(const ExtPtr& ext, Family fam, std::map<std::string, std::string> params = {}) {
  return make_polynomial(ext, FamilySpec{fam, std::move(params)});
}

std::uint64_t order_of(const StabReport& s) { return s.order.value_or(0); }

std::string set_summary(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + str(v);
  return out + "}";
}

struct Recorder {
  CriterionResult& r;
  void check(std::string name, std::string expected, std::string computed, bool ok) {
    r.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  }
  void note(std::string s) { r.notes.push_back(std::move(s)); }
};

// One catalog row: a family of instances all expected to share |S_f| and the field verdict.
struct CatalogRow {
  std::string label;
  std::vector<LinPoly> instances;
  std::uint64_t order;
  std::optional<bool> field;
  std::function<bool(const LinPoly&, const StabReport&)> extra;  // set-level membership check
  std::string extra_name;
};

std::vector<CatalogRow> catalog_rows() {
  std::vector<CatalogRow> rows;
  {
    auto e = ext_of(2, 5);
    rows.push_back({"1a q=2 n=5 x^q", {family(e, Family::Monomial, {{"s", "1"}}).f}, 32, true, nullptr, ""});
  }
  for (unsigned n : {5u, 6u}) {
    auto e = ext_of(2, n);
    CatalogRow row{"1b q=2 n=" + str(std::uint64_t{n}) + " LP, every delta != 0", {}, n % 2 ? 2u : 4u, std::nullopt, nullptr, ""};
    for (std::uint64_t v = 1; v < e->order(); ++v) row.instances.push_back(family(e, Family::Lp, {{"delta", str(v)}}).f);
    rows.push_back(std::move(row));
  }
  {
    auto e = ext_of(3, 4);
    CatalogRow row{"1c q=3 n=4 half-gap s=1, every delta with f scattered", {}, 9, std::nullopt, nullptr, ""};
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      auto inst = family(e, Family::HalfGap, {{"delta", str(v)}});
      if (inst.all_hold()) row.instances.push_back(inst.f);
    }
    rows.push_back(std::move(row));
  }
  {
    auto e = ext_of(5, 6);
    rows.push_back({"1d q=5 n=6 hexanomial delta=2", {family(e, Family::CsmzHexa, {{"delta", "2"}}).f}, 25, std::nullopt, nullptr, ""});
  }
  for (unsigned n : {4u, 6u}) {
    auto e = ext_of(2, n);
    rows.push_back({"1e q=2 n=" + str(std::uint64_t{n}) + " Tr_{q^n/q^2}", {family(e, Family::Trace, {{"t", "2"}}).f}, 256, false, nullptr, ""});
  }
  {
    auto e = ext_of(2, 6);
    CatalogRow row{"1f q=2 n=6 x^q + eta x^{q^3}, every eta with N_{q^6/q^2}(eta) != -1", {}, 4, true, nullptr,
                   "S_f = {diag(a, a^q) : a in F_4}"};
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      auto inst = family(e, Family::EtaBinomial, {{"t", "2"}, {"eta", str(v)}});
      if (inst.all_hold()) row.instances.push_back(inst.f);
    }
    row.extra = [e](const LinPoly&, const StabReport& S) {
      std::vector<Mat2> want;
      for (Elem a : e->subfield_elements(2)) want.push_back({a, kZero, kZero, e->frob(a, 1)});
      std::sort(want.begin(), want.end(), [](const Mat2& x, const Mat2& y) { return x.entries() < y.entries(); });
      return enumerate_members(S) == want;
    };
    rows.push_back(std::move(row));
  }
  {
    auto e = ext_of(2, 6);
    CatalogRow row{"1g q=2 n=6 t=3 x^q + eta x^{q^4}, every eta with eta^{q^3+1} = 1", {}, 64, false, nullptr, ""};
    const FieldCtx& fc = e->field();
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      Elem eta{static_cast<std::uint32_t>(v)};
      if (fc.pow(eta, e->q_power(3) + 1) == kOne) row.instances.push_back(family(e, Family::EtaBinomial, {{"t", "3"}, {"eta", str(v)}}).f);
    }
    rows.push_back(std::move(row));
  }
  {
    auto e = ext_of(2, 6);
    CatalogRow row{"1h q=2 n=6 x^q + delta x^{q^5}, every delta with N_{q^n/q}(delta) = 1", {}, 4, true, nullptr, ""};
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      auto inst = family(e, Family::DeltaHigh, {{"delta", str(v)}});
      if (inst.all_hold()) row.instances.push_back(inst.f);
    }
    rows.push_back(std::move(row));
  }
  {
    auto e = ext_of(2, 5);
    CatalogRow row{"1i q=2 n=5 x^q + delta x^{q^2}, every delta != 0", {}, 2, std::nullopt, nullptr, "S_f = {a I : a in F_q}"};
    for (std::uint64_t v = 1; v < e->order(); ++v) row.instances.push_back(family(e, Family::DeltaLow, {{"delta", str(v)}}).f);
    row.extra = [e](const LinPoly&, const StabReport& S) {
      std::vector<Mat2> want;
      for (Elem a : e->scalars().elements()) want.push_back({a, kZero, kZero, a});
      return enumerate_members(S) == want;
    };
    rows.push_back(std::move(row));
  }
  return rows;
}

// Facts shared by the pool-wide criteria.
struct Facts {
  LinPoly f;
  std::string origin;
  WeightSpectrum spec;
  bool degenerate = false;
  unsigned d = 0;
  bool mrd = false;
  std::vector<Scatteredness> partial{};
  std::optional<bool> right_field{};  // filled when d > n/2
};

Facts facts_for(const LinPoly& f, std::string origin, std::uint64_t seed) {
  Facts x{f, std::move(origin), weight_spectrum(f)};
  RankCode C = build_code(f);
  x.degenerate = C.degenerate;
  x.d = min_distance(C);
  x.mrd = singleton_check(C, x.d).is_mrd;
  for (unsigned t : proper_divisors(f.n())) x.partial.push_back(scatteredness(f, t));
  if (2 * x.d > f.n()) x.right_field = idealizer(C, Side::Right, seed).is_field;
  return x;
}

std::vector<LinPoly> q3_random_pool(std::uint64_t seed) {
  std::vector<LinPoly> out;
  for (unsigned n : {4u, 5u, 6u}) {
    auto e = ext_of(3, n);
    std::mt19937_64 rng(seed ^ (0x3000 + n));
    for (int i = 0; i < 200; ++i)
      out.push_back(LinPoly::random(e, rng, i < 100 ? std::optional<unsigned>(2) : std::nullopt));
  }
  return out;
}

// Exhaustive q-degree <= 2 polynomials over F_{2^n}: f = c0 x + c1 x^q + c2 x^{q^2}.
LinPoly q2_candidate(const ExtPtr& e, std::uint64_t idx) {
  const std::uint64_t Q = e->order();
  std::vector<Elem> c(e->n(), kZero);
  for (unsigned j = 0; j < 3; ++j, idx /= Q) c[j] = Elem{static_cast<std::uint32_t>(idx % Q)};
  return LinPoly(e, std::move(c));
}

class Context {
 public:
  Context(std::uint64_t seed, unsigned workers) : seed(seed), workers(std::max(1u, workers)) {}

  const std::vector<CatalogRow>& catalog() {
    if (!catalog_) catalog_ = catalog_rows();
    return *catalog_;
  }
  const std::vector<LinPoly>& q3_pool() {
    if (!q3_) q3_ = q3_random_pool(seed);
    return *q3_;
  }
  // Catalog instances, the random q=3 pool and the polynomials of criteria 8-11.
  const std::vector<Facts>& facts() {
    if (!facts_) {
      facts_.emplace();
      for (const auto& row : catalog())
        for (const auto& f : row.instances) facts_->push_back(facts_for(f, row.label, seed));
      for (const auto& f : q3_pool()) facts_->push_back(facts_for(f, "q=3 random pool", seed));
      for (const auto& [f, origin] : extra_polys()) facts_->push_back(facts_for(f, origin, seed));
    }
    return *facts_;
  }

  std::vector<std::pair<LinPoly, std::string>> extra_polys() {
    std::vector<std::pair<LinPoly, std::string>> out;
    for (std::uint32_t p : {2u, 3u}) {
      auto e = ext_of(p, 4);
      for (Elem c0 : e->subfield_elements(2))
        for (Elem c1 : e->subfield_elements(2)) out.emplace_back(make_ell_twist(e, {c0, c1}, 2).f, "l-twist");
    }
    for (std::uint32_t p : {2u, 3u}) {
      auto e = ext_of(p, 4);
      std::mt19937_64 rng(seed ^ (0x9000 + p));
      for (int i = 0; i < 10; ++i) {
        auto [T, S] = random_complementary(e, rng);
        out.emplace_back(projection_polynomial(T, S), "projection");
      }
    }
    out.emplace_back(LinPoly::monomial(ext_of(2, 4), kOne, 1), "restricted code x^q");
    out.emplace_back(LinPoly::monomial(ext_of(2, 6), kOne, 1), "restricted code x^q");
    return out;
  }

  static std::pair<FqSubspace, FqSubspace> random_complementary(const ExtPtr& e, std::mt19937_64& rng) {
    const unsigned n = e->n();
    const unsigned k = 1 + static_cast<unsigned>(rng() % (n - 1));
    auto grow = [&](FqSubspace base, unsigned target, const FqSubspace* avoid) {
      while (base.dim() < target) {
        Elem v = e->field().random(rng);
        FqSubspace next = base.sum(FqSubspace::span_elements(e, std::vector<Elem>{v}));
        if (next.dim() == base.dim()) continue;
        if (avoid && next.intersect(*avoid).dim() != 0) continue;
        base = std::move(next);
      }
      return base;
    };
    FqSubspace T = grow(FqSubspace(e, 1), k, nullptr);
    FqSubspace S = grow(FqSubspace(e, 1), n - k, &T);
    return {T, S};
  }

  std::uint64_t seed;
  unsigned workers;

 private:
  std::optional<std::vector<CatalogRow>> catalog_;
  std::optional<std::vector<LinPoly>> q3_;
  std::optional<std::vector<Facts>> facts_;
};

void criterion1(Context& ctx, Recorder& rec) {
  for (const auto& row : ctx.catalog()) {
    auto start = std::chrono::steady_clock::now();
    std::set<std::uint64_t> orders;
    std::set<bool> fields;
    bool extra_ok = true;
    for (const auto& f : row.instances) {
      StabReport S = compute_stabilizer(f, ctx.seed);
      orders.insert(order_of(S));
      fields.insert(S.is_field);
      if (row.extra && !row.extra(f, S)) extra_ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool nonempty = !row.instances.empty();
    std::string expected = "|S_f| = " + str(row.order);
    std::string computed = "|S_f| in " + set_summary(orders);
    bool ok = nonempty && orders == std::set<std::uint64_t>{row.order};
    if (row.field) {
      expected += *row.field ? ", field" : ", not a field";
      computed += fields.size() == 1 ? (*fields.begin() ? ", field" : ", not a field") : ", mixed verdicts";
      ok = ok && fields == std::set<bool>{*row.field};
    }
    if (row.extra) {
      expected += ", " + row.extra_name;
      computed += extra_ok ? ", member sets match" : ", member sets differ";
      ok = ok && extra_ok;
    }
    computed += " over " + str(std::uint64_t{row.instances.size()}) + " instance(s)";
    ok = ok && secs < 10.0;
    rec.check(row.label, expected, computed, ok);
  }
  {
    auto e = ext_of(3, 4);
    std::set<std::uint64_t> other;
    std::uint64_t count = 0;
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      auto inst = family(e, Family::HalfGap, {{"delta", str(v)}});
      if (inst.all_hold()) continue;
      ++count;
      other.insert(order_of(compute_stabilizer(inst.f, ctx.seed)));
    }
    rec.note("half-gap q=3 n=4: " + str(count) + " non-scattered delta give |S_f| in " + set_summary(other));
  }
}

void criterion2(Context& ctx, Recorder& rec) {
  auto compare = [&](const LinPoly& f) {
    StabReport fast = compute_stabilizer(f, ctx.seed);
    StabReport slow = brute_force_stabilizer(f, std::uint64_t{1} << 24, ctx.workers);
    return enumerate_members(fast) == slow.members;
  };
  for (unsigned n : {3u, 4u}) {
    auto e = ext_of(2, n);
    std::mt19937_64 rng(ctx.seed ^ (0x2000 + n));
    unsigned agree = 0;
    for (int i = 0; i < 20; ++i) agree += compare(LinPoly::random(e, rng));
    rec.check("q=2 n=" + str(std::uint64_t{n}) + " seeded random f", "20 of 20 agree", str(std::uint64_t{agree}) + " of 20 agree", agree == 20);
  }
  for (const auto& row : ctx.catalog()) {
    const auto& f = row.instances.front();
    const std::uint64_t Q = f.ext()->order();
    if (Q > 64) continue;
    bool ok = compare(f);
    rec.check(row.label + " (first instance)", "brute force = solver", ok ? "equal" : "different", ok);
  }
}

void criterion3(Context& ctx, Recorder& rec) {
  std::uint64_t tested = 0, low = 0, bad = 0;
  std::vector<std::string> counterexamples;
  for (unsigned n : {4u, 5u, 6u}) {
    auto e = ext_of(2, n);
    const std::uint64_t total = e->order() * e->order() * e->order();
    std::vector<std::uint64_t> lows(ctx.workers, 0), bads(ctx.workers, 0);
    std::vector<std::vector<std::string>> ex(ctx.workers);
    auto run = [&](unsigned w) {
      for (std::uint64_t i = w; i < total; i += ctx.workers) {
        LinPoly f = q2_candidate(e, i);
        if (!is_low_weight(f)) continue;
        ++lows[w];
        if (!compute_stabilizer(f, ctx.seed).is_field) {
          ++bads[w];
          if (ex[w].size() < 3) ex[w].push_back(f.literal());
        }
      }
    };
    if (ctx.workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < ctx.workers; ++w) pool.emplace_back(run, w);
      for (auto& th : pool) th.join();
    }
    std::uint64_t l = std::accumulate(lows.begin(), lows.end(), std::uint64_t{0});
    std::uint64_t b = std::accumulate(bads.begin(), bads.end(), std::uint64_t{0});
    for (auto& v : ex) counterexamples.insert(counterexamples.end(), v.begin(), v.end());
    rec.check("q=2 n=" + str(std::uint64_t{n}) + " exhaustive q-degree <= 2 (" + str(total) + " f)", "0 counterexamples",
              str(b) + " counterexamples among " + str(l) + " low-weight f", b == 0 && l > 0);
    tested += total;
    low += l;
    bad += b;
  }
  std::map<unsigned, std::pair<std::uint64_t, std::uint64_t>> per_n;
  for (const auto& f : ctx.q3_pool()) {
    auto& [l, b] = per_n[f.n()];
    if (!is_low_weight(f)) continue;
    ++l;
    if (!compute_stabilizer(f, ctx.seed).is_field) {
      ++b;
      if (counterexamples.size() < 6) counterexamples.push_back(f.literal());
    }
  }
  for (const auto& [n, lb] : per_n) {
    rec.check("q=3 n=" + str(std::uint64_t{n}) + " 200 seeded random f", "0 counterexamples",
              str(lb.second) + " counterexamples among " + str(lb.first) + " low-weight f", lb.second == 0 && lb.first > 0);
    tested += 200;
    low += lb.first;
    bad += lb.second;
  }
  rec.note("tested " + str(tested) + " polynomials, " + str(low) + " low weight, " + str(bad) + " counterexamples");
  for (const auto& c : counterexamples) rec.note("counterexample: " + c);
}

void criterion4(Context& ctx, Recorder& rec) {
  for (const auto& row : ctx.catalog()) {
    std::uint64_t ok = 0;
    std::set<std::uint64_t> dims;
    for (const auto& f : row.instances) {
      StabReport S = compute_stabilizer(f, ctx.seed);
      IdealizerReport R = idealizer(build_code(f), Side::Right, ctx.seed);
      PsiCheck psi = verify_psi(f, S, R);
      ok += psi.ok() && psi.same_verdict;
      dims.insert(psi.idealizer_dim);
    }
    rec.check(row.label, "dim R(C_f) = dim S_f, psi products and verdicts agree on all",
              str(ok) + " of " + str(std::uint64_t{row.instances.size()}) + " agree, dim R in " + set_summary(dims),
              ok == row.instances.size() && ok > 0);
  }
}

void criterion5(Context& ctx, Recorder& rec) {
  std::uint64_t considered = 0, scattered = 0, mismatch = 0, bad_d = 0;
  for (const auto& x : ctx.facts()) {
    if (x.degenerate) continue;
    ++considered;
    bool sc = x.spec.max_weight <= 1;
    scattered += sc;
    if (sc != x.mrd) ++mismatch;
    if (sc && x.d + 1 != x.f.n()) ++bad_d;
  }
  rec.check("is_MRD <=> scattered", "0 mismatches", str(mismatch) + " mismatches over " + str(considered) + " f", mismatch == 0 && considered > 0);
  rec.check("scattered => d = n - 1", "0 violations", str(bad_d) + " violations over " + str(scattered) + " scattered f", bad_d == 0 && scattered > 0);
}

void criterion6(Context& ctx, Recorder& rec) {
  std::uint64_t high = 0, nonfield = 0, total = 0, bad_d = 0;
  for (const auto& x : ctx.facts()) {
    if (x.degenerate) continue;
    ++total;
    if (x.d != x.f.n() - x.spec.max_weight) ++bad_d;
    if (x.right_field) {
      ++high;
      if (!*x.right_field) ++nonfield;
    }
  }
  rec.check("d > n/2 => R(C_f) field", "0 violations", str(nonfield) + " violations over " + str(high) + " f with d > n/2", nonfield == 0 && high > 0);
  rec.check("d = n - max_weight", "0 violations", str(bad_d) + " violations over " + str(total) + " f", bad_d == 0 && total > 0);
}

void criterion7(Context& ctx, Recorder& rec) {
  std::uint64_t r = 0, rbad = 0, l = 0, lbad = 0;
  for (const auto& x : ctx.facts()) {
    const unsigned n = x.f.n();
    for (const auto& s : x.partial) {
      if (s.R_pt) {
        ++r;
        if (2 * x.spec.max_weight > n) ++rbad;
      }
      if (s.L_pt) {
        ++l;
        if (x.spec.max_weight > s.t) ++lbad;
      }
    }
  }
  rec.check("R-q^t-p.s. => max weight <= n/2", "0 violations", str(rbad) + " violations over " + str(r) + " (f, t)", rbad == 0 && r > 0);
  rec.check("L-q^t-p.s. => max weight <= t", "0 violations", str(lbad) + " violations over " + str(l) + " (f, t)", lbad == 0 && l > 0);
}

void criterion8(Context& ctx, Recorder& rec) {
  for (std::uint32_t p : {2u, 3u}) {
    auto e = ext_of(p, 4);
    const FieldCtx& fc = e->field();
    std::uint64_t total = 0, agree = 0, lpt = 0, witness_ok = 0;
    for (Elem c0 : e->subfield_elements(2))
      for (Elem c1 : e->subfield_elements(2)) {
        ++total;
        EllTwist tw = make_ell_twist(e, {c0, c1}, 2);
        const bool L = scatteredness(tw.f, 2).L_pt;
        agree += tw.criterion == L;
        if (!L) continue;
        ++lpt;
        StabReport S = compute_stabilizer(tw.f, ctx.seed);
        const Mat2 N{kZero, tw.tau, kZero, kZero};
        if (!S.is_field && in_stabilizer(tw.f, N) && fc.add(e->frob(tw.tau, 2), tw.tau) == kZero) ++witness_ok;
      }
    const std::string q = "q=" + str(std::uint64_t{p});
    rec.check(q + " criterion <=> L-q^2-p.s.", "agreement on all " + str(total) + " l", str(agree) + " of " + str(total) + " agree", agree == total);
    rec.check(q + " L-p.s. instances: S_f non-field containing [[0,tau],[0,0]]", "all " + str(lpt) + " instances",
              str(witness_ok) + " of " + str(lpt), witness_ok == lpt && lpt > 0);
  }
}

void criterion9(Context& ctx, Recorder& rec) {
  for (std::uint32_t p : {2u, 3u}) {
    auto e = ext_of(p, 4);
    const FieldCtx& fc = e->field();
    std::mt19937_64 rng(ctx.seed ^ (0x9000 + p));
    const Mat2 W{kOne, fc.neg(kOne), kZero, kZero};
    std::uint64_t member = 0, nonfield = 0, identities = 0;
    for (int i = 0; i < 10; ++i) {
      auto [T, S] = Context::random_complementary(e, rng);
      Projection pr = make_projection(T, S);
      identities += pr.all();
      member += in_stabilizer(pr.p, W);
      nonfield += !compute_stabilizer(pr.p, ctx.seed).is_field;
    }
    const std::string q = "q=" + str(std::uint64_t{p}) + " n=4, 10 random (T,S)";
    rec.check(q + ": [[1,-1],[0,0]] in S_p", "10 of 10", str(member) + " of 10", member == 10);
    rec.check(q + ": S_p not a field", "10 of 10", str(nonfield) + " of 10", nonfield == 10);
    rec.check(q + ": projection identities", "10 of 10", str(identities) + " of 10", identities == 10);
  }
}

void criterion10(Context& ctx, Recorder& rec) {
  auto e = ext_of(3, 4);
  const unsigned t = 2;
  std::vector<std::pair<Elem, Elem>> cands;
  for (Elem mu : e->subfield_elements(t)) {
    if (mu == kZero) continue;
    for (std::uint64_t v = 1; v < e->order(); ++v) {
      Elem xi{static_cast<std::uint32_t>(v)};
      if (!e->in_subfield(xi, t)) cands.emplace_back(mu, xi);
    }
  }
  std::mt19937_64 rng(ctx.seed ^ 0x10);
  for (std::size_t i = cands.size(); i > 1; --i) std::swap(cands[i - 1], cands[rng() % i]);
  std::optional<CompSubspace> found;
  Elem mu{}, xi{};
  for (const auto& [m, x] : cands) {
    CompSubspace cs = make_comp_subspace(e, m, x, 1, t);
    if (cs.hypotheses()) {
      found = std::move(cs);
      mu = m;
      xi = x;
      break;
    }
  }
  rec.check("seeded scan finds (mu, xi) meeting both norm conditions", "found", found ? "found" : "none", found.has_value());
  if (!found) return;
  rec.note("mu = " + str(std::uint64_t{mu.value}) + ", xi = " + str(std::uint64_t{xi.value}));
  const bool r_pt = is_R_pt_subspace(found->U, t);
  rec.check("U is R-q^2-p.s.", "true", str(r_pt), r_pt);
  rec.check("weights at <(1,0)>, <(0,1)>", "(2,2)",
            "(" + str(std::uint64_t{found->weight_10}) + "," + str(std::uint64_t{found->weight_01}) + ")",
            found->weight_10 == 2 && found->weight_01 == 2);
  SubspacePoly sp = subspace_to_poly(found->U);
  const bool g_rpt = scatteredness(sp.g, t).R_pt;
  const bool g_nonfield = !compute_stabilizer(sp.g, ctx.seed).is_field;
  rec.note("g = " + sp.g.to_string());
  rec.check("g = subspace_to_poly(U) is R-q^2-p.s.", "true", str(g_rpt), g_rpt);
  rec.check("S_g not a field", "true", str(g_nonfield), g_nonfield);
}

void criterion11(Context& ctx, Recorder& rec) {
  for (unsigned t : {2u, 3u}) {
    auto e = ext_of(2, 2 * t);
    const auto& sc = e->scalars();
    LinPoly f = LinPoly::monomial(e, kOne, 1);
    RestrictedCode Ct = restrict_code(f, t);
    IdealizerReport Rt = idealizer(Ct.code, Side::Right, ctx.seed);
    LtnqReport lt = ltnq_analysis(f, t, ctx.seed);
    const std::string tag = "x^q q=2 t=" + str(std::uint64_t{t}) + " n=" + str(std::uint64_t{2 * t});
    if (t == 2) {
      rec.check(tag + ": |R(restricted)|", "16 = |L_{2,q}|", str(std::uint64_t{1} << Rt.fq_dimension), Rt.fq_dimension == t * t);
    } else {
      // {alpha x restricted : alpha in F_8} as t x t matrices in subfield coordinates
      const auto& sub = e->subfield_basis(t);
      Matrix sub_rows(0, e->n());
      for (Elem d : sub) sub_rows.append_row(e->coords(d));
      const RowSpace subspace = RowSpace::span(sc, e->n(), sub_rows);
      Matrix want(0, std::size_t{t} * t);
      for (Elem alpha : sub) {
        Matrix M(t, t);
        for (unsigned j = 0; j < t; ++j) {
          auto c = subspace.coordinates_of_member(e->coords(e->field().mul(alpha, sub[j])));
          for (unsigned i = 0; i < t; ++i) M(i, j) = c[i];
        }
        want.append_row(M.data());
      }
      Matrix have(0, std::size_t{t} * t);
      for (const Matrix& Z : Rt.basis) have.append_row(Z.data());
      const bool same = RowSpace::span(sc, t * t, want) == RowSpace::span(sc, t * t, have);
      rec.check(tag + ": R(restricted) = {alpha x| : alpha in F_8}", "equal, order 8",
                std::string(same ? "equal" : "different") + ", order " + str(std::uint64_t{1} << Rt.fq_dimension),
                same && Rt.fq_dimension == t);
    }
    rec.check(tag + ": inclusion into R(restricted)", "true", str(lt.inclusion_holds), lt.inclusion_holds);
    rec.check(tag + ": |R(restricted)| >= |L_{t,n,q} ∩ R(C_f)|", "true",
              str(std::uint64_t{1} << lt.restricted_right_dim) + " >= " + str(std::uint64_t{1} << lt.intersection_dim), lt.inequality_holds);
    rec.check(tag + ": intersection = {alpha x : alpha in F_{q^t}}", "dim " + str(std::uint64_t{t}),
              "dim " + str(std::uint64_t{lt.intersection_dim}), lt.intersection_dim == t);
    const bool params = Ct.parameters_ok && Ct.d && *Ct.d == t - 1 && Ct.code.fq_dimension() == 2 * e->n() &&
                        Ct.code.codomain_dim == e->n() && Ct.code.domain_dim == t;
    rec.check(tag + ": parameters (n,t,q;t-1)", "(" + str(std::uint64_t{e->n()}) + "," + str(std::uint64_t{t}) + ",2;" + str(std::uint64_t{t - 1}) + ")",
              "(" + str(std::uint64_t{Ct.code.codomain_dim}) + "," + str(std::uint64_t{Ct.code.domain_dim}) + ",2;" +
                  (Ct.d ? str(std::uint64_t{*Ct.d}) : std::string("?")) + "), dim " + str(std::uint64_t{Ct.code.fq_dimension()}),
              params);
  }
}

void criterion12(Context& ctx, Recorder& rec) {
  auto e = ext_of(3, 10);
  auto inst = family(e, Family::Lz3Quad);
  bool norm = false;
  for (const auto& d : inst.diagnostics)
    if (d.condition == "N_{q^n/q^t}(eta) = -1") norm = d.holds;
  rec.note("eta = " + inst.resolved["eta"]);
  rec.check("N_{q^n/q^t}(eta) = -1 and every hypothesis holds", "true", str(norm && inst.all_hold()), norm && inst.all_hold());
  StabReport S = compute_stabilizer(inst.f, ctx.seed);
  rec.check("q=3 n=10 LZ3 quadrinomial |S_f|", "9", str(order_of(S)), order_of(S) == 9);
}

void criterion13(Context& ctx, Recorder& rec) {
  PropertyStats st = run_property_suite(1000, ctx.seed);
  rec.check("weight-sum identity", "1000 of 1000", str(st.weight_sum) + " of " + str(st.cases), st.weight_sum == st.cases);
  rec.check("Blokhuis-Lavrauw bound", "1000 of 1000", str(st.blokhuis_lavrauw) + " of " + str(st.cases), st.blokhuis_lavrauw == st.cases);
  rec.check("Singleton bound", "1000 of 1000", str(st.singleton) + " of " + str(st.cases), st.singleton == st.cases);
  rec.check("transform invariance", "1000 of 1000", str(st.transform) + " of " + str(st.cases), st.transform == st.cases);
  rec.note(str(st.not_a_graph) + " transforms produced NotAGraph and were compared on subspaces");
  for (std::size_t i = 0; i < st.failures.size() && i < 10; ++i) rec.note("failure: " + st.failures[i]);
}

struct Spec {
  int id;
  const char* title;
  Tier tier;
  double limit;
  void (*run)(Context&, Recorder&);
};

const Spec kSpecs[] = {
    {1, "stabilizer catalog", Tier::Fast, 0, criterion1},
    {2, "oracle equivalence", Tier::Fast, 60, criterion2},
    {3, "low weight => field", Tier::Fast, 120, criterion3},
    {4, "psi isomorphism", Tier::Fast, 0, criterion4},
    {5, "MRD <=> scattered", Tier::Fast, 0, criterion5},
    {6, "d > n/2 corollary", Tier::Fast, 0, criterion6},
    {7, "partial scatteredness weights", Tier::Fast, 0, criterion7},
    {8, "l-twist characterization", Tier::Fast, 60, criterion8},
    {9, "projection maps", Tier::Fast, 0, criterion9},
    {10, "complementary weights R-q^t example", Tier::Fast, 30, criterion10},
    {11, "restricted codes", Tier::Fast, 0, criterion11},
    {12, "LZ3 quadrinomial (slow tier)", Tier::Slow, 300, criterion12},
    {13, "property suites", Tier::Fast, 120, criterion13},
};

}  // namespace

PropertyStats run_property_suite(std::uint64_t cases, std::uint64_t seed) {
  struct FieldChoice {
    std::uint32_t p;
    unsigned k;
    std::uint64_t q;
  };
  static const FieldChoice choices[] = {{2, 3, 2}, {2, 4, 2}, {2, 5, 2}, {3, 2, 3}, {3, 3, 3}, {3, 4, 3},
                                        {5, 2, 5}, {2, 6, 2}, {2, 4, 4}, {2, 6, 4}, {3, 4, 9}, {7, 2, 7}};
  std::vector<ExtPtr> exts;
  for (const auto& c : choices) exts.push_back(Extension::make(FieldCtx::make(c.p, c.k), c.q));

  PropertyStats st;
  auto fail = [&](std::uint64_t i, const std::string& what) { st.failures.push_back("case " + str(i) + ": " + what); };
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (i + 1));
    const ExtPtr& e = exts[rng() % exts.size()];
    const FieldCtx& fc = e->field();
    const unsigned n = e->n();
    const std::uint64_t q = e->q();
    ++st.cases;
    LinPoly f = LinPoly::random(e, rng, static_cast<unsigned>(rng() % n));

    auto pow_q = [&](unsigned w) {
      std::uint64_t r = 1;
      for (unsigned j = 0; j < w; ++j) r *= q;
      return r;
    };
    auto sum_ok = [&](const WeightSpectrum& s) {
      std::uint64_t total = 0, points = 0;
      for (const auto& [w, c] : s.counts) {
        total += c * (pow_q(w) - 1);
        points += c;
      }
      return total == pow_q(static_cast<unsigned>(s.rank)) - 1 && points == s.points;
    };
    auto random_subspace = [&](unsigned rank) {
      FqSubspace U(e, 2);
      while (U.dim() < rank) {
        AmbientVec v{fc.random(rng), fc.random(rng)};
        U = U.sum(FqSubspace::span(e, 2, std::vector<AmbientVec>{v}));
      }
      return U;
    };

    // weight-sum identity on the graph and on a random rank-n subspace
    WeightSpectrum sf = weight_spectrum(f);
    FqSubspace Ur = random_subspace(n);
    if (sum_ok(sf) && sum_ok(weight_spectrum(Ur)) && sf.rank == n)
      ++st.weight_sum;
    else
      fail(i, "weight-sum identity");

    // a scattered subspace of PG(1, q^n) has rank at most n
    const unsigned big = n + 1 + static_cast<unsigned>(rng() % n);
    FqSubspace Ub = random_subspace(big);
    if (weight_spectrum(Ub).max_weight >= 2)
      ++st.blokhuis_lavrauw;
    else
      fail(i, "scattered subspace of rank " + str(std::uint64_t{big}) + " > n");

    // Singleton bound for C_f and for a random F_q-linear code of n x n matrices
    {
      RankCode C = build_code(f);
      SingletonCheck s1 = singleton_check(C, min_distance(C));
      std::vector<Matrix> mats;
      const unsigned kdim = 1 + static_cast<unsigned>(rng() % std::min<unsigned>(n * n, q == 2 ? 10 : 5));
      const auto& sc = e->scalars();
      for (unsigned j = 0; j < kdim; ++j) {
        Matrix M(n, n);
        for (unsigned r = 0; r < n; ++r)
          for (unsigned c = 0; c < n; ++c) M(r, c) = sc.random(rng);
        mats.push_back(M);
      }
      RankCode G = code_from_matrices(e, e->basis(), mats);
      bool ok = s1.code_exponent <= s1.bound_exponent;
      if (G.fq_dimension() > 0) {
        SingletonCheck s2 = singleton_check(G, min_distance(G));
        ok = ok && s2.code_exponent <= s2.bound_exponent;
      }
      if (ok)
        ++st.singleton;
      else
        fail(i, "Singleton bound");
    }

    // weight spectrum and partial-scatteredness flags are invariant under A G_f^sigma
    {
      Mat2 A;
      do {
        A = {fc.random(rng), fc.random(rng), fc.random(rng), fc.random(rng)};
      } while (A.det(fc) == kZero);
      const unsigned r = static_cast<unsigned>(rng() % fc.degree());
      auto g = apply_transform(A, r, f);
      bool ok = true;
      if (auto* gp = std::get_if<LinPoly>(&g)) {
        WeightSpectrum sg = weight_spectrum(*gp);
        ok = sg.counts == sf.counts;
        for (unsigned t : proper_divisors(n)) {
          Scatteredness a = scatteredness(f, t), b = scatteredness(*gp, t);
          ok = ok && a.scattered == b.scattered && a.L_pt == b.L_pt && a.R_pt == b.R_pt;
        }
        StabReport Sf = compute_stabilizer(f, seed), Sg = compute_stabilizer(*gp, seed);
        ok = ok && Sf.fq_dimension == Sg.fq_dimension && Sf.is_field == Sg.is_field;
      } else {
        ++st.not_a_graph;
        FqSubspace T = transform_subspace(A, r, graph_subspace(f));
        ok = weight_spectrum(T).counts == sf.counts;
        for (unsigned t : proper_divisors(n))
          ok = ok && is_R_pt_subspace(T, t) == scatteredness(f, t).R_pt;
      }
      if (ok)
        ++st.transform;
      else
        fail(i, "transform invariance for f = " + f.literal());
    }
  }
  return st;
}

std::vector<CriterionResult> run_acceptance(Tier tier, const std::vector<int>& only, std::uint64_t seed, unsigned workers) {
  Context ctx(seed, workers);
  std::vector<CriterionResult> out;
  for (const Spec& s : kSpecs) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.id) == only.end()) continue;
    CriterionResult r;
    r.id = s.id;
    r.title = s.title;
    r.tier = s.tier;
    r.limit_seconds = s.limit;
    if (s.tier == Tier::Slow && tier == Tier::Fast) {
      out.push_back(std::move(r));
      continue;
    }
    r.ran = true;
    Recorder rec{r};
    auto start = std::chrono::steady_clock::now();
    try {
      s.run(ctx, rec);
    } catch (const std::exception& e) {
      rec.check("no exception", "none", e.what(), false);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = !r.checks.empty() && std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.ok; });
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.notes.push_back("exceeded the time limit");
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}});
  return Json{{"id", r.id},
              {"title", r.title},
              {"tier", to_string(r.tier)},
              {"ran", r.ran},
              {"passed", r.passed},
              {"seconds", r.seconds},
              {"limit_seconds", r.limit_seconds > 0 ? Json(r.limit_seconds) : Json(nullptr)},
              {"checks", checks},
              {"notes", r.notes}};
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << std::setw(2) << r.id << "  " << (r.ran ? (r.passed ? "PASS" : "FAIL") : "SKIP") << "  " << r.title;
    if (r.ran) os << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    os << "\n";
    for (const auto& c : r.checks)
      os << "      [" << (c.ok ? "ok" : "!!") << "] " << c.name << "\n"
         << "           expected: " << c.expected << "\n"
         << "           computed: " << c.computed << "\n";
    for (const auto& n : r.notes) os << "      note: " << n << "\n";
  }
  return os.str();
}

}  // namespace linset
