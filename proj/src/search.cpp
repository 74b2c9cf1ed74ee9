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


#include "linset/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "linset/geometry.hpp"
#include "linset/stabilizer.hpp"

namespace linset {

const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::Scattered: return "scattered";
    case Predicate::LPt: return "L_pt";
    case Predicate::RPt: return "R_pt";
    case Predicate::NonfieldStab: return "nonfield_stab";
  }
  return "unknown";
}

Predicate parse_predicate(const std::string& name) {
  for (Predicate p : {Predicate::Scattered, Predicate::LPt, Predicate::RPt, Predicate::NonfieldStab})
    if (name == to_string(p)) return p;
  throw Error(ErrorKind::ParseError, "unknown predicate '" + name + "'");
}

namespace {

std::vector<std::uint32_t> key(const LinPoly& f) {
  std::vector<std::uint32_t> k;
  for (Elem c : f.coeffs()) k.push_back(c.value);
  return k;
}

bool scattered(const LinPoly& f) {
  GraphKernels K(f);
  const std::uint64_t Q = f.ext()->order();
  for (std::uint64_t m = 0; m < Q; ++m)
    if (K.dim(Elem{static_cast<std::uint32_t>(m)}) > 1) return false;
  return true;
}

}  // namespace

LinPoly canonical_form(const LinPoly& f) {
  const auto& ext = f.ext();
  const FieldCtx& fc = ext->field();
  std::optional<LinPoly> best;
  for (std::uint64_t b = 1; b < ext->order(); ++b) {
    LinPoly g = f.scale_input(Elem{static_cast<std::uint32_t>(b)});
    auto lead = std::find_if(g.coeffs().begin(), g.coeffs().end(), [](Elem c) { return c != kZero; });
    if (lead == g.coeffs().end()) return g;
    g = g.scale(fc.inv(*lead));
    if (!best || key(g) < key(*best)) best = std::move(g);
  }
  return best ? *best : f;
}

bool satisfies(const LinPoly& f, Predicate p, unsigned t) {
  switch (p) {
    case Predicate::Scattered: return scattered(f);
    case Predicate::LPt: return scatteredness(f, t).L_pt;
    case Predicate::RPt: return scatteredness(f, t).R_pt;
    case Predicate::NonfieldStab: return !compute_stabilizer(f).is_field;
  }
  return false;
}

SearchResult search(const ExtPtr& ext, const SearchOptions& opts) {
  const unsigned n = ext->n();
  if (opts.budget < 1) throw Error(ErrorKind::BadParameters, "search budget must be at least 1");
  if (opts.max_qdeg >= n) throw Error(ErrorKind::BadParameters, "max_qdeg must be below n");
  if ((opts.predicate == Predicate::LPt || opts.predicate == Predicate::RPt) &&
      (opts.t <= 1 || opts.t >= n || n % opts.t != 0))
    throw Error(ErrorKind::BadDivisor, "L_pt and R_pt need a proper divisor t of n");
  const std::uint64_t Q = ext->order();
  const unsigned len = opts.max_qdeg + 1;

  SearchResult res;
  res.space = 1;
  for (unsigned i = 0; i < len; ++i) res.space = res.space > UINT64_MAX / Q ? UINT64_MAX : res.space * Q;
  res.exhaustive = res.space <= opts.budget;
  res.examined = res.exhaustive ? res.space : opts.budget;

  // candidate i: digits of i in base Q (exhaustive) or the i-th seeded draw
  std::vector<std::vector<Elem>> draws;
  if (!res.exhaustive) {
    std::mt19937_64 rng(opts.seed);
    draws.resize(res.examined);
    for (auto& d : draws) {
      d.resize(len);
      for (auto& c : d) c = ext->field().random(rng);
    }
  }
  auto candidate = [&](std::uint64_t i) {
    std::vector<Elem> c(n, kZero);
    if (res.exhaustive) {
      for (unsigned j = 0; j < len; ++j, i /= Q) c[j] = Elem{static_cast<std::uint32_t>(i % Q)};
    } else {
      std::copy(draws[i].begin(), draws[i].end(), c.begin());
    }
    return LinPoly(ext, std::move(c));
  };

  const unsigned workers = std::max(1u, opts.workers);
  using Found = std::vector<std::pair<std::uint64_t, LinPoly>>;
  std::vector<Found> found(workers);
  auto run = [&](unsigned w) {
    for (std::uint64_t i = w; i < res.examined; i += workers) {
      LinPoly f = candidate(i);
      if (satisfies(f, opts.predicate, opts.t)) found[w].emplace_back(i, std::move(f));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  Found all;
  for (auto& part : found) all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  res.matches = all.size();
  std::map<std::vector<std::uint32_t>, SearchHit> orbits;
  for (auto& [i, f] : all) {
    LinPoly c = canonical_form(f);
    auto k = key(c);
    auto it = orbits.find(k);
    if (it == orbits.end()) it = orbits.emplace(k, SearchHit{c, f, i, 0}).first;
    ++it->second.orbit_hits;
  }
  for (auto& [k, hit] : orbits) res.hits.push_back(std::move(hit));
  return res;
}

}  // namespace linset
