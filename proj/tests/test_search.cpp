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


#include <set>

#include "doctest.h"
#include "linset/families.hpp"
#include "linset/search.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace linset;
using testutil::kind_of;

TEST_SUITE("search") {

TEST_CASE("canonical forms") {
  auto e = testutil::ext(2, 4, 2);
  const auto& F = e->field();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    auto f = LinPoly::random(e, rng);
    if (f.is_zero()) continue;
    auto c = canonical_form(f);
    Elem a = testutil::nonzero(F, rng), b = testutil::nonzero(F, rng);
    CHECK(canonical_form(f.scale(a).scale_input(b)) == c);
    // lowest nonzero coefficient is one
    for (Elem x : c.coeffs())
      if (x != kZero) {
        CHECK(x == kOne);
        break;
      }
    // minimality against the whole orbit
    for (Elem al : oracle::elements(F))
      for (Elem be : oracle::elements(F)) {
        if (al == kZero || be == kZero) continue;
        auto g = f.scale(al).scale_input(be);
        Elem low = kZero;
        for (Elem x : g.coeffs())
          if (x != kZero) {
            low = x;
            break;
          }
        if (low == kOne) CHECK_FALSE(g.coeffs() < c.coeffs());
      }
  }
}

TEST_CASE("exhaustive scattered search finds x^q") {
  auto e = testutil::ext(2, 4, 2);
  SearchOptions o;
  o.max_qdeg = 1;
  o.predicate = Predicate::Scattered;
  auto r = search(e, o);
  CHECK(r.exhaustive);
  CHECK(r.space == 256);
  CHECK(r.examined == 256);
  auto xq = canonical_form(LinPoly::monomial(e, kOne, 1));
  bool found = false;
  std::uint64_t orbit_total = 0;
  for (const auto& h : r.hits) {
    found = found || h.canonical == xq;
    orbit_total += h.orbit_hits;
    CHECK(oracle::scatteredness(h.first, 2).scattered);
    CHECK(canonical_form(h.first) == h.canonical);
  }
  CHECK(found);
  CHECK(orbit_total == r.matches);
  // brute count of scattered candidates a x + b x^q
  std::uint64_t expect = 0;
  for (Elem a : oracle::elements(e->field()))
    for (Elem b : oracle::elements(e->field())) expect += oracle::scatteredness(LinPoly(e, {a, b, kZero, kZero}), 2).scattered;
  CHECK(r.matches == expect);
  SearchOptions zero = o;
  zero.max_qdeg = 0;
  CHECK(search(e, zero).hits.empty());
}

TEST_CASE("nonfield stabilizer search finds ell twists") {
  auto e = testutil::ext(2, 4, 2);
  SearchOptions o;
  o.max_qdeg = 2;
  o.predicate = Predicate::NonfieldStab;
  auto r = search(e, o);
  auto tw = canonical_form(make_ell_twist(e, {kOne, kZero}, 2).f);
  bool found = false;
  for (const auto& h : r.hits) found = found || h.canonical == tw;
  CHECK(found);
}

TEST_CASE("determinism and worker independence") {
  auto e = testutil::ext(3, 4, 3);
  SearchOptions o;
  o.max_qdeg = 2;
  o.predicate = Predicate::RPt;
  o.t = 2;
  o.budget = 3000;
  o.seed = 42;
  auto a = search(e, o);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.examined == 3000);
  o.workers = 3;
  auto b = search(e, o);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].canonical == b.hits[i].canonical);
    CHECK(a.hits[i].first_index == b.hits[i].first_index);
    CHECK(a.hits[i].orbit_hits == b.hits[i].orbit_hits);
  }
  for (std::size_t i = 1; i < a.hits.size(); ++i) CHECK(a.hits[i - 1].canonical.coeffs() < a.hits[i].canonical.coeffs());
  for (const auto& h : a.hits) CHECK(satisfies(h.first, Predicate::RPt, 2));
}

TEST_CASE("predicates") {
  for (auto p : {Predicate::Scattered, Predicate::LPt, Predicate::RPt, Predicate::NonfieldStab})
    CHECK(parse_predicate(to_string(p)) == p);
  CHECK(kind_of([] { parse_predicate("x"); }) == ErrorKind::ParseError);
  auto e = testutil::ext(2, 4, 2);
  CHECK(satisfies(LinPoly::trace(e, 2), Predicate::LPt, 2));
  CHECK(satisfies(LinPoly::trace(e, 2), Predicate::NonfieldStab, 0));
  CHECK_FALSE(satisfies(LinPoly::monomial(e, kOne, 1), Predicate::NonfieldStab, 0));
}

}  // TEST_SUITE
