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


#include <random>
#include <set>

#include "doctest.h"
#include "linset/linpoly.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace linset;
using testutil::kind_of;

TEST_SUITE("linpoly") {

TEST_CASE("evaluation") {
  auto e = testutil::ext(3, 2, 3);
  const auto& F = e->field();
  for (Elem x : oracle::elements(F)) {
    CHECK(LinPoly::identity(e).eval(x) == x);
    CHECK(LinPoly::zero(e).eval(x) == kZero);
  }
  Elem g = F.primitive();
  CHECK(LinPoly::monomial(e, kOne, 1).eval(g) == F.mul(g, F.mul(g, g)));

  std::mt19937_64 rng(1);
  for (auto ex : {testutil::ext(2, 6, 2), testutil::ext(2, 6, 4), testutil::ext(3, 4, 3), testutil::ext(5, 2, 5)})
    for (int i = 0; i < 20; ++i) {
      auto f = LinPoly::random(ex, rng);
      CHECK(f.eval_table() == oracle::table(f));
    }
}

TEST_CASE("composition") {
  auto e = testutil::ext(2, 4, 2);
  std::mt19937_64 rng(2);
  auto x = LinPoly::identity(e);
  auto xq = LinPoly::monomial(e, kOne, 1);
  CHECK(xq.compose(xq) == LinPoly::monomial(e, kOne, 2));
  CHECK(LinPoly::monomial(e, kOne, 3).compose(xq) == x);
  for (int i = 0; i < 50; ++i) {
    auto f = LinPoly::random(e, rng), g = LinPoly::random(e, rng);
    CHECK(f.compose(x) == f);
    CHECK(x.compose(f) == f);
    auto fg = f.compose(g);
    auto tf = oracle::table(f), tg = oracle::table(g), tfg = oracle::table(fg);
    for (std::uint64_t y = 0; y < 16; ++y) CHECK(tfg[y] == tf[tg[y].value]);
  }

  auto e3 = testutil::ext(3, 4, 3);
  for (int i = 0; i < 100; ++i) {
    auto f = LinPoly::random(e3, rng), g = LinPoly::random(e3, rng), h = LinPoly::random(e3, rng);
    CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    CHECK(f.compose(g + h) == f.compose(g) + f.compose(h));
    CHECK((f + g).compose(h) == f.compose(h) + g.compose(h));
  }
  CHECK(kind_of([&] { x.compose(LinPoly::identity(e3)); }) == ErrorKind::ContextMismatch);
}

TEST_CASE("composition laws hold exhaustively over F_8") {
  auto e = testutil::ext(2, 3, 2);
  std::vector<LinPoly> all;
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c) all.emplace_back(e, std::vector<Elem>{Elem{a}, Elem{b}, Elem{c}});
  std::vector<std::vector<Elem>> tables;
  for (const auto& f : all) tables.push_back(oracle::table(f));
  const auto& F = e->field();
  bool pointwise = true, distrib = true;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto fg = all[i].compose(all[j]);
      auto sum = all[i] + all[j];
      for (std::uint32_t y = 0; y < 8; ++y) {
        pointwise = pointwise && fg.eval(Elem{y}) == tables[i][tables[j][y].value];
        distrib = distrib && sum.eval(Elem{y}) == F.add(tables[i][y], tables[j][y]);
      }
    }
  CHECK(pointwise);
  CHECK(distrib);
  std::mt19937_64 rng(9);
  bool assoc = true, left = true;
  for (int r = 0; r < 20000; ++r) {
    const auto &f = all[rng() % all.size()], &g = all[rng() % all.size()], &h = all[rng() % all.size()];
    assoc = assoc && f.compose(g).compose(h) == f.compose(g.compose(h));
    left = left && f.compose(g + h) == f.compose(g) + f.compose(h);
  }
  CHECK(assoc);
  CHECK(left);
}

TEST_CASE("matrix, rank and kernel") {
  std::mt19937_64 rng(4);
  for (auto e : {testutil::ext(2, 4, 2), testutil::ext(3, 4, 3), testutil::ext(2, 6, 4), testutil::ext(2, 6, 2)}) {
    const unsigned n = e->n();
    CHECK(LinPoly::identity(e).matrix() == Matrix::identity(n));
    for (int i = 0; i < 30; ++i) {
      auto f = LinPoly::random(e, rng, i % 3 == 0 ? std::optional<unsigned>(1) : std::nullopt);
      auto g = LinPoly::random(e, rng);
      unsigned r = oracle::rank_from_image(*e, oracle::table(f));
      CHECK(f.rank() == r);
      CHECK(f.rank() + f.kernel().dim() == n);
      CHECK(f.image().dim() == f.rank());
      if (auto d = f.q_degree(); d && !f.is_zero()) CHECK(f.kernel().dim() <= *d);
      CHECK(f.compose(g).matrix() == multiply(e->scalars(), f.matrix(), g.matrix()));
      auto b = testutil::random_basis(*e, rng);
      CHECK(rank(e->scalars(), f.matrix(b)) == r);
      // kernel members are exactly the zeros
      std::uint64_t zeros = 0;
      for (Elem y : oracle::elements(e->field())) zeros += oracle::eval(f, y) == kZero;
      std::uint64_t ksize = 1;
      for (std::size_t j = 0; j < f.kernel().dim(); ++j) ksize *= e->q();
      CHECK(zeros == ksize);
      f.kernel().for_each_vector([&](const AmbientVec& v) { CHECK(f.eval(v[0]) == kZero); });
    }
  }
  auto e = testutil::ext(2, 4, 2);
  auto tr = LinPoly::trace(e, 2);
  CHECK(tr.rank() == 2);
  CHECK(oracle::rank_from_image(*e, oracle::table(tr)) == 2);
  CHECK(tr.kernel().dim() == 2);
  CHECK(LinPoly::identity(e).kernel().dim() == 0);
  auto fix = LinPoly::monomial(e, kOne, 1) - LinPoly::identity(e);
  CHECK(fix.kernel().dim() == 1);
  CHECK(fix.kernel().contains(std::vector<Elem>{kOne}));
  auto e3 = testutil::ext(3, 6, 3);
  for (unsigned t : {1u, 2u, 3u}) CHECK(LinPoly::trace(e3, t).kernel().dim() == 6 - t);
  CHECK(kind_of([&] { tr.matrix(std::vector<Elem>{kOne, kOne, kOne, kOne}); }) == ErrorKind::DependentBasis);
  CHECK(kind_of([&] { LinPoly::trace(e, 3); }) == ErrorKind::NonDivisorDegrees);
}

TEST_CASE("interpolation") {
  std::mt19937_64 rng(6);
  for (auto e : {testutil::ext(2, 5, 2), testutil::ext(3, 4, 3), testutil::ext(3, 4, 9)}) {
    auto b = testutil::random_basis(*e, rng);
    std::vector<std::pair<Elem, Elem>> id, zero;
    for (Elem y : b) {
      id.emplace_back(y, y);
      zero.emplace_back(y, kZero);
    }
    CHECK(interpolate(e, id) == LinPoly::identity(e));
    CHECK(interpolate(e, zero).is_zero());
    for (int i = 0; i < 30; ++i) {
      auto f = LinPoly::random(e, rng);
      std::vector<std::pair<Elem, Elem>> pts;
      for (Elem y : b) pts.emplace_back(y, oracle::eval(f, y));
      CHECK(interpolate(e, pts) == f);
      if (auto inv = invert(f)) {
        CHECK(f.rank() == e->n());
        CHECK(f.compose(*inv) == LinPoly::identity(e));
      } else {
        CHECK(f.rank() < e->n());
      }
    }
    auto dep = id;
    dep[1].first = dep[0].first;
    CHECK(kind_of([&] { interpolate(e, dep); }) == ErrorKind::DependentSamplePoints);
    dep.pop_back();
    CHECK(kind_of([&] { interpolate(e, dep); }) == ErrorKind::DependentSamplePoints);
  }
}

TEST_CASE("sublinearity") {
  auto e = testutil::ext(2, 4, 2);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) CHECK(is_sublinear(LinPoly::random(e, rng), 1));
  CHECK(is_sublinear(LinPoly::trace(e, 2), 2));
  CHECK_FALSE(is_sublinear(LinPoly::monomial(e, kOne, 1), 2));
  CHECK(kind_of([&] { is_sublinear(LinPoly::identity(e), 3); }) == ErrorKind::NonDivisor);

  // pointwise definition over F_{q^s}
  auto e6 = testutil::ext(2, 6, 2);
  for (int i = 0; i < 40; ++i) {
    auto f = LinPoly::random(e6, rng);
    if (i % 2) f = f - LinPoly::monomial(e6, f.coeff(1), 1) - LinPoly::monomial(e6, f.coeff(5), 5);
    for (unsigned s : {2u, 3u}) {
      bool linear = true;
      for (Elem lam : e6->subfield_elements(s))
        for (Elem y : oracle::elements(e6->field()))
          linear = linear && oracle::eval(f, e6->field().mul(lam, y)) == e6->field().mul(lam, oracle::eval(f, y));
      CHECK(is_sublinear(f, s) == linear);
    }
  }
}

TEST_CASE("parsing and printing") {
  auto e = testutil::ext(2, 4, 2);
  auto f = parse_linpoly(e, "3*x^q2 + x");
  CHECK(f.coeffs() == std::vector<Elem>{kOne, kZero, Elem{3}, kZero});
  CHECK(f.to_string() == "3*x^q2 + x");
  CHECK(parse_linpoly(e, "1,0,3,0") == f);
  CHECK(parse_linpoly(e, f.literal()) == f);
  CHECK(parse_linpoly(e, "x^q") == LinPoly::monomial(e, kOne, 1));
  CHECK(parse_linpoly(e, "0").is_zero());
  CHECK_FALSE(LinPoly::zero(e).q_degree().has_value());
  CHECK(f.q_degree() == 2u);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    auto g = LinPoly::random(e, rng);
    CHECK(parse_linpoly(e, g.to_string()) == g);
    CHECK(parse_linpoly(e, g.literal()) == g);
  }
  for (const char* bad : {"", "x^", "y", "3*", "1,2,3", "1,2,3,4,5", "16*x", "x^q9x", "1,,2,3"})
    CHECK_MESSAGE(kind_of([&] { parse_linpoly(e, bad); }) == ErrorKind::ParseError, bad);
  CHECK(kind_of([&] { LinPoly(e, std::vector<Elem>{kOne}); }) == ErrorKind::ShapeMismatch);
}

}  // TEST_SUITE
