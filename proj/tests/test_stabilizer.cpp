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


#include <algorithm>
#include <numeric>
#include <random>
#include <variant>

#include "doctest.h"
#include "linset/families.hpp"
#include "linset/geometry.hpp"
#include "linset/stabilizer.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace linset;
using testutil::kind_of;

namespace {

std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every A with A G_f ⊆ G_f, by pointwise testing of all q^{4n} matrices.
std::vector<Mat2> pointwise_members(const LinPoly& f) {
  const auto& F = f.ext()->field();
  auto vals = oracle::table(f);
  const std::uint32_t Q = static_cast<std::uint32_t>(F.order());
  std::vector<Mat2> out;
  for (std::uint32_t a = 0; a < Q; ++a)
    for (std::uint32_t b = 0; b < Q; ++b)
      for (std::uint32_t c = 0; c < Q; ++c)
        for (std::uint32_t d = 0; d < Q; ++d) {
          Mat2 A{Elem{a}, Elem{b}, Elem{c}, Elem{d}};
          bool ok = true;
          for (std::uint32_t y = 1; y < Q && ok; ++y) {
            auto [u, v] = A.apply(F, Elem{y}, vals[y]);
            ok = vals[u.value] == v;
          }
          if (ok) out.push_back(A);
        }
  return out;
}

std::vector<Mat2> sorted(std::vector<Mat2> v) {
  std::sort(v.begin(), v.end(), [](const Mat2& x, const Mat2& y) { return x.entries() < y.entries(); });
  return v;
}

}  // namespace

TEST_SUITE("stabilizer") {

TEST_CASE("zero and monomials") {
  for (auto e : {testutil::ext(2, 3, 2), testutil::ext(3, 4, 3), testutil::ext(2, 6, 4)}) {
    auto S0 = compute_stabilizer(LinPoly::zero(e));
    CHECK(S0.fq_dimension == 3 * e->n());
    for (const auto& A : S0.basis) CHECK(A.c == kZero);
    CHECK_FALSE(S0.is_field);
    for (unsigned s = 1; s < e->n(); ++s) {
      if (std::gcd(s, e->n()) != 1) continue;
      auto S = compute_stabilizer(LinPoly::monomial(e, kOne, s));
      CHECK(S.order == power(e->q(), e->n()));
      CHECK(S.is_field);
      CHECK(S.field_degree == e->n());
    }
  }
  auto e = testutil::ext(2, 3, 2);
  CHECK(sorted(enumerate_members(compute_stabilizer(LinPoly::zero(e)))) == sorted(pointwise_members(LinPoly::zero(e))));
}

TEST_CASE("binomial with t' > 2") {
  // x^q + eta x^{q^{t+1}}: S_f = {diag(a, a^q) : a in F_{q^t}}
  auto e = testutil::ext(3, 6, 3);
  const auto& F = e->field();
  int tested = 0;
  for (std::uint32_t v = 2; v < F.order() && tested < 3; v += 11) {
    Elem eta{v};
    if (e->norm(eta, 2) == F.neg(kOne)) continue;
    ++tested;
    auto f = LinPoly::monomial(e, kOne, 1) + LinPoly::monomial(e, eta, 3);
    auto S = compute_stabilizer(f);
    CHECK(S.order == 9u);
    CHECK(S.is_field);
    auto members = sorted(enumerate_members(S));
    std::vector<Mat2> expect;
    for (Elem a : e->subfield_elements(2)) expect.push_back(Mat2{a, kZero, kZero, e->frob(a, 1)});
    CHECK(members == sorted(expect));
  }
  CHECK(tested == 3);
}

TEST_CASE("brute force agrees with the linear system") {
  auto e = testutil::ext(2, 4, 2);
  auto tr = brute_force_stabilizer(LinPoly::trace(e, 2));
  CHECK(tr.order == 256u);
  CHECK(tr.members.size() == 256);
  CHECK_FALSE(tr.is_field);
  auto mono = brute_force_stabilizer(LinPoly::monomial(e, kOne, 1));
  CHECK(mono.members.size() == 16);
  CHECK(mono.is_field);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 6; ++i) {
    auto f = LinPoly::random(e, rng);
    auto brute = brute_force_stabilizer(f, std::uint64_t{1} << 24, 1 + i % 3);
    auto solved = compute_stabilizer(f);
    CHECK(sorted(brute.members) == sorted(enumerate_members(solved)));
    CHECK(brute.fq_dimension == solved.fq_dimension);
    CHECK(brute.is_field == solved.is_field);
  }
  // q = 4 over F_16 and the fully independent pointwise oracle over F_8
  auto e8 = testutil::ext(2, 3, 2);
  for (int i = 0; i < 4; ++i) {
    auto f = LinPoly::random(e8, rng);
    CHECK(sorted(enumerate_members(compute_stabilizer(f))) == sorted(pointwise_members(f)));
  }
  auto e44 = testutil::ext(2, 4, 4);
  for (int i = 0; i < 3; ++i) {
    auto f = LinPoly::random(e44, rng);
    CHECK(sorted(brute_force_stabilizer(f).members) == sorted(enumerate_members(compute_stabilizer(f))));
  }
  CHECK(brute_force_stabilizer(LinPoly::trace(e, 2), std::uint64_t{1} << 24, 4).members == tr.members);
  CHECK(kind_of([] { brute_force_stabilizer(LinPoly::identity(testutil::ext(2, 7, 2))); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("algebra structure") {
  auto e = testutil::ext(2, 7, 2);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    auto f = LinPoly::random(e, rng, 2u);
    if (f.q_degree() != 2u) continue;
    REQUIRE(is_low_weight(f));
    auto S = compute_stabilizer(f);
    auto facts = algebra_report(S);
    CHECK(facts.is_field);
    CHECK(facts.commutative);
    CHECK(facts.field_degree == S.fq_dimension);
  }
  auto e4 = testutil::ext(3, 4, 3);
  auto tr = compute_stabilizer(LinPoly::trace(e4, 2));
  auto facts = algebra_report(tr);
  CHECK_FALSE(facts.is_field);
  REQUIRE(facts.witness.has_value());
  CHECK(facts.witness->det(e4->field()) == kZero);
  CHECK_FALSE(facts.witness->is_zero());
  CHECK(in_stabilizer(tr.f, *facts.witness));
  CHECK(oracle::stabilizes(tr.f, *facts.witness));

  // projections admit [[1,-1],[0,0]]
  const auto& F = e4->field();
  auto T = FqSubspace::span_elements(e4, std::vector<Elem>{kOne, F.root()});
  auto Sx = FqSubspace::span_elements(e4, std::vector<Elem>{F.pow(F.root(), 2), F.pow(F.root(), 3)});
  auto p = projection_polynomial(T, Sx);
  Mat2 W{kOne, F.neg(kOne), kZero, kZero};
  CHECK(in_stabilizer(p, W));
  CHECK(oracle::stabilizes(p, W));
  auto Sp = compute_stabilizer(p);
  CHECK_FALSE(Sp.is_field);
  auto mem = enumerate_members(Sp);
  CHECK(std::find(mem.begin(), mem.end(), W) != mem.end());
}

TEST_CASE("closure, identity and scalars") {
  std::mt19937_64 rng(3);
  for (auto e : {testutil::ext(2, 4, 2), testutil::ext(3, 3, 3), testutil::ext(2, 6, 2), testutil::ext(2, 6, 4)}) {
    const auto& F = e->field();
    for (int i = 0; i < 8; ++i) {
      auto f = LinPoly::random(e, rng, i % 2 ? std::optional<unsigned>(1) : std::nullopt);
      if (i == 7) f = LinPoly::trace(e, e->n() / 2 > 1 ? e->n() / 2 : 1);
      auto S = compute_stabilizer(f);
      CHECK(S.fq_dimension >= 1);
      CHECK(S.order == power(e->q(), S.fq_dimension));
      CHECK(S.closure_ok);
      for (Elem s : e->scalars().elements()) CHECK(in_stabilizer(f, Mat2::identity().scaled(F, s)));
      for (const auto& A : S.basis) {
        CHECK(oracle::stabilizes(f, A));
        for (const auto& B : S.basis) {
          CHECK(oracle::stabilizes(f, A.plus(F, B)));
          CHECK(oracle::stabilizes(f, A.times(F, B)));
        }
      }
      if (S.is_field) CHECK_FALSE(S.singular_witness.has_value());
      else CHECK(S.singular_witness.has_value());
    }
  }
}

TEST_CASE("ell twists have non-field stabilizers") {
  for (auto [p, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto e = testutil::ext(p, 2 * t, p);
    const auto& F = e->field();
    std::mt19937_64 rng(p * 10 + t);
    int checked = 0;
    for (int i = 0; i < 30 && checked < 4; ++i) {
      std::vector<Elem> l;
      auto sub = e->subfield_elements(t);
      for (unsigned j = 0; j < t; ++j) l.push_back(sub[rng() % sub.size()]);
      auto tw = make_ell_twist(e, l, t);
      if (!tw.L_pt || tw.f.is_zero()) continue;
      ++checked;
      auto S = compute_stabilizer(tw.f);
      CHECK_FALSE(S.is_field);
      CHECK(F.add(e->frob(tw.tau, t), tw.tau) == kZero);
      CHECK(in_stabilizer(tw.f, Mat2{kZero, tw.tau, kZero, kZero}));
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("equivalent polynomials have isomorphic stabilizers") {
  std::mt19937_64 rng(4);
  for (auto e : {testutil::ext(2, 4, 2), testutil::ext(3, 4, 3), testutil::ext(2, 6, 2)}) {
    const auto& F = e->field();
    for (int i = 0; i < 10; ++i) {
      auto f = i % 3 == 0 ? LinPoly::trace(e, 2) : LinPoly::random(e, rng);
      Mat2 A;
      do A = {F.random(rng), F.random(rng), F.random(rng), F.random(rng)};
      while (A.det(F) == kZero);
      auto g = apply_transform(A, static_cast<unsigned>(rng() % F.degree()), f);
      if (!std::holds_alternative<LinPoly>(g)) continue;
      auto Sf = compute_stabilizer(f), Sg = compute_stabilizer(std::get<LinPoly>(g));
      CHECK(Sf.fq_dimension == Sg.fq_dimension);
      CHECK(Sf.is_field == Sg.is_field);
    }
  }
}

TEST_CASE("sampled verdict above the exhaustive limit") {
  auto e = testutil::ext(2, 7, 2);
  auto S = compute_stabilizer(LinPoly::zero(e));
  CHECK(S.fq_dimension == 21);
  CHECK(S.mode == VerdictMode::Sampled);
  CHECK_FALSE(S.is_field);
  auto M = compute_stabilizer(LinPoly::monomial(e, kOne, 1));
  CHECK(M.mode == VerdictMode::Exhaustive);
  CHECK(M.is_field);
  CHECK(kind_of([&] { enumerate_members(S, 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("coordinates of 2x2 matrices") {
  auto e = testutil::ext(3, 3, 3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto& F = e->field();
    Mat2 A{F.random(rng), F.random(rng), F.random(rng), F.random(rng)};
    auto c = mat2_coords(*e, A);
    CHECK(c.size() == 12);
    CHECK(mat2_from_coords(*e, c) == A);
  }
}

}  // TEST_SUITE
