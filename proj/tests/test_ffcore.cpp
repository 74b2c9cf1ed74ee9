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
#include <random>
#include <set>

#include "doctest.h"
#include "linset/extension.hpp"
#include "linset/field.hpp"
#include "linset/linalg.hpp"
#include "linset/subspace.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace linset;

namespace {

using testutil::kind_of;

// First irreducible monic degree-k polynomial, coefficient vectors compared from c_0 upwards.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t combos = 1;
  for (unsigned i = 0; i < k; ++i) combos *= p;
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::vector<std::uint32_t> m(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = k; i-- > 0; c /= p) m[i] = static_cast<std::uint32_t>(c % p);
    m[k] = 1;
    if (oracle::irreducible_by_trial_division(m, p)) return m;
  }
  return {};
}

}  // namespace

TEST_SUITE("ffcore") {

TEST_CASE("default moduli") {
  auto f2 = FieldCtx::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus().size() == 2);

  auto f4 = FieldCtx::make(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});

  auto f81 = FieldCtx::make(3, 4);
  CHECK(oracle::irreducible_by_trial_division(f81->modulus(), 3));
  CHECK(fp_poly::is_irreducible(f81->modulus(), 3));
  // sieve: gcd(m, x^{3^j} - x) = 1 for j = 1, 2
  for (unsigned j = 1; j <= 2; ++j) {
    auto xp = fp_poly::frobenius_x(f81->modulus(), j, 3);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = (xp[1] + 2) % 3;
    fp_poly::trim(xp);
    CHECK(fp_poly::gcd(f81->modulus(), xp, 3).size() == 1);
  }

  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 6}, {2, 8}, {3, 3}, {5, 2}, {5, 3}, {7, 2}})
    CHECK(FieldCtx::make(p, k)->modulus() == smallest_irreducible(p, k));
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { FieldCtx::make(4, 2); }) == ErrorKind::CompositeCharacteristic);
  CHECK(kind_of([] { FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { FieldCtx::make(2, 2, std::vector<std::uint32_t>{1, 1, 0}); }) == ErrorKind::BadParameters);
}

TEST_CASE("parse_field_spec") {
  CHECK(parse_field_spec("2^4")->order() == 16);
  CHECK(parse_field_spec("2^2/1,1,1")->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(parse_field_spec("2^2/1,1")->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(parse_field_spec("3^4")->spec_string() == FieldCtx::make(3, 4)->spec_string());
  for (std::string bad : {"", "2", "2^", "^3", "a^4", "2^4/", "2^4/1,,1", "2^x"})
    CHECK_MESSAGE(kind_of([&] { parse_field_spec(bad); }) == ErrorKind::ParseError, bad);
  CHECK(kind_of([] { parse_field_spec("4^2"); }) == ErrorKind::CompositeCharacteristic);
  CHECK(kind_of([] { parse_field_spec("2^2/1,0,1"); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { parse_field_spec("2^0"); }) == ErrorKind::BadParameters);
}

TEST_CASE("arithmetic in F_4") {
  auto F = FieldCtx::make(2, 2);
  Elem a = F->root();
  CHECK(a.value == 2);
  CHECK(F->mul(a, a) == Elem{3});
  for (Elem x : oracle::elements(*F)) CHECK(F->add(x, x) == kZero);
  CHECK(F->inv(a) == Elem{3});
  for (Elem x : oracle::elements(*F)) {
    if (x == kZero) continue;
    int hits = 0;
    for (Elem y : oracle::elements(*F)) hits += F->mul(x, y) == kOne;
    CHECK(hits == 1);
    CHECK(F->mul(x, F->inv(x)) == kOne);
  }
  CHECK(kind_of([&] { F->inv(kZero); }) == ErrorKind::ZeroInverse);
}

TEST_CASE("FieldElem value type") {
  auto F = FieldCtx::make(2, 2);
  auto G = FieldCtx::make(2, 2);
  FieldElem a(F, F->root()), b = FieldElem::from_encoding(F, 3);
  CHECK((a * a) == b);
  CHECK((a + a).is_zero());
  CHECK(a.inv() == b);
  CHECK((b / b).encoding() == 1);
  CHECK(kind_of([&] { auto c = a + FieldElem(G, G->root()); (void)c; }) == ErrorKind::MixedContexts);
  CHECK(kind_of([&] { FieldElem::from_encoding(F, 4); }) == ErrorKind::BadParameters);
  CHECK(kind_of([&] { a.frobenius(1, 8); }) == ErrorKind::InvalidSubfield);
}

TEST_CASE("multiplication matches schoolbook reduction") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 5}, {5, 3}, {7, 2}, {2, 5}}) {
    auto F = FieldCtx::make(p, k);
    for (Elem a : oracle::elements(*F))
      for (Elem b : oracle::elements(*F)) {
        auto expect = oracle::poly_mulmod(F->digits(a), F->digits(b), F->modulus(), p);
        REQUIRE(F->mul(a, b) == F->from_digits(expect));
      }
  }
}

TEST_CASE("field axioms for every order up to 256") {
  std::vector<std::pair<std::uint32_t, unsigned>> fields;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u})
    for (unsigned k = 1;; ++k) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      if (q > 256) break;
      fields.emplace_back(p, k);
    }
  for (auto [p, k] : fields) {
    auto F = FieldCtx::make(p, k);
    auto all = oracle::elements(*F);
    bool assoc = true, distrib = true, add_assoc = true, inverses = true, comm = true;
    for (Elem a : all) {
      if (a != kZero) inverses = inverses && F->mul(a, F->inv(a)) == kOne;
      inverses = inverses && F->add(a, F->neg(a)) == kZero;
      for (Elem b : all) {
        comm = comm && F->mul(a, b) == F->mul(b, a) && F->add(a, b) == F->add(b, a);
        Elem ab = F->mul(a, b), apb = F->add(a, b);
        for (Elem c : all) {
          assoc = assoc && F->mul(ab, c) == F->mul(a, F->mul(b, c));
          add_assoc = add_assoc && F->add(apb, c) == F->add(a, F->add(b, c));
          distrib = distrib && F->mul(apb, c) == F->add(F->mul(a, c), F->mul(b, c));
        }
      }
    }
    INFO("p=" << p << " k=" << k);
    CHECK(assoc);
    CHECK(add_assoc);
    CHECK(distrib);
    CHECK(inverses);
    CHECK(comm);
  }
}

TEST_CASE("untabled fields above 2^20 elements") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 21}, {3, 13}}) {
    auto F = FieldCtx::make(p, k);
    CHECK_FALSE(F->tabled());
    CHECK(fp_poly::is_irreducible(F->modulus(), p));
    for (int i = 0; i < 300; ++i) {
      Elem a = F->random(rng), b = F->random(rng);
      CHECK(F->mul(a, b) == F->from_digits(oracle::poly_mulmod(F->digits(a), F->digits(b), F->modulus(), p)));
      auto da = F->digits(a), db = F->digits(b);
      for (unsigned j = 0; j < k; ++j) da[j] = (da[j] + db[j]) % p;
      CHECK(F->add(a, b) == F->from_digits(da));
      if (a == kZero) continue;
      CHECK(F->mul(a, F->inv(a)) == kOne);
      CHECK(F->pow(a, F->order() - 1) == kOne);
      CHECK(F->frob(a, k) == a);
    }
  }
}

TEST_CASE("frobenius") {
  auto F = FieldCtx::make(2, 4);
  auto ext = Extension::make(F, 2);
  for (Elem x : oracle::elements(*F)) {
    CHECK(ext->frob(x, 0) == x);
    FieldElem fx(F, x);
    CHECK(fx.frobenius(0, 2) == fx);
    CHECK(fx.frobenius(1, 2) == fx * fx);
    CHECK(fx.frobenius(2, 4) == fx.frobenius(4, 2));
  }
  CHECK(ext->frob(F->root(), 1) == F->mul(F->root(), F->root()));

  auto G = FieldCtx::make(2, 6);
  for (std::uint64_t q : {2u, 4u, 8u}) {
    auto e = Extension::make(G, q);
    std::uint64_t fixed = 0;
    for (Elem x : oracle::elements(*G)) {
      Elem y = e->frob(x, 1);
      fixed += y == x;
      if (e->in_subfield(x, 1))
        for (int i = 0; i < 6; ++i) CHECK(e->frob(x, i) == x);
    }
    CHECK(fixed == q);
  }
  // automorphism
  for (Elem a : oracle::elements(*G))
    for (Elem b : oracle::elements(*G)) {
      REQUIRE(G->frob(G->mul(a, b), 1) == G->mul(G->frob(a, 1), G->frob(b, 1)));
      REQUIRE(G->frob(G->add(a, b), 1) == G->add(G->frob(a, 1), G->frob(b, 1)));
    }
}

TEST_CASE("relative trace and norm") {
  auto F = FieldCtx::make(2, 4);
  auto ext = Extension::make(F, 2);
  CHECK(ext->norm(kOne, 2) == kOne);
  CHECK(ext->norm(kZero, 1) == kZero);

  // companion matrix of multiplication by a generator
  Elem g = F->primitive();
  std::uint32_t diag = 0;
  for (unsigned j = 0; j < 4; ++j) diag += F->digits(F->mul(g, F->pow(F->root(), j)))[j];
  CHECK(ext->trace(g, 1) == Elem{diag % 2});
  Elem conj = kZero;
  for (unsigned j = 0; j < 4; ++j) conj = F->add(conj, F->pow(g, std::uint64_t{1} << j));
  CHECK(ext->trace(g, 1) == conj);

  auto G = FieldCtx::make(3, 6);
  auto e3 = Extension::make(G, 3);
  for (unsigned t : {1u, 2u, 3u}) {
    unsigned m = 6 / t;
    std::set<Elem> image;
    for (Elem x : oracle::elements(*G)) {
      Elem tr = e3->trace(x, t);
      CHECK(e3->in_subfield(tr, t));
      CHECK(e3->in_subfield(e3->norm(x, t), t));
      image.insert(tr);
      if (e3->in_subfield(x, t)) CHECK(tr == G->times(x, m));
    }
    CHECK(image.size() == e3->q_power(t));
    std::mt19937_64 rng(t);
    for (int i = 0; i < 200; ++i) {
      Elem x = G->random(rng), y = G->random(rng);
      auto sub = e3->subfield_elements(t);
      Elem lam = sub[rng() % sub.size()];
      CHECK(e3->trace(G->add(G->mul(lam, x), y), t) == G->add(G->mul(lam, e3->trace(x, t)), e3->trace(y, t)));
      CHECK(e3->norm(G->mul(x, y), t) == G->mul(e3->norm(x, t), e3->norm(y, t)));
    }
  }
  CHECK(kind_of([&] { e3->trace(kOne, 4); }) == ErrorKind::NonDivisorDegrees);
  CHECK(kind_of([&] { e3->norm(kOne, 5); }) == ErrorKind::NonDivisorDegrees);
}

TEST_CASE("dual basis") {
  auto P = FieldCtx::make(5, 1);
  auto e1 = Extension::make(P, 5);
  for (std::uint32_t c = 1; c < 5; ++c) {
    Elem ce{c};
    CHECK(e1->dual_basis(std::vector<Elem>{ce}) == std::vector<Elem>{P->inv(ce)});
  }

  auto F4 = FieldCtx::make(2, 2);
  auto e4 = Extension::make(F4, 2);
  // Gram [[Tr 1, Tr a], [Tr a, Tr a^2]] = [[0,1],[1,1]], inverse [[1,1],[1,0]]
  std::vector<Elem> B{kOne, F4->root()};
  CHECK(e4->dual_basis(B) == std::vector<Elem>{Elem{3}, Elem{1}});

  for (auto [p, k, q] : std::vector<std::tuple<std::uint32_t, unsigned, std::uint64_t>>{{2, 4, 2}, {3, 4, 3}, {2, 6, 4}, {3, 4, 9}}) {
    auto F = FieldCtx::make(p, k);
    auto ext = Extension::make(F, q);
    std::mt19937_64 rng(k);
    std::vector<Elem> b;
    do {
      b.clear();
      for (unsigned i = 0; i < ext->n(); ++i) b.push_back(F->random(rng));
    } while (ext->rank_of(b) != ext->n());
    auto d = ext->dual_basis(b);
    for (unsigned i = 0; i < ext->n(); ++i)
      for (unsigned j = 0; j < ext->n(); ++j) CHECK(ext->trace(F->mul(b[i], d[j]), 1) == (i == j ? kOne : kZero));
    CHECK(ext->dual_basis(d) == b);
    auto dep = b;
    dep.back() = dep.front();
    CHECK(kind_of([&] { ext->dual_basis(dep); }) == ErrorKind::DependentInput);
  }
}

TEST_CASE("linear algebra") {
  PrimeField F3(3);
  for (std::size_t n : {1u, 3u, 6u}) {
    CHECK(rank(F3, Matrix::identity(n)) == n);
    CHECK(nullspace(F3, Matrix::identity(n)).rows() == 0);
    CHECK(nullspace(F3, Matrix(n, n + 2)).rows() == n + 2);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix M(5, 5);
    int zero_rows = trial % 4;
    for (std::size_t r = zero_rows; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) M(r, c) = Elem{static_cast<std::uint32_t>(rng() % 3)};
    auto N = nullspace(F3, M);
    CHECK(rank(F3, M) + N.rows() == 5);
    for (std::size_t i = 0; i < N.rows(); ++i) {
      auto prod = multiply(F3, M, N.transpose());
      for (std::size_t r = 0; r < 5; ++r) CHECK(prod(r, i) == kZero);
    }
    auto E = echelon(F3, M);
    for (std::size_t i = 0; i < E.rank(); ++i) {
      CHECK(E.reduced(i, E.pivots[i]) == kOne);
      for (std::size_t r = 0; r < E.rank(); ++r)
        if (r != i) CHECK(E.reduced(r, E.pivots[i]) == kZero);
    }
    std::vector<Elem> x(5);
    for (auto& v : x) v = Elem{static_cast<std::uint32_t>(rng() % 3)};
    auto bm = multiply(F3, M, [&] {
      Matrix col(5, 1);
      for (std::size_t i = 0; i < 5; ++i) col(i, 0) = x[i];
      return col;
    }());
    std::vector<Elem> b(5);
    for (std::size_t i = 0; i < 5; ++i) b[i] = bm(i, 0);
    auto sol = solve(F3, M, b);
    auto chk = try_solve(F3, M, b);
    REQUIRE(chk.has_value());
    for (std::size_t r = 0; r < 5; ++r) {
      Elem acc = kZero;
      for (std::size_t c = 0; c < 5; ++c) acc = F3.add(acc, F3.mul(M(r, c), sol[c]));
      CHECK(acc == b[r]);
    }
    if (auto inv = inverse(F3, M)) CHECK(multiply(F3, M, *inv) == Matrix::identity(5));
    else CHECK(rank(F3, M) < 5);
  }
  Matrix Z(2, 2);
  CHECK(kind_of([&] { solve(F3, Z, std::vector<Elem>{kOne, kZero}); }) == ErrorKind::NoSolution);
  CHECK(kind_of([&] { solve(F3, Z, std::vector<Elem>{kOne}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([&] { multiply(F3, Matrix(2, 3), Matrix(2, 3)); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("subspace operations") {
  auto F = FieldCtx::make(3, 4);
  auto ext = Extension::make(F, 3);
  std::mt19937_64 rng(5);
  auto random_space = [&](unsigned copies, unsigned gens) {
    std::vector<AmbientVec> v;
    for (unsigned i = 0; i < gens; ++i) {
      AmbientVec a;
      for (unsigned c = 0; c < copies; ++c) a.push_back(F->random(rng));
      v.push_back(a);
    }
    return FqSubspace::span(ext, copies, v);
  };
  FqSubspace zero(ext, 2);
  for (int trial = 0; trial < 100; ++trial) {
    auto A = random_space(2, rng() % 6), B = random_space(2, rng() % 6);
    CHECK(A.intersect(A) == A);
    CHECK(A.intersect(zero).dim() == 0);
    CHECK(A.sum(B).dim() == A.dim() + B.dim() - A.intersect(B).dim());
    CHECK(A.sum(B) == B.sum(A));
    // membership of every enumerated vector
    std::uint64_t count = 0;
    A.for_each_vector([&](const AmbientVec& v) {
      ++count;
      CHECK(A.contains(v));
      CHECK(A.sum(B).contains(v));
    });
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) size *= 3;
    CHECK(count == size);
    // brute-force intersection size
    std::uint64_t common = 0;
    A.for_each_vector([&](const AmbientVec& v) { common += B.contains(v); });
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < A.intersect(B).dim(); ++i) expect *= 3;
    CHECK(common == expect);
  }
  auto one = FqSubspace::whole(ext, 1);
  CHECK(one.dim() == 4);
  CHECK(kind_of([&] { one.intersect(zero); }) == ErrorKind::AmbientMismatch);
  auto F2 = FieldCtx::make(3, 4);
  auto other = Extension::make(F2, 3);
  CHECK(kind_of([&] { FqSubspace::whole(other, 1).sum(one); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("extension with q = p^e") {
  auto F = FieldCtx::make(2, 6);
  auto ext = Extension::make(F, 4);
  CHECK(ext->n() == 3);
  CHECK(ext->scalars().size() == 4);
  for (Elem x : oracle::elements(*F)) {
    CHECK(ext->from_coords(ext->coords(x)) == x);
    CHECK(ext->frob(x, 1) == F->pow(x, 4));
  }
  for (Elem s : ext->scalars().elements()) CHECK(F->pow(s, 4) == s);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Elem x = F->random(rng), y = F->random(rng), s = ext->scalars().random(rng);
    auto cx = ext->coords(x), cy = ext->coords(y), cz = ext->coords(F->add(F->mul(s, x), y));
    for (unsigned j = 0; j < 3; ++j) CHECK(cz[j] == ext->scalars().add(ext->scalars().mul(s, cx[j]), cy[j]));
  }
  CHECK(ext->subfield_elements(1).size() == 4);
  CHECK(kind_of([&] { Extension::make(F, 16); }) == ErrorKind::InvalidSubfield);
  CHECK(kind_of([&] { Extension::make(F, 3); }) == ErrorKind::InvalidSubfield);

  auto G = FieldCtx::make(3, 4);
  auto e9 = Extension::make(G, 9);
  CHECK(e9->n() == 2);
  std::set<Elem> tr;
  for (Elem x : oracle::elements(*G)) tr.insert(e9->trace(x, 1));
  CHECK(tr.size() == 9);
}

}  // TEST_SUITE
