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

#include "linset/stabilizer.hpp"

#include <algorithm>
#include <thread>

namespace linset {

namespace {

struct Mat2Ops {
  const LinPoly& f;
  const FieldCtx& fc;

  Mat2 add(const Mat2& x, const Mat2& y) const { return x.plus(fc, y); }
  Mat2 scale(Elem s, const Mat2& x) const { return x.scaled(fc, s); }
  bool is_zero(const Mat2& x) const { return x.is_zero(); }
  bool invertible(const Mat2& x) const { return x.det(fc) != kZero; }
  Mat2 mul(const Mat2& x, const Mat2& y) const { return x.times(fc, y); }
  bool contains(const Mat2& x) const { return in_stabilizer(f, x); }
  bool equal(const Mat2& x, const Mat2& y) const { return x == y; }
  std::optional<Mat2> inverse(const Mat2& x) const {
    Elem det = x.det(fc);
    if (det == kZero) return std::nullopt;
    Elem di = fc.inv(det);
    return Mat2{fc.mul(x.d, di), fc.neg(fc.mul(x.b, di)), fc.neg(fc.mul(x.c, di)), fc.mul(x.a, di)};
  }
};

std::optional<std::uint64_t> power(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) return std::nullopt;
    r *= q;
  }
  return r;
}

StabReport from_span(const LinPoly& f, Matrix rows, std::uint64_t seed) {
  const auto& ext = f.ext();
  RowSpace space = RowSpace::span(ext->scalars(), 4 * std::size_t{ext->n()}, std::move(rows));
  StabReport r{f};
  r.fq_dimension = static_cast<unsigned>(space.dim());
  r.order = power(ext->q(), r.fq_dimension);
  for (std::size_t i = 0; i < space.dim(); ++i) r.basis.push_back(mat2_from_coords(*ext, space.basis().row(i)));
  ensure(in_stabilizer(f, Mat2::identity()), "identity must stabilize every graph");
  AlgebraFacts facts = algebra_report(r, seed);
  r.is_field = facts.is_field;
  r.singular_witness = facts.witness;
  r.field_degree = facts.field_degree;
  r.closure_checked = true;
  r.closure_ok = facts.closure_ok && facts.inverses_ok;
  r.commutative = facts.commutative;
  r.mode = facts.mode;
  ensure(r.closure_ok, "stabilizer is not closed under products");
  return r;
}

}  // namespace

std::vector<Elem> mat2_coords(const Extension& ext, const Mat2& A) {
  const unsigned n = ext.n();
  std::vector<Elem> c(4 * std::size_t{n});
  auto e = A.entries();
  for (unsigned s = 0; s < 4; ++s) ext.coords_into(e[s], std::span<Elem>(c).subspan(s * n, n));
  return c;
}

Mat2 mat2_from_coords(const Extension& ext, std::span<const Elem> c) {
  const unsigned n = ext.n();
  return {ext.from_coords(c.subspan(0, n)), ext.from_coords(c.subspan(n, n)), ext.from_coords(c.subspan(2 * n, n)),
          ext.from_coords(c.subspan(3 * n, n))};
}

bool in_stabilizer(const LinPoly& f, const Mat2& A) {
  const LinPoly x = LinPoly::identity(f.ext());
  return f.compose(x.scale(A.a) + f.scale(A.b)) == x.scale(A.c) + f.scale(A.d);
}

StabReport compute_stabilizer(const LinPoly& f, std::uint64_t seed) {
  const auto& ext = f.ext();
  const unsigned n = ext->n();
  const FieldCtx& fc = ext->field();
  const LinPoly x = LinPoly::identity(ext);
  Matrix system(std::size_t{n} * n, 4 * std::size_t{n});
  std::vector<Elem> coords(n);
  for (unsigned slot = 0; slot < 4; ++slot) {
    for (unsigned i = 0; i < n; ++i) {
      const Elem b = ext->basis()[i];
      LinPoly col = slot == 0   ? f.scale_input(b)
                    : slot == 1 ? f.compose(f.scale(b))
                    : slot == 2 ? x.scale(fc.neg(b))
                                : f.scale(fc.neg(b));
      for (unsigned k = 0; k < n; ++k) {
        ext->coords_into(col.coeff(k), coords);
        for (unsigned j = 0; j < n; ++j) system(std::size_t{k} * n + j, slot * n + i) = coords[j];
      }
    }
  }
  Matrix null = nullspace(ext->scalars(), system);
  StabReport r = from_span(f, std::move(null), seed);
  for (const Mat2& A : r.basis) ensure(in_stabilizer(f, A), "solver produced a non-member");
  return r;
}

StabReport brute_force_stabilizer(const LinPoly& f, std::uint64_t budget, unsigned workers) {
  const auto& ext = f.ext();
  const FieldCtx& fc = ext->field();
  const std::uint64_t Q = ext->order();
  if (Q > 0xFFFF || Q * Q * Q * Q > budget)
    throw Error(ErrorKind::BudgetExceeded, "q^{4n} candidate matrices exceed the budget");
  const std::vector<Elem> fy = f.eval_table();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(Q));
  // worker w owns the rows a ≡ w (mod workers); results are merged back in a-order
  std::vector<std::vector<std::vector<Mat2>>> found(workers);
  auto run = [&](unsigned w) {
    std::vector<Elem> target(Q);
    for (std::uint64_t a = w; a < Q; a += workers) {
      auto& bucket = found[w].emplace_back();
      for (std::uint64_t b = 0; b < Q; ++b) {
        const Elem ea{static_cast<std::uint32_t>(a)}, eb{static_cast<std::uint32_t>(b)};
        for (std::uint64_t y = 0; y < Q; ++y) {
          Elem z = fc.add(fc.mul(ea, Elem{static_cast<std::uint32_t>(y)}), fc.mul(eb, fy[y]));
          target[y] = fy[z.value];
        }
        for (std::uint64_t c = 0; c < Q; ++c) {
          const Elem ec{static_cast<std::uint32_t>(c)};
          for (std::uint64_t d = 0; d < Q; ++d) {
            const Elem ed{static_cast<std::uint32_t>(d)};
            bool ok = true;
            for (std::uint64_t y = 1; y < Q && ok; ++y)
              ok = fc.add(fc.mul(ec, Elem{static_cast<std::uint32_t>(y)}), fc.mul(ed, fy[y])) == target[y];
            if (ok) bucket.push_back({ea, eb, ec, ed});
          }
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::vector<Mat2> members;
  for (std::uint64_t a = 0; a < Q; ++a) {
    const auto& bucket = found[a % workers][a / workers];
    members.insert(members.end(), bucket.begin(), bucket.end());
  }
  Matrix rows(0, 4 * std::size_t{ext->n()});
  for (const Mat2& A : members) rows.append_row(mat2_coords(*ext, A));
  StabReport r = from_span(f, std::move(rows), 0);
  ensure(r.order && *r.order == members.size(), "brute-force members do not form an F_q-space");
  r.members = std::move(members);
  return r;
}

AlgebraFacts algebra_report(const StabReport& s, std::uint64_t seed) {
  const auto& ext = s.f.ext();
  Mat2Ops ops{s.f, ext->field()};
  auto v = field_verdict(s.basis, Mat2::zero(), ext->scalars(), ops, seed);
  AlgebraFacts facts;
  facts.is_field = v.is_field && v.commutative;
  facts.witness = v.witness;
  facts.mode = v.mode;
  facts.closure_ok = v.closure_ok;
  facts.inverses_ok = v.inverses_ok;
  facts.commutative = v.commutative;
  if (facts.is_field) facts.field_degree = static_cast<unsigned>(s.basis.size());
  return facts;
}

std::vector<Mat2> enumerate_members(const StabReport& s, std::uint64_t budget) {
  const auto& ext = s.f.ext();
  if (!s.order || *s.order > budget) throw Error(ErrorKind::BudgetExceeded, "stabilizer too large to enumerate");
  const FieldCtx& fc = ext->field();
  const auto& vals = ext->scalars().elements();
  std::vector<Mat2> out;
  std::vector<std::size_t> idx(s.basis.size(), 0);
  while (true) {
    Mat2 cur = Mat2::zero();
    for (std::size_t i = 0; i < idx.size(); ++i) cur = cur.plus(fc, s.basis[i].scaled(fc, vals[idx[i]]));
    out.push_back(cur);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == vals.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) { return x.entries() < y.entries(); });
  return out;
}

}  // namespace linset
