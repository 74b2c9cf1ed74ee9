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

#include "linset/rankcode.hpp"

#include "linset/geometry.hpp"

namespace linset {

namespace {

Matrix unflatten(std::span<const Elem> v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

bool all_zero(const Matrix& m) {
  for (Elem e : m.data())
    if (e != kZero) return false;
  return true;
}

struct MatrixOps {
  const RankCode& code;
  Side side;
  const Scalars& sc;

  Matrix add(const Matrix& x, const Matrix& y) const {
    Matrix r = x;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = sc.add(x(i, j), y(i, j));
    return r;
  }
  Matrix scale(Elem s, const Matrix& x) const {
    Matrix r = x;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = sc.mul(s, x(i, j));
    return r;
  }
  bool is_zero(const Matrix& x) const { return all_zero(x); }
  bool invertible(const Matrix& x) const { return rank(sc, x) == x.rows(); }
  Matrix mul(const Matrix& x, const Matrix& y) const { return multiply(sc, x, y); }
  bool contains(const Matrix& x) const { return in_idealizer(code, side, x); }
  std::optional<Matrix> inverse(const Matrix& x) const { return linset::inverse(sc, x); }
  bool equal(const Matrix& x, const Matrix& y) const { return x == y; }
};

std::optional<std::uint64_t> power(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) return std::nullopt;
    r *= q;
  }
  return r;
}

RankCode code_for(const LinPoly& f, std::vector<Elem> domain) {
  const auto& ext = f.ext();
  const LinPoly x = LinPoly::identity(ext);
  std::vector<Matrix> mats;
  for (Elem b : ext->basis()) {
    mats.push_back(map_matrix(*ext, x.scale(b), domain));
    mats.push_back(map_matrix(*ext, f.scale(b), domain));
  }
  RankCode C = code_from_matrices(ext, std::move(domain), mats);
  C.fqn_linear = true;
  C.degenerate = f.is_scalar_multiple_of_x();
  C.f = f;
  C.right_generators = {map_matrix(*ext, x, C.domain_basis), map_matrix(*ext, f, C.domain_basis)};
  return C;
}

}  // namespace

Matrix map_matrix(const Extension& ext, const LinPoly& g, std::span<const Elem> domain_basis) {
  std::vector<Elem> images;
  images.reserve(domain_basis.size());
  for (Elem d : domain_basis) images.push_back(g.eval(d));
  return ext.coordinate_matrix(images);
}

RankCode code_from_matrices(const ExtPtr& ext, std::vector<Elem> domain_basis, std::span<const Matrix> mats) {
  RankCode C;
  C.ext = ext;
  C.domain_basis = std::move(domain_basis);
  C.domain_dim = static_cast<unsigned>(C.domain_basis.size());
  C.codomain_dim = ext->n();
  const std::size_t R = C.codomain_dim, K = C.domain_dim;
  Matrix rows(0, R * K);
  for (const Matrix& m : mats) {
    if (m.rows() != R || m.cols() != K) throw Error(ErrorKind::ShapeMismatch, "codeword has the wrong shape");
    rows.append_row(m.data());
  }
  C.space = RowSpace::span(ext->scalars(), R * K, std::move(rows));
  for (std::size_t i = 0; i < C.space.dim(); ++i) C.generators.push_back(unflatten(C.space.basis().row(i), R, K));
  C.right_generators = C.generators;
  return C;
}

RankCode build_code(const LinPoly& f) { return code_for(f, f.ext()->basis()); }

bool code_contains(const RankCode& C, const Matrix& M) {
  if (M.rows() != C.codomain_dim || M.cols() != C.domain_dim) return false;
  return C.space.contains(C.ext->scalars(), M.data());
}

unsigned min_distance(const RankCode& C, std::uint64_t budget) {
  const auto& sc = C.ext->scalars();
  if (C.space.dim() == 0) throw Error(ErrorKind::BadParameters, "minimum distance of the zero code");
  unsigned best = std::min(C.domain_dim, C.codomain_dim);
  if (C.fqn_linear && C.f) {
    // one representative per F_{q^n}^*-orbit: x + m f and f
    const Extension& ext = *C.ext;
    const FieldCtx& fc = ext.field();
    std::vector<Elem> xs = C.domain_basis, fs;
    for (Elem d : xs) fs.push_back(C.f->eval(d));
    if (ext.order() + 1 > budget) throw Error(ErrorKind::BudgetExceeded, "codeword enumeration exceeds the budget");
    std::vector<Elem> cols(xs.size());
    auto rank_of_combo = [&](Elem alpha, Elem beta) {
      for (std::size_t j = 0; j < xs.size(); ++j) cols[j] = fc.add(fc.mul(alpha, xs[j]), fc.mul(beta, fs[j]));
      return static_cast<unsigned>(ext.rank_of(cols));
    };
    auto consider = [&](Elem alpha, Elem beta, bool check_scaling) {
      unsigned r = rank_of_combo(alpha, beta);
      if (r == 0) return;
      if (check_scaling) {
        const Elem g = fc.primitive();
        ensure(rank_of_combo(fc.mul(g, alpha), fc.mul(g, beta)) == r, "rank changed under F_{q^n} scaling");
      }
      best = std::min(best, r);
    };
    consider(kZero, kOne, true);
    for (std::uint64_t m = 0; m < ext.order(); ++m) consider(kOne, Elem{static_cast<std::uint32_t>(m)}, m < 4);
    return best;
  }
  const std::size_t k = C.space.dim();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > budget) break;
    count *= sc.size();
  }
  if ((count - 1) / (sc.size() - 1) > budget)
    throw Error(ErrorKind::BudgetExceeded, "projective codewords exceed the budget");
  const auto& vals = sc.elements();
  const std::size_t R = C.codomain_dim, K = C.domain_dim;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Elem> word(R * K);
  for (std::size_t lead = k; lead-- > 0;) {
    std::fill(idx.begin(), idx.end(), 0);
    idx[lead] = 1;
    while (true) {
      std::fill(word.begin(), word.end(), kZero);
      for (std::size_t i = 0; i < k; ++i) {
        if (idx[i] == 0) continue;
        auto row = C.space.basis().row(i);
        for (std::size_t j = 0; j < word.size(); ++j) word[j] = sc.add(word[j], sc.mul(vals[idx[i]], row[j]));
      }
      best = std::min(best, static_cast<unsigned>(rank(sc, unflatten(word, R, K))));
      std::size_t i = lead + 1;
      while (i < k && ++idx[i] == vals.size()) idx[i++] = 0;
      if (i >= k) break;
    }
  }
  return best;
}

SingletonCheck singleton_check(const RankCode& C, unsigned d) {
  SingletonCheck s;
  const unsigned m = C.codomain_dim, n = C.domain_dim;
  s.code_exponent = C.fq_dimension();
  const unsigned lo = std::min(m, n), hi = std::max(m, n);
  s.bound_exponent = d > lo ? 0 : hi * (lo - d + 1);
  ensure(s.code_exponent <= s.bound_exponent, "code exceeds the Singleton-like bound");
  s.is_mrd = s.code_exponent == s.bound_exponent;
  return s;
}

bool in_idealizer(const RankCode& C, Side side, const Matrix& Z) {
  const auto& sc = C.ext->scalars();
  const auto& gens = side == Side::Right ? C.right_generators : C.generators;
  for (const Matrix& G : gens) {
    Matrix P = side == Side::Right ? multiply(sc, G, Z) : multiply(sc, Z, G);
    if (!code_contains(C, P)) return false;
  }
  return true;
}

IdealizerReport idealizer(const RankCode& C, Side side, std::uint64_t seed) {
  const auto& sc = C.ext->scalars();
  const std::size_t R = C.codomain_dim, K = C.domain_dim;
  const std::size_t S = side == Side::Right ? K : R;
  const RowSpace ann = C.space.annihilator(sc);
  const auto& gens = side == Side::Right ? C.right_generators : C.generators;
  Matrix system(0, S * S);
  std::vector<Elem> eq(S * S);
  for (const Matrix& G : gens) {
    for (std::size_t a = 0; a < ann.dim(); ++a) {
      auto w = ann.basis().row(a);
      std::fill(eq.begin(), eq.end(), kZero);
      if (side == Side::Right) {
        // coefficient of Z(s, c) in w . vec(G Z) is sum_r w[r K + c] G(r, s)
        for (std::size_t s = 0; s < K; ++s)
          for (std::size_t c = 0; c < K; ++c) {
            Elem acc = kZero;
            for (std::size_t r = 0; r < R; ++r) acc = sc.add(acc, sc.mul(w[r * K + c], G(r, s)));
            eq[s * K + c] = acc;
          }
      } else {
        // coefficient of Z(r, s) in w . vec(Z G) is sum_c w[r K + c] G(s, c)
        for (std::size_t r = 0; r < R; ++r)
          for (std::size_t s = 0; s < R; ++s) {
            Elem acc = kZero;
            for (std::size_t c = 0; c < K; ++c) acc = sc.add(acc, sc.mul(w[r * K + c], G(s, c)));
            eq[r * R + s] = acc;
          }
      }
      system.append_row(eq);
    }
  }
  Matrix null = system.rows() == 0 ? Matrix::identity(S * S) : nullspace(sc, system);
  RowSpace space = RowSpace::span(sc, S * S, std::move(null));
  IdealizerReport rep;
  rep.side = side;
  for (std::size_t i = 0; i < space.dim(); ++i) rep.basis.push_back(unflatten(space.basis().row(i), S, S));
  rep.fq_dimension = static_cast<unsigned>(space.dim());
  rep.contains_identity = space.contains(sc, Matrix::identity(S).data());
  ensure(rep.contains_identity, "idealizer must contain the identity");
  for (const Matrix& Z : rep.basis) ensure(in_idealizer(C, side, Z), "idealizer solve produced a non-member");
  MatrixOps ops{C, side, sc};
  auto v = field_verdict(rep.basis, Matrix(S, S), sc, ops, seed);
  rep.is_field = v.is_field && v.commutative;
  rep.witness = v.witness;
  rep.mode = v.mode;
  rep.closure_ok = v.closure_ok && v.inverses_ok;
  ensure(rep.closure_ok, "idealizer is not closed under composition");
  return rep;
}

PsiCheck verify_psi(const LinPoly& f) {
  if (f.is_scalar_multiple_of_x()) throw Error(ErrorKind::DegenerateF, "f lies in <x>_{F_{q^n}}");
  StabReport S = compute_stabilizer(f);
  IdealizerReport R = idealizer(build_code(f), Side::Right);
  return verify_psi(f, S, R);
}

PsiCheck verify_psi(const LinPoly& f, const StabReport& S, const IdealizerReport& R) {
  if (f.is_scalar_multiple_of_x()) throw Error(ErrorKind::DegenerateF, "f lies in <x>_{F_{q^n}}");
  const auto& ext = f.ext();
  const auto& sc = ext->scalars();
  const std::size_t n = ext->n();
  const LinPoly x = LinPoly::identity(ext);
  auto psi = [&](const Mat2& A) { return x.scale(A.a) + f.scale(A.b); };
  PsiCheck out;
  out.stabilizer_dim = S.fq_dimension;
  out.idealizer_dim = R.fq_dimension;
  Matrix ideal_rows(0, n * n);
  for (const Matrix& Z : R.basis) ideal_rows.append_row(Z.data());
  RowSpace ideal = RowSpace::span(sc, n * n, std::move(ideal_rows));
  Matrix images(0, n * n);
  out.into = true;
  for (const Mat2& A : S.basis) {
    Matrix M = psi(A).matrix();
    if (!ideal.contains(sc, M.data())) out.into = false;
    images.append_row(M.data());
  }
  out.injective = rank(sc, images) == S.basis.size();
  out.products = true;
  const FieldCtx& fc = ext->field();
  for (const Mat2& A : S.basis)
    for (const Mat2& B : S.basis)
      if (!(psi(A.times(fc, B)) == psi(A).compose(psi(B)))) out.products = false;
  out.same_verdict = S.is_field == R.is_field;
  return out;
}

RestrictedCode restrict_code(const LinPoly& f, unsigned t) {
  const auto& ext = f.ext();
  const unsigned n = ext->n();
  if (!ext->divides_n(t)) throw Error(ErrorKind::BadDivisor, "t must divide n");
  RestrictedCode out;
  out.code = code_for(f, ext->subfield_basis(t));
  out.t = t;
  if (t > 1 && t < n) out.r_pt = scatteredness(f, t).R_pt;
  out.injective = !out.code.degenerate && out.code.fq_dimension() == 2 * n;
  out.d = min_distance(out.code);
  if (out.r_pt && *out.r_pt) out.parameters_ok = out.injective && *out.d == t - 1;
  return out;
}

LtnqReport ltnq_analysis(const LinPoly& f, unsigned t, std::uint64_t seed) {
  const auto& ext = f.ext();
  const auto& sc = ext->scalars();
  const unsigned n = ext->n();
  if (!ext->divides_n(t)) throw Error(ErrorKind::BadDivisor, "t must divide n");
  LtnqReport out;
  out.t = t;
  out.precondition_r_pt = t > 1 && t < n && scatteredness(f, t).R_pt;

  IdealizerReport R = idealizer(build_code(f), Side::Right, seed);
  out.right_dim = R.fq_dimension;

  const auto& sub = ext->subfield_basis(t);
  Matrix sub_rows(0, n);
  for (Elem d : sub) sub_rows.append_row(ext->coords(d));
  const RowSpace subspace = RowSpace::span(sc, n, sub_rows);
  ensure(subspace.basis() == sub_rows, "subfield basis must be in reduced echelon form");
  const RowSpace sub_ann = subspace.annihilator(sc);

  // lambda with (sum_i lambda_i Z_i)(d_j) ∈ F_{q^t} for all j
  Matrix system(0, R.basis.size());
  std::vector<Elem> eq(R.basis.size());
  std::vector<std::vector<Elem>> image_coords(R.basis.size());
  for (std::size_t j = 0; j < sub.size(); ++j) {
    std::vector<Elem> dj = ext->coords(sub[j]);
    std::vector<std::vector<Elem>> zimg(R.basis.size(), std::vector<Elem>(n, kZero));
    for (std::size_t i = 0; i < R.basis.size(); ++i)
      for (unsigned r = 0; r < n; ++r) {
        Elem acc = kZero;
        for (unsigned c = 0; c < n; ++c) acc = sc.add(acc, sc.mul(R.basis[i](r, c), dj[c]));
        zimg[i][r] = acc;
      }
    for (std::size_t a = 0; a < sub_ann.dim(); ++a) {
      auto w = sub_ann.basis().row(a);
      for (std::size_t i = 0; i < R.basis.size(); ++i) {
        Elem acc = kZero;
        for (unsigned r = 0; r < n; ++r) acc = sc.add(acc, sc.mul(w[r], zimg[i][r]));
        eq[i] = acc;
      }
      system.append_row(eq);
    }
  }
  Matrix lambdas = system.rows() == 0 ? Matrix::identity(R.basis.size()) : nullspace(sc, system);
  for (std::size_t k = 0; k < lambdas.rows(); ++k) {
    Matrix G(n, n);
    for (std::size_t i = 0; i < R.basis.size(); ++i) {
      Elem l = lambdas(k, i);
      if (l == kZero) continue;
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) G(r, c) = sc.add(G(r, c), sc.mul(l, R.basis[i](r, c)));
    }
    out.intersection_basis.push_back(std::move(G));
  }
  out.intersection_dim = static_cast<unsigned>(out.intersection_basis.size());

  // restriction to F_{q^t}, in coordinates of the subfield basis
  for (const Matrix& G : out.intersection_basis) {
    Matrix Rm(t, t);
    for (unsigned j = 0; j < t; ++j) {
      std::vector<Elem> img(n, kZero);
      auto dj = sub_rows.row(j);
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) img[r] = sc.add(img[r], sc.mul(G(r, c), dj[c]));
      ensure(subspace.contains(sc, img), "restricted image left the subfield");
      auto coords = subspace.coordinates_of_member(img);
      for (unsigned i = 0; i < t; ++i) Rm(i, j) = coords[i];
    }
    out.restricted_images.push_back(std::move(Rm));
  }

  RestrictedCode Ct = restrict_code(f, t);
  IdealizerReport Rt = idealizer(Ct.code, Side::Right, seed);
  out.restricted_right_dim = Rt.fq_dimension;
  out.inclusion_holds = true;
  Matrix img_rows(0, std::size_t{t} * t);
  for (const Matrix& Rm : out.restricted_images) {
    if (!in_idealizer(Ct.code, Side::Right, Rm)) out.inclusion_holds = false;
    img_rows.append_row(Rm.data());
  }
  out.injective = rank(sc, img_rows) == out.intersection_dim;
  out.inequality_holds = out.restricted_right_dim >= out.intersection_dim;

  auto size = power(ext->q(), out.intersection_dim);
  if (size && *size <= kExhaustiveLimit) {
    std::uint64_t count = 0;
    const auto& vals = sc.elements();
    std::vector<std::size_t> idx(out.intersection_dim, 0);
    while (true) {
      Matrix cur(t, t);
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (unsigned r = 0; r < t; ++r)
          for (unsigned c = 0; c < t; ++c)
            cur(r, c) = sc.add(cur(r, c), sc.mul(vals[idx[i]], out.restricted_images[i](r, c)));
      if (rank(sc, cur) == t) ++count;
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == vals.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    out.setwise_count = count;
  }
  return out;
}

}  // namespace linset
