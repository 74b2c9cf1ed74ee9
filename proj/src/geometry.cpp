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

#include "linset/geometry.hpp"

#include <unordered_map>
#include <unordered_set>

namespace linset {

ProjPoint ProjPoint::normalized(const FieldCtx& f, Elem x0, Elem x1) {
  if (x0 != kZero) return {kOne, f.div(x1, x0)};
  if (x1 == kZero) throw Error(ErrorKind::BadParameters, "the zero vector is not a projective point");
  return {kZero, kOne};
}

std::uint64_t point_count(const Extension& ext) { return ext.order() + 1; }

ProjPoint point_at(std::uint64_t index) {
  if (index == 0) return {kZero, kOne};
  return {kOne, Elem{static_cast<std::uint32_t>(index - 1)}};
}

FqSubspace graph_subspace(const LinPoly& f) {
  const auto& ext = f.ext();
  std::vector<AmbientVec> vs;
  for (Elem b : ext->basis()) vs.push_back({b, f.eval(b)});
  return FqSubspace::span(ext, 2, vs);
}

namespace {

FqSubspace point_subspace(const ExtPtr& ext, const ProjPoint& P) {
  const FieldCtx& f = ext->field();
  std::vector<AmbientVec> vs;
  for (Elem b : ext->basis()) vs.push_back({f.mul(b, P.x0), f.mul(b, P.x1)});
  return FqSubspace::span(ext, 2, vs);
}

}  // namespace

unsigned point_weight(const FqSubspace& U, const ProjPoint& P) {
  if (U.copies() != 2) throw Error(ErrorKind::AmbientMismatch, "point weights need a subspace of F_{q^n}^2");
  return static_cast<unsigned>(U.intersect(point_subspace(U.ext(), P)).dim());
}

GraphKernels::GraphKernels(const LinPoly& f) : ext_(f.ext()), work_(f.n(), f.n()), column_(f.n()) {
  for (Elem b : ext_->basis()) images_.push_back(f.eval(b));
}

void GraphKernels::fill(Elem m) {
  const FieldCtx& fc = ext_->field();
  const unsigned n = ext_->n();
  const auto& basis = ext_->basis();
  if (work_.rows() != n) work_ = Matrix(n, n);
  for (unsigned j = 0; j < n; ++j) {
    ext_->coords_into(fc.sub(images_[j], fc.mul(m, basis[j])), column_);
    for (unsigned i = 0; i < n; ++i) work_(i, j) = column_[i];
  }
}

unsigned GraphKernels::dim(Elem m) {
  fill(m);
  return ext_->n() - static_cast<unsigned>(rank_in_place(ext_->scalars(), work_));
}

FqSubspace GraphKernels::kernel(Elem m) {
  fill(m);
  Matrix null = nullspace(ext_->scalars(), work_);
  return FqSubspace::from_space(ext_, 1, RowSpace::span(ext_->scalars(), ext_->n(), std::move(null)));
}

namespace {

void finish_spectrum(WeightSpectrum& s, const Extension& ext) {
  const std::uint64_t q = ext.q();
  std::uint64_t total = 0;
  for (const auto& [w, count] : s.counts) {
    s.points += count;
    s.max_weight = std::max(s.max_weight, w);
    std::uint64_t qw = 1;
    for (unsigned i = 0; i < w; ++i) qw *= q;
    total += count * (qw - 1);
  }
  std::uint64_t qr = 1;
  for (std::size_t i = 0; i < s.rank; ++i) qr *= q;
  ensure(total == qr - 1, "weight distribution violates the point-count identity");
}

}  // namespace

WeightSpectrum weight_spectrum(const FqSubspace& U) {
  if (U.copies() != 2) throw Error(ErrorKind::AmbientMismatch, "weight spectra need a subspace of F_{q^n}^2");
  WeightSpectrum s;
  s.rank = U.dim();
  const std::uint64_t total = point_count(*U.ext());
  for (std::uint64_t i = 0; i < total; ++i) {
    unsigned w = point_weight(U, point_at(i));
    if (w > 0) ++s.counts[w];
  }
  finish_spectrum(s, *U.ext());
  return s;
}

WeightSpectrum weight_spectrum(const LinPoly& f) {
  WeightSpectrum s;
  s.rank = f.n();
  GraphKernels kernels(f);
  const std::uint64_t order = f.ext()->order();
  for (std::uint64_t m = 0; m < order; ++m) {
    unsigned w = kernels.dim(Elem{static_cast<std::uint32_t>(m)});
    if (w > 0) ++s.counts[w];
  }
  finish_spectrum(s, *f.ext());
  return s;
}

bool is_low_weight(const WeightSpectrum& s, unsigned n) { return 2 * s.max_weight < n; }

bool is_low_weight(const LinPoly& f) {
  GraphKernels kernels(f);
  const std::uint64_t order = f.ext()->order();
  for (std::uint64_t m = 0; m < order; ++m)
    if (2 * kernels.dim(Elem{static_cast<std::uint32_t>(m)}) >= f.n()) return false;
  return true;
}

Scatteredness scatteredness(const LinPoly& f, unsigned t) {
  const auto& ext = f.ext();
  const unsigned n = ext->n();
  if (!(t > 1 && t < n && n % t == 0)) throw Error(ErrorKind::BadDivisor, "need a divisor t of n with 1 < t < n");
  const FieldCtx& fc = ext->field();
  Scatteredness out;
  out.t = t;
  GraphKernels kernels(f);
  std::unordered_map<std::uint32_t, Elem> classes;
  const std::uint64_t order = ext->order();
  for (std::uint64_t mv = 0; mv < order; ++mv) {
    Elem m{static_cast<std::uint32_t>(mv)};
    if (kernels.dim(m) < 2) continue;
    FqSubspace K = kernels.kernel(m);
    auto basis = K.basis_elements();
    if (out.scattered) {
      out.scattered = false;
      out.scattered_witness = ScatterWitness{m, basis[0], basis[1]};
    }
    if (out.L_pt) {
      for (std::size_t i = 1; i < basis.size(); ++i) {
        if (!ext->in_subfield(fc.div(basis[i], basis[0]), t)) {
          out.L_pt = false;
          out.L_witness = ScatterWitness{m, basis[0], basis[i]};
          break;
        }
      }
    }
    if (out.R_pt) {
      // y and z share an F_{q^t}^*-class iff y^{q^t - 1} = z^{q^t - 1}
      classes.clear();
      K.for_each_projective([&](const AmbientVec& v) {
        if (!out.R_pt) return;
        Elem y = v[0];
        Elem key = fc.div(ext->frob(y, t), y);
        auto [it, fresh] = classes.emplace(key.value, y);
        if (!fresh) {
          out.R_pt = false;
          out.R_witness = ScatterWitness{m, it->second, y};
        }
      });
    }
  }
  ensure(out.scattered == (out.L_pt && out.R_pt), "scattered must equal L- and R-partial scatteredness together");
  return out;
}

bool is_R_pt_subspace(const FqSubspace& U, unsigned t) {
  const auto& ext = U.ext();
  if (!ext->divides_n(t)) throw Error(ErrorKind::BadDivisor, "t must divide n");
  if (U.copies() != 2) throw Error(ErrorKind::AmbientMismatch, "needs a subspace of F_{q^n}^2");
  const FieldCtx& fc = ext->field();
  struct KeyHash {
    std::size_t operator()(const std::array<std::uint32_t, 3>& k) const noexcept {
      return (std::size_t{k[0]} * 0x9E3779B97F4A7C15ULL) ^ (std::size_t{k[1]} << 1) ^ (std::size_t{k[2]} * 0xC2B2AE3D27D4EB4FULL);
    }
  };
  std::unordered_set<std::array<std::uint32_t, 3>, KeyHash> seen;
  bool ok = true;
  U.for_each_projective([&](const AmbientVec& u) {
    if (!ok) return;
    const unsigned lead = u[0] != kZero ? 0 : 1;
    const Elem ul = u[lead];
    const Elem ratio = lead == 0 ? fc.div(u[1], ul) : kZero;
    const Elem cls = fc.div(ext->frob(ul, t), ul);
    if (!seen.insert({lead, ratio.value, cls.value}).second) ok = false;
  });
  return ok;
}

LineProfile line_profile(const LinPoly& f, std::uint64_t budget) {
  const auto& ext = f.ext();
  const FieldCtx& fc = ext->field();
  const std::uint64_t order = ext->order();
  if (order * order > budget) throw Error(ErrorKind::BudgetExceeded, "line enumeration exceeds the budget");
  const std::vector<Elem> table = f.eval_table();
  LineProfile out;
  GraphKernels kernels(f);
  const unsigned n = ext->n();
  auto qpow = [&](unsigned w) { return ext->q_power(w); };

  DirectionProfile vertical{ProjPoint{kZero, kOne}, 0, {}};
  vertical.line_sizes[1] = order;
  out.directions.push_back(vertical);

  std::vector<std::uint64_t> hits(order);
  for (std::uint64_t mv = 0; mv < order; ++mv) {
    Elem m{static_cast<std::uint32_t>(mv)};
    std::fill(hits.begin(), hits.end(), 0);
    // the line y1 = m y0 + c meets the graph where f(y) - m y = c
    for (std::uint64_t y = 0; y < order; ++y) {
      Elem ye{static_cast<std::uint32_t>(y)};
      ++hits[fc.sub(table[y], fc.mul(m, ye)).value];
    }
    DirectionProfile d{ProjPoint{kOne, m}, kernels.weight(m), {}};
    for (std::uint64_t c = 0; c < order; ++c) ++d.line_sizes[hits[c]];
    const std::uint64_t full = qpow(d.weight), lines = qpow(n - d.weight);
    for (const auto& [size, count] : d.line_sizes) {
      if (size == full) {
        if (count != lines) out.consistent = false;
      } else if (size != 0) {
        out.consistent = false;
      }
    }
    out.directions.push_back(std::move(d));
  }
  return out;
}

std::variant<LinPoly, NotAGraph> apply_transform(const Mat2& A, unsigned r, const LinPoly& f) {
  const auto& ext = f.ext();
  const FieldCtx& fc = ext->field();
  if (A.det(fc) == kZero) throw Error(ErrorKind::SingularA, "transformation matrix is singular");
  const LinPoly fs = f.twist(r);
  const LinPoly x = LinPoly::identity(ext);
  const LinPoly phi = x.scale(A.a) + fs.scale(A.b);
  auto phi_inv = invert(phi);
  if (!phi_inv) return NotAGraph{phi.kernel()};
  return (x.scale(A.c) + fs.scale(A.d)).compose(*phi_inv);
}

FqSubspace transform_subspace(const Mat2& A, unsigned r, const FqSubspace& U) {
  const FieldCtx& fc = U.ext()->field();
  std::vector<AmbientVec> vs;
  for (const auto& u : U.basis()) {
    auto w = A.apply(fc, fc.frob(u[0], r), fc.frob(u[1], r));
    vs.push_back({w[0], w[1]});
  }
  return FqSubspace::span(U.ext(), 2, vs);
}

SubspacePoly subspace_to_poly(const FqSubspace& U) {
  const auto& ext = U.ext();
  if (U.copies() != 2 || U.dim() != ext->n())
    throw Error(ErrorKind::ShapeMismatch, "needs an n-dimensional subspace of F_{q^n}^2");
  const FieldCtx& fc = ext->field();
  const std::uint64_t total = point_count(*ext);
  for (std::uint64_t i = 0; i < total; ++i) {
    ProjPoint P = point_at(i);
    if (point_weight(U, P) != 0) continue;
    // A P = <(0,1)>
    Mat2 A = P.x0 == kZero ? Mat2::identity() : Mat2{P.x1, fc.neg(kOne), kOne, kZero};
    FqSubspace AU = transform_subspace(A, 0, U);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (const auto& v : AU.basis()) pairs.emplace_back(v[0], v[1]);
    LinPoly g = interpolate(ext, pairs);
    ensure(graph_subspace(g) == AU, "recovered polynomial does not reproduce the subspace");
    return {A, P, std::move(g)};
  }
  throw Error(ErrorKind::NoFreePoint, "every point of PG(1,q^n) has positive weight");
}

}  // namespace linset
