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

#include "linset/linpoly.hpp"

#include <cctype>
#include <sstream>

namespace linset {

LinPoly::LinPoly(ExtPtr ext) : ext_(std::move(ext)), coeffs_(ext_->n(), kZero) {}

LinPoly::LinPoly(ExtPtr ext, std::vector<Elem> coeffs) : ext_(std::move(ext)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ext_->n())
    throw Error(ErrorKind::ShapeMismatch, "a q-polynomial in L_{n,q} has exactly n coefficients");
  for (Elem c : coeffs_)
    if (!ext_->field().valid(c)) throw Error(ErrorKind::BadParameters, "coefficient encoding out of range");
}

LinPoly LinPoly::monomial(ExtPtr ext, Elem c, std::int64_t i) {
  LinPoly f(std::move(ext));
  std::int64_t n = f.n();
  f.coeffs_[static_cast<std::size_t>(((i % n) + n) % n)] = c;
  return f;
}

LinPoly LinPoly::trace(ExtPtr ext, unsigned t) {
  if (!ext->divides_n(t)) throw Error(ErrorKind::NonDivisorDegrees, "trace degree must divide n");
  LinPoly f(std::move(ext));
  for (unsigned j = 0; j < f.n(); j += t) f.coeffs_[j] = kOne;
  return f;
}

LinPoly LinPoly::random(ExtPtr ext, std::mt19937_64& rng, std::optional<unsigned> max_qdegree) {
  LinPoly f(std::move(ext));
  const unsigned top = max_qdegree ? std::min(*max_qdegree, f.n() - 1) : f.n() - 1;
  for (unsigned i = 0; i <= top; ++i) f.coeffs_[i] = f.ext_->field().random(rng);
  return f;
}

bool LinPoly::is_zero() const noexcept {
  for (Elem c : coeffs_)
    if (c != kZero) return false;
  return true;
}

std::optional<unsigned> LinPoly::q_degree() const noexcept {
  for (unsigned i = n(); i-- > 0;)
    if (coeffs_[i] != kZero) return i;
  return std::nullopt;
}

bool LinPoly::is_scalar_multiple_of_x() const noexcept {
  for (unsigned i = 1; i < n(); ++i)
    if (coeffs_[i] != kZero) return false;
  return true;
}

Elem LinPoly::eval(Elem x) const {
  if (!ext_->field().valid(x)) throw Error(ErrorKind::ContextMismatch, "argument is not an element of the field");
  if (x == kZero) return kZero;
  const FieldCtx& f = ext_->field();
  Elem acc = kZero, y = x;
  for (unsigned i = 0; i < n(); ++i) {
    if (coeffs_[i] != kZero) acc = f.add(acc, f.mul(coeffs_[i], y));
    y = f.frob(y, ext_->e());
  }
  return acc;
}

std::vector<Elem> LinPoly::eval_table() const {
  const std::uint64_t order = ext_->order();
  std::vector<Elem> table(order);
  for (std::uint64_t x = 0; x < order; ++x) table[x] = eval(Elem{static_cast<std::uint32_t>(x)});
  return table;
}

void LinPoly::check_same(const LinPoly& g) const {
  if (g.ext_ != ext_) throw Error(ErrorKind::ContextMismatch, "q-polynomials over different extensions");
}

LinPoly LinPoly::operator+(const LinPoly& g) const {
  check_same(g);
  LinPoly r(ext_);
  for (unsigned i = 0; i < n(); ++i) r.coeffs_[i] = ext_->field().add(coeffs_[i], g.coeffs_[i]);
  return r;
}

LinPoly LinPoly::operator-(const LinPoly& g) const {
  check_same(g);
  LinPoly r(ext_);
  for (unsigned i = 0; i < n(); ++i) r.coeffs_[i] = ext_->field().sub(coeffs_[i], g.coeffs_[i]);
  return r;
}

LinPoly LinPoly::operator-() const {
  LinPoly r(ext_);
  for (unsigned i = 0; i < n(); ++i) r.coeffs_[i] = ext_->field().neg(coeffs_[i]);
  return r;
}

LinPoly LinPoly::scale(Elem alpha) const {
  LinPoly r(ext_);
  for (unsigned i = 0; i < n(); ++i) r.coeffs_[i] = ext_->field().mul(alpha, coeffs_[i]);
  return r;
}

LinPoly LinPoly::scale_input(Elem alpha) const {
  LinPoly r(ext_);
  for (unsigned i = 0; i < n(); ++i) r.coeffs_[i] = ext_->field().mul(coeffs_[i], ext_->frob(alpha, i));
  return r;
}

LinPoly LinPoly::compose(const LinPoly& g) const {
  check_same(g);
  const FieldCtx& f = ext_->field();
  LinPoly r(ext_);
  const unsigned m = n();
  for (unsigned i = 0; i < m; ++i) {
    if (coeffs_[i] == kZero) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (g.coeffs_[j] == kZero) continue;
      unsigned k = (i + j) % m;
      r.coeffs_[k] = f.add(r.coeffs_[k], f.mul(coeffs_[i], ext_->frob(g.coeffs_[j], i)));
    }
  }
  return r;
}

LinPoly LinPoly::twist(unsigned r) const {
  LinPoly out(ext_);
  for (unsigned i = 0; i < n(); ++i) out.coeffs_[i] = ext_->field().frob(coeffs_[i], r);
  return out;
}

Matrix LinPoly::matrix(std::span<const Elem> basis) const {
  if (basis.size() == ext_->n() && ext_->rank_of(basis) != ext_->n())
    throw Error(ErrorKind::DependentBasis, "matrix basis is F_q-dependent");
  std::vector<Elem> images;
  images.reserve(basis.size());
  for (Elem b : basis) images.push_back(eval(b));
  return ext_->coordinate_matrix(images);
}

Matrix LinPoly::matrix() const { return matrix(ext_->basis()); }

std::size_t LinPoly::rank() const {
  Matrix m = matrix();
  return rank_in_place(ext_->scalars(), m);
}

FqSubspace LinPoly::kernel() const {
  Matrix null = nullspace(ext_->scalars(), matrix());
  return FqSubspace::from_space(ext_, 1, RowSpace::span(ext_->scalars(), ext_->n(), std::move(null)));
}

FqSubspace LinPoly::image() const {
  std::vector<Elem> images;
  for (Elem b : ext_->basis()) images.push_back(eval(b));
  return FqSubspace::span_elements(ext_, images);
}

std::string LinPoly::literal() const {
  std::ostringstream os;
  for (unsigned i = 0; i < n(); ++i) os << (i ? "," : "") << coeffs_[i].value;
  return os.str();
}

std::string LinPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = n(); i-- > 0;) {
    if (coeffs_[i] == kZero) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs_[i] != kOne) os << coeffs_[i].value << '*';
    os << 'x';
    if (i == 1) os << "^q";
    if (i > 1) os << "^q" << i;
  }
  if (first) os << '0';
  return os.str();
}

LinPoly interpolate(const ExtPtr& ext, std::span<const std::pair<Elem, Elem>> pairs) {
  const unsigned n = ext->n();
  if (pairs.size() != n) throw Error(ErrorKind::DependentSamplePoints, "interpolation needs exactly n sample points");
  std::vector<Elem> ys;
  for (const auto& pr : pairs) ys.push_back(pr.first);
  if (ext->rank_of(ys) != n) throw Error(ErrorKind::DependentSamplePoints, "sample points are F_q-dependent");
  Matrix moore(n, n);
  std::vector<Elem> rhs(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) moore(i, j) = ext->frob(pairs[i].first, j);
    rhs[i] = pairs[i].second;
  }
  const FieldCtx& f = ext->field();
  Matrix check = moore;
  if (rank_in_place(f, check) != n) throw Error(ErrorKind::SingularMooreMatrix, "Moore matrix is singular");
  auto c = try_solve(f, moore, rhs);
  if (!c) throw Error(ErrorKind::SingularMooreMatrix, "Moore system is inconsistent");
  return LinPoly(ext, std::move(*c));
}

std::optional<LinPoly> invert(const LinPoly& f) {
  const auto& ext = f.ext();
  if (f.rank() != ext->n()) return std::nullopt;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem b : ext->basis()) pairs.emplace_back(f.eval(b), b);
  return interpolate(ext, pairs);
}

bool is_sublinear(const LinPoly& f, unsigned s) {
  const auto& ext = f.ext();
  if (!ext->divides_n(s)) throw Error(ErrorKind::NonDivisor, std::to_string(s) + " does not divide n");
  bool support = true;
  for (unsigned i = 0; i < f.n(); ++i)
    if (i % s != 0 && f.coeff(i) != kZero) support = false;
  const FieldCtx& fc = ext->field();
  bool pointwise = true;
  for (Elem lambda : ext->subfield_basis(s))
    for (Elem x : ext->basis())
      if (f.eval(fc.mul(lambda, x)) != fc.mul(lambda, f.eval(x))) pointwise = false;
  ensure(support == pointwise, "sublinearity characterizations disagree");
  return support;
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty()) parse_fail("expected a number");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail("invalid number '" + s + "'");
    v = v * 10 + static_cast<unsigned>(ch - '0');
    if (v > (std::uint64_t{1} << 40)) parse_fail("number too large '" + s + "'");
  }
  return v;
}

}  // namespace

LinPoly parse_linpoly(const ExtPtr& ext, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_fail("empty polynomial");
  const FieldCtx& f = ext->field();
  auto elem = [&](std::uint64_t v) {
    if (v >= f.order()) parse_fail("encoding " + std::to_string(v) + " exceeds field order");
    return Elem{static_cast<std::uint32_t>(v)};
  };
  if (s.find('x') == std::string::npos) {
    if (s == "0") return LinPoly::zero(ext);
    std::vector<Elem> coeffs;
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      coeffs.push_back(elem(parse_uint(s.substr(start, comma - start))));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coeffs.size() != ext->n())
      parse_fail("coefficient list needs exactly " + std::to_string(ext->n()) + " entries");
    return LinPoly(ext, std::move(coeffs));
  }
  LinPoly result = LinPoly::zero(ext);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      parse_fail("expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    auto xpos = term.find('x');
    if (xpos == std::string::npos) parse_fail("term '" + term + "' has no x");
    Elem coeff = kOne;
    std::string cpart = term.substr(0, xpos);
    if (!cpart.empty()) {
      if (cpart.back() == '*') cpart.pop_back();
      coeff = elem(parse_uint(cpart));
    }
    std::string epart = term.substr(xpos + 1);
    std::uint64_t power = 0;
    if (!epart.empty()) {
      if (epart.rfind("^q", 0) != 0) parse_fail("exponent must look like ^q or ^qI in '" + term + "'");
      std::string digits = epart.substr(2);
      power = digits.empty() ? 1 : parse_uint(digits);
    }
    if (negative) coeff = f.neg(coeff);
    result = result + LinPoly::monomial(ext, coeff, static_cast<std::int64_t>(power % ext->n()));
  }
  return result;
}

}  // namespace linset
