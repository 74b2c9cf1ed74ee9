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

#include "linset/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linset/linalg.hpp"

namespace linset {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<unsigned> log_p(std::uint64_t q, std::uint32_t p) noexcept {
  if (p < 2 || q < p) return std::nullopt;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

namespace fp_poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = PrimeField(p).inv(Elem{m.back()}).value;
  while (a.size() > dm) {
    std::uint64_t factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return mod(std::move(c), m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = PrimeField(p).inv(Elem{a.back()}).value;
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

namespace {
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}
}  // namespace

Poly frobenius_x(const Poly& m, unsigned j, std::uint32_t p) {
  Poly x = mod(Poly{0, 1}, m, p);
  for (unsigned i = 0; i < j; ++i) x = powmod(x, p, m, p);
  return x;
}

bool is_irreducible(const Poly& m_in, std::uint32_t p) {
  Poly m = m_in;
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  Poly xp = mod(Poly{0, 1}, m, p);
  for (std::size_t j = 1; j <= deg / 2; ++j) {
    xp = powmod(xp, p, m, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Poly g = gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace fp_poly

FieldPtr FieldCtx::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::BadParameters, "extension degree must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxOrder) throw Error(ErrorKind::BadParameters, "fields beyond 2^32 elements are not supported");
  }
  if (order == kMaxOrder) throw Error(ErrorKind::BadParameters, "fields beyond 2^32 - 1 encodings are not supported");

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->order_ = order;
  ctx->pow_p_.resize(k + 1);
  ctx->pow_p_[0] = 1;
  for (unsigned i = 1; i <= k; ++i) ctx->pow_p_[i] = ctx->pow_p_[i - 1] * p;

  if (modulus) {
    auto m = *modulus;
    if (m.size() == k) m.push_back(1);
    if (m.size() != k + 1 || m.back() != 1)
      throw Error(ErrorKind::BadParameters, "modulus must be monic of degree " + std::to_string(k));
    for (auto c : m)
      if (c >= p) throw Error(ErrorKind::BadParameters, "modulus coefficient out of range");
    if (!fp_poly::is_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    ctx->modulus_ = std::move(m);
    ctx->caller_modulus_ = true;
  } else {
    // candidate index N: c0 is the most significant digit, so N order is lexicographic from c0
    std::vector<std::uint32_t> m(k + 1, 0);
    m[k] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < order && !found; ++idx) {
      std::uint64_t r = idx;
      for (unsigned i = k; i-- > 0;) {
        m[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      if (fp_poly::is_irreducible(m, p)) found = true;
    }
    ensure(found, "no irreducible polynomial found");
    ctx->modulus_ = std::move(m);
  }

  ctx->root_ = k >= 2 ? Elem{p} : Elem{(p - ctx->modulus_[0]) % p};
  if (order <= kTableLimit) ctx->build_tables();
  if (!ctx->tabled()) {
    // smallest encoding generating the multiplicative group
    std::vector<std::uint64_t> primes;
    std::uint64_t r = order - 1;
    for (std::uint64_t d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        primes.push_back(d);
        while (r % d == 0) r /= d;
      }
    if (r > 1) primes.push_back(r);
    for (std::uint64_t c = 1; c < order; ++c) {
      bool full = true;
      for (auto pr : primes)
        if (ctx->slow_pow(Elem{static_cast<std::uint32_t>(c)}, (order - 1) / pr) == kOne) {
          full = false;
          break;
        }
      if (full) {
        ctx->primitive_ = Elem{static_cast<std::uint32_t>(c)};
        break;
      }
    }
  }
  ctx->build_subfields();
  return ctx;
}

void FieldCtx::build_tables() {
  const std::uint64_t q1 = order_ - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t r = q1;
  for (std::uint64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) primes.push_back(r);
  Elem g = kOne;
  for (std::uint64_t c = 1; c < order_; ++c) {
    bool full = true;
    for (auto pr : primes)
      if (slow_pow(Elem{static_cast<std::uint32_t>(c)}, q1 / pr) == kOne) {
        full = false;
        break;
      }
    if (full) {
      g = Elem{static_cast<std::uint32_t>(c)};
      break;
    }
  }
  primitive_ = g;

  // multiplication by g as an F_p-linear map on digit vectors
  std::vector<std::vector<std::uint32_t>> col(k_);
  for (unsigned j = 0; j < k_; ++j) col[j] = digits(slow_mul(g, Elem{static_cast<std::uint32_t>(pow_p_[j])}));

  exp_.assign(2 * q1, kZero);
  log_.assign(order_, 0);
  std::vector<std::uint32_t> cur(k_, 0), next(k_);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < q1; ++i) {
    std::uint64_t enc = 0;
    for (unsigned d = 0; d < k_; ++d) enc += cur[d] * pow_p_[d];
    exp_[i] = exp_[i + q1] = Elem{static_cast<std::uint32_t>(enc)};
    log_[enc] = static_cast<std::uint32_t>(i);
    std::fill(next.begin(), next.end(), 0);
    for (unsigned j = 0; j < k_; ++j) {
      if (cur[j] == 0) continue;
      for (unsigned d = 0; d < k_; ++d)
        next[d] = static_cast<std::uint32_t>((next[d] + std::uint64_t{cur[j]} * col[j][d]) % p_);
    }
    std::swap(cur, next);
  }
  if (p_ != 2) {
    zech_.assign(q1, -1);
    for (std::uint64_t i = 0; i < q1; ++i) {
      std::uint32_t enc = exp_[i].value;
      std::uint32_t d0 = enc % p_;
      std::uint32_t sum = enc - d0 + (d0 + 1) % p_;
      zech_[i] = sum == 0 ? -1 : static_cast<std::int32_t>(log_[sum]);
    }
    minus_one_ = exp_[q1 / 2];
  } else {
    minus_one_ = kOne;
  }
}

void FieldCtx::build_subfields() {
  for (unsigned d = 1; d <= k_; ++d)
    if (k_ % d == 0) divisors_.push_back(d);
  PrimeField fp(p_);
  for (unsigned d : divisors_) {
    Matrix m(k_, k_);
    for (unsigned c = 0; c < k_; ++c) {
      Elem basis_vec{static_cast<std::uint32_t>(pow_p_[c])};
      auto img = digits(sub(frob(basis_vec, d), basis_vec));
      for (unsigned r = 0; r < k_; ++r) m(r, c) = Elem{img[r]};
    }
    Matrix null = nullspace(fp, m);
    std::vector<Elem> basis;
    std::vector<std::uint32_t> dg(k_);
    for (std::size_t i = 0; i < null.rows(); ++i) {
      for (unsigned j = 0; j < k_; ++j) dg[j] = null(i, j).value;
      basis.push_back(from_digits(dg));
    }
    ensure(basis.size() == d, "fixed field has unexpected dimension");
    subfields_.push_back(std::move(basis));
  }
}

Elem FieldCtx::element(std::uint64_t encoding) const {
  if (encoding >= order_) throw Error(ErrorKind::BadParameters, "encoding " + std::to_string(encoding) + " exceeds field order");
  return Elem{static_cast<std::uint32_t>(encoding)};
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  std::uint64_t v = a.value;
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() != k_) throw Error(ErrorKind::ShapeMismatch, "digit vector has wrong length");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < k_; ++i) {
    if (d[i] >= p_) throw Error(ErrorKind::BadParameters, "digit out of range");
    v += d[i] * pow_p_[i];
  }
  return Elem{static_cast<std::uint32_t>(v)};
}

Elem FieldCtx::slow_add(Elem a, Elem b) const {
  std::uint64_t x = a.value, y = b.value, out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem FieldCtx::slow_mul(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  fp_poly::trim(da);
  fp_poly::trim(db);
  auto prod = fp_poly::mulmod(da, db, modulus_, p_);
  prod.resize(k_, 0);
  return from_digits(prod);
}

Elem FieldCtx::slow_pow(Elem a, std::uint64_t e) const {
  Elem result = kOne, base = a;
  while (e > 0) {
    if (e & 1) result = slow_mul(result, base);
    base = slow_mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.value ^ b.value};
  if (a == kZero) return b;
  if (b == kZero) return a;
  if (zech_.empty()) return slow_add(a, b);
  const std::uint64_t q1 = order_ - 1;
  std::uint32_t la = log_[a.value], lb = log_[b.value];
  std::uint64_t diff = lb >= la ? lb - la : lb + q1 - la;
  std::int32_t z = zech_[diff];
  if (z < 0) return kZero;
  return exp_[la + static_cast<std::uint32_t>(z)];
}

Elem FieldCtx::neg(Elem a) const {
  if (p_ == 2 || a == kZero) return a;
  if (tabled()) return exp_[log_[a.value] + (order_ - 1) / 2];
  std::uint64_t x = a.value, out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (a == kZero || b == kZero) return kZero;
  if (tabled()) return exp_[log_[a.value] + log_[b.value]];
  return slow_mul(a, b);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == kZero) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  if (tabled()) {
    std::uint32_t l = log_[a.value];
    return exp_[l == 0 ? 0 : (order_ - 1) - l];
  }
  return slow_pow(a, order_ - 2);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return kOne;
  if (a == kZero) return kZero;
  if (tabled()) {
    const std::uint64_t q1 = order_ - 1;
    return exp_[(std::uint64_t{log_[a.value]} * (e % q1)) % q1];
  }
  return slow_pow(a, e);
}

Elem FieldCtx::frob(Elem a, std::uint64_t j) const { return pow(a, pow_p_[j % k_]); }

Elem FieldCtx::times(Elem a, std::uint64_t n) const {
  n %= p_;
  std::uint64_t x = a.value, out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += (x % p_ * n % p_) * pow_p_[i];
    x /= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

const std::vector<Elem>& FieldCtx::subfield_basis(unsigned d) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == d) return subfields_[i];
  throw Error(ErrorKind::InvalidSubfield, std::to_string(d) + " does not divide " + std::to_string(k_));
}

bool FieldCtx::in_subfield(Elem a, unsigned d) const {
  if (d == 0 || k_ % d != 0) throw Error(ErrorKind::InvalidSubfield, std::to_string(d) + " does not divide " + std::to_string(k_));
  return frob(a, d) == a;
}

std::string FieldCtx::spec_string() const {
  std::ostringstream os;
  os << p_ << '^' << k_;
  if (caller_modulus_) {
    os << '/';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

FieldElem FieldElem::frobenius(std::int64_t i, std::uint64_t q) const {
  auto e = log_p(q, ctx_->characteristic());
  if (!e || *e == 0 || ctx_->degree() % *e != 0)
    throw Error(ErrorKind::InvalidSubfield, "q must be p^e with e dividing the field degree");
  const std::int64_t m = ctx_->degree() / *e;
  std::int64_t r = ((i % m) + m) % m;
  return {ctx_, ctx_->frob(e_, static_cast<std::uint64_t>(r) * *e)};
}

FieldPtr parse_field_spec(const std::string& spec) {
  auto fail = [&]() -> FieldPtr { throw Error(ErrorKind::ParseError, "field spec must look like p^k or p^k/c0,...,ck: '" + spec + "'"); };
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.size() > 10) fail();
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') fail();
      v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    return v;
  };
  const auto slash = spec.find('/');
  const std::string head = spec.substr(0, slash);
  const auto caret = head.find('^');
  if (caret == std::string::npos) fail();
  const std::uint64_t p = number(head.substr(0, caret)), k = number(head.substr(caret + 1));
  if (p > UINT32_MAX || k == 0 || k > 64) throw Error(ErrorKind::BadParameters, "field parameters out of range: '" + spec + "'");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (slash != std::string::npos) {
    modulus.emplace();
    std::stringstream ss(spec.substr(slash + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::uint64_t c = number(item);
      if (c >= p) throw Error(ErrorKind::BadParameters, "modulus coefficient not reduced mod p");
      modulus->push_back(static_cast<std::uint32_t>(c));
    }
    if (modulus->empty()) fail();
  }
  return FieldCtx::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), std::move(modulus));
}

}  // namespace linset
