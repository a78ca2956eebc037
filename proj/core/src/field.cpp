// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmds/field.hpp"

#include <algorithm>
#include <atomic>

#include "nmds/error.hpp"
#include "nmds/primes.hpp"

namespace nmds {
namespace {

// Coefficient products must fit comfortably in 64-bit accumulators.
constexpr std::uint32_t kMaxCharacteristic = 1u << 16;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;

std::atomic<std::uint64_t> g_next_tag{1};

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// p^e, or 0 when it exceeds kMaxOrder.
std::uint64_t bounded_order(std::uint32_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= p;
    if (r > kMaxOrder) return 0;
  }
  return r;
}

// True when the monic polynomial `divisor` divides `poly` over GF(p).
bool divides(std::uint32_t p, std::span<const std::uint32_t> poly,
             std::span<const std::uint32_t> divisor) {
  std::vector<std::uint64_t> r(poly.begin(), poly.end());
  const std::size_t d = divisor.size() - 1;
  for (std::size_t k = r.size(); k-- > d;) {
    const std::uint64_t c = r[k] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      r[k - d + j] = (r[k - d + j] + (p - c) * divisor[j]) % p;
    }
  }
  return std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d),
                     [p](std::uint64_t v) { return v % p == 0; });
}

// Digits of `index` in base p, most significant digit at position 0.
void digits_msb_first(std::uint64_t index, std::uint32_t p, std::span<std::uint32_t> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  std::size_t n = poly.size();
  while (n > 0 && poly[n - 1] % p == 0) --n;
  if (n < 2) return false;
  const unsigned deg = static_cast<unsigned>(n - 1);
  if (deg == 1) return true;
  const auto body = poly.first(n);
  std::vector<std::uint32_t> divisor;
  for (unsigned k = 1; k <= deg / 2; ++k) {
    divisor.assign(k + 1, 0);
    divisor[k] = 1;
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      digits_msb_first(idx, p, std::span(divisor).first(k));
      if (divides(p, body, divisor)) return false;
    }
  }
  return true;
}

Polynomial irreducible_polynomial(std::uint32_t p, unsigned degree, std::size_t rank) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (degree == 0 || degree > Element::kMaxDegree) {
    throw Error(ErrorCode::kDegreeMismatch, "unsupported degree " + std::to_string(degree));
  }
  const std::uint64_t count = bounded_order(p, degree);
  if (count == 0) throw Error(ErrorCode::kTooLarge, "search space too large");
  Polynomial poly(degree + 1, 0);
  poly[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    digits_msb_first(idx, p, std::span(poly).first(degree));
    if (is_irreducible(p, poly)) {
      if (rank == 0) return poly;
      --rank;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "not enough irreducible polynomials of degree " +
                                               std::to_string(degree));
}

FieldCtx FieldCtx::make(std::uint32_t p, unsigned e, std::optional<Polynomial> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) {
    throw Error(ErrorCode::kTooLarge, "characteristic " + std::to_string(p) + " too large");
  }
  if (e == 0 || e > Element::kMaxDegree) {
    throw Error(ErrorCode::kDegreeMismatch, "unsupported degree " + std::to_string(e));
  }
  const std::uint64_t q = bounded_order(p, e);
  if (q == 0) {
    throw Error(ErrorCode::kTooLarge, "field " + std::to_string(p) + "^" + std::to_string(e));
  }
  FieldCtx f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = q;
  if (modulus) {
    if (modulus->size() != e + 1) {
      throw Error(ErrorCode::kDegreeMismatch, "modulus must have degree " + std::to_string(e));
    }
    if ((*modulus)[e] != 1) throw Error(ErrorCode::kDegreeMismatch, "modulus must be monic");
    for (auto c : *modulus) {
      if (c >= p) throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, *modulus)) {
      throw Error(ErrorCode::kReducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    f.modulus_ = std::move(*modulus);
  } else {
    f.modulus_ = irreducible_polynomial(p, e);
  }
  f.tag_ = g_next_tag.fetch_add(1, std::memory_order_relaxed);
  return f;
}

std::string FieldCtx::descriptor() const {
  return std::to_string(p_) + "^" + std::to_string(e_);
}

Element FieldCtx::raw() const {
  Element a;
  a.tag_ = tag_;
  a.degree_ = e_;
  return a;
}

Element FieldCtx::zero() const { return raw(); }

Element FieldCtx::one() const {
  Element a = raw();
  a.c_[0] = 1;
  return a;
}

Element FieldCtx::from_int(std::int64_t v) const {
  Element a = raw();
  const auto p = static_cast<std::int64_t>(p_);
  a.c_[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return a;
}

Element FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) {
    throw Error(ErrorCode::kInvalidArgument, "element has more than " + std::to_string(e_) +
                                                 " coefficients");
  }
  Element a = raw();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coefficient " + std::to_string(coeffs[i]) + " out of range for p = " +
                      std::to_string(p_));
    }
    a.c_[i] = coeffs[i];
  }
  return a;
}

Element FieldCtx::element_at(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  Element a = raw();
  digits_msb_first(index, p_, std::span(a.c_).first(e_));
  return a;
}

std::uint64_t FieldCtx::index_of(const Element& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < e_; ++i) idx = idx * p_ + a.c_[i];
  return idx;
}

std::vector<Element> FieldCtx::elements() const {
  std::vector<Element> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

void FieldCtx::check(const Element& a) const {
  if (a.tag_ != tag_) {
    throw Error(ErrorCode::kContextMismatch, "element does not belong to GF(" + descriptor() + ")");
  }
}

bool FieldCtx::is_zero(const Element& a) const {
  check(a);
  return std::all_of(a.c_.begin(), a.c_.begin() + e_, [](std::uint32_t c) { return c == 0; });
}

bool FieldCtx::is_one(const Element& a) const { return a == one(); }

Element FieldCtx::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = raw();
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint32_t s = a.c_[i] + b.c_[i];
    r.c_[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Element FieldCtx::neg(const Element& a) const {
  check(a);
  Element r = raw();
  for (unsigned i = 0; i < e_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p_ - a.c_[i];
  return r;
}

Element FieldCtx::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element FieldCtx::scale(const Element& a, std::int64_t k) const {
  check(a);
  const auto p = static_cast<std::int64_t>(p_);
  const auto kk = static_cast<std::uint64_t>(((k % p) + p) % p);
  Element r = raw();
  for (unsigned i = 0; i < e_; ++i) r.c_[i] = mod_p(kk * a.c_[i]);
  return r;
}

Element FieldCtx::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::array<std::uint64_t, 2 * Element::kMaxDegree> acc{};
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    for (unsigned j = 0; j < e_; ++j) acc[i + j] += ai * b.c_[j];
  }
  for (unsigned k = 0; k + 1 < 2 * e_; ++k) acc[k] %= p_;
  for (unsigned k = 2 * e_ - 1; k-- > e_;) {
    const std::uint64_t c = acc[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      acc[k - e_ + j] = (acc[k - e_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
  }
  Element r = raw();
  for (unsigned i = 0; i < e_; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

Element FieldCtx::pow(const Element& a, std::uint64_t n) const {
  check(a);
  Element result = one();
  Element base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Element FieldCtx::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

Element FieldCtx::div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

Element FieldCtx::apply_linear(std::span<const std::uint32_t> matrix, const Element& a) const {
  check(a);
  Element r = raw();
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t s = 0;
    const std::uint32_t* row = matrix.data() + static_cast<std::size_t>(i) * e_;
    for (unsigned j = 0; j < e_; ++j) s += static_cast<std::uint64_t>(row[j]) * a.c_[j];
    r.c_[i] = mod_p(s);
  }
  return r;
}

int quadratic_character(const FieldCtx& f, const Element& a) {
  if (f.is_even()) {
    throw Error(ErrorCode::kEvenCharacteristic, "quadratic character needs odd q");
  }
  if (f.is_zero(a)) return 0;
  return f.is_one(f.pow(a, (f.order() - 1) / 2)) ? 1 : -1;
}

std::uint32_t absolute_trace(const FieldCtx& f, const Element& a) {
  if (!f.is_even()) throw Error(ErrorCode::kOddCharacteristic, "absolute trace needs p = 2");
  Element sum = f.zero();
  Element term = a;
  for (unsigned i = 0; i < f.degree(); ++i) {
    sum = f.add(sum, term);
    term = f.square(term);
  }
  return sum.coeffs()[0];
}

std::optional<Element> sqrt(const FieldCtx& f, const Element& a) {
  if (f.is_even()) return f.pow(a, f.order() / 2);
  if (f.is_zero(a)) return a;
  if (quadratic_character(f, a) != 1) return std::nullopt;

  // Tonelli-Shanks with q - 1 = 2^s * m, m odd.
  std::uint64_t m = f.order() - 1;
  unsigned s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  Element z = f.one();
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    z = f.element_at(i);
    if (quadratic_character(f, z) == -1) break;
  }
  Element x = f.pow(a, (m + 1) / 2);
  Element b = f.pow(a, m);
  Element c = f.pow(z, m);
  unsigned r = s;
  while (!f.is_one(b)) {
    unsigned i = 0;
    Element t = b;
    while (!f.is_one(t)) {
      t = f.square(t);
      ++i;
    }
    Element g = c;
    for (unsigned k = 0; k + i + 1 < r; ++k) g = f.square(g);
    x = f.mul(x, g);
    c = f.square(g);
    b = f.mul(b, c);
    r = i;
  }
  return std::min(x, f.neg(x));
}

std::optional<Element> artin_schreier_root(const FieldCtx& f, const Element& t) {
  if (absolute_trace(f, t) != 0) return std::nullopt;
  const unsigned e = f.degree();
  if (e % 2 == 1) {
    // Half-trace: sum of t^(2^(2i)) for i = 0 .. (e-1)/2.
    Element z = f.zero();
    Element term = t;
    for (unsigned i = 0; i <= (e - 1) / 2; ++i) {
      z = f.add(z, term);
      term = f.square(f.square(term));
    }
    return z;
  }
  // Even degree: z = sum_{i<e-1} (sum_{j>i} tau^(2^j)) t^(2^i), Tr(tau) = 1.
  Element tau = f.one();
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    tau = f.element_at(i);
    if (absolute_trace(f, tau) == 1) break;
  }
  std::vector<Element> tau_pow(e);
  std::vector<Element> t_pow(e);
  tau_pow[0] = tau;
  t_pow[0] = t;
  for (unsigned i = 1; i < e; ++i) {
    tau_pow[i] = f.square(tau_pow[i - 1]);
    t_pow[i] = f.square(t_pow[i - 1]);
  }
  Element z = f.zero();
  Element tail = f.zero();
  for (unsigned i = e - 1; i-- > 0;) {
    tail = f.add(tail, tau_pow[i + 1]);
    z = f.add(z, f.mul(tail, t_pow[i]));
  }
  return z;
}

Element least_primitive_element(const FieldCtx& f) {
  const std::uint64_t order = f.order() - 1;
  const auto divisors = prime_divisors(order);
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    const Element g = f.element_at(i);
    if (f.is_zero(g)) continue;
    const bool primitive = std::all_of(divisors.begin(), divisors.end(), [&](std::uint64_t r) {
      return !f.is_one(f.pow(g, order / r));
    });
    if (primitive) return g;
  }
  throw Error(ErrorCode::kInvalidArgument, "no primitive element found");
}

}  // namespace nmds
