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

// Arithmetic in GF(p^e), polynomial basis over GF(p).
//
// A FieldCtx owns the modulus and performs every operation; Elements are
// plain coefficient vectors tagged with the id of the context that made them.
// Mixing elements of two contexts raises ErrorCode::kContextMismatch.
//
// Element order: coefficient vectors compared lexicographically with the
// constant term most significant. The same convention selects the default
// modulus, so the whole element encoding is reproducible.

#ifndef NMDS_FIELD_HPP
#define NMDS_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nmds {

class FieldCtx;

class Element {
 public:
  static constexpr std::size_t kMaxDegree = 32;

  Element() = default;

  /// Coefficients, constant term first; length equals the field degree.
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), degree_}; }
  std::uint64_t field_tag() const noexcept { return tag_; }

  // Lexicographic on coefficients first, so ordering inside one field is the
  // canonical element order.
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend class FieldCtx;

  std::array<std::uint32_t, kMaxDegree> c_{};
  std::uint64_t tag_ = 0;
  std::uint32_t degree_ = 0;
};

/// Monic polynomial coefficients over GF(p), constant term first, leading 1 included.
using Polynomial = std::vector<std::uint32_t>;

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// The rank-th (0-based) monic irreducible polynomial of the given degree in
/// canonical order.
Polynomial irreducible_polynomial(std::uint32_t p, unsigned degree, std::size_t rank = 0);

class FieldCtx {
 public:
  /// Throws kNotPrime, kDegreeMismatch (bad degree or non-monic modulus) or kReducible.
  static FieldCtx make(std::uint32_t p, unsigned e,
                       std::optional<Polynomial> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_even() const noexcept { return p_ == 2; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  std::uint64_t tag() const noexcept { return tag_; }
  /// "p^e", e.g. "7^1".
  std::string descriptor() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  /// Entries must lie in [0, p); length at most e (missing entries are zero).
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// Bijection [0, q) <-> field, monotone in canonical order.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;
  std::vector<Element> elements() const;

  /// Throws kContextMismatch when a was not produced by this context.
  void check(const Element& a) const;
  bool owns(const Element& a) const noexcept { return a.tag_ == tag_; }

  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element square(const Element& a) const { return mul(a, a); }
  /// a * k for an integer k reduced mod p.
  Element scale(const Element& a, std::int64_t k) const;
  Element pow(const Element& a, std::uint64_t n) const;
  /// Throws kDivisionByZero for a = 0.
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;

  /// Linear map GF(p)^e -> GF(p)^e applied to coefficient vectors; the
  /// matrix is row-major e x e. Used for precomputed Frobenius powers.
  Element apply_linear(std::span<const std::uint32_t> matrix, const Element& a) const;

 private:
  FieldCtx() = default;

  Element raw() const;
  std::uint32_t mod_p(std::uint64_t v) const noexcept { return static_cast<std::uint32_t>(v % p_); }

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint64_t q_ = 0;
  Polynomial modulus_;
  std::uint64_t tag_ = 0;
};

/// Quadratic character on odd-characteristic fields: 0, 1 (nonzero square)
/// or -1. Throws kEvenCharacteristic.
int quadratic_character(const FieldCtx& f, const Element& a);

/// a + a^2 + a^4 + ... + a^(2^(e-1)) as 0 or 1. Throws kOddCharacteristic.
std::uint32_t absolute_trace(const FieldCtx& f, const Element& a);

/// Square root. Characteristic 2: the unique root a^(q/2). Odd
/// characteristic: the smaller of the two roots in canonical order, or
/// nullopt when a is a non-square.
std::optional<Element> sqrt(const FieldCtx& f, const Element& a);

/// One root z of z^2 + z = t in characteristic 2 (the other is z + 1), or
/// nullopt when absolute_trace(t) = 1. Throws kOddCharacteristic.
std::optional<Element> artin_schreier_root(const FieldCtx& f, const Element& t);

/// Least element (canonical order) generating the multiplicative group.
Element least_primitive_element(const FieldCtx& f);

}  // namespace nmds

#endif  // NMDS_FIELD_HPP
