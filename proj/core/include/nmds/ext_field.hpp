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

#ifndef NMDS_EXT_FIELD_HPP
#define NMDS_EXT_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nmds/field.hpp"

namespace nmds {

struct ExtOptions {
  /// Degree-2e modulus for GF(q^2); default is the least irreducible one.
  std::optional<Polynomial> modulus;
  /// Which valid alpha to use: 0 is the least one in canonical order.
  std::size_t alpha_rank = 0;
};

/// GF(q^2) as a flat extension GF(p^(2e)) together with the embedding of
/// GF(q), the relative trace and norm, a fixed alpha with
///   Tr(alpha) = 1 (p = 2),  Tr(alpha) = 0 and alpha not in GF(q) (p odd),
/// and the unit circle mu_{q+1} = { x : x^(q+1) = 1 } in a fixed order.
///
/// GF(q) keeps its own degree-e representation (the one from `base()`); it
/// is mapped into GF(q^2) through the least root of the base modulus.
/// Immutable after construction.
class ExtFieldCtx {
 public:
  static ExtFieldCtx make(const FieldCtx& base, const ExtOptions& options = {});

  const FieldCtx& base() const noexcept { return base_; }
  const FieldCtx& ext() const noexcept { return ext_; }
  std::uint64_t q() const noexcept { return base_.order(); }
  bool is_even() const noexcept { return base_.is_even(); }

  Element embed(const Element& a) const;
  bool in_base(const Element& x) const;
  /// Inverse of embed. Throws kInvalidArgument when x is not in GF(q).
  Element project(const Element& x) const;

  /// x^q.
  Element frobenius(const Element& x) const;
  /// x + x^q, as an element of GF(q).
  Element trace(const Element& x) const;
  /// x^(q+1), as an element of GF(q).
  Element norm(const Element& x) const;

  const Element& alpha() const noexcept { return alpha_; }
  /// alpha^(q+1) in GF(q).
  const Element& alpha_norm() const noexcept { return alpha_norm_; }
  const Element& primitive() const noexcept { return primitive_; }
  const Element& minus_one() const noexcept { return minus_one_; }

  /// (b1, b2) in GF(q)^2 with b = b1 + b2 * alpha.
  std::pair<Element, Element> decompose(const Element& b) const;
  Element compose(const Element& b1, const Element& b2) const;

  /// mu_{q+1} as (g^(k(q-1)))_{k=0..q}, g the least primitive element.
  std::span<const Element> unit_circle() const noexcept { return unit_circle_; }
  /// The unit circle with -1 removed, in the same order. In characteristic 2
  /// this drops 1.
  std::span<const Element> domain() const noexcept { return domain_; }

 private:
  ExtFieldCtx(FieldCtx base, FieldCtx ext) : base_(std::move(base)), ext_(std::move(ext)) {}

  FieldCtx base_;
  FieldCtx ext_;
  std::vector<std::uint32_t> frobenius_matrix_;  // 2e x 2e, row-major
  std::vector<Element> theta_powers_;           // images of t^i, i < e
  std::vector<std::uint32_t> projection_;       // e x 2e, row-major
  Element alpha_;
  Element alpha_conj_diff_;  // alpha - alpha^q
  Element alpha_norm_;
  Element primitive_;
  Element minus_one_;
  std::vector<Element> unit_circle_;
  std::vector<Element> domain_;
};

}  // namespace nmds

#endif  // NMDS_EXT_FIELD_HPP
