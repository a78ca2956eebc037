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

// Point counts N(f = delta; S) for quadratic forms over odd-characteristic
// GF(q): closed forms for nondegenerate f on GF(q)^n, closed forms for
// g(x1,x2,x3) = x2^2 - x3^2 - 4 x1 x3 on two restricted domains, and an
// exhaustive counter used as the oracle for all of them.

#ifndef NMDS_QUADFORM_HPP
#define NMDS_QUADFORM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nmds/field.hpp"

namespace nmds {

/// f(x) = sum_{i,j} a_ij x_i x_j with a symmetric coefficient matrix.
class QuadraticForm {
 public:
  /// Throws kInvalidArgument for a non-square or non-symmetric matrix.
  static QuadraticForm from_matrix(const FieldCtx& f, std::vector<std::vector<Element>> matrix);
  /// sum_i d_i x_i^2.
  static QuadraticForm diagonal(const FieldCtx& f, std::span<const Element> d);
  /// x2^2 - x3^2 - 4 x1 x3; coefficient matrix [[0,0,-2],[0,1,0],[-2,0,-1]].
  static QuadraticForm g(const FieldCtx& f);

  const FieldCtx& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return matrix_.size(); }
  const std::vector<std::vector<Element>>& matrix() const noexcept { return matrix_; }
  const Element& det() const noexcept { return det_; }
  bool nondegenerate() const { return !field_.is_zero(det_); }

  Element evaluate(std::span<const Element> x) const;

 private:
  QuadraticForm(const FieldCtx& f, std::vector<std::vector<Element>> m);

  FieldCtx field_;
  std::vector<std::vector<Element>> matrix_;
  Element det_;
};

/// nu(0) = q - 1, nu(a) = -1 otherwise.
std::int64_t nu(const FieldCtx& f, const Element& a);
/// mu(0) = 1, mu(a) = 0 otherwise.
std::int64_t mu(const FieldCtx& f, const Element& a);

/// N(f = delta; GF(q)^n) for nondegenerate f, q odd.
/// Throws kEvenCharacteristic or kDegenerate.
std::uint64_t count_full_space(const QuadraticForm& form, const Element& delta);

/// N(g = delta; GF(q)* x GF(q) x GF(q)*) = q^2 - 2q + 1 - nu(delta) + eta(delta).
std::uint64_t count_g_restricted_full(const FieldCtx& f, const Element& delta);

/// N(g = delta; {0} x GF(q)* x GF(q)*)
///   = q - 2 + nu(delta) + mu(delta) - eta(delta)(1 + eta(-1)).
std::uint64_t count_g_restricted_punctured(const FieldCtx& f, const Element& delta);

enum class Domain { kAll, kNonzero, kZero };

/// Exhaustive count of x in the per-coordinate domain with f(x) = delta.
/// Throws kTooLarge past kMaxBruteForcePoints points, kInvalidArgument when
/// the restriction does not match the arity.
std::uint64_t brute_count(const QuadraticForm& form, const Element& delta,
                          std::span<const Domain> restriction);

inline constexpr std::uint64_t kMaxBruteForcePoints = 50'000'000;

}  // namespace nmds

#endif  // NMDS_QUADFORM_HPP
