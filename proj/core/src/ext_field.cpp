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

#include "nmds/ext_field.hpp"

#include <algorithm>

#include "nmds/error.hpp"

namespace nmds {
namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t n = p - 2;
  while (n > 0) {
    if (n & 1) result = result * base % p;
    base = base * base % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Left inverse of a full-column-rank rows x cols matrix over GF(p), as a
// cols x rows row-major matrix.
std::vector<std::uint32_t> left_inverse(std::vector<std::vector<std::uint32_t>> m,
                                        std::uint32_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    m[r].resize(cols + rows, 0);
    m[r][cols + r] = 1;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = c;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) throw Error(ErrorCode::kInvalidArgument, "embedding is not injective");
    std::swap(m[c], m[pivot]);
    const std::uint64_t inv = inverse_mod(m[c][c], p);
    for (auto& v : m[c]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (std::size_t k = 0; k < cols + rows; ++k) {
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + (p - factor) * m[c][k]) % p);
      }
    }
  }
  std::vector<std::uint32_t> out(cols * rows);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) out[i * rows + j] = m[i][cols + j];
  }
  return out;
}

}  // namespace

ExtFieldCtx ExtFieldCtx::make(const FieldCtx& base, const ExtOptions& options) {
  const std::uint32_t p = base.characteristic();
  const unsigned e = base.degree();
  const std::uint64_t q = base.order();
  ExtFieldCtx ctx(base, FieldCtx::make(p, 2 * e, options.modulus));
  const FieldCtx& ext = ctx.ext_;
  const unsigned d = 2 * e;

  // x -> x^q is GF(p)-linear; column j holds (X^j)^q.
  ctx.frobenius_matrix_.assign(static_cast<std::size_t>(d) * d, 0);
  for (unsigned j = 0; j < d; ++j) {
    std::vector<std::uint32_t> basis(d, 0);
    basis[j] = 1;
    const Element image = ext.pow(ext.from_coeffs(basis), q);
    for (unsigned i = 0; i < d; ++i) ctx.frobenius_matrix_[i * d + j] = image.coeffs()[i];
  }

  ctx.primitive_ = least_primitive_element(ext);
  ctx.minus_one_ = ext.neg(ext.one());

  // GF(q) inside GF(q^2) is {0} together with the powers of g^(q+1).
  const Element sub_gen = ext.pow(ctx.primitive_, q + 1);
  std::optional<Element> theta;
  Element s = ext.one();
  const auto& modulus = base.modulus();
  // Only the degree-1 modulus x has the root 0, and 0 is least in canonical order.
  if (modulus[0] == 0) theta = ext.zero();
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    Element value = ext.zero();
    for (std::size_t i = modulus.size(); i-- > 0;) {
      value = ext.add(ext.mul(value, s), ext.from_int(modulus[i]));
    }
    if (ext.is_zero(value) && (!theta || s < *theta)) theta = s;
    s = ext.mul(s, sub_gen);
  }
  if (!theta) throw Error(ErrorCode::kInvalidArgument, "base modulus has no root in GF(q^2)");

  ctx.theta_powers_.resize(e);
  ctx.theta_powers_[0] = ext.one();
  for (unsigned i = 1; i < e; ++i) ctx.theta_powers_[i] = ext.mul(ctx.theta_powers_[i - 1], *theta);

  std::vector<std::vector<std::uint32_t>> embedding(d, std::vector<std::uint32_t>(e));
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned r = 0; r < d; ++r) embedding[r][i] = ctx.theta_powers_[i].coeffs()[r];
  }
  ctx.projection_ = left_inverse(std::move(embedding), p);

  const Element one = base.one();
  std::size_t rank = options.alpha_rank;
  bool found = false;
  for (std::uint64_t i = 0; i < ext.order() && !found; ++i) {
    const Element x = ext.element_at(i);
    const Element tr = ctx.trace(x);
    const bool valid = base.is_even() ? tr == one : (base.is_zero(tr) && !ctx.in_base(x));
    if (!valid) continue;
    if (rank == 0) {
      ctx.alpha_ = x;
      found = true;
    } else {
      --rank;
    }
  }
  if (!found) throw Error(ErrorCode::kInvalidArgument, "alpha rank out of range");
  ctx.alpha_conj_diff_ = ext.sub(ctx.alpha_, ctx.frobenius(ctx.alpha_));
  ctx.alpha_norm_ = ctx.norm(ctx.alpha_);

  const Element step = ext.pow(ctx.primitive_, q - 1);
  ctx.unit_circle_.reserve(q + 1);
  Element x = ext.one();
  for (std::uint64_t k = 0; k <= q; ++k) {
    ctx.unit_circle_.push_back(x);
    if (x != ctx.minus_one_) ctx.domain_.push_back(x);
    x = ext.mul(x, step);
  }
  return ctx;
}

Element ExtFieldCtx::embed(const Element& a) const {
  base_.check(a);
  Element x = ext_.zero();
  const auto coeffs = a.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) x = ext_.add(x, ext_.scale(theta_powers_[i], coeffs[i]));
  }
  return x;
}

bool ExtFieldCtx::in_base(const Element& x) const { return frobenius(x) == x; }

Element ExtFieldCtx::project(const Element& x) const {
  ext_.check(x);
  const unsigned e = base_.degree();
  const unsigned d = ext_.degree();
  const std::uint32_t p = base_.characteristic();
  const auto xc = x.coeffs();
  std::vector<std::uint32_t> coeffs(e);
  for (unsigned i = 0; i < e; ++i) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j < d; ++j) s += static_cast<std::uint64_t>(projection_[i * d + j]) * xc[j];
    coeffs[i] = static_cast<std::uint32_t>(s % p);
  }
  Element a = base_.from_coeffs(coeffs);
  if (embed(a) != x) throw Error(ErrorCode::kInvalidArgument, "element is not in GF(q)");
  return a;
}

Element ExtFieldCtx::frobenius(const Element& x) const {
  return ext_.apply_linear(frobenius_matrix_, x);
}

Element ExtFieldCtx::trace(const Element& x) const {
  return project(ext_.add(x, frobenius(x)));
}

Element ExtFieldCtx::norm(const Element& x) const {
  return project(ext_.mul(x, frobenius(x)));
}

std::pair<Element, Element> ExtFieldCtx::decompose(const Element& b) const {
  const Element b2 = ext_.div(ext_.sub(b, frobenius(b)), alpha_conj_diff_);
  const Element b1 = ext_.sub(b, ext_.mul(b2, alpha_));
  return {project(b1), project(b2)};
}

Element ExtFieldCtx::compose(const Element& b1, const Element& b2) const {
  return ext_.add(embed(b1), ext_.mul(embed(b2), alpha_));
}

}  // namespace nmds
