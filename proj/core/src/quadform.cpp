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

#include "nmds/quadform.hpp"

#include "nmds/error.hpp"

namespace nmds {
namespace {

void require_odd(const FieldCtx& f) {
  if (f.is_even()) {
    throw Error(ErrorCode::kEvenCharacteristic, "quadratic form counts need odd q");
  }
}

std::int64_t ipow(std::int64_t base, std::uint64_t exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t checked_count(std::int64_t v) {
  if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative point count");
  return static_cast<std::uint64_t>(v);
}

Element determinant(const FieldCtx& f, std::vector<std::vector<Element>> m) {
  const std::size_t n = m.size();
  Element det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && f.is_zero(m[pivot][c])) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const Element inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m[r][c])) continue;
      const Element factor = f.mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[c][k]));
    }
  }
  return det;
}

}  // namespace

QuadraticForm::QuadraticForm(const FieldCtx& f, std::vector<std::vector<Element>> m)
    : field_(f), matrix_(std::move(m)), det_(determinant(f, matrix_)) {}

QuadraticForm QuadraticForm::from_matrix(const FieldCtx& f,
                                         std::vector<std::vector<Element>> matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "quadratic form needs at least one variable");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidArgument, "coefficient matrix is not square");
    for (const auto& a : row) f.check(a);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorCode::kInvalidArgument, "coefficient matrix is not symmetric");
      }
    }
  }
  return QuadraticForm(f, std::move(matrix));
}

QuadraticForm QuadraticForm::diagonal(const FieldCtx& f, std::span<const Element> d) {
  std::vector<std::vector<Element>> m(d.size(), std::vector<Element>(d.size(), f.zero()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return from_matrix(f, std::move(m));
}

QuadraticForm QuadraticForm::g(const FieldCtx& f) {
  const Element z = f.zero();
  const Element m2 = f.from_int(-2);
  return from_matrix(f, {{z, z, m2}, {z, f.one(), z}, {m2, z, f.from_int(-1)}});
}

Element QuadraticForm::evaluate(std::span<const Element> x) const {
  if (x.size() != arity()) throw Error(ErrorCode::kInvalidArgument, "wrong number of variables");
  Element sum = field_.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (field_.is_zero(matrix_[i][j])) continue;
      sum = field_.add(sum, field_.mul(matrix_[i][j], field_.mul(x[i], x[j])));
    }
  }
  return sum;
}

std::int64_t nu(const FieldCtx& f, const Element& a) {
  return f.is_zero(a) ? static_cast<std::int64_t>(f.order()) - 1 : -1;
}

std::int64_t mu(const FieldCtx& f, const Element& a) { return f.is_zero(a) ? 1 : 0; }

std::uint64_t count_full_space(const QuadraticForm& form, const Element& delta) {
  const FieldCtx& f = form.field();
  require_odd(f);
  if (!form.nondegenerate()) throw Error(ErrorCode::kDegenerate, "form has zero determinant");
  const auto q = static_cast<std::int64_t>(f.order());
  const std::size_t n = form.arity();
  const Element sign = n % 4 < 2 ? f.one() : f.from_int(-1);  // (-1)^floor(n/2)
  if (n % 2 == 0) {
    const int chi = quadratic_character(f, f.mul(sign, form.det()));
    return checked_count(ipow(q, n - 1) + nu(f, delta) * ipow(q, (n - 2) / 2) * chi);
  }
  const int chi = quadratic_character(f, f.mul(sign, f.mul(delta, form.det())));
  return checked_count(ipow(q, n - 1) + ipow(q, (n - 1) / 2) * chi);
}

std::uint64_t count_g_restricted_full(const FieldCtx& f, const Element& delta) {
  require_odd(f);
  const auto q = static_cast<std::int64_t>(f.order());
  return checked_count(q * q - 2 * q + 1 - nu(f, delta) + quadratic_character(f, delta));
}

std::uint64_t count_g_restricted_punctured(const FieldCtx& f, const Element& delta) {
  require_odd(f);
  const auto q = static_cast<std::int64_t>(f.order());
  const int eta_minus_one = quadratic_character(f, f.from_int(-1));
  return checked_count(q - 2 + nu(f, delta) + mu(f, delta) -
                       quadratic_character(f, delta) * (1 + eta_minus_one));
}

std::uint64_t brute_count(const QuadraticForm& form, const Element& delta,
                          std::span<const Domain> restriction) {
  const FieldCtx& f = form.field();
  const std::size_t n = form.arity();
  if (restriction.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "restriction length differs from arity");
  }
  f.check(delta);
  const auto all = f.elements();
  std::vector<std::vector<Element>> values(n);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    switch (restriction[i]) {
      case Domain::kAll: values[i] = all; break;
      case Domain::kNonzero: values[i].assign(all.begin() + 1, all.end()); break;
      case Domain::kZero: values[i] = {f.zero()}; break;
    }
    if (values[i].empty()) return 0;
    if (points > kMaxBruteForcePoints / values[i].size()) {
      throw Error(ErrorCode::kTooLarge, "brute-force domain exceeds " +
                                            std::to_string(kMaxBruteForcePoints) + " points");
    }
    points *= values[i].size();
  }
  std::vector<std::size_t> odometer(n, 0);
  std::vector<Element> x(n);
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = values[i][odometer[i]];
    if (form.evaluate(x) == delta) ++count;
    std::size_t i = 0;
    while (i < n && ++odometer[i] == values[i].size()) odometer[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace nmds
