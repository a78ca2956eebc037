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

#include <gtest/gtest.h>

#include <array>

#include "nmds/error.hpp"
#include "nmds/primes.hpp"
#include "nmds/quadform.hpp"

namespace nmds {
namespace {

using D = Domain;

FieldCtx field_of(std::uint64_t q) {
  const auto pp = *as_prime_power(q);
  return FieldCtx::make(pp.p, pp.e);
}

constexpr std::array<D, 3> kAll3 = {D::kAll, D::kAll, D::kAll};
constexpr std::array<D, 3> kRestrictedFull = {D::kNonzero, D::kAll, D::kNonzero};
constexpr std::array<D, 3> kRestrictedPunctured = {D::kZero, D::kNonzero, D::kNonzero};

TEST(QuadraticForm, GHasDeterminantMinusFour) {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const FieldCtx f = field_of(q);
    const auto g = QuadraticForm::g(f);
    EXPECT_EQ(g.det(), f.from_int(-4));
    EXPECT_TRUE(g.nondegenerate());
    for (const auto& x1 : f.elements()) {
      for (const auto& x3 : f.elements()) {
        const Element x2 = f.add(x1, x3);
        const std::array<Element, 3> x{x1, x2, x3};
        const Element expected = f.sub(f.sub(f.square(x2), f.square(x3)),
                                       f.mul(f.from_int(4), f.mul(x1, x3)));
        EXPECT_EQ(g.evaluate(x), expected);
      }
    }
  }
}

TEST(QuadraticForm, RejectsAsymmetricMatrix) {
  const FieldCtx f = FieldCtx::make(5, 1);
  std::vector<std::vector<Element>> m = {{f.one(), f.one()}, {f.zero(), f.one()}};
  EXPECT_THROW(QuadraticForm::from_matrix(f, m), Error);
}

TEST(NuMu, Values) {
  const FieldCtx f = FieldCtx::make(7, 1);
  EXPECT_EQ(nu(f, f.zero()), 6);
  EXPECT_EQ(nu(f, f.from_int(3)), -1);
  EXPECT_EQ(mu(f, f.zero()), 1);
  EXPECT_EQ(mu(f, f.one()), 0);
}

TEST(CountFullSpace, Examples) {
  const FieldCtx f = FieldCtx::make(7, 1);
  const auto g = QuadraticForm::g(f);
  EXPECT_EQ(count_full_space(g, f.zero()), 49u);
  EXPECT_EQ(count_full_space(g, f.one()), 56u);
  const std::array<Element, 2> d{f.one(), f.from_int(-1)};
  EXPECT_EQ(count_full_space(QuadraticForm::diagonal(f, d), f.zero()), 13u);
}

TEST(CountFullSpace, Errors) {
  const FieldCtx f = FieldCtx::make(5, 1);
  const std::array<Element, 2> d{f.one(), f.zero()};
  try {
    count_full_space(QuadraticForm::diagonal(f, d), f.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
  const FieldCtx f2 = FieldCtx::make(2, 2);
  const std::array<Element, 1> one{f2.one()};
  try {
    count_full_space(QuadraticForm::diagonal(f2, one), f2.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenCharacteristic);
  }
  try {
    count_g_restricted_full(f2, f2.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenCharacteristic);
  }
}

TEST(RestrictedCounts, Examples) {
  const FieldCtx f = FieldCtx::make(7, 1);
  EXPECT_EQ(count_g_restricted_full(f, f.zero()), 30u);
  EXPECT_EQ(count_g_restricted_full(f, f.from_int(3)), 36u);
  EXPECT_EQ(count_g_restricted_full(f, f.from_int(2)), 38u);
  EXPECT_EQ(count_g_restricted_punctured(f, f.zero()), 12u);
  EXPECT_EQ(count_g_restricted_punctured(f, f.from_int(3)), 4u);
  EXPECT_EQ(count_g_restricted_punctured(f, f.from_int(2)), 4u);
  EXPECT_EQ(brute_count(QuadraticForm::g(f), f.zero(), kRestrictedFull), 30u);
}

TEST(BruteCount, Trivial) {
  const FieldCtx f = FieldCtx::make(5, 1);
  const std::array<Element, 1> one{f.one()};
  const std::array<D, 1> all{D::kAll};
  EXPECT_EQ(brute_count(QuadraticForm::diagonal(f, one), f.zero(), all), 1u);
  EXPECT_THROW(brute_count(QuadraticForm::g(f), f.zero(), all), Error);
}

// Diagonal forms of arities 1..4 with a non-square somewhere, plus g.
std::vector<QuadraticForm> sample_forms(const FieldCtx& f) {
  Element nonsquare = f.one();
  for (const auto& a : f.elements()) {
    if (quadratic_character(f, a) == -1) {
      nonsquare = a;
      break;
    }
  }
  std::vector<QuadraticForm> forms{QuadraticForm::g(f)};
  std::vector<Element> d;
  for (int n = 1; n <= 4; ++n) {
    d.push_back(n % 2 == 0 ? nonsquare : f.from_int(n));
    if (!f.is_zero(d.back())) forms.push_back(QuadraticForm::diagonal(f, d));
  }
  return forms;
}

TEST(OracleEquivalence, FullSpaceAndSumRule) {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const FieldCtx f = field_of(q);
    for (const auto& form : sample_forms(f)) {
      if (!form.nondegenerate()) continue;
      const std::vector<D> all(form.arity(), D::kAll);
      std::uint64_t total = 0;
      for (const auto& delta : f.elements()) {
        const std::uint64_t n = count_full_space(form, delta);
        EXPECT_EQ(n, brute_count(form, delta, all)) << "q=" << q << " n=" << form.arity();
        total += n;
      }
      std::uint64_t qn = 1;
      for (std::size_t i = 0; i < form.arity(); ++i) qn *= q;
      EXPECT_EQ(total, qn);
    }
  }
}

TEST(OracleEquivalence, RestrictedCountsAndSumRules) {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const FieldCtx f = field_of(q);
    const auto g = QuadraticForm::g(f);
    std::uint64_t full = 0;
    std::uint64_t punctured = 0;
    for (const auto& delta : f.elements()) {
      const std::uint64_t a = count_g_restricted_full(f, delta);
      const std::uint64_t b = count_g_restricted_punctured(f, delta);
      EXPECT_EQ(a, brute_count(g, delta, kRestrictedFull));
      EXPECT_EQ(b, brute_count(g, delta, kRestrictedPunctured));
      full += a;
      punctured += b;

      // Inclusion-exclusion over x1 = 0 and x3 = 0.
      const std::array<D, 3> x1_zero{D::kZero, D::kAll, D::kAll};
      const std::array<D, 3> x3_zero{D::kAll, D::kAll, D::kZero};
      const std::array<D, 3> both_zero{D::kZero, D::kAll, D::kZero};
      const auto n1 = static_cast<std::int64_t>(brute_count(g, delta, kAll3));
      const auto n2 = static_cast<std::int64_t>(brute_count(g, delta, x1_zero));
      const auto n3 = static_cast<std::int64_t>(brute_count(g, delta, x3_zero));
      const auto n4 = static_cast<std::int64_t>(brute_count(g, delta, both_zero));
      EXPECT_EQ(n1 - n2 - n3 + n4, static_cast<std::int64_t>(a));
    }
    EXPECT_EQ(full, (q - 1) * q * (q - 1));
    EXPECT_EQ(punctured, (q - 1) * (q - 1));
    if (q == 7) {
      EXPECT_EQ(full, 252u);
      EXPECT_EQ(punctured, 36u);
    }
  }
}

}  // namespace
}  // namespace nmds
