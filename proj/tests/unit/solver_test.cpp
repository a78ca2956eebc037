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

#include <map>

#include "naive.hpp"
#include "nmds/primes.hpp"
#include "nmds/solver.hpp"

namespace nmds {
namespace {

ExtFieldCtx ext_of(std::uint64_t q, std::size_t alpha_rank = 0) {
  const auto pp = *as_prime_power(q);
  ExtOptions opts;
  opts.alpha_rank = alpha_rank;
  return ExtFieldCtx::make(FieldCtx::make(pp.p, pp.e), opts);
}

std::vector<std::uint64_t> census_column(const Census& c, bool tallied) {
  std::vector<std::uint64_t> out;
  for (const auto& r : c.rows) out.push_back(tallied ? r.tallied : r.predicted);
  return out;
}

TEST(ClassifyCase, TrivialCases) {
  for (std::uint64_t q : {4, 7}) {
    const ExtFieldCtx ctx = ext_of(q);
    const FieldCtx& f = ctx.base();
    const auto zero = ctx.ext().zero();
    const auto a = classify_case(EquationInstance(ctx, zero, f.zero()));
    EXPECT_EQ(a.id, CaseId::kI);
    EXPECT_EQ(a.predicted_count, q);
    EXPECT_EQ(count_solutions(EquationInstance(ctx, zero, f.one())), 0u);
    const auto iv = classify_case(EquationInstance::from_parts(ctx, f.zero(), f.one(), f.zero()));
    EXPECT_EQ(iv.id, CaseId::kIV);
    EXPECT_EQ(iv.predicted_count, 1u);
  }
}

TEST(ClassifyCase, EvenCaseFive) {
  const ExtFieldCtx ctx = ext_of(4);
  const FieldCtx& f = ctx.base();
  const EquationInstance inst(ctx, ctx.alpha(), f.one());
  EXPECT_EQ(inst.b1(), f.zero());
  EXPECT_EQ(inst.b2(), f.one());
  const auto a = classify_case(inst);
  EXPECT_EQ(a.id, CaseId::kV);
  EXPECT_EQ(a.predicted_count, 1u);
  EXPECT_EQ(a.label(), "v");
}

TEST(ClassifyCase, OddDiscriminant) {
  const ExtFieldCtx ctx = ext_of(7);
  const FieldCtx& f = ctx.base();
  const EquationInstance inst = EquationInstance::from_parts(ctx, f.one(), f.zero(), f.one());
  const auto a = classify_case(inst);
  ASSERT_TRUE(a.discriminant);
  const Element expected = f.div(f.from_int(-5), f.mul(f.from_int(4), ctx.alpha_norm()));
  EXPECT_EQ(*a.discriminant, expected);
  EXPECT_EQ(a.predicted_count,
            static_cast<std::uint64_t>(1 + quadratic_character(f, expected)));
  EXPECT_EQ(a.predicted_count, brute_solutions(inst).size());
}

TEST(Solve, CaseOneReturnsDomain) {
  const ExtFieldCtx ctx = ext_of(3);
  const auto xs = solve(EquationInstance(ctx, ctx.ext().zero(), ctx.base().zero()));
  EXPECT_EQ(xs.size(), 3u);
  EXPECT_EQ(xs, brute_solutions(EquationInstance(ctx, ctx.ext().zero(), ctx.base().zero())));
}

TEST(Solve, OddCaseFourClosedForm) {
  const ExtFieldCtx ctx = ext_of(11);
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  for (const auto& b1 : f.elements()) {
    for (const auto& b2 : f.elements()) {
      if (f.is_zero(b2)) continue;
      const EquationInstance inst = EquationInstance::from_parts(ctx, b1, b2, f.zero());
      // x = -1 + 2 b2 alpha / b
      const Element x = ext.add(
          ctx.minus_one(),
          ext.div(ext.mul(ctx.embed(f.add(b2, b2)), ctx.alpha()), inst.b()));
      EXPECT_EQ(solve(inst), std::vector<Element>{x});
    }
  }
}

TEST(Solve, EvenCaseFiveClosedForm) {
  const ExtFieldCtx ctx = ext_of(8);
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  for (const auto& b1 : f.elements()) {
    for (const auto& c : f.elements()) {
      if (f.is_zero(c)) continue;
      const EquationInstance inst = EquationInstance::from_parts(ctx, b1, c, c);
      const Element y =
          *sqrt(f, f.add(f.mul(f.square(c), ctx.alpha_norm()), f.mul(c, b1)));
      const Element x = ext.div(
          ext.add(ext.add(ctx.embed(y), inst.b()), ext.mul(ctx.embed(c), ctx.alpha())), inst.b());
      const auto xs = solve(inst);
      ASSERT_EQ(xs.size(), 1u);
      EXPECT_EQ(xs.front(), x);
    }
  }
}

// solve == scan of D, counts == closed-form counts, and the global identity
// sum N(b, c) = q^3, for every pair.
TEST(Solve, ExhaustiveOracleEquivalence) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const ExtFieldCtx ctx = ext_of(q);
    const auto base = ctx.base().elements();
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
      const Element b = ctx.ext().element_at(i);
      for (const auto& c : base) {
        const EquationInstance inst(ctx, b, c);
        const auto scanned = brute_solutions(inst);
        const auto a = classify_case(inst);
        ASSERT_EQ(solve(inst), scanned) << "q=" << q << " case " << a.label();
        ASSERT_EQ(a.predicted_count, scanned.size()) << "q=" << q << " case " << a.label();
        total += a.predicted_count;

        if (!ctx.ext().is_zero(b) && !ctx.base().is_zero(c)) {
          if (ctx.is_even() && inst.b2() != c) {
            ASSERT_TRUE(a.discriminant);
            EXPECT_EQ(a.predicted_count, 2u - 2u * absolute_trace(ctx.base(), *a.discriminant));
          } else if (!ctx.is_even()) {
            ASSERT_TRUE(a.discriminant);
            EXPECT_EQ(static_cast<int>(a.predicted_count),
                      1 + quadratic_character(ctx.base(), *a.discriminant));
          }
        }
      }
    }
    EXPECT_EQ(total, q * q * q);
  }
}

TEST(Solve, CountHistogramMatchesIndependentModel) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 11, 13, 16}) {
    const ExtFieldCtx ctx = ext_of(q);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
      for (const auto& c : ctx.base().elements()) {
        ++hist[count_solutions(EquationInstance(ctx, ctx.ext().element_at(i), c))];
      }
    }
    EXPECT_EQ(hist, oracle::solution_count_histogram(oracle::QuadraticExtension(q))) << q;
  }
}

TEST(Solve, CountMultisetIndependentOfAlpha) {
  for (std::uint64_t q : {4, 5, 9}) {
    std::map<std::uint64_t, std::uint64_t> hist[2];
    for (std::size_t rank = 0; rank < 2; ++rank) {
      const ExtFieldCtx ctx = ext_of(q, rank);
      for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
        for (const auto& c : ctx.base().elements()) {
          ++hist[rank][count_solutions(EquationInstance(ctx, ctx.ext().element_at(i), c))];
        }
      }
    }
    EXPECT_EQ(hist[0], hist[1]);
  }
}

TEST(Census, TabulatedSmallCases) {
  const Census c3 = case_census(ext_of(3));
  EXPECT_EQ(census_column(c3, false),
            (std::vector<std::uint64_t>{1, 2, 2, 4, 2, 2, 4, 4, 0, 6, 0}));
  EXPECT_EQ(census_column(c3, true), census_column(c3, false));
  EXPECT_TRUE(c3.matches());
  EXPECT_EQ(c3.total_tallied(), 27u);

  const Census c7 = case_census(ext_of(7));
  EXPECT_TRUE(c7.matches());
}

TEST(Census, EvenTabulatedFormulas) {
  const Census c4 = case_census(ext_of(4));
  EXPECT_EQ(census_column(c4, false),
            (std::vector<std::uint64_t>{1, 3, 3, 12, 12, 12, 6, 12, 3}));
  EXPECT_EQ(c4.total_tallied(), 64u);
  // Enumeration puts 3 pairs in (vi.2) and 6 in (vii.2): the tabulated
  // values for these two rows are interchanged.
  EXPECT_EQ(census_column(c4, true),
            (std::vector<std::uint64_t>{1, 3, 3, 12, 12, 12, 3, 12, 6}));
  EXPECT_FALSE(c4.matches());
}

TEST(Census, CorrectedFormsMatchEnumeration) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    const ExtFieldCtx ctx = ext_of(q);
    const Census c = case_census(ctx, ClosedForm::kCorrected);
    EXPECT_TRUE(c.matches()) << q;
    EXPECT_EQ(c.total_tallied(), q * q * q);
    std::uint64_t predicted = 0;
    for (const auto& r : c.rows) predicted += r.predicted;
    EXPECT_EQ(predicted, q * q * q);
  }
}

TEST(Census, TabulatedAgreesWithEnumerationOnlyForThreeModFour) {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 27}) {
    EXPECT_EQ(case_census(ext_of(q)).matches(), q % 4 == 3) << q;
  }
}

}  // namespace
}  // namespace nmds
