// Copyright 2026 The bernfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bernfact/divergent_series.hpp"

#include <gtest/gtest.h>

#include "bernfact/special_functions.hpp"

namespace bernfact {
namespace {

const PrecisionContext kCtx(30);

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

bool coeff_is(const DivergentTail& t, long j, const BigRational& expected) {
  BoundedReal c = t.coeff(j, kCtx);
  return c.contains(BoundedReal::from_rational(expected, kCtx.working_bits())) &&
         c.radius_double() < 1e-35;
}

// B_2j zeta(2j - 1) / (2j (2j - 1)) for j >= 2.
DivergentTail fk_tail() {
  DivergentTail t;
  t.j_start = 2;
  t.description = "F_k tail";
  t.coeff = [](long j, const PrecisionContext& ctx) {
    return zeta_int(2 * j - 1, ctx) * frac(1, 2 * j * (2 * j - 1)) *
           bernoulli(static_cast<unsigned>(2 * j));
  };
  return t;
}

TEST(StirlingTail, Coefficients) {
  DivergentTail s = stirling_tail();
  EXPECT_EQ(s.j_start, 1);
  EXPECT_TRUE(coeff_is(s, 1, frac(1, 12)));
  EXPECT_TRUE(coeff_is(s, 2, frac(-1, 360)));
  EXPECT_TRUE(coeff_is(s, 3, frac(1, 1260)));
}

TEST(DkTail, Coefficients) {
  DivergentTail d1 = dk_tail(1);
  for (long j = 1; j <= 10; ++j) {
    EXPECT_TRUE(coeff_is(d1, j, bernoulli(2 * j) / BigRational(2 * j * (2 * j - 1))));
  }
  EXPECT_TRUE(coeff_is(dk_tail(2), 1, frac(1, 24)));
  EXPECT_EQ(n_coefficient(4, 2), frac(-1, 30) / BigRational(12 * 8));
  for (long r = 1; r < 20; r += 2) EXPECT_TRUE(n_coefficient(r + 2, 3).is_zero());
  EXPECT_THROW(dk_tail(0), std::domain_error);
}

TEST(EvalOptimal, FkTailTruncationIndices) {
  const long expected_m[] = {4, 7, 10, 13, 16, 20};
  for (long k = 1; k <= 6; ++k) {
    TruncationResult r =
        eval_optimal(fk_tail(), BoundedReal::exact(k, kCtx.working_bits()), kCtx);
    EXPECT_EQ(r.m_opt, expected_m[k - 1]) << "k=" << k;
    EXPECT_FALSE(r.stopped_at_precision);
  }
  TruncationResult r6 =
      eval_optimal(fk_tail(), BoundedReal::exact(6, kCtx.working_bits()), kCtx);
  EXPECT_EQ(format_scientific(r6.remainder_bound), "5.552e-18");
}

TEST(EvalOptimal, ScanInvariants) {
  TruncationResult r =
      eval_optimal(fk_tail(), BoundedReal::exact(3, kCtx.working_bits()), kCtx);
  // Terms strictly decrease up to m_opt and the next one does not.
  DivergentTail t = fk_tail();
  BoundedReal x = BoundedReal::exact(3, kCtx.working_bits());
  auto term = [&](long j) { return t.coeff(j, kCtx) * pow_int(x, -(2 * j - 1)); };
  for (long j = t.j_start; j < r.m_opt; ++j) {
    EXPECT_LT(term(j + 1).compare_abs_mid(term(j)), 0) << j;
  }
  EXPECT_GE(term(r.m_opt + 1).compare_abs_mid(term(r.m_opt)), 0);
  EXPECT_TRUE(abs(r.omitted_term).overlaps(r.remainder_bound));
  EXPECT_EQ(r.theta_lo.compare_mid(BoundedReal::exact(0, 64)), 0);
  EXPECT_EQ(r.theta_hi.compare_mid(BoundedReal::exact(1, 64)), 0);
}

TEST(EvalOptimal, AllZeroTail) {
  DivergentTail t;
  t.j_start = 1;
  t.description = "zero";
  t.coeff = [](long, const PrecisionContext& ctx) {
    return BoundedReal::exact(0, ctx.working_bits());
  };
  TruncationResult r = eval_optimal(t, BoundedReal::exact(2, 64), kCtx);
  EXPECT_TRUE(r.partial_sum.is_exact());
  EXPECT_EQ(mpfr_sgn(r.partial_sum.mid()), 0);
  EXPECT_EQ(mpfr_sgn(r.remainder_bound.mid()), 0);
}

TEST(EvalOptimal, TerminatingTailIsExact) {
  DivergentTail t;
  t.j_start = 1;
  t.j_end = 3;
  t.description = "finite";
  t.coeff = [](long j, const PrecisionContext& ctx) {
    return BoundedReal::exact(j, ctx.working_bits());
  };
  // 1/2 + 2/8 + 3/32 at x = 2
  TruncationResult r = eval_optimal(t, BoundedReal::exact(2, 200), kCtx);
  EXPECT_TRUE(r.enclosure().contains(BoundedReal::from_rational(frac(27, 32), 200)));
  EXPECT_EQ(mpfr_sgn(r.remainder_bound.mid()), 0);
  EXPECT_EQ(r.m_opt, 4);
}

TEST(EvalOptimal, NoDecreaseSignals) {
  BoundedReal small = BoundedReal::from_rational(frac(1, 10), kCtx.working_bits());
  EXPECT_THROW(eval_optimal(stirling_tail(), small, kCtx), NoDecreaseError);
  EXPECT_THROW(eval_optimal(stirling_tail(), BoundedReal::exact(0, 64), kCtx),
               std::domain_error);
}

TEST(EvalOptimal, StirlingEnclosureContainsTrueValue) {
  // The remainder contract: log Gamma(x + 1) lies in the enclosure for every x
  // in the asymptotic regime. Truth from promotion at doubled precision.
  const PrecisionContext hi(60);
  for (long num : {3L, 5L, 7L, 10L, 15L}) {
    BoundedReal x = BoundedReal::from_rational(frac(num, 2), hi.working_bits());
    TruncationResult r = eval_optimal(stirling_tail(), x, kCtx);
    BoundedReal main = log_two_pi(kCtx) / BigRational(2) +
                       (x + BigRational(1, 2)) * log(x) - x;
    BoundedReal approx = main + r.enclosure();
    EXPECT_TRUE(approx.overlaps(log_factorial(x, hi))) << num;
  }
}

TEST(EvalOptimal, StirlingTruncationIndexGrowsWithArgument) {
  // Use a very high precision so the scan is not cut short.
  const PrecisionContext ctx(400);
  long prev = 0;
  for (long x = 1; x <= 12; ++x) {
    TruncationResult r =
        eval_optimal(stirling_tail(), BoundedReal::exact(x, ctx.working_bits()), ctx);
    EXPECT_FALSE(r.stopped_at_precision);
    EXPECT_GE(r.m_opt, prev) << x;
    prev = r.m_opt;
  }
}

TEST(LogFactorial, MatchesExactFactorials) {
  const mpfr_prec_t prec = kCtx.working_bits();
  EXPECT_TRUE(log_factorial(BoundedReal::exact(1, prec), kCtx)
                  .overlaps(BoundedReal::exact(0, prec)));
  for (unsigned n : {2U, 10U, 57U, 1000U}) {
    BoundedReal lf = log_factorial(BoundedReal::exact(n, prec), kCtx);
    EXPECT_TRUE(lf.overlaps(log_integer(factorial(n), prec))) << n;
    EXPECT_TRUE(certifies_digits(lf, 30)) << n;
  }
}

TEST(LogFactorial, ConstantTermIsHalfLogTwoPi) {
  // log n! - (n + 1/2) log n + n tends to 1/2 log 2 pi.
  const mpfr_prec_t prec = kCtx.working_bits();
  BoundedReal n = BoundedReal::exact(100000, prec);
  BoundedReal c = log_factorial(n, kCtx) - (n + BigRational(1, 2)) * log(n) + n;
  BoundedReal diff = c - log_two_pi(kCtx) / BigRational(2);
  EXPECT_LT(std::abs(diff.mid_double()), 1e-6);
}

}  // namespace
}  // namespace bernfact
