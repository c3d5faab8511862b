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

#include "bernfact/asymptotic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bernfact/special_functions.hpp"

namespace bernfact {
namespace {

const PrecisionContext kCtx(30);
const mpfr_prec_t kPrec = kCtx.working_bits();

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

BoundedReal num(long n) { return BoundedReal::exact(n, kPrec); }

BoundedReal value(const ExactConstant& c) {
  return evaluate(c, elementary_symbol_value, kCtx);
}

bool close(const BoundedReal& a, const BoundedReal& b, double tol) {
  return std::abs((a - b).mid_double()) < tol;
}

TEST(ExactConstant, LogsOfRationalsSplitIntoPrimes) {
  const ExactConstant two = ExactConstant::log_of(2);
  const ExactConstant three = ExactConstant::log_of(3);
  EXPECT_EQ(ExactConstant::log_of(12), two * BigRational(2) + three);
  EXPECT_EQ(ExactConstant::log_of(frac(3, 4)), three - two * BigRational(2));
  EXPECT_TRUE(ExactConstant::log_of(1).is_rational());
  EXPECT_THROW(ExactConstant::log_of(0), std::domain_error);
  EXPECT_THROW(ExactConstant::log_of(-2), std::domain_error);
}

TEST(ExactConstant, LogGammaNormalForm) {
  EXPECT_EQ(ExactConstant::log_gamma(4, 1), ExactConstant::log_of(6));
  EXPECT_EQ(ExactConstant::log_gamma(1, 1), ExactConstant());
  EXPECT_EQ(ExactConstant::log_gamma(1, 2), ExactConstant::log_pi() / BigRational(2));
  EXPECT_EQ(ExactConstant::log_gamma(3, 2),
            ExactConstant::log_of(frac(1, 2)) + ExactConstant::log_pi() / BigRational(2));
  EXPECT_EQ(ExactConstant::log_gamma(10, 6), ExactConstant::log_gamma(5, 3));
  EXPECT_EQ(ExactConstant::log_gamma(5, 3),
            ExactConstant::log_of(frac(2, 3)) + ExactConstant::log_gamma(2, 3));
  EXPECT_EQ(ExactConstant::log_glaisher(0), ExactConstant::log_two_pi() / BigRational(2));
}

TEST(ExactConstant, EvaluatesAgainstMpfrLogGamma) {
  for (auto [p, q] : {std::pair{5L, 3L}, {7L, 2L}, {1L, 6L}, {11L, 4L}}) {
    BoundedReal v = value(ExactConstant::log_gamma(p, q));
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_si(x, p, MPFR_RNDN);
    mpfr_div_si(x, x, q, MPFR_RNDN);
    mpfr_lngamma(x, x, MPFR_RNDN);
    EXPECT_NEAR(v.mid_double(), mpfr_get_d(x, MPFR_RNDN), 1e-15) << p << "/" << q;
    mpfr_clear(x);
  }
}

TEST(ExactConstant, PrintsAndCancels) {
  ExactConstant c = ExactConstant(frac(1, 12)) - ExactConstant::log_glaisher(1) * BigRational(2);
  EXPECT_EQ(c.to_string(), "1/12 - 2*log(A_1)");
  EXPECT_TRUE((c - c).is_rational());
  EXPECT_EQ((c - c).to_string(), "0");
  EXPECT_THROW(value(ExactConstant::log_f(0, 2)), std::invalid_argument);
}

TEST(Psi, ConstantTermAndLinearity) {
  AsymptoticForm f({num(2), num(5)}, {num(3), num(0)});
  EXPECT_EQ(psi(f).compare_mid(num(2)), 0);
  EXPECT_EQ(psi(AsymptoticForm({num(0)}, {num(0)})).compare_mid(num(0)), 0);
  AsymptoticForm g({num(-7), num(1), num(4)}, {num(1), num(1), num(1)});
  EXPECT_EQ(psi(f + g).compare_mid(psi(f) + psi(g)), 0);
}

TEST(Rescale, Examples) {
  AsymptoticForm log_x({num(0)}, {num(1)});
  BoundedReal e = exp(num(1));
  EXPECT_TRUE(close(psi(rescale(log_x, e)), num(1), 1e-30));

  AsymptoticForm f({num(3), num(-2)}, {num(1), num(4)});
  AsymptoticForm same = rescale(f, num(1));
  for (int v = 0; v <= 1; ++v) {
    EXPECT_TRUE(same.alpha(v).overlaps(f.alpha(v)));
    EXPECT_TRUE(same.beta(v).overlaps(f.beta(v)));
  }

  AsymptoticForm x_log_x({num(0), num(0)}, {num(0), num(1)});
  AsymptoticForm g = rescale(x_log_x, num(2));
  EXPECT_TRUE(g.alpha(1).overlaps(log(num(2)) * BigRational(2)));
  EXPECT_TRUE(g.beta(1).overlaps(num(2)));
  EXPECT_EQ(psi(g).compare_mid(num(0)), 0);

  EXPECT_THROW(rescale(f, num(0)), std::domain_error);
  EXPECT_THROW(rescale(f, num(-1)), std::domain_error);
}

TEST(Rescale, ConstantShiftsByBetaZeroLogLambda) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<long> lam(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = static_cast<int>(trial % 4);
    AsymptoticForm f(degree);
    for (int v = 0; v <= degree; ++v) {
      f.alpha(v) = BoundedReal::from_rational(frac(coef(rng), 7), kPrec);
      f.beta(v) = BoundedReal::from_rational(frac(coef(rng), 3), kPrec);
    }
    const BoundedReal lambda = BoundedReal::from_rational(frac(lam(rng), 5), kPrec);
    const AsymptoticForm g = rescale(f, lambda);
    EXPECT_TRUE(psi(g).overlaps(psi(f) + f.beta(0) * log(lambda))) << trial;
    // g(x) = f(lambda x) pointwise.
    const BoundedReal x = BoundedReal::from_rational(frac(13, 4), kPrec);
    EXPECT_TRUE(evaluate(g, x).overlaps(evaluate(f, lambda * x))) << trial;
  }
}

TEST(Rescale, ExactAndNumericAgree) {
  ExactForm f(2);
  f.alpha(0) = ExactConstant::euler_gamma();
  f.alpha(2) = ExactConstant::log_of(3);
  f.beta(0) = frac(1, 12);
  f.beta(1) = frac(-1, 2);
  f.beta(2) = 1;
  const ExactForm g = rescale(f, frac(3, 2));
  const AsymptoticForm gn = rescale(to_numeric(f, elementary_symbol_value, kCtx),
                                    BoundedReal::from_rational(frac(3, 2), kPrec));
  for (int v = 0; v <= 2; ++v) {
    EXPECT_TRUE(value(g.alpha(v)).overlaps(gn.alpha(v))) << v;
    EXPECT_TRUE(value(g.beta(v)).overlaps(gn.beta(v))) << v;
  }
  EXPECT_THROW(rescale(f, BigRational(0)), std::domain_error);
}

TEST(PowerSums, ClosedFormMatchesDirectSummation) {
  for (unsigned r = 0; r <= 12; ++r) {
    BigRational direct = 0;
    for (long n = 0; n <= 15; ++n) {
      if (n > 0) direct += pow(BigRational(n), static_cast<long>(r));
      EXPECT_EQ(s_r(r, n), direct) << "r=" << r << " n=" << n;
    }
  }
  EXPECT_EQ(s_r(0, 9), BigRational(9));
  EXPECT_EQ(s_r(1, 9), BigRational(45));
  EXPECT_EQ(s_r(2, 5), BigRational(55));
}

TEST(PowerSums, Parity) {
  // S_r(x) - x^(r+1)/(r+1) - x^r/2 has only powers of the parity of r - 1.
  for (unsigned r = 1; r <= 14; ++r) {
    const std::vector<BigRational> c = power_sum_polynomial(r);
    ASSERT_EQ(c.size(), r + 2);
    EXPECT_EQ(c[r + 1], frac(1, r + 1));
    EXPECT_EQ(c[r], frac(1, 2));
    EXPECT_TRUE(c[0].is_zero());
    for (unsigned i = 1; i < r; ++i) {
      if ((i + r) % 2 == 0) EXPECT_TRUE(c[i].is_zero()) << r << " " << i;
    }
  }
}

TEST(PowerSums, WeightedSums) {
  auto one = [](long) { return BoundedReal::exact(1, kPrec); };
  for (unsigned r = 0; r <= 8; ++r) {
    BoundedReal n = num(7);
    EXPECT_TRUE(s_r_weighted(r, n, one)
                    .overlaps(BoundedReal::from_rational(s_r(r, 7), kPrec)));
  }
  auto ident = [](long j) { return BoundedReal::exact(j, kPrec); };
  EXPECT_TRUE(s_r_weighted(1, num(1), ident)
                  .overlaps(BoundedReal::from_rational(frac(3, 2), kPrec)));

  // S_r(n; 2 + 3 f) = 2 S_r(n) + 3 S_r(n; f)
  auto f = [](long j) { return BoundedReal::from_rational(harmonic(j), kPrec); };
  auto combo = [&](long j) { return f(j) * BigRational(3) + BigRational(2); };
  for (unsigned r = 0; r <= 6; ++r) {
    BoundedReal n = BoundedReal::from_rational(frac(17, 3), kPrec);
    BoundedReal lhs = s_r_weighted(r, n, combo);
    BoundedReal rhs = s_r_weighted(r, n, one) * BigRational(2) +
                      s_r_weighted(r, n, f) * BigRational(3);
    EXPECT_TRUE(lhs.overlaps(rhs)) << r;
  }

  auto exact_ident = [](long j) { return ExactConstant(BigRational(j)); };
  EXPECT_EQ(s_r_weighted(1, BigRational(1), exact_ident), ExactConstant(frac(3, 2)));
}

TEST(QForm, SmallCases) {
  // r = 0: (n + 1/2) log n - n
  const ExactForm q0 = q_form(0);
  EXPECT_EQ(q0.beta(1), ExactConstant(1));
  EXPECT_EQ(q0.beta(0), ExactConstant(frac(1, 2)));
  EXPECT_EQ(q0.alpha(1), ExactConstant(-1));
  EXPECT_EQ(q0.alpha(0), ExactConstant());

  // r = 1: (n(n+1)/2 + 1/12) log n - n^2/4
  const ExactForm q1 = q_form(1);
  EXPECT_EQ(q1.degree(), 2);
  EXPECT_EQ(q1.beta(2), ExactConstant(frac(1, 2)));
  EXPECT_EQ(q1.beta(1), ExactConstant(frac(1, 2)));
  EXPECT_EQ(q1.beta(0), ExactConstant(frac(1, 12)));
  EXPECT_EQ(q1.alpha(2), ExactConstant(frac(-1, 4)));
  EXPECT_EQ(q1.alpha(1), ExactConstant());
}

BoundedReal log_power_product(unsigned r, long n) {
  BigInt prod = 1;
  for (long v = 1; v <= n; ++v) {
    unsigned long e = 1;
    for (unsigned i = 0; i < r; ++i) e *= static_cast<unsigned long>(v);
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(v), e);
    prod *= t;
  }
  return log_integer(prod, kPrec);
}

TEST(QForm, ApproachesExactPowerProducts) {
  // log prod v^(v^r) - log A_r - log Q_r(n) -> 0.
  for (unsigned r : {1U, 2U, 3U}) {
    const BoundedReal a = log_glaisher(r, kCtx);
    double prev = INFINITY;
    for (long n : {10L, 20L, 40L}) {
      const double err =
          std::abs((log_power_product(r, n) - a - q_r_log(r, num(n), kCtx)).mid_double());
      EXPECT_LT(err, prev) << "r=" << r << " n=" << n;
      prev = err;
    }
  }
  const double err20 =
      std::abs((log_power_product(2, 20) - log_glaisher(2, kCtx) -
                q_r_log(2, num(20), kCtx)).mid_double());
  EXPECT_LT(err20, 2e-4);
}

TEST(PForm, OddRHasNoLogTerm) {
  for (unsigned r = 1; r <= 9; r += 2) {
    for (long k = 1; k <= 4; ++k) EXPECT_EQ(p_form(r, k).beta(0), ExactConstant()) << r;
  }
  EXPECT_EQ(p_form(0, 3).beta(0), ExactConstant(frac(1, 36)));
  EXPECT_THROW(p_form(1, 0), std::invalid_argument);
}

TEST(FactorialProductForm, MatchesDirectShapeForSeveralK) {
  // log F_k + k log A + 1/4 log 2 pi + k/2 n(n+1)(log(k n) - 3/2)
  //   + n/2 (log 2 pi k + k/2 - 1 + log n) + (1/4 + k/12 + 1/(12k)) log n
  for (long k = 1; k <= 7; ++k) {
    const ExactConstant log_k = ExactConstant::log_of(k);
    ExactForm expected(2);
    expected.alpha(0) = ExactConstant::log_f(0, k) +
                        ExactConstant::log_glaisher(1) * BigRational(k) +
                        ExactConstant::log_two_pi() / BigRational(4);
    const BigRational half_k = frac(k, 2);
    expected.alpha(2) = (log_k - ExactConstant(frac(3, 2))) * half_k;
    expected.beta(2) = half_k;
    expected.alpha(1) = (log_k - ExactConstant(frac(3, 2))) * half_k +
                        (ExactConstant::log_two_pi() + log_k +
                         ExactConstant(half_k - BigRational(1))) / BigRational(2);
    expected.beta(1) = half_k + frac(1, 2);
    expected.beta(0) = frac(1, 4) + frac(k, 12) + frac(1, 12 * k);
    const ExactForm got = factorial_product_form(k);
    ASSERT_EQ(got.degree(), 2);
    for (int v = 0; v <= 2; ++v) {
      EXPECT_EQ(got.alpha(v), expected.alpha(v)) << "k=" << k << " v=" << v;
      EXPECT_EQ(got.beta(v), expected.beta(v)) << "k=" << k << " v=" << v;
    }
  }
}

TEST(FactorialPowerProductForm, ApproachesExactProduct) {
  // r = 0, k = 2: log prod (2v)! minus the form (without log F_2) tends to
  // log F_2, here taken from its closed form in Gamma values.
  const long k = 2;
  const BoundedReal log_f2 =
      value(ExactConstant::log_glaisher(1) * frac(-5, 2) + ExactConstant(frac(1, 24)) -
            ExactConstant::log_of(2) / BigRational(24) +
            ExactConstant::log_two_pi() / BigRational(2) -
            ExactConstant::log_gamma(1, 2) / BigRational(2));
  auto resolver = [](const Symbol& s, const PrecisionContext& ctx) {
    if (s.kind == Symbol::Kind::log_f) return BoundedReal::exact(0, ctx.working_bits());
    return elementary_symbol_value(s, ctx);
  };
  const AsymptoticForm form =
      to_numeric(factorial_power_product_form(0, k), resolver, kCtx);
  double prev = INFINITY;
  for (long n : {10L, 20L, 40L}) {
    BigInt prod = 1;
    for (long v = 1; v <= n; ++v) prod *= factorial(static_cast<unsigned>(k * v));
    const BoundedReal diff = log_integer(prod, kPrec) - evaluate(form, num(n)) - log_f2;
    EXPECT_LT(std::abs(diff.mid_double()), prev) << n;
    prev = std::abs(diff.mid_double());
    // Leading error is (1/(24k) + 1/24) / n.
    EXPECT_LT(prev, 0.1 / static_cast<double>(n)) << n;
  }
  // Same through p_rk_log and q_r_log directly.
  const BoundedReal n10 = num(10);
  const BoundedReal assembled =
      log_glaisher(0, kCtx) / BigRational(2) + log_glaisher(1, kCtx) * BigRational(k) +
      p_rk_log(0, k, n10, kCtx) + q_r_log(0, n10, kCtx) / BigRational(2) +
      q_r_log(1, n10, kCtx) * BigRational(k);
  EXPECT_TRUE(assembled.overlaps(evaluate(form, n10)));
}

TEST(GammaQuotientForm, MatchesLogGamma) {
  // log prod_{v<=n} (v - alpha) = log Gamma(n + 1 - alpha) - log Gamma(1 - alpha)
  for (auto [p, q] : {std::pair{0L, 1L}, {1L, 3L}, {1L, 2L}, {3L, 4L}}) {
    const AsymptoticForm f =
        to_numeric(gamma_quotient_form(frac(p, q)), elementary_symbol_value, kCtx);
    BoundedReal exact = BoundedReal::exact(0, kPrec);
    const long n = 200;
    for (long v = 1; v <= n; ++v) {
      exact += log(BoundedReal::from_rational(BigRational(v) - frac(p, q), kPrec));
    }
    EXPECT_LT(std::abs((exact - evaluate(f, num(n))).mid_double()), 1e-3) << p << "/" << q;
  }
  EXPECT_THROW(gamma_quotient_form(BigRational(1)), std::domain_error);
}

TEST(Milnor, GAtOne) {
  const BoundedReal log_pi = log(BoundedReal::pi(kPrec));
  const BoundedReal expected =
      -log_pi - BigRational(3, 2) +
      (log(num(4)) - log_pi - BigRational(1)) / BigRational(2);
  EXPECT_TRUE(g_log(num(1), kCtx).overlaps(expected));
}

TEST(Milnor, QuotientLimit) {
  // G(n) / F(2n + 1) -> 2^(1/24 - 1/2).
  const BoundedReal limit = log(num(2)) * frac(-11, 24);
  double prev = INFINITY;
  for (long n : {100L, 1000L, 10000L}) {
    const BoundedReal d =
        g_log(num(n), kCtx) - milnor_F_log(num(2 * n + 1), kCtx) - limit;
    EXPECT_LT(std::abs(d.mid_double()), prev) << n;
    prev = std::abs(d.mid_double());
  }
  EXPECT_LT(prev, 1e-4);

  // (1 + 1/(2n))^(n^2) e^(-n/2) -> e^(-1/8)
  const BoundedReal n = num(100000);
  const BoundedReal lhs = n * n * log(BoundedReal::exact(1, kPrec) + num(1) / (n * BigRational(2))) -
                          n / BigRational(2);
  EXPECT_NEAR(lhs.mid_double(), -0.125, 1e-5);
}

TEST(Forms, LinearityOfEvaluation) {
  const AsymptoticForm f = to_numeric(q_form(3), elementary_symbol_value, kCtx);
  const AsymptoticForm g = to_numeric(p_form(2, 3), elementary_symbol_value, kCtx);
  const BoundedReal x = BoundedReal::from_rational(frac(29, 3), kPrec);
  EXPECT_TRUE(evaluate(f + g * BigRational(5), x)
                  .overlaps(evaluate(f, x) + evaluate(g, x) * BigRational(5)));
}

}  // namespace
}  // namespace bernfact
