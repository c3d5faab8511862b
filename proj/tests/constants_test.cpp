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

#include "bernfact/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bernfact/special_functions.hpp"
#include "printed.hpp"

namespace bernfact {
namespace {

using testing::agrees_to_sig_digits;
using testing::matches_printed;

const PrecisionContext kCtx(40);
const mpfr_prec_t kPrec = kCtx.working_bits();

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

BoundedReal q(long n, long d) { return BoundedReal::from_rational(frac(n, d), kPrec); }

BoundedReal pi() { return BoundedReal::pi(kPrec); }

double upper(const BoundedReal& x) { return mpfr_get_d(x.magnitude_upper().get(), MPFR_RNDU); }

TEST(ZetaProducts, PublishedDigits) {
  EXPECT_TRUE(matches_printed(c_constant(1, kCtx).value, "2.2948565916"));
  EXPECT_TRUE(matches_printed(c_constant(2, kCtx).value, "1.82101745149929239040"));
  EXPECT_TRUE(matches_printed(c_constant(3, kCtx).value, "1.2602057107"));
  EXPECT_THROW(c_constant(4, kCtx), std::invalid_argument);
}

TEST(ZetaProducts, Relations) {
  const BoundedReal c1 = c_constant(1, kCtx).value;
  const BoundedReal c2 = c_constant(2, kCtx).value;
  const BoundedReal c3 = c_constant(3, kCtx).value;
  EXPECT_TRUE(c1.overlaps(c2 * c3));
  EXPECT_TRUE((c2 - pi() * pi() / BigRational(6)).certainly_positive());
  EXPECT_TRUE((exp(q(3, 4)) - c2).certainly_positive());
  EXPECT_TRUE((c3 - zeta_int(3, kCtx)).certainly_positive());
  EXPECT_TRUE((c2 - c3).certainly_positive());
}

TEST(ZetaProducts, CutoffRule) {
  for (int digits : {10, 30, 60}) {
    const PrecisionContext ctx(digits);
    const long n = zeta_product_cutoff(ctx);
    const double limit = -(ctx.working_digits() + 1) * std::log2(10.0);
    auto exponent = [](long m) { return -static_cast<double>(m) + 3.0 / static_cast<double>(m); };
    EXPECT_LT(exponent(n), limit);
    EXPECT_GE(exponent(n - 1), limit);
  }
}

TEST(Glaisher, ValuesAndRoutes) {
  const ConstantReport a = glaisher_a(1, kCtx);
  EXPECT_EQ(a.name, "A");
  EXPECT_TRUE(matches_printed(a.value, "1.28242712910062263687"));
  EXPECT_TRUE(a.log_value.overlaps(log_glaisher_via_zeta_prime_two(kCtx)));
  EXPECT_LT(upper(a.log_value - log_glaisher_via_zeta_prime_two(kCtx)), 1e-45);
  EXPECT_TRUE(glaisher_a(0, kCtx).value.overlaps(sqrt(pi() * BigRational(2))));
  // log A_2 = zeta(3) / (4 pi^2)
  EXPECT_TRUE(glaisher_a(2, kCtx).log_value.overlaps(zeta_int(3, kCtx) / (pi() * pi() * BigRational(4))));
}

TEST(FactorialProducts, ClosedFormTable) {
  const char* expected[] = {"1.04633506677050318098", "1.02393741163711840157",
                            "1.01604053706462099128", "1.01204589802394464624",
                            "1.00963997283647705086", "1.00803362724207326544"};
  for (long k = 1; k <= 6; ++k) {
    const ConstantReport f = f_k_closed(k, kCtx);
    EXPECT_TRUE(matches_printed(f.value, expected[k - 1])) << k;
    EXPECT_LT(f.value.radius_double(), 1e-35);
  }
  // (2 pi)^(1/4) 2^(5/24) e^(1/24) / A^(5/2)
  const BoundedReal f2 = exp(log(pi() * BigRational(2)) / BigRational(4) +
                             log(BoundedReal::exact(2, kPrec)) * frac(5, 24) + q(1, 24) -
                             log_glaisher(1, kCtx) * frac(5, 2));
  EXPECT_TRUE(f_k_closed(2, kCtx).value.overlaps(f2));
  EXPECT_THROW(f_k_closed(0, kCtx), std::invalid_argument);
}

TEST(FactorialProducts, SeriesRoute) {
  const long m[] = {4, 7, 10, 13, 16, 20};
  const double bound[] = {6.000e-4, 7.826e-7, 1.198e-9, 1.948e-12, 3.272e-15, 5.552e-18};
  for (long k = 1; k <= 6; ++k) {
    const ConstantReport s = f_k_series(k, kCtx);
    EXPECT_EQ(s.method, Method::divergent_series);
    EXPECT_EQ(s.params.at("m"), m[k - 1]);
    EXPECT_TRUE(agrees_to_sig_digits(s.error_bound->mid_double(), bound[k - 1], 4)) << k;
    EXPECT_TRUE(s.log_value.overlaps(f_k_closed(k, kCtx).log_value)) << k;
  }
  EXPECT_EQ(format_scientific(*f_k_series(3, kCtx).error_bound), "1.198e-9");
  EXPECT_EQ(format_scientific(*f_k_series(4, kCtx).error_bound), "1.948e-12");
}

TEST(FactorialProducts, ScaledLogTendsToGammaOverTwelve) {
  const BoundedReal limit = euler_gamma(kCtx) / BigRational(12);
  double prev = INFINITY;
  for (long k = 4; k <= 64; k += 4) {
    const BoundedReal kk = BoundedReal::exact(k, kPrec);
    const double gap = std::abs((kk * f_k_closed(k, kCtx).log_value - limit).mid_double());
    EXPECT_LT(gap, prev) << k;
    prev = gap;
  }
}

TEST(FactorialProducts, ProductOfConstantsTrend) {
  // sum_{k<=n} log F_k - gamma/12 log n approaches log F_inf.
  const BoundedReal target = f_infty_refined(7, 17, PrecisionContext(25)).report.log_value;
  const BoundedReal g12 = euler_gamma(kCtx) / BigRational(12);
  BoundedReal sum = BoundedReal::exact(0, kPrec);
  double prev = INFINITY;
  long next = 4;
  for (long k = 1; k <= 32; ++k) {
    sum += f_k_closed(k, kCtx).log_value;
    if (k == next) {
      const double gap =
          std::abs((sum - g12 * log(BoundedReal::exact(k, kPrec)) - target).mid_double());
      EXPECT_LT(gap, prev) << k;
      prev = gap;
      next *= 2;
    }
  }
}

TEST(LinearSystem, InverseAndDeterminant) {
  for (long k = 2; k <= 50; ++k) {
    const IntMatrix prod = multiply(matrix_m(k), matrix_m_tilde(k));
    for (long i = 0; i < k; ++i) {
      for (long j = 0; j < k; ++j) {
        ASSERT_EQ(prod[i][j], i == j ? BigInt(k) : BigInt(0)) << k;
      }
    }
  }
  EXPECT_EQ(determinant(matrix_m(2)), 2);
  for (long k = 3; k <= 15; ++k) EXPECT_EQ(determinant(matrix_m(k)), k);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(matrix_m(1), std::invalid_argument);
}

TEST(LinearSystem, AgreesWithClosedForm) {
  for (long k = 2; k <= 6; ++k) {
    const LinearSystemReport ls = f_k_via_linear_system(k, kCtx);
    const ConstantReport closed = f_k_closed(k, kCtx);
    EXPECT_EQ(ls.report.method, Method::linear_system);
    ASSERT_EQ(ls.x.size(), static_cast<std::size_t>(k));
    EXPECT_LT(upper(ls.report.log_value - closed.log_value), 1e-45) << k;
    // x_1 = log F_k + 1/4 log 2 pi + k log A
    EXPECT_TRUE(ls.x[0].overlaps(closed.log_value + log_two_pi(kCtx) / BigRational(4) +
                                 log_glaisher(1, kCtx) * BigRational(k)));
  }
  EXPECT_THROW(f_k_via_linear_system(1, kCtx), std::invalid_argument);
}

TEST(LinearSystem, RowsSatisfyTheRelations) {
  // M_k x = b holds exactly in the symbolic representation.
  for (long k = 2; k <= 5; ++k) {
    const LinearSystemReport ls = f_k_via_linear_system(k, kCtx);
    const IntMatrix m = matrix_m(k);
    for (long i = 0; i < k; ++i) {
      ExactConstant row;
      for (long j = 0; j < k; ++j) row += ls.x_exact[j] * BigRational(m[i][j]);
      EXPECT_EQ(row, ls.b_exact[i]) << k << " " << i;
    }
  }
}

TEST(InfiniteProduct, WeakInterval) {
  const ConstantReport w = f_infty_weak(kCtx);
  EXPECT_EQ(w.params.at("m"), 4);
  EXPECT_EQ(format_scientific(*w.error_bound, 3), "6.05e-4");
  // The printed interval is ours rounded outward to five decimals.
  detail::Mpfr lo(kPrec);
  detail::Mpfr hi(kPrec);
  mpfr_sub(lo.get(), w.value.mid(), w.value.radius(), MPFR_RNDD);
  mpfr_add(hi.get(), w.value.mid(), w.value.radius(), MPFR_RNDU);
  EXPECT_EQ(std::floor(mpfr_get_d(lo.get(), MPFR_RNDD) * 1e5), 102428);
  EXPECT_EQ(std::ceil(mpfr_get_d(hi.get(), MPFR_RNDU) * 1e5), 102491);
  const RefinedInfinityReport refined = f_infty_refined(7, 17, kCtx);
  EXPECT_TRUE(w.value.contains(refined.report.value));
}

TEST(InfiniteProduct, Refined) {
  const PrecisionContext ctx(21);
  const RefinedInfinityReport r = f_infty_refined(7, 17, ctx);
  EXPECT_EQ(r.report.method, Method::refined_sum);
  EXPECT_TRUE(matches_printed(r.report.value, "1.02460688265559721480"));
  EXPECT_EQ(format_scientific(*r.report.error_bound, 3), "6.32e-22");
  ASSERT_EQ(r.eta.size(), 7U);
  for (const BoundedReal& eta : r.eta) {
    EXPECT_TRUE(eta.certainly_positive());
    EXPECT_TRUE((BoundedReal::exact(1, 64) - eta).certainly_positive());
  }
  EXPECT_LT(r.theta_min.compare_mid(r.theta_max), 0);
  EXPECT_TRUE(r.theta_min.certainly_positive());
  EXPECT_TRUE((BoundedReal::exact(1, 64) - r.theta_max).certainly_positive());
  // theta_err = (1 - zeta(2m-1)^-1 sum_{k<=n} k^-(2m-1)) |R|
  const PrecisionContext hi(21, 2 * ctx.guard_digits());
  BoundedReal partial = BoundedReal::exact(0, hi.working_bits());
  for (long k = 1; k <= 7; ++k) {
    partial += pow_int(BoundedReal::exact(k, hi.working_bits()), -33);
  }
  const BoundedReal expected =
      (BoundedReal::exact(1, hi.working_bits()) - partial / zeta_int(33, hi)) * abs(r.last_term);
  EXPECT_TRUE(r.theta_err_log.overlaps(expected));
  EXPECT_THROW(f_infty_refined(7, 2, ctx), std::invalid_argument);
  EXPECT_THROW(f_infty_refined(0, 17, ctx), std::invalid_argument);
}

TEST(BernoulliProducts, Table) {
  const std::vector<ConstantReport> b = b_family(kCtx);
  ASSERT_EQ(b.size(), 4U);
  EXPECT_EQ(b[0].name, "B1");
  EXPECT_TRUE(matches_printed(b[0].value, "4.85509664652226751252"));
  EXPECT_TRUE(matches_printed(b[1].value, "1.93690332773294192068"));
  EXPECT_TRUE(matches_printed(b[2].value, "2.73919495508550621998"));
  EXPECT_TRUE(matches_printed(b[3].value, "0.70486487346802031057"));
  EXPECT_TRUE((b[2].value / b[1].value).overlaps(sqrt(BoundedReal::exact(2, kPrec))));
  EXPECT_TRUE(b[3].value.overlaps(
      b[1].value * pow(BoundedReal::exact(2, kPrec), frac(1, 24) - frac(3, 2))));
}

TEST(GeneralizedFactorialProducts, ExactForms) {
  auto la = [](long j) { return ExactConstant::log_glaisher(j); };
  EXPECT_EQ(f_r1_exact(1), ExactConstant(frac(1, 24)) - la(2) * frac(3, 2));
  EXPECT_EQ(f_r1_exact(2), ExactConstant(frac(7, 540)) - la(1) * frac(1, 6) - la(3) * frac(4, 3));
  EXPECT_EQ(f_r1_exact(3), ExactConstant(frac(-1, 720)) - la(2) * frac(1, 4) - la(4) * frac(5, 4));
  EXPECT_EQ(f_r1_exact(4), ExactConstant(frac(-67, 18900)) + la(1) * frac(1, 30) -
                               la(3) * frac(1, 3) - la(5) * frac(6, 5));
  EXPECT_EQ(f_r1_exact(5), ExactConstant(frac(1, 2520)) + la(2) * frac(1, 12) -
                               la(4) * frac(5, 12) - la(6) * frac(7, 6));
  for (unsigned r = 0; r <= 25; ++r) EXPECT_EQ(f_r1_exact(r), f_r1_via_power_sums(r)) << r;
  EXPECT_EQ(f_r1_exact(0), f_k_closed_exact(1));
}

TEST(GeneralizedFactorialProducts, Table) {
  const char* expected[] = {"1.04633506677050318098", "0.99600199446870605433",
                            "0.99904614418135586848", "1.00097924030236153773",
                            "1.00007169725554110099", "0.99937792615674804266"};
  for (unsigned r = 0; r <= 5; ++r) {
    EXPECT_TRUE(matches_printed(f_r1(r, kCtx).value, expected[r])) << r;
  }
  const BoundedReal p2 = pi() * pi();
  const BoundedReal z3 = zeta_int(3, kCtx);
  const BoundedReal z5 = zeta_int(5, kCtx);
  const BoundedReal z7 = zeta_int(7, kCtx);
  EXPECT_TRUE(f_r1(1, kCtx).log_value.overlaps(q(1, 24) - z3 * BigRational(3) / (p2 * BigRational(8))));
  EXPECT_TRUE(f_r1(3, kCtx).log_value.overlaps(q(-1, 720) - z3 / (p2 * BigRational(16)) +
                                               z5 * BigRational(15) / (p2 * p2 * BigRational(16))));
  EXPECT_TRUE(f_r1(5, kCtx).log_value.overlaps(
      q(1, 2520) + z3 / (p2 * BigRational(48)) + z5 * BigRational(5) / (p2 * p2 * BigRational(16)) -
      z7 * BigRational(105) / (p2 * p2 * p2 * BigRational(16))));
  for (unsigned r = 1; r <= 21; r += 2) {
    EXPECT_TRUE(f_r1(r, kCtx).log_value.overlaps(f_r1_odd_zeta_form(r, kCtx))) << r;
  }
  EXPECT_THROW(f_r1_odd_zeta_form(2, kCtx), std::invalid_argument);
}

TEST(GeneralizedFactorialProducts, LargeR) {
  double worst = 0;
  for (unsigned r = 0; r <= 14; ++r) {
    worst = std::max(worst, std::abs(f_r1(r, kCtx).value.mid_double() - 1));
  }
  EXPECT_LT(worst, 0.05);
  const double f19 = f_r1(19, kCtx).value.mid_double();
  EXPECT_GT(f19, 371.5);
  EXPECT_LT(f19, 371.7);
  EXPECT_NEAR(f_r1(20, kCtx).value.mid_double(), 1.16e-7, 1.16e-9);
}

TEST(GeneralizedFactorialProducts, SeriesRoute) {
  const ConstantReport s02 = f_rk_series(0, 2, kCtx);
  const ConstantReport f2 = f_k_series(2, kCtx);
  EXPECT_TRUE(s02.log_value.overlaps(f2.log_value));
  EXPECT_EQ(s02.params.at("m"), f2.params.at("m"));
  // Beyond r = 3 the k = 1 series has no decreasing stretch.
  for (unsigned r = 0; r <= 3; ++r) {
    const ConstantReport s = f_rk_series(r, 1, kCtx);
    EXPECT_TRUE(s.log_value.overlaps(f_r1(r, kCtx).log_value)) << r;
  }
  const ConstantReport s11 = f_rk_series(1, 1, kCtx);
  EXPECT_LT(std::abs(s11.value.mid_double() - 0.99600199446870605433),
            s11.error_bound->mid_double() * 1.01);
  for (unsigned r = 0; r <= 2; ++r) {
    double prev = INFINITY;
    for (long k = 1; k <= 8; ++k) {
      const double v = std::abs(f_rk_series(r, k, kCtx).log_value.mid_double());
      EXPECT_LT(v, prev) << r << " " << k;
      prev = v;
    }
  }
  EXPECT_THROW(f_rk_series(19, 1, kCtx), NoDecreaseError);
  EXPECT_THROW(f_rk_series(0, 0, kCtx), std::invalid_argument);
}

TEST(GammaPowerProduct, Constants) {
  const auto [first, second] = gamma_power_product_constants(kCtx);
  EXPECT_TRUE(matches_printed(first, "0.8077340270"));
  EXPECT_TRUE(matches_printed(second, "1.2345601953"));
  const BoundedReal a = exp(log_glaisher(1, kCtx));
  EXPECT_TRUE((first * second * a * a)
                  .overlaps(exp(log_two_pi(kCtx) / BigRational(4) +
                                (BoundedReal::exact(1, kPrec) - euler_gamma(kCtx)) / BigRational(12))));
}

TEST(Resolver, LogFSymbols) {
  EXPECT_TRUE(constant_symbol_value({Symbol::Kind::log_f, 0, 3}, kCtx)
                  .overlaps(f_k_closed(3, kCtx).log_value));
  EXPECT_TRUE(constant_symbol_value({Symbol::Kind::log_f, 2, 1}, kCtx)
                  .overlaps(f_r1(2, kCtx).log_value));
  EXPECT_TRUE(constant_symbol_value({Symbol::Kind::log_f, 1, 3}, kCtx)
                  .overlaps(f_rk_series(1, 3, kCtx).log_value));
  EXPECT_TRUE(constant_symbol_value({Symbol::Kind::log_pi, 0, 0}, kCtx).overlaps(log(pi())));
}

TEST(Methods, Names) {
  EXPECT_EQ(to_string(Method::closed_form), "closed_form");
  EXPECT_EQ(to_string(Method::refined_sum), "refined_sum");
}

}  // namespace
}  // namespace bernfact
