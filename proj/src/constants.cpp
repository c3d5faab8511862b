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

#include <cmath>

#include "bernfact/special_functions.hpp"

namespace bernfact {

namespace {

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

BoundedReal elementary(const ExactConstant& c, const PrecisionContext& ctx) {
  return evaluate(c, elementary_symbol_value, ctx);
}

void require_overlap(const BoundedReal& a, const BoundedReal& b, const std::string& what) {
  if (!a.overlaps(b)) {
    throw ConsistencyError(what + ": " + a.debug_string() + " vs " + b.debug_string());
  }
}

ConstantReport closed_report(std::string name, const ExactConstant& exact_log,
                             const PrecisionContext& ctx) {
  ConstantReport rep;
  rep.name = std::move(name);
  rep.method = Method::closed_form;
  rep.exact_log = exact_log;
  rep.log_value = elementary(exact_log, ctx);
  rep.value = exp(rep.log_value);
  return rep;
}

// coeff(j) for sum_j B_2j zeta(2j - shift)^power / (2j (2j - 1)) x^-(2j-1).
DivergentTail zeta_weighted_tail(long j_start, long shift, int power, std::string description) {
  DivergentTail t;
  t.j_start = j_start;
  t.description = std::move(description);
  t.coeff = [shift, power](long j, const PrecisionContext& ctx) {
    BoundedReal z = zeta_int(2 * j - shift, ctx);
    BoundedReal c = power == 2 ? z * z : z;
    return c * bernoulli(static_cast<unsigned>(2 * j)) / BigRational(2 * j * (2 * j - 1));
  };
  return t;
}

ConstantReport series_report(std::string name, const BoundedReal& constant,
                             const DivergentTail& tail, const BoundedReal& x,
                             const PrecisionContext& ctx) {
  ConstantReport rep;
  rep.name = std::move(name);
  rep.method = Method::divergent_series;
  TruncationResult tr = eval_optimal(tail, x, ctx);
  rep.log_value = constant + tr.enclosure();
  rep.value = exp(rep.log_value);
  rep.error_bound = tr.remainder_bound;
  rep.params["m"] = tr.m_opt;
  rep.truncation = std::move(tr);
  return rep;
}

ExactConstant substitute(const ExactConstant& c, const Symbol& s,
                         const ExactConstant& replacement) {
  const BigRational coeff = c.coefficient(s);
  if (coeff.is_zero()) return c;
  return c - ExactConstant::symbol(s, coeff) + replacement * coeff;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::divergent_series:
      return "divergent_series";
    case Method::linear_system:
      return "linear_system";
    case Method::refined_sum:
      return "refined_sum";
  }
  return "?";
}

long zeta_product_cutoff(const PrecisionContext& ctx) {
  // 2^(-N + 3/N) < 10^-(wd + 1)
  const double target = (ctx.working_digits() + 1) * std::log2(10.0);
  long n = 2;
  while (n - 3.0 / static_cast<double>(n) <= target) ++n;
  return n;
}

ConstantReport c_constant(int which, const PrecisionContext& ctx) {
  if (which < 1 || which > 3) throw std::invalid_argument("c_constant: which must be 1, 2 or 3");
  const long cutoff = zeta_product_cutoff(ctx);
  const mpfr_prec_t prec = ctx.working_bits();
  const long first = which == 3 ? 3 : 2;
  const long step = which == 1 ? 1 : 2;
  BoundedReal log_sum = BoundedReal::exact(0, prec);
  for (long v = first; v <= cutoff; v += step) log_sum += log(zeta_int(v, ctx));
  // The omitted factors contribute a log in (0, 2^(-N' + 3/N')).
  const BoundedReal tail =
      exp(BoundedReal::log2(prec) *
          (BoundedReal::from_rational(frac(3, cutoff), prec) - BigRational(cutoff)));
  ConstantReport rep;
  rep.name = "C" + std::to_string(which);
  rep.method = Method::closed_form;
  rep.params["N'"] = cutoff;
  rep.log_value = log_sum + BoundedReal::hull(BoundedReal::exact(0, prec), tail);
  rep.value = exp(rep.log_value);
  return rep;
}

ConstantReport glaisher_a(unsigned r, const PrecisionContext& ctx) {
  ConstantReport rep = closed_report(r == 1 ? "A" : "A_r",
                                     ExactConstant::log_glaisher(r), ctx);
  rep.params["r"] = r;
  return rep;
}

BoundedReal log_glaisher_via_zeta_prime_two(const PrecisionContext& ctx) {
  const BoundedReal pi = BoundedReal::pi(ctx.working_bits());
  return (euler_gamma(ctx) + log_two_pi(ctx)) / BigRational(12) -
         zeta_prime_int(2, ctx) / (pi * pi * BigRational(2));
}

ExactConstant f_k_closed_exact(long k) {
  if (k < 1) throw std::invalid_argument("f_k_closed: k must be >= 1");
  ExactConstant c = ExactConstant::log_glaisher(1) * (-(BigRational(k) + frac(1, k))) +
                    ExactConstant(frac(1, 12 * k)) -
                    ExactConstant::log_of(k) * frac(1, 12 * k) +
                    ExactConstant::log_two_pi() * frac(k, 4);
  for (long v = 1; v < k; ++v) c -= ExactConstant::log_gamma(v, k) * frac(v, k);
  return c;
}

ExactConstant f_k_closed_exact_without_first_gamma(long k) {
  if (k < 1) throw std::invalid_argument("f_k_closed: k must be >= 1");
  ExactConstant c = ExactConstant::log_glaisher(1) * (-(BigRational(k) + frac(1, k))) +
                    ExactConstant::log_two_pi() * (frac(k, 4) + frac(1, 2 * k) - frac(1, 2)) +
                    ExactConstant::log_of(k) * frac(5, 12 * k) + ExactConstant(frac(1, 12 * k));
  for (long v = 2; v < k; ++v) c -= ExactConstant::log_gamma(v, k) * frac(v - 1, k);
  return c;
}

ConstantReport f_k_closed(long k, const PrecisionContext& ctx) {
  ConstantReport rep = closed_report("F_k", f_k_closed_exact(k), ctx);
  rep.params["k"] = k;
  if (k >= 3) {
    require_overlap(rep.log_value, elementary(f_k_closed_exact_without_first_gamma(k), ctx),
                    "F_" + std::to_string(k) + " closed forms disagree");
  }
  return rep;
}

ConstantReport f_k_series(long k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("f_k_series: k must be >= 1");
  const mpfr_prec_t prec = ctx.working_bits();
  ConstantReport rep =
      series_report("F_k", euler_gamma(ctx) / BigRational(12 * k),
                    zeta_weighted_tail(2, 1, 1, "F_k series"), BoundedReal::exact(k, prec), ctx);
  rep.params["k"] = k;
  return rep;
}

IntMatrix matrix_m(long k) {
  if (k < 2) throw std::invalid_argument("matrix_m: k must be >= 2");
  const auto n = static_cast<std::size_t>(k);
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m[i][i] = 1;
    m[i][i + 1] = -1;
  }
  for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = 1;
  return m;
}

IntMatrix matrix_m_tilde(long k) {
  if (k < 2) throw std::invalid_argument("matrix_m_tilde: k must be >= 2");
  const auto n = static_cast<std::size_t>(k);
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      m[i][j] = i <= j ? BigInt(k - 1 - static_cast<long>(j)) : BigInt(-static_cast<long>(j) - 1);
    }
    m[i][n - 1] = 1;
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || a[0].size() != b.size()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix c(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
  }
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < n && m[swap][p] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
    }
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

LinearSystemReport f_k_via_linear_system(long k, const PrecisionContext& ctx) {
  if (k < 2) throw std::invalid_argument("f_k_via_linear_system: k must be >= 2");
  LinearSystemReport out;
  for (long l = 0; l + 1 < k; ++l) out.b_exact.push_back(psi(gamma_quotient_form(frac(l, k))));
  // prod_{v <= kn} v! is the k = 1 factorial product at kn.
  const ExactConstant b_k = psi(rescale(factorial_product_form(1), BigRational(k)));
  out.b_exact.push_back(
      substitute(b_k, {Symbol::Kind::log_f, 0, 1}, f_k_closed_exact(1)));

  const IntMatrix tilde = matrix_m_tilde(k);
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    ExactConstant xi;
    for (std::size_t j = 0; j < tilde.size(); ++j) {
      xi += out.b_exact[j] * BigRational(tilde[i][j]);
    }
    out.x_exact.push_back(xi / BigRational(k));
    out.x.push_back(elementary(out.x_exact.back(), ctx));
  }
  const ExactConstant log_fk = out.x_exact[0] - ExactConstant::log_two_pi() / BigRational(4) -
                               ExactConstant::log_glaisher(1) * BigRational(k);
  out.report = closed_report("F_k", log_fk, ctx);
  out.report.method = Method::linear_system;
  out.report.params["k"] = k;
  return out;
}

ConstantReport f_infty_weak(const PrecisionContext& ctx) {
  const BoundedReal g = euler_gamma(ctx);
  ConstantReport rep =
      series_report("F_inf", g * g / BigRational(12), zeta_weighted_tail(2, 1, 2, "F_inf series"),
                    BoundedReal::exact(1, ctx.working_bits()), ctx);
  return rep;
}

RefinedInfinityReport f_infty_refined(long n, long m, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("f_infty_refined: n must be >= 1");
  if (m <= 2) throw std::invalid_argument("f_infty_refined: m must be > 2");
  const PrecisionContext hi(ctx.target_digits(), 2 * ctx.guard_digits());
  const mpfr_prec_t prec = hi.working_bits();
  const BoundedReal gamma = euler_gamma(hi);

  auto t = [&](long j) {  // B_2j zeta(2j-1) / (2j (2j-1))
    return zeta_int(2 * j - 1, hi) * bernoulli(static_cast<unsigned>(2 * j)) /
           BigRational(2 * j * (2 * j - 1));
  };
  const BoundedReal zeta_last = zeta_int(2 * m - 1, hi);

  RefinedInfinityReport out;
  BoundedReal sum_eta = BoundedReal::exact(0, prec);
  BoundedReal sum_eta_minus_one = BoundedReal::exact(0, prec);
  for (long k = 1; k <= n; ++k) {
    const BoundedReal kk = BoundedReal::exact(k, prec);
    BoundedReal partial = gamma / BigRational(12 * k);
    for (long j = 2; j < m; ++j) partial += t(j) * pow_int(kk, -(2 * j - 1));
    const BoundedReal k_pow = pow_int(kk, -(2 * m - 1));
    const BoundedReal eta = (elementary(f_k_closed_exact(k), hi) - partial) / (t(m) * k_pow);
    if (!eta.certainly_positive() || !(BoundedReal::exact(1, prec) - eta).certainly_positive()) {
      throw ConsistencyError("f_infty_refined: eta_" + std::to_string(k) +
                             " not inside (0, 1): " + eta.debug_string());
    }
    out.eta.push_back(eta);
    sum_eta += eta * k_pow;
    sum_eta_minus_one += (eta - BigRational(1)) * k_pow;
  }
  out.theta_min = sum_eta / zeta_last;
  out.theta_max = BoundedReal::exact(1, prec) + sum_eta_minus_one / zeta_last;
  out.last_term = zeta_last * t(m);

  BoundedReal log_value = gamma * gamma / BigRational(12);
  for (long j = 2; j < m; ++j) log_value += t(j) * zeta_int(2 * j - 1, hi);
  log_value += BoundedReal::hull(out.theta_min, out.theta_max) * out.last_term;
  out.theta_err_log = (out.theta_max - out.theta_min) * abs(out.last_term);

  ConstantReport& rep = out.report;
  rep.name = "F_inf";
  rep.method = Method::refined_sum;
  rep.params["n"] = n;
  rep.params["m"] = m;
  rep.log_value = log_value;
  rep.value = exp(log_value);
  rep.error_bound = out.theta_err_log * rep.value;
  return out;
}

std::vector<ConstantReport> b_family(const PrecisionContext& ctx) {
  const ConstantReport c2 = c_constant(2, ctx);
  const BoundedReal log_a = log_glaisher(1, ctx);
  const BoundedReal log2 = BoundedReal::log2(ctx.working_bits());
  const BoundedReal log_b2 = c2.log_value + log2 * frac(5, 24) +
                             BoundedReal::from_rational(frac(1, 24), ctx.working_bits()) -
                             log_a / BigRational(2);

  auto make = [&](std::string name, const BoundedReal& log_value) {
    ConstantReport rep;
    rep.name = std::move(name);
    rep.method = Method::closed_form;
    rep.params["N'"] = c2.params.at("N'");
    rep.log_value = log_value;
    rep.value = exp(log_value);
    return rep;
  };
  std::vector<ConstantReport> out;
  out.push_back(make("B1", log_b2 + log_two_pi(ctx) / BigRational(2)));
  out.push_back(make("B2", log_b2));
  out.push_back(make("B3", log_b2 + log2 / BigRational(2)));
  out.push_back(make("Bprime", c2.log_value +
                                   BoundedReal::from_rational(frac(1, 24), ctx.working_bits()) -
                                   log2 * frac(5, 4) - log_a / BigRational(2)));

  require_overlap(out[0].log_value,
                  c2.log_value + f_k_closed(2, ctx).log_value + log_a * BigRational(2) +
                      log_two_pi(ctx) / BigRational(4),
                  "B1 via F_2");
  require_overlap(out[3].log_value, log_b2 + log2 * (frac(1, 24) - frac(3, 2)), "Bprime via B2");
  return out;
}

ExactConstant f_r1_exact(unsigned r) {
  if (r == 0) {
    return ExactConstant(frac(1, 12)) + ExactConstant::log_glaisher(0) / BigRational(2) -
           ExactConstant::log_glaisher(1) * BigRational(2);
  }
  ExactConstant c;
  if (r % 2 == 1) {
    c += bernoulli(r + 1) / BigRational(2 * static_cast<long>(r) * (r + 1));
  } else {
    BigRational a0 = 0;
    for (unsigned j = 0; j <= r; ++j) {
      a0 += BigRational(binomial(r, j)) * bernoulli(r - j) * bernoulli(j + 2) /
            BigRational(static_cast<long>(j + 1) * (j + 1) * (j + 2));
    }
    c += a0;
  }
  for (unsigned j = 1; j <= r + 1; ++j) {
    const long diff = static_cast<long>(r) - static_cast<long>(j);
    if (diff % 2 == 0) continue;
    BigRational a = -BigRational(binomial(r + 1, j)) * bernoulli(r + 1 - j) /
                    BigRational(static_cast<long>(r) + 1);
    if (j == r + 1) a -= BigRational(1);
    c += ExactConstant::log_glaisher(j) * a;
  }
  return c;
}

ExactConstant f_r1_via_power_sums(unsigned r) {
  auto weight = [](long i) {
    return ExactConstant(n_coefficient(1 + i, 1)) - ExactConstant::log_glaisher(i);
  };
  return ExactConstant::log_glaisher(r) / BigRational(2) - ExactConstant::log_glaisher(r + 1) +
         s_r_weighted(r, BigRational(1), weight);
}

BoundedReal f_r1_odd_zeta_form(unsigned r, const PrecisionContext& ctx) {
  if (r % 2 == 0) throw std::invalid_argument("f_r1_odd_zeta_form: r must be odd");
  const mpfr_prec_t prec = ctx.working_bits();
  const BoundedReal two_pi_v = two_pi(ctx);
  BoundedReal inner = BoundedReal::from_rational(
      abs(bernoulli(r + 1)) / (BigRational(static_cast<long>(r)) * BigRational(factorial(r + 1))),
      prec);
  for (unsigned j = 1; j <= (r - 1) / 2; ++j) {
    inner += zeta_int(2 * j + 1, ctx) * pow_int(two_pi_v, -2 * static_cast<long>(j)) *
             (abs(bernoulli(r + 1 - 2 * j)) / BigRational(factorial(r + 1 - 2 * j)));
  }
  inner -= zeta_int(r + 2, ctx) * pow_int(two_pi_v, -static_cast<long>(r) - 1) *
           BigRational(static_cast<long>(r) + 2);
  BigRational prefactor = BigRational(factorial(r)) / BigRational(2);
  if (((r - 1) / 2) % 2 == 1) prefactor = -prefactor;
  return inner * prefactor;
}

ConstantReport f_r1(unsigned r, const PrecisionContext& ctx) {
  const ExactConstant exact = f_r1_exact(r);
  if (!(exact == f_r1_via_power_sums(r))) {
    throw ConsistencyError("F_{r,1}: table and power-sum forms differ for r = " +
                           std::to_string(r));
  }
  ConstantReport rep = closed_report("F_r1", exact, ctx);
  rep.params["r"] = r;
  if (r % 2 == 1) {
    require_overlap(rep.log_value, f_r1_odd_zeta_form(r, ctx), "F_{r,1} zeta form");
  }
  return rep;
}

ConstantReport f_rk_series(unsigned r, long k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("f_rk_series: k must be >= 1");
  const mpfr_prec_t prec = ctx.working_bits();
  const long half = (static_cast<long>(r) + 1) / 2;
  const long shift = static_cast<long>(r) + 1;
  BoundedReal constant = BoundedReal::exact(0, prec);
  long j_start = half + 1;
  if (r % 2 == 0) {
    constant = euler_gamma(ctx) * n_coefficient(static_cast<long>(r) + 2, k);
    j_start = half + 2;
  }
  ConstantReport rep = series_report("F_rk", constant,
                                     zeta_weighted_tail(j_start, shift, 1, "F_{r,k} series"),
                                     BoundedReal::exact(k, prec), ctx);
  rep.params["r"] = r;
  rep.params["k"] = k;
  return rep;
}

std::pair<BoundedReal, BoundedReal> gamma_power_product_constants(const PrecisionContext& ctx) {
  const BoundedReal log_a = log_glaisher(1, ctx);
  const BoundedReal first =
      exp((BoundedReal::exact(1, ctx.working_bits()) - euler_gamma(ctx)) / BigRational(12) - log_a);
  const BoundedReal second = exp(log_two_pi(ctx) / BigRational(4) - log_a);
  return {first, second};
}

BoundedReal constant_symbol_value(const Symbol& s, const PrecisionContext& ctx) {
  if (s.kind != Symbol::Kind::log_f) return elementary_symbol_value(s, ctx);
  if (s.a == 0) return elementary(f_k_closed_exact(s.b), ctx);
  if (s.b == 1) return elementary(f_r1_exact(static_cast<unsigned>(s.a)), ctx);
  return f_rk_series(static_cast<unsigned>(s.a), s.b, ctx).log_value;
}

}  // namespace bernfact
