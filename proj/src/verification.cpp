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

#include "bernfact/verification.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bernfact/asymptotic.hpp"
#include "bernfact/constants.hpp"
#include "bernfact/special_functions.hpp"

namespace bernfact {

namespace {

BigInt ui_pow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

BigInt z_pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

unsigned long v_pow(long v, unsigned r) {
  unsigned long out = 1;
  for (unsigned i = 0; i < r; ++i) out *= static_cast<unsigned long>(v);
  return out;
}

void check_cap(long double bits, const char* what) {
  const std::uint64_t cap = oracle_bit_cap();
  if (bits > static_cast<long double>(cap)) {
    std::ostringstream os;
    os << what << ": projected " << static_cast<double>(bits)
       << " bits exceeds the oracle cap of " << cap;
    throw OracleLimitError(os.str());
  }
}

// F_{k,l}(n) = prod_{v=1}^n (kv - l)!.
BigInt shifted_factorial_product(long k, long l, long n) {
  BigInt out = 1;
  for (long v = 1; v <= n; ++v) out *= factorial(static_cast<unsigned>(k * v - l));
  return out;
}

BigInt product_of_factorials(long n) {
  BigInt out = 1;
  BigInt f = 1;
  for (long v = 1; v <= n; ++v) {
    f *= v;
    out *= f;
  }
  return out;
}

std::string short_string(const BigInt& x) {
  std::string s = x.get_str();
  if (s.size() <= 40) return s;
  return s.substr(0, 20) + "...(" + std::to_string(s.size()) + " digits)";
}

std::string short_string(const BigRational& x) {
  return short_string(x.num()) + "/" + short_string(x.den());
}

IdentityReport exact_report(std::string name, CheckParams params) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = CheckStatus::exact_equal;
  r.points = 0;
  return r;
}

// Records one exact comparison; returns false after marking the report FAIL.
template <class T>
bool record(IdentityReport& rep, const T& lhs, const T& rhs, CheckParams at) {
  ++rep.points;
  if (lhs == rhs) return true;
  rep.status = CheckStatus::fail;
  rep.params = std::move(at);
  rep.lhs = short_string(lhs);
  rep.rhs = short_string(rhs);
  return false;
}

IdentityReport factorial_rows_columns() {
  IdentityReport rep = exact_report("factorial_rows_columns", {{"n_max", 30}});
  for (long n = 0; n <= 30; ++n) {
    const BigInt lhs = z_pow(factorial(static_cast<unsigned>(n)), static_cast<unsigned long>(n + 1));
    const BigInt rhs = product_of_factorials(n) * exact_power_product(n, 1);
    if (!record(rep, lhs, rhs, {{"n", n}})) return rep;
  }
  rep.lhs = "n!^(n+1)";
  rep.rhs = "prod v! prod v^v";
  return rep;
}

IdentityReport shifted_factorial_product_identity() {
  IdentityReport rep = exact_report("shifted_factorial_product", {{"k_max", 5}, {"n_max", 20}});
  for (long k = 1; k <= 5; ++k) {
    for (long n = 0; n <= 20; ++n) {
      BigInt lhs = 1;
      for (long l = 0; l < k; ++l) lhs *= shifted_factorial_product(k, l, n);
      if (!record(rep, lhs, product_of_factorials(k * n), {{"k", k}, {"n", n}})) return rep;
    }
  }
  rep.lhs = "prod_l F_{k,l}(n)";
  rep.rhs = "F_{1,0}(kn)";
  return rep;
}

IdentityReport shifted_factorial_ratio_identity() {
  IdentityReport rep = exact_report("shifted_factorial_ratio",
                                    {{"k_max", 5}, {"n_max", 20}});
  for (long k = 1; k <= 5; ++k) {
    for (long n = 0; n <= 20; ++n) {
      for (long l = 0; l < k; ++l) {
        const BigRational lhs(shifted_factorial_product(k, l, n),
                              shifted_factorial_product(k, l + 1, n));
        BigRational rhs = pow(BigRational(k), n);
        for (long v = 1; v <= n; ++v) rhs *= BigRational(v) - BigRational(BigInt(l), BigInt(k));
        if (!record(rep, lhs, rhs, {{"k", k}, {"n", n}, {"l", l}})) return rep;
      }
    }
  }
  rep.lhs = "F_{k,l}(n) / F_{k,l+1}(n)";
  rep.rhs = "k^n prod (v - l/k)";
  return rep;
}

IdentityReport power_factorial_scheme() {
  IdentityReport rep = exact_report("power_factorial_scheme", {{"r_max", 4}, {"n_max", 15}});
  for (unsigned r = 0; r <= 4; ++r) {
    for (long n = 1; n <= 15; ++n) {
      const BigInt s = s_r(r, BigRational(n)).num();
      BigInt lhs = z_pow(factorial(static_cast<unsigned>(n)), s.get_ui()) *
                   exact_power_product(n, r);
      BigInt rhs = exact_factorial_product(1, n, r);
      for (long v = 1; v <= n; ++v) {
        rhs *= ui_pow(static_cast<unsigned long>(v), s_r(r, BigRational(v)).num().get_ui());
      }
      if (!record(rep, lhs, rhs, {{"r", static_cast<long>(r)}, {"n", n}})) return rep;
    }
  }
  rep.lhs = "n!^S_r(n) prod v^(v^r)";
  rep.rhs = "prod v!^(v^r) prod v^S_r(v)";
  return rep;
}

IdentityReport euler_gamma_product() {
  const PrecisionContext ctx(30);
  const mpfr_prec_t bits = ctx.working_bits();
  IdentityReport rep;
  rep.name = "euler_gamma_product";
  rep.params = {{"n_max", 50}};
  rep.status = CheckStatus::within_bounds;
  rep.points = 0;
  BoundedReal worst = BoundedReal::exact(0, bits);
  const BoundedReal log_2pi = log_two_pi(ctx);
  for (long n = 1; n <= 50; ++n) {
    BoundedReal lhs = BoundedReal::exact(0, bits);
    for (long v = 1; v < n; ++v) {
      lhs += log_gamma_rational(static_cast<unsigned long>(v), static_cast<unsigned long>(n), ctx);
    }
    const BoundedReal rhs = log_2pi * BigRational(BigInt(n - 1), BigInt(2)) -
                            log_integer(BigInt(n), bits) / BigRational(2);
    ++rep.points;
    const BoundedReal gap = abs(lhs - rhs);
    if (gap.compare_mid(worst) > 0) worst = gap;
    if (!lhs.overlaps(rhs)) {
      rep.status = CheckStatus::fail;
      rep.params = {{"n", n}};
      rep.lhs = lhs.debug_string();
      rep.rhs = rhs.debug_string();
      rep.gap = gap;
      return rep;
    }
  }
  rep.lhs = "sum log Gamma(v/n)";
  rep.rhs = "(n-1)/2 log 2pi - 1/2 log n";
  rep.gap = worst;
  return rep;
}

IdentityReport matrix_inverse_identity() {
  IdentityReport rep = exact_report("linear_system_inverse", {{"k_max", 50}});
  for (long k = 2; k <= 50; ++k) {
    IntMatrix expected(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k), 0));
    for (long i = 0; i < k; ++i) expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = k;
    const IntMatrix product = multiply(matrix_m(k), matrix_m_tilde(k));
    ++rep.points;
    if (product != expected) {
      rep.status = CheckStatus::fail;
      rep.params = {{"k", k}};
      rep.lhs = "M_k M~_k";
      rep.rhs = "k I";
      return rep;
    }
  }
  rep.lhs = "M_k M~_k";
  rep.rhs = "k I";
  return rep;
}

IdentityReport mass_value() {
  IdentityReport rep = exact_report("mass_formula", {{"d", 8}});
  const BigRational lhs = mass_formula(8);
  const BigRational rhs(BigInt(1), BigInt(696729600));
  record(rep, lhs, rhs, {{"d", 8}});
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  return rep;
}

BoundedReal log_of(const BigRational& q, const PrecisionContext& ctx) {
  return log_rational(q, ctx.working_bits());
}

BoundedReal form_value(const ExactForm& form, long n, const PrecisionContext& ctx) {
  const AsymptoticForm numeric = to_numeric(form, constant_symbol_value, ctx);
  return evaluate(numeric, BoundedReal::exact(n, ctx.working_bits()));
}

// n^2 (log n - log pi - 3/2) and n/2 (log 4n - log pi - 1) as used by the
// Bernoulli product and mass asymptotics.
struct BernoulliPieces {
  BoundedReal log_n;
  BoundedReal log_pi;
};

BernoulliPieces pieces(long n, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  return {log_integer(BigInt(n), bits), log(BoundedReal::pi(bits))};
}

class RatioEvaluator {
 public:
  explicit RatioEvaluator(const PrecisionContext& ctx) : ctx_(ctx) {}

  BoundedReal gap(const RatioSpec& s, long n) {
    return abs(exact_log(s, n) - asymptotic_log(s, n));
  }

 private:
  const std::vector<ConstantReport>& b() {
    if (b_.empty()) b_ = b_family(ctx_);
    return b_;
  }

  BoundedReal exact_log(const RatioSpec& s, long n) {
    const mpfr_prec_t bits = ctx_.working_bits();
    switch (s.target) {
      case RatioTarget::factorial_product:
        return log_integer(exact_factorial_product(s.k, n, 0), bits);
      case RatioTarget::factorial_power_product:
        return log_integer(exact_factorial_product(s.k, n, s.r), bits);
      case RatioTarget::power_product:
        return log_factored(power_product_exponents(n, s.r), ctx_);
      case RatioTarget::bernoulli_product:
        return log_of(exact_bernoulli_product(n, BernoulliDivisor::plain), ctx_);
      case RatioTarget::bernoulli_product_over_2nu:
        return log_of(exact_bernoulli_product(n, BernoulliDivisor::over_2nu), ctx_);
      case RatioTarget::mass_formula:
        return log_of(mass_formula(2 * n), ctx_);
      case RatioTarget::gamma_power_product: {
        BoundedReal sum = BoundedReal::exact(0, bits);
        for (long v = 1; v < n; ++v) {
          sum += log_gamma_rational(static_cast<unsigned long>(v), static_cast<unsigned long>(n), ctx_) *
                 BigRational(v);
        }
        return sum;
      }
    }
    throw std::invalid_argument("ratio_suite: unknown target");
  }

  BoundedReal asymptotic_log(const RatioSpec& s, long n) {
    const mpfr_prec_t bits = ctx_.working_bits();
    const BigRational nq(n);
    switch (s.target) {
      case RatioTarget::factorial_product:
        return form_value(factorial_product_form(s.k), n, ctx_);
      case RatioTarget::factorial_power_product:
        return form_value(factorial_power_product_form(s.r, s.k), n, ctx_);
      case RatioTarget::power_product:
        return form_value(power_product_form(s.r), n, ctx_);
      case RatioTarget::bernoulli_product: {
        // log B1 + n(n+1)(log n - log pi - 3/2) + n/2 log(16 pi n) + 11/24 log n
        const auto [log_n, log_pi] = pieces(n, ctx_);
        const BoundedReal base = log_n - log_pi - BigRational(BigInt(3), BigInt(2));
        const BoundedReal log_16 = log_integer(BigInt(16), bits);
        return b()[0].log_value + base * (nq * (nq + 1)) +
               (log_16 + log_pi + log_n) * BigRational(BigInt(n), BigInt(2)) +
               log_n * BigRational(BigInt(11), BigInt(24));
      }
      case RatioTarget::bernoulli_product_over_2nu:
        return b()[1].log_value + g_log(BoundedReal::exact(n, bits), ctx_);
      case RatioTarget::mass_formula: {
        // log B3 + n^2 (log n - log pi - 3/2) - n/2 (log 4n - log pi - 1) - 1/24 log n
        const auto [log_n, log_pi] = pieces(n, ctx_);
        const BoundedReal base = log_n - log_pi - BigRational(BigInt(3), BigInt(2));
        const BoundedReal second = log_integer(BigInt(4), bits) + log_n - log_pi - BigRational(1);
        return b()[2].log_value + base * (nq * nq) -
               second * BigRational(BigInt(n), BigInt(2)) -
               log_n / BigRational(24);
      }
      case RatioTarget::gamma_power_product: {
        const auto [c1, c2] = gamma_power_product_constants(ctx_);
        return log(c1) + log(c2) * (nq * nq) -
               log_integer(BigInt(n), bits) / BigRational(12);
      }
    }
    throw std::invalid_argument("ratio_suite: unknown target");
  }

  PrecisionContext ctx_;
  std::vector<ConstantReport> b_;
};

std::string gap_string(const std::optional<BoundedReal>& gap) {
  if (!gap || (gap->is_exact() && mpfr_zero_p(gap->mid()))) return "0";
  return format_scientific(*gap, 4);
}

std::string params_text(const CheckParams& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

RatioReport make_ratio_report(std::string name, CheckParams params,
                       std::vector<std::pair<long, BoundedReal>> gaps) {
  RatioReport rep;
  rep.name = std::move(name);
  rep.params = std::move(params);
  rep.gaps = std::move(gaps);
  rep.monotone_tail = true;
  for (std::size_t i = 1; i < rep.gaps.size(); ++i) {
    if (!(rep.gaps[i - 1].second - rep.gaps[i].second).certainly_positive()) {
      rep.monotone_tail = false;
      rep.failure = "gap at n=" + std::to_string(rep.gaps[i].first) +
                    " not below gap at n=" + std::to_string(rep.gaps[i - 1].first);
      break;
    }
  }
  return rep;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::exact_equal:
      return "exact-equal";
    case CheckStatus::within_bounds:
      return "within-bounds";
    case CheckStatus::fail:
      return "FAIL";
  }
  return "FAIL";
}

std::uint64_t oracle_bit_cap() {
  const char* env = std::getenv(kOracleBitCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultOracleBitCap;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string(kOracleBitCapEnv) + ": not a positive integer: " + env);
  }
  return v;
}

BigInt exact_factorial_product(long k, long n, unsigned r) {
  if (k < 1 || n < 0) throw std::invalid_argument("exact_factorial_product: need k >= 1, n >= 0");
  long double bits = 0;
  for (long v = 1; v <= n; ++v) {
    bits += static_cast<long double>(v_pow(v, r)) *
            std::lgamma(static_cast<long double>(k * v + 1)) / std::log(2.0L);
  }
  check_cap(bits, "exact_factorial_product");
  BigInt out = 1;
  BigInt f = 1;
  for (long v = 1; v <= n; ++v) {
    for (long j = k * (v - 1) + 1; j <= k * v; ++j) f *= j;
    out *= r == 0 ? f : z_pow(f, v_pow(v, r));
  }
  return out;
}

BigInt exact_power_product(long n, unsigned r) {
  if (n < 0) throw std::invalid_argument("exact_power_product: need n >= 0");
  long double bits = 0;
  for (long v = 2; v <= n; ++v) {
    bits += static_cast<long double>(v_pow(v, r)) * std::log2(static_cast<long double>(v));
  }
  check_cap(bits, "exact_power_product");
  BigInt out = 1;
  for (long v = 2; v <= n; ++v) out *= ui_pow(static_cast<unsigned long>(v), v_pow(v, r));
  return out;
}

std::map<unsigned long, BigInt> power_product_exponents(long n, unsigned r) {
  if (n < 0) throw std::invalid_argument("power_product_exponents: need n >= 0");
  std::map<unsigned long, BigInt> out;
  for (long v = 2; v <= n; ++v) {
    BigInt weight = ui_pow(static_cast<unsigned long>(v), r);
    unsigned long m = static_cast<unsigned long>(v);
    for (unsigned long p = 2; p * p <= m; ++p) {
      while (m % p == 0) {
        out[p] += weight;
        m /= p;
      }
    }
    if (m > 1) out[m] += weight;
  }
  return out;
}

BoundedReal log_factored(const std::map<unsigned long, BigInt>& exponents,
                         const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  BoundedReal sum = BoundedReal::exact(0, bits);
  for (const auto& [p, e] : exponents) {
    sum += log_integer(BigInt(p), bits) * BigRational(e);
  }
  return sum;
}

BigRational exact_bernoulli_product(long n, BernoulliDivisor divisor) {
  if (n < 0) throw std::invalid_argument("exact_bernoulli_product: need n >= 0");
  BigRational out(1);
  for (long v = 1; v <= n; ++v) {
    out *= abs(bernoulli(static_cast<unsigned>(2 * v)));
    if (divisor == BernoulliDivisor::over_2nu) out /= BigRational(2 * v);
    if (divisor == BernoulliDivisor::over_4nu) out /= BigRational(4 * v);
  }
  return out;
}

BigRational mass_formula(long dimension) {
  if (dimension <= 0 || dimension % 8 != 0) {
    throw std::invalid_argument("mass_formula: dimension must be a positive multiple of 8");
  }
  const long k = dimension / 2;
  return abs(bernoulli(static_cast<unsigned>(k))) / BigRational(2 * k) *
         exact_bernoulli_product(k - 1, BernoulliDivisor::over_4nu);
}

std::vector<IdentityReport> identity_suite() {
  std::vector<IdentityReport> out;
  for (auto check : {factorial_rows_columns, shifted_factorial_product_identity,
                     shifted_factorial_ratio_identity, power_factorial_scheme,
                     euler_gamma_product, matrix_inverse_identity, mass_value}) {
    out.push_back(check());
    if (!out.back().passed()) break;
  }
  return out;
}

std::string to_string(const RatioSpec& spec) {
  switch (spec.target) {
    case RatioTarget::factorial_product:
      return "factorial_product";
    case RatioTarget::bernoulli_product:
      return "bernoulli_product";
    case RatioTarget::bernoulli_product_over_2nu:
      return "bernoulli_product_over_2nu";
    case RatioTarget::mass_formula:
      return "mass_formula";
    case RatioTarget::power_product:
      return "power_product";
    case RatioTarget::factorial_power_product:
      return "factorial_power_product";
    case RatioTarget::gamma_power_product:
      return "gamma_power_product";
  }
  return "unknown";
}

std::vector<RatioSpec> standard_ratio_targets() {
  return {
      {RatioTarget::factorial_product, 1, 0},
      {RatioTarget::factorial_product, 2, 0},
      {RatioTarget::factorial_product, 3, 0},
      {RatioTarget::bernoulli_product, 1, 0},
      {RatioTarget::bernoulli_product_over_2nu, 1, 0},
      {RatioTarget::mass_formula, 1, 0},
      {RatioTarget::power_product, 1, 1},
      {RatioTarget::power_product, 1, 2},
      {RatioTarget::power_product, 1, 3},
      {RatioTarget::factorial_power_product, 2, 1},
      {RatioTarget::gamma_power_product, 1, 0},
  };
}

std::vector<RatioReport> ratio_suite(const std::vector<RatioSpec>& targets,
                                     const std::vector<long>& n_grid,
                                     const PrecisionContext& ctx) {
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw std::invalid_argument("ratio_suite: n_grid must be positive and strictly increasing");
    }
  }
  RatioEvaluator eval(ctx);
  std::vector<RatioReport> out;
  for (const RatioSpec& s : targets) {
    CheckParams params;
    switch (s.target) {
      case RatioTarget::factorial_product:
        params["k"] = s.k;
        break;
      case RatioTarget::power_product:
        params["r"] = s.r;
        break;
      case RatioTarget::factorial_power_product:
        params["k"] = s.k;
        params["r"] = s.r;
        break;
      default:
        break;
    }
    std::vector<std::pair<long, BoundedReal>> gaps;
    for (long n : n_grid) {
      long m = n;
      if (s.target == RatioTarget::mass_formula) m = (n + 3) / 4 * 4;
      if (!gaps.empty() && gaps.back().first == m) continue;
      gaps.emplace_back(m, eval.gap(s, m));
    }
    out.push_back(make_ratio_report(to_string(s), std::move(params), std::move(gaps)));
  }
  return out;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (unsigned long m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return out;
}

IdentityReport eta_identity_check(unsigned long prime_bound, const PrecisionContext& ctx) {
  if (prime_bound < 2) throw std::invalid_argument("eta_identity_check: prime bound must be >= 2");
  const mpfr_prec_t bits = ctx.working_bits();
  const BoundedReal pi = BoundedReal::pi(bits);
  const BoundedReal one = BoundedReal::exact(1, bits);
  const std::vector<unsigned long> primes = primes_up_to(prime_bound);

  IdentityReport rep;
  rep.name = "eta_identity";
  rep.params = {{"P", static_cast<long>(prime_bound)}, {"primes", static_cast<long>(primes.size())}};
  rep.points = static_cast<long>(primes.size());
  BoundedReal product = one;
  bool factors_below_one = true;
  for (unsigned long p : primes) {
    const BoundedReal log_p = log_integer(BigInt(p), bits);
    const BoundedReal factor = exp(log_p / BigRational(12)) * dedekind_eta_imag(log_p / pi, ctx);
    if (!(one - factor).certainly_positive()) factors_below_one = false;
    product *= factor;
  }
  const BoundedReal target = one / c_constant(2, ctx).value;
  // sum_{p>P} -log prod_v (1 - p^-2v) <= 2 sum_{n>P} n^-2 / (1 - n^-2) <= 5/(2P)
  const BoundedReal tail = BoundedReal::from_rational(BigRational(BigInt(5), BigInt(2 * prime_bound)), bits);
  const BoundedReal log_gap = log(product) - log(target);

  rep.lhs = round_to_digits(product, 15);
  rep.rhs = round_to_digits(target, 15);
  rep.gap = abs(product - target);
  rep.tolerance = tail;
  const bool inside = !log_gap.certainly_negative() && !(log_gap - tail).certainly_positive();
  rep.status = factors_below_one && inside ? CheckStatus::within_bounds : CheckStatus::fail;
  return rep;
}

std::vector<BigRational> abelian_means(const std::vector<long>& checkpoints) {
  long limit = 0;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw std::invalid_argument("abelian_means: checkpoints must be positive and increasing");
    }
    limit = checkpoints[i];
  }
  // Smallest prime factor sieve; a(n) = prod over prime powers p^e of p(e).
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (long i = 2; i <= limit; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (long j = i; j <= limit; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<std::uint64_t> partitions;
  for (unsigned e = 0; e < 64; ++e) partitions.push_back(partition_count(e).get_ui());

  std::vector<BigRational> out;
  std::uint64_t sum = 0;
  std::size_t next = 0;
  for (long n = 1; n <= limit; ++n) {
    std::uint64_t a = 1;
    long m = n;
    while (m > 1) {
      const std::uint32_t p = spf[static_cast<std::size_t>(m)];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      a *= partitions[e];
    }
    sum += a;
    if (n == checkpoints[next]) {
      out.emplace_back(BigInt(static_cast<unsigned long>(sum)), BigInt(n));
      ++next;
    }
  }
  return out;
}

IdentityReport abelian_average_check(long n, const PrecisionContext& ctx, double tolerance) {
  if (n < 1) throw std::invalid_argument("abelian_average_check: need N >= 1");
  const mpfr_prec_t bits = ctx.working_bits();
  const BigRational mean = abelian_means({n}).front();
  const BoundedReal c1 = c_constant(1, ctx).value;
  const BoundedReal mean_r = BoundedReal::from_rational(mean, bits);
  IdentityReport rep;
  rep.name = "abelian_average";
  rep.params = {{"N", n}};
  rep.points = n;
  rep.lhs = mean.to_string();
  rep.rhs = round_to_digits(c1, 12);
  rep.gap = abs(mean_r - c1);
  rep.tolerance = BoundedReal::from_decimal(std::to_string(tolerance), "0", bits);
  rep.status = (*rep.tolerance - *rep.gap).certainly_positive() ? CheckStatus::within_bounds
                                                                : CheckStatus::fail;
  return rep;
}

RatioReport milnor_equivalence_check(const std::vector<long>& n_grid, const PrecisionContext& ctx) {
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw std::invalid_argument("milnor_equivalence_check: n_grid must be positive and increasing");
    }
  }
  const mpfr_prec_t bits = ctx.working_bits();
  const std::vector<ConstantReport> b = b_family(ctx);
  const BoundedReal constant = log_integer(BigInt(2), bits) + b[3].log_value - b[1].log_value;
  std::vector<std::pair<long, BoundedReal>> gaps;
  for (long n : n_grid) {
    const BoundedReal log_ratio = constant + milnor_F_log(BoundedReal::exact(2 * n + 1, bits), ctx) -
                                  g_log(BoundedReal::exact(n, bits), ctx);
    gaps.emplace_back(n, abs(log_ratio));
  }
  return make_ratio_report("milnor_equivalence", {}, std::move(gaps));
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << "identity " << r.name << ' ' << params_text(r.params) << ' ' << to_string(r.status)
     << " gap=" << gap_string(r.gap) << " points=" << r.points;
  if (!r.passed()) os << " lhs=" << r.lhs << " rhs=" << r.rhs;
  return os.str();
}

std::string to_text(const RatioReport& r) {
  std::ostringstream os;
  os << "ratio " << r.name << ' ' << params_text(r.params) << ' '
     << (r.passed() ? "within-bounds" : "FAIL");
  for (const auto& [n, gap] : r.gaps) os << " n=" << n << ":" << format_scientific(gap, 4);
  if (!r.passed()) os << " (" << r.failure << ")";
  return os.str();
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["gap"] = gap_string(r.gap);
  if (r.tolerance) j["tolerance"] = format_scientific(*r.tolerance, 4);
  j["points"] = r.points;
  if (!r.passed()) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  return j;
}

nlohmann::json to_json(const RatioReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["status"] = r.passed() ? "within-bounds" : "FAIL";
  std::optional<BoundedReal> worst;
  nlohmann::json series = nlohmann::json::array();
  for (const auto& [n, gap] : r.gaps) {
    series.push_back({{"n", n}, {"gap", format_scientific(gap, 4)}});
    if (!worst || gap.compare_mid(*worst) > 0) worst = gap;
  }
  j["gap"] = gap_string(worst);
  j["series"] = series;
  if (!r.passed()) j["failure"] = r.failure;
  return j;
}

}  // namespace bernfact
