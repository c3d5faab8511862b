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

#include <numeric>
#include <ostream>
#include <sstream>

#include "bernfact/divergent_series.hpp"
#include "bernfact/special_functions.hpp"

namespace bernfact {

namespace {

// Prime factorization by trial division; inputs are small in practice.
std::map<unsigned long, long> factorize(BigInt n) {
  std::map<unsigned long, long> f;
  for (unsigned long p = 2; BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++f[p];
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) {
      throw std::invalid_argument("log_of: prime factor too large");
    }
    ++f[n.get_ui()];
  }
  return f;
}

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

}  // namespace

std::string Symbol::to_string() const {
  switch (kind) {
    case Kind::log_prime:
      return "log(" + std::to_string(a) + ")";
    case Kind::log_pi:
      return "log(pi)";
    case Kind::euler_gamma:
      return "gamma";
    case Kind::log_glaisher:
      return "log(A_" + std::to_string(a) + ")";
    case Kind::log_gamma:
      return "logGamma(" + std::to_string(a) + "/" + std::to_string(b) + ")";
    case Kind::log_f:
      return "log(F_{" + std::to_string(a) + "," + std::to_string(b) + "})";
  }
  return "?";
}

void ExactConstant::add_term(const Symbol& s, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactConstant ExactConstant::symbol(const Symbol& s, const BigRational& coeff) {
  ExactConstant c;
  c.add_term(s, coeff);
  return c;
}

ExactConstant ExactConstant::log_of(const BigRational& q) {
  if (q.sign() <= 0) throw std::domain_error("log_of: argument must be positive");
  ExactConstant c;
  for (auto [p, e] : factorize(q.num())) {
    c.add_term({Symbol::Kind::log_prime, static_cast<long>(p), 0}, e);
  }
  for (auto [p, e] : factorize(q.den())) {
    c.add_term({Symbol::Kind::log_prime, static_cast<long>(p), 0}, -e);
  }
  return c;
}

ExactConstant ExactConstant::log_pi() { return symbol({Symbol::Kind::log_pi, 0, 0}); }

ExactConstant ExactConstant::log_two_pi() { return log_of(2) + log_pi(); }

ExactConstant ExactConstant::euler_gamma() {
  return symbol({Symbol::Kind::euler_gamma, 0, 0});
}

ExactConstant ExactConstant::log_glaisher(long r) {
  if (r < 0) throw std::invalid_argument("log_glaisher: r must be >= 0");
  if (r == 0) return log_two_pi() / BigRational(2);
  return symbol({Symbol::Kind::log_glaisher, r, 0});
}

ExactConstant ExactConstant::log_gamma(long p, long q) {
  if (p <= 0 || q <= 0) throw std::domain_error("log_gamma: argument must be positive");
  const long g = std::gcd(p, q);
  p /= g;
  q /= g;
  // Gamma(x + 1) = x Gamma(x): shift the argument into (0, 1].
  const long whole = (p - 1) / q;
  const long base = p - whole * q;
  BigRational shift_product = 1;
  for (long i = 0; i < whole; ++i) shift_product *= frac(base + i * q, q);
  ExactConstant c = log_of(shift_product);
  if (base == q) return c;  // Gamma(1) = 1
  if (2 * base == q) return c + log_pi() / BigRational(2);
  return c + symbol({Symbol::Kind::log_gamma, base, q});
}

ExactConstant ExactConstant::log_f(long r, long k) {
  if (r < 0 || k < 1) throw std::invalid_argument("log_f: need r >= 0, k >= 1");
  return symbol({Symbol::Kind::log_f, r, k});
}

BigRational ExactConstant::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? BigRational(0) : it->second;
}

ExactConstant ExactConstant::operator-() const {
  ExactConstant c = *this;
  c *= BigRational(-1);
  return c;
}

ExactConstant& ExactConstant::operator+=(const ExactConstant& o) {
  rational_ += o.rational_;
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ExactConstant& ExactConstant::operator-=(const ExactConstant& o) {
  rational_ -= o.rational_;
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

ExactConstant& ExactConstant::operator*=(const BigRational& q) {
  rational_ *= q;
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= q;
  return *this;
}

ExactConstant& ExactConstant::operator/=(const BigRational& q) {
  return *this *= BigRational(1) / q;
}

std::string ExactConstant::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (!rational_.is_zero() || terms_.empty()) {
    os << rational_;
    first = false;
  }
  for (const auto& [s, c] : terms_) {
    BigRational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != BigRational(1)) os << mag << "*";
    os << s.to_string();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactConstant& c) {
  return os << c.to_string();
}

BoundedReal elementary_symbol_value(const Symbol& s, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  switch (s.kind) {
    case Symbol::Kind::log_prime:
      return log_integer(BigInt(s.a), prec);
    case Symbol::Kind::log_pi:
      return log(BoundedReal::pi(prec));
    case Symbol::Kind::euler_gamma:
      return euler_gamma(ctx);
    case Symbol::Kind::log_glaisher:
      return log_glaisher(static_cast<unsigned>(s.a), ctx);
    case Symbol::Kind::log_gamma:
      return log_gamma_rational(static_cast<unsigned long>(s.a),
                                static_cast<unsigned long>(s.b), ctx);
    case Symbol::Kind::log_f:
      break;
  }
  throw std::invalid_argument("elementary_symbol_value: no value for " + s.to_string());
}

BoundedReal evaluate(const ExactConstant& c, const SymbolResolver& resolve,
                     const PrecisionContext& ctx) {
  BoundedReal v = BoundedReal::from_rational(c.rational_part(), ctx.working_bits());
  for (const auto& [s, coeff] : c.terms()) v += resolve(s, ctx) * coeff;
  return v;
}

BoundedReal psi(const AsymptoticForm& f) { return f.alpha(0); }

ExactConstant psi(const ExactForm& f) { return f.alpha(0); }

AsymptoticForm rescale(const AsymptoticForm& f, const BoundedReal& lambda) {
  if (!lambda.certainly_positive()) {
    throw std::domain_error("rescale: lambda must be positive");
  }
  const BoundedReal log_lambda = log(lambda);
  AsymptoticForm g = f;
  BoundedReal power = BoundedReal::exact(1, lambda.precision());
  for (int v = 0; v <= f.degree(); ++v) {
    g.alpha(v) = power * (f.alpha(v) + f.beta(v) * log_lambda);
    g.beta(v) = power * f.beta(v);
    power *= lambda;
  }
  return g;
}

ExactForm rescale(const ExactForm& f, const BigRational& lambda) {
  if (lambda.sign() <= 0) throw std::domain_error("rescale: lambda must be positive");
  const ExactConstant log_lambda = ExactConstant::log_of(lambda);
  ExactForm g = f;
  BigRational power = 1;
  for (int v = 0; v <= f.degree(); ++v) {
    // beta_v log(lambda) with beta_v symbolic has no exact meaning here.
    if (!f.beta(v).is_rational()) {
      throw std::invalid_argument("rescale: log coefficients must be rational");
    }
    g.alpha(v) = (f.alpha(v) + log_lambda * f.beta(v).rational_part()) * power;
    g.beta(v) = f.beta(v) * power;
    power *= lambda;
  }
  return g;
}

BoundedReal evaluate(const AsymptoticForm& f, const BoundedReal& x) {
  if (!x.certainly_positive()) throw std::domain_error("evaluate: x must be positive");
  const BoundedReal log_x = log(x);
  BoundedReal sum = BoundedReal::exact(0, x.precision());
  BoundedReal power = BoundedReal::exact(1, x.precision());
  for (int v = 0; v <= f.degree(); ++v) {
    sum += power * (f.alpha(v) + f.beta(v) * log_x);
    power *= x;
  }
  return sum;
}

AsymptoticForm to_numeric(const ExactForm& f, const SymbolResolver& resolve,
                          const PrecisionContext& ctx) {
  std::vector<BoundedReal> alpha;
  std::vector<BoundedReal> beta;
  for (int v = 0; v <= f.degree(); ++v) {
    alpha.push_back(evaluate(f.alpha(v), resolve, ctx));
    beta.push_back(evaluate(f.beta(v), resolve, ctx));
  }
  return AsymptoticForm(std::move(alpha), std::move(beta));
}

std::vector<BigRational> power_sum_polynomial(unsigned r) {
  std::vector<BigRational> c(r + 2);
  for (unsigned j = 0; j <= r; ++j) {
    BigRational b = bernoulli(r - j);
    if ((r - j) % 2 == 1) b = -b;
    c[j + 1] = BigRational(binomial(r, j)) * b / BigRational(j + 1);
  }
  return c;
}

BigRational s_r(unsigned r, const BigRational& n) {
  const std::vector<BigRational> c = power_sum_polynomial(r);
  BigRational sum = 0;
  BigRational power = 1;
  for (const BigRational& ci : c) {
    sum += ci * power;
    power *= n;
  }
  return sum;
}

BoundedReal s_r_weighted(unsigned r, const BoundedReal& n,
                         const std::function<BoundedReal(long)>& weight) {
  const std::vector<BigRational> c = power_sum_polynomial(r);
  BoundedReal sum = BoundedReal::exact(0, n.precision());
  BoundedReal power = n;
  for (unsigned i = 1; i < c.size(); ++i) {
    if (!c[i].is_zero()) sum += power * weight(static_cast<long>(i)) * c[i];
    power *= n;
  }
  return sum;
}

ExactConstant s_r_weighted(unsigned r, const BigRational& n,
                           const std::function<ExactConstant(long)>& weight) {
  const std::vector<BigRational> c = power_sum_polynomial(r);
  ExactConstant sum;
  BigRational power = n;
  for (unsigned i = 1; i < c.size(); ++i) {
    if (!c[i].is_zero()) sum += weight(static_cast<long>(i)) * (c[i] * power);
    power *= n;
  }
  return sum;
}

ExactForm q_form(unsigned r) {
  const std::vector<BigRational> c = power_sum_polynomial(r);
  const BigRational h_r = harmonic(r);
  ExactForm f(static_cast<int>(r) + 1);
  f.beta(0) = -zeta_neg(r);
  for (unsigned i = 1; i < c.size(); ++i) {
    f.beta(static_cast<int>(i)) = c[i];
    f.alpha(static_cast<int>(i)) = c[i] * (h_r - harmonic(i));
  }
  return f;
}

ExactForm power_product_form(unsigned r) {
  ExactForm f = q_form(r);
  f.alpha(0) += ExactConstant::log_glaisher(r);
  return f;
}

ExactForm p_form(unsigned r, long k) {
  if (k < 1) throw std::invalid_argument("p_form: k must be >= 1");
  ExactForm f(static_cast<int>(r) + 2);
  const ExactConstant log_k = ExactConstant::log_of(k);
  const ExactConstant half_log_two_pi_k = (ExactConstant::log_two_pi() + log_k) / BigRational(2);
  const std::vector<BigRational> c_r = power_sum_polynomial(r);
  for (unsigned i = 1; i < c_r.size(); ++i) {
    f.alpha(static_cast<int>(i)) += half_log_two_pi_k * c_r[i];
  }
  const std::vector<BigRational> c_r1 = power_sum_polynomial(r + 1);
  for (unsigned i = 1; i < c_r1.size(); ++i) {
    f.alpha(static_cast<int>(i)) += (log_k - ExactConstant(1)) * (c_r1[i] * BigRational(k));
  }
  f.beta(0) += n_coefficient(static_cast<long>(r) + 2, k);
  for (unsigned j = 1; j <= (r + 1) / 2; ++j) {
    const BigRational n2j = n_coefficient(2 * static_cast<long>(j), k);
    const std::vector<BigRational> c = power_sum_polynomial(r + 1 - 2 * j);
    for (unsigned i = 1; i < c.size(); ++i) {
      f.alpha(static_cast<int>(i)) += ExactConstant(n2j * c[i]);
    }
  }
  return f;
}

ExactForm factorial_power_product_form(unsigned r, long k) {
  ExactForm f = p_form(r, k);
  f += q_form(r) * BigRational(1, 2);
  f += q_form(r + 1) * BigRational(k);
  f.alpha(0) += ExactConstant::log_f(static_cast<long>(r), k) +
                ExactConstant::log_glaisher(r) / BigRational(2) +
                ExactConstant::log_glaisher(r + 1) * BigRational(k);
  return f;
}

ExactForm factorial_product_form(long k) { return factorial_power_product_form(0, k); }

ExactForm gamma_quotient_form(const BigRational& alpha) {
  if (alpha.sign() < 0 || alpha >= BigRational(1)) {
    throw std::domain_error("gamma_quotient_form: need 0 <= alpha < 1");
  }
  const BigRational one_minus = BigRational(1) - alpha;
  ExactForm f(1);
  f.alpha(0) = ExactConstant::log_two_pi() / BigRational(2) -
               ExactConstant::log_gamma(one_minus.num().get_si(), one_minus.den().get_si());
  f.alpha(1) = ExactConstant(-1);
  f.beta(0) = ExactConstant(BigRational(1, 2) - alpha);
  f.beta(1) = ExactConstant(1);
  return f;
}

BoundedReal q_r_log(unsigned r, const BoundedReal& n, const PrecisionContext& ctx) {
  return evaluate(to_numeric(q_form(r), elementary_symbol_value, ctx), n);
}

BoundedReal p_rk_log(unsigned r, long k, const BoundedReal& n,
                     const PrecisionContext& ctx) {
  return evaluate(to_numeric(p_form(r, k), elementary_symbol_value, ctx), n);
}

BoundedReal milnor_F_log(const BoundedReal& x, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max(ctx.working_bits(), x.precision());
  const BoundedReal pi = BoundedReal::pi(prec);
  const BoundedReal log_x = log(x);
  return x * x / BigRational(4) *
             (log_x - log(pi * BigRational(2)) - BigRational(3, 2)) +
         x / BigRational(4) * (log(pi * BigRational(8)) + BigRational(1) - log_x) -
         log_x / BigRational(24);
}

BoundedReal g_log(const BoundedReal& n, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max(ctx.working_bits(), n.precision());
  const BoundedReal log_pi = log(BoundedReal::pi(prec));
  const BoundedReal log_n = log(n);
  return n * n * (log_n - log_pi - BigRational(3, 2)) +
         n / BigRational(2) *
             (log(n * BigRational(4)) - log_pi - BigRational(1)) -
         log_n / BigRational(24);
}

}  // namespace bernfact
