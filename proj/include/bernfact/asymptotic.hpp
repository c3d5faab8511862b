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

#ifndef BERNFACT_ASYMPTOTIC_HPP_
#define BERNFACT_ASYMPTOTIC_HPP_

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "bernfact/precision.hpp"

namespace bernfact {

/// A transcendental constant that appears linearly in exact expressions.
struct Symbol {
  enum class Kind {
    log_prime,     // log p, a = p
    log_pi,        // log pi
    euler_gamma,   // gamma
    log_glaisher,  // log A_r, a = r >= 1
    log_gamma,     // log Gamma(a / b), 0 < a / b < 1 in lowest terms
    log_f,         // log F_{r,k}, a = r, b = k
  };

  Kind kind = Kind::log_pi;
  long a = 0;
  long b = 0;

  auto operator<=>(const Symbol&) const = default;
  std::string to_string() const;
};

/// q + sum c_i s_i with rational q, c_i and symbols s_i. Constructors and
/// arithmetic keep a normal form: logs of rationals are split into log
/// primes, log Gamma arguments are shifted into (0, 1), Gamma(1/2) becomes
/// 1/2 log pi and log A_0 becomes 1/2 log 2 pi. Equality is structural on
/// that normal form.
class ExactConstant {
 public:
  ExactConstant() = default;
  ExactConstant(const BigRational& q) : rational_(q) {}  // NOLINT
  ExactConstant(long q) : rational_(q) {}                // NOLINT

  static ExactConstant symbol(const Symbol& s, const BigRational& coeff = 1);
  /// log q for a positive rational q.
  static ExactConstant log_of(const BigRational& q);
  static ExactConstant log_pi();
  static ExactConstant log_two_pi();
  static ExactConstant euler_gamma();
  static ExactConstant log_glaisher(long r);
  /// log Gamma(p / q) for p, q > 0.
  static ExactConstant log_gamma(long p, long q);
  static ExactConstant log_f(long r, long k);

  const BigRational& rational_part() const { return rational_; }
  const std::map<Symbol, BigRational>& terms() const { return terms_; }
  BigRational coefficient(const Symbol& s) const;
  bool is_rational() const { return terms_.empty(); }

  ExactConstant operator-() const;
  ExactConstant& operator+=(const ExactConstant& o);
  ExactConstant& operator-=(const ExactConstant& o);
  ExactConstant& operator*=(const BigRational& q);
  ExactConstant& operator/=(const BigRational& q);

  friend ExactConstant operator+(ExactConstant a, const ExactConstant& b) { return a += b; }
  friend ExactConstant operator-(ExactConstant a, const ExactConstant& b) { return a -= b; }
  friend ExactConstant operator*(ExactConstant a, const BigRational& q) { return a *= q; }
  friend ExactConstant operator*(const BigRational& q, ExactConstant a) { return a *= q; }
  friend ExactConstant operator/(ExactConstant a, const BigRational& q) { return a /= q; }
  friend bool operator==(const ExactConstant& a, const ExactConstant& b) {
    return a.rational_ == b.rational_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Symbol& s, const BigRational& c);

  BigRational rational_;
  std::map<Symbol, BigRational> terms_;
};

std::ostream& operator<<(std::ostream& os, const ExactConstant& c);

/// Numeric value of one symbol.
using SymbolResolver =
    std::function<BoundedReal(const Symbol&, const PrecisionContext&)>;

/// Resolves every symbol except log_f, which throws std::invalid_argument.
BoundedReal elementary_symbol_value(const Symbol& s, const PrecisionContext& ctx);

BoundedReal evaluate(const ExactConstant& c, const SymbolResolver& resolve,
                     const PrecisionContext& ctx);

/// sum_{v=0}^{degree} (alpha_v x^v + beta_v x^v log x).
template <class C>
class BasicAsymptoticForm {
 public:
  explicit BasicAsymptoticForm(int degree = 0)
      : alpha_(static_cast<std::size_t>(degree) + 1),
        beta_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw std::invalid_argument("AsymptoticForm: negative degree");
  }
  BasicAsymptoticForm(std::vector<C> alpha, std::vector<C> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.empty() || alpha_.size() != beta_.size()) {
      throw std::invalid_argument("AsymptoticForm: coefficient size mismatch");
    }
  }

  int degree() const { return static_cast<int>(alpha_.size()) - 1; }
  const std::vector<C>& alpha() const { return alpha_; }
  const std::vector<C>& beta() const { return beta_; }
  C& alpha(int v) { return at(alpha_, v); }
  C& beta(int v) { return at(beta_, v); }
  const C& alpha(int v) const { return alpha_.at(static_cast<std::size_t>(v)); }
  const C& beta(int v) const { return beta_.at(static_cast<std::size_t>(v)); }

  BasicAsymptoticForm& operator+=(const BasicAsymptoticForm& o) {
    for (int v = 0; v <= o.degree(); ++v) {
      alpha(v) += o.alpha(v);
      beta(v) += o.beta(v);
    }
    return *this;
  }
  BasicAsymptoticForm& operator-=(const BasicAsymptoticForm& o) {
    for (int v = 0; v <= o.degree(); ++v) {
      alpha(v) -= o.alpha(v);
      beta(v) -= o.beta(v);
    }
    return *this;
  }
  friend BasicAsymptoticForm operator+(BasicAsymptoticForm a, const BasicAsymptoticForm& b) {
    return a += b;
  }
  friend BasicAsymptoticForm operator-(BasicAsymptoticForm a, const BasicAsymptoticForm& b) {
    return a -= b;
  }
  template <class S>
  friend BasicAsymptoticForm operator*(BasicAsymptoticForm a, const S& s) {
    for (auto& c : a.alpha_) c = c * s;
    for (auto& c : a.beta_) c = c * s;
    return a;
  }

 private:
  // Grows the form when a higher coefficient is addressed.
  C& at(std::vector<C>& v, int i) {
    if (i < 0) throw std::out_of_range("AsymptoticForm: negative index");
    if (static_cast<std::size_t>(i) >= alpha_.size()) {
      alpha_.resize(static_cast<std::size_t>(i) + 1, zero_like());
      beta_.resize(static_cast<std::size_t>(i) + 1, zero_like());
    }
    return v[static_cast<std::size_t>(i)];
  }
  C zero_like() const {
    if constexpr (std::is_same_v<C, BoundedReal>) {
      return BoundedReal::exact(0, alpha_.front().precision());
    } else {
      return C();
    }
  }

  std::vector<C> alpha_;
  std::vector<C> beta_;
};

using AsymptoticForm = BasicAsymptoticForm<BoundedReal>;
using ExactForm = BasicAsymptoticForm<ExactConstant>;

/// The constant term alpha_0.
BoundedReal psi(const AsymptoticForm& f);
ExactConstant psi(const ExactForm& f);

/// g(x) = f(lambda x) expanded back into the same basis.
AsymptoticForm rescale(const AsymptoticForm& f, const BoundedReal& lambda);
ExactForm rescale(const ExactForm& f, const BigRational& lambda);

/// f(x) for x > 0.
BoundedReal evaluate(const AsymptoticForm& f, const BoundedReal& x);

AsymptoticForm to_numeric(const ExactForm& f, const SymbolResolver& resolve,
                          const PrecisionContext& ctx);

/// Coefficients c_0..c_{r+1} of S_r(x) = sum_{v=1}^x v^r as a polynomial,
/// c_{j+1} = C(r, j) (-1)^(r-j) B_{r-j} / (j + 1).
std::vector<BigRational> power_sum_polynomial(unsigned r);

/// S_r(n) = 1^r + ... + n^r.
BigRational s_r(unsigned r, const BigRational& n);

/// S_r(n; f) = sum_j C(r, j) (-1)^(r-j) B_{r-j} n^(j+1) f(j+1) / (j + 1).
BoundedReal s_r_weighted(unsigned r, const BoundedReal& n,
                         const std::function<BoundedReal(long)>& weight);
ExactConstant s_r_weighted(unsigned r, const BigRational& n,
                           const std::function<ExactConstant(long)>& weight);

/// [log Q_r]: (S_r(x) - zeta(-r)) log x + S_r(x; H_r - H_diamond).
ExactForm q_form(unsigned r);

/// [log prod_{v<=x} v^(v^r)] = log A_r + [log Q_r].
ExactForm power_product_form(unsigned r);

/// [log P_{r,k}].
ExactForm p_form(unsigned r, long k);

/// [log prod_{v<=x} (kv)!^(v^r)]
///   = log F_{r,k} + 1/2 log A_r + k log A_{r+1}
///     + [log P_{r,k}] + 1/2 [log Q_r] + k [log Q_{r+1}].
ExactForm factorial_power_product_form(unsigned r, long k);

/// [log prod_{v<=x} (kv)!]; constant log F_k + k log A + 1/4 log 2 pi.
ExactForm factorial_product_form(long k);

/// [log prod_{v<=x} (v - alpha)] for 0 <= alpha < 1 rational:
/// 1/2 log 2 pi - log Gamma(1 - alpha) + x log x - x + (1/2 - alpha) log x.
ExactForm gamma_quotient_form(const BigRational& alpha);

/// log Q_r(n) and log P_{r,k}(n) at real n >= 1.
BoundedReal q_r_log(unsigned r, const BoundedReal& n, const PrecisionContext& ctx);
BoundedReal p_rk_log(unsigned r, long k, const BoundedReal& n,
                     const PrecisionContext& ctx);

/// log F(x) = x^2/4 (log x - log 2 pi - 3/2) + x/4 (log 8 pi + 1 - log x)
///            - 1/24 log x.
BoundedReal milnor_F_log(const BoundedReal& x, const PrecisionContext& ctx);

/// log G(n) = n^2 (log n - log pi - 3/2) + n/2 (log 4n - log pi - 1)
///            - 1/24 log n.
BoundedReal g_log(const BoundedReal& n, const PrecisionContext& ctx);

}  // namespace bernfact

#endif  // BERNFACT_ASYMPTOTIC_HPP_
