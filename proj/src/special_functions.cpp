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

#include "bernfact/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "bernfact/divergent_series.hpp"
#include "memo.hpp"

namespace bernfact {

namespace {

// Even-index Bernoulli numbers B_0, B_2, B_4, ... grown on demand.
class BernoulliCache {
 public:
  BigRational even(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (k >= values_.size()) grow(std::max<unsigned>(k + 1, 2 * values_.size()));
    return values_[k];
  }

 private:
  // Tangent numbers T_1..T_n by the in-place integer recurrence, then
  // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
  void grow(unsigned count) {
    const unsigned n = count - 1;
    std::vector<BigInt> t(n + 1);
    if (n >= 1) t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= n; ++k) {
      for (unsigned j = k; j <= n; ++j) {
        t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
      }
    }
    values_.assign(count, BigRational());
    values_[0] = 1;
    BigInt four_k = 1;
    for (unsigned k = 1; k <= n; ++k) {
      four_k *= 4;
      BigInt num = 2 * k * t[k];
      if (k % 2 == 0) num = -num;
      values_[k] = BigRational(num, four_k * (four_k - 1));
    }
  }

  std::mutex mu_;
  std::vector<BigRational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

BoundedReal from_long(long v, mpfr_prec_t prec) { return BoundedReal::exact(v, prec); }

// 2^-bits as a ball, used as a relative stopping threshold.
BoundedReal epsilon(mpfr_prec_t bits, mpfr_prec_t prec) {
  BigRational e(1, BigInt(1) << static_cast<mp_bitcnt_t>(bits));
  return BoundedReal::from_rational(e, prec);
}

bool below(const BoundedReal& a, const BoundedReal& b) {
  detail::Mpfr au = a.magnitude_upper();
  detail::Mpfr bl = b.magnitude_lower();
  return mpfr_cmp(au.get(), bl.get()) < 0;
}

long initial_cutoff(const PrecisionContext& ctx) {
  return static_cast<long>(std::ceil(0.4 * ctx.working_digits())) + 4;
}

// Sum over v >= N of v^-s, or of log(v) v^-s when `derivative` is set, by
// Euler-Maclaurin. Returns false when N is too small for the remainder bound.
bool em_tail(long s, long n, bool derivative, mpfr_prec_t prec,
             const BoundedReal& target_scale, BoundedReal& out) {
  const BoundedReal nn = from_long(n, prec);
  const BoundedReal log_n = log(nn);
  const BoundedReal n_pow = pow_int(nn, -s);  // N^-s
  const BoundedReal n_inv2 = pow_int(nn, -2);
  const BoundedReal s1 = from_long(s - 1, prec);

  BoundedReal tail;
  if (!derivative) {
    tail = nn * n_pow / s1 + n_pow / BigRational(2);
  } else {
    // integral of log(x) x^-s from N: N^(1-s) (log N/(s-1) + 1/(s-1)^2)
    tail = nn * n_pow * (log_n / s1 + BoundedReal::exact(1, prec) / (s1 * s1)) +
           log_n * n_pow / BigRational(2);
  }

  const BoundedReal eps = epsilon(prec, prec) * target_scale;
  // c_m = (s)_m rising factorial, h_m = sum_{i<m} 1/(s+i), d_m = c_m h_m.
  BigRational c = 1;
  BigRational h = 0;
  BoundedReal n_power = n_pow * nn;  // N^(-s-2j+1) for j = 1 after first step
  BoundedReal prev_mag;
  bool have_prev = false;
  for (long j = 1;; ++j) {
    const long m = 2 * j - 1;
    // advance c, h to index m (from index m - 2, or from 0 at j = 1)
    for (long i = (j == 1 ? 0 : m - 2); i < m; ++i) {
      h += BigRational(BigInt(1), BigInt(s + i));
      c *= BigRational(s + i);
    }
    n_power *= n_inv2;
    const BigRational coeff =
        bernoulli(static_cast<unsigned>(2 * j)) / BigRational(factorial(2 * j));
    BoundedReal term;
    if (!derivative) {
      term = n_power * (coeff * c);
    } else {
      term = n_power * (log_n * (coeff * c) - BoundedReal::from_rational(coeff * c * h, prec));
    }
    if (have_prev && !below(term, prev_mag)) return false;
    tail += term;
    if (below(term, eps)) {
      if (derivative) {
        // g^(2M) must keep one sign on [N, inf): log N > d_2M / c_2M = h_2M.
        BigRational h2 = h + BigRational(BigInt(1), BigInt(s + m));
        if (!log_n.certainly_positive() ||
            !(log_n - h2).certainly_positive()) {
          return false;
        }
      }
      out = tail.widened(term);
      return true;
    }
    prev_mag = abs(term);
    have_prev = true;
  }
}

BoundedReal em_series(long s, bool derivative, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  for (long n = initial_cutoff(ctx);; n *= 2) {
    BoundedReal head = BoundedReal::exact(0, prec);
    for (long v = 2; v < n; ++v) {
      BoundedReal t = pow_int(from_long(v, prec), -s);
      if (derivative) t *= log(from_long(v, prec));
      head += t;
    }
    if (!derivative) head += BoundedReal::exact(1, prec);
    BoundedReal tail;
    // Tail terms are compared against the size of the result; zeta'(s) is
    // dominated by -log(2) 2^-s.
    BoundedReal scale =
        derivative ? BoundedReal::log2(prec) * pow_int(from_long(2, prec), -s)
                   : head;
    if (em_tail(s, n, derivative, prec, scale, tail)) {
      BoundedReal total = head + tail;
      return derivative ? -total : total;
    }
  }
}

detail::Memo<std::pair<long, mpfr_prec_t>, BoundedReal>& zeta_memo() {
  static detail::Memo<std::pair<long, mpfr_prec_t>, BoundedReal> memo;
  return memo;
}

detail::Memo<std::pair<long, mpfr_prec_t>, BoundedReal>& zeta_prime_memo() {
  static detail::Memo<std::pair<long, mpfr_prec_t>, BoundedReal> memo;
  return memo;
}

}  // namespace

BigRational bernoulli(unsigned n) {
  if (n == 1) return BigRational(-1, 2);
  if (n % 2 == 1) return 0;
  return bernoulli_cache().even(n / 2);
}

BernoulliTable bernoulli_table(unsigned max_index) {
  BernoulliTable table;
  table.max_index = max_index;
  table.entries.reserve(max_index + 1);
  for (unsigned n = 0; n <= max_index; ++n) table.entries.push_back(bernoulli(n));
  return table;
}

BigRational bernoulli_by_recurrence(unsigned n) {
  std::vector<BigRational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * b[j];
    b[m] = -acc / BigRational(m + 1);
  }
  return b[n];
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigRational harmonic(unsigned n) {
  BigRational h = 0;
  for (unsigned v = 1; v <= n; ++v) h += BigRational(BigInt(1), BigInt(v));
  return h;
}

BigRational zeta_neg(unsigned r) {
  if (r == 0) return BigRational(-1, 2);
  // (-1)^r B_{r+1} / (r+1); for r >= 1 only odd r contribute and the sign is -.
  return -bernoulli(r + 1) / BigRational(r + 1);
}

BoundedReal euler_gamma(const PrecisionContext& ctx) {
  return BoundedReal::euler_gamma(ctx.working_bits());
}

BoundedReal two_pi(const PrecisionContext& ctx) {
  return BoundedReal::pi(ctx.working_bits()) * BigRational(2);
}

BoundedReal log_two_pi(const PrecisionContext& ctx) { return log(two_pi(ctx)); }

BoundedReal zeta_int(long s, const PrecisionContext& ctx) {
  if (s < 2) throw std::domain_error("zeta_int: s must be >= 2");
  return zeta_memo().get({s, ctx.working_bits()},
                         [&] { return em_series(s, false, ctx); });
}

BoundedReal zeta_even_via_bernoulli(long n, const PrecisionContext& ctx) {
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("zeta_even_via_bernoulli: n must be even and >= 2");
  }
  BigRational coeff = abs(bernoulli(static_cast<unsigned>(n))) /
                      BigRational(BigInt(2 * factorial(static_cast<unsigned>(n))));
  return pow_int(two_pi(ctx), n) * coeff;
}

BoundedReal zeta_prime_int(long s, const PrecisionContext& ctx) {
  if (s < 2) throw std::domain_error("zeta_prime_int: s must be >= 2");
  return zeta_prime_memo().get({s, ctx.working_bits()},
                               [&] { return em_series(s, true, ctx); });
}

BoundedReal zeta_prime_neg(unsigned r, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  if (r == 0) return -log_two_pi(ctx) / BigRational(2);
  const BigRational rf(factorial(r));
  if (r % 2 == 0) {
    BigRational sign = (r / 2) % 2 == 0 ? 1 : -1;
    return zeta_int(r + 1, ctx) * (sign * rf / BigRational(2)) /
           pow_int(two_pi(ctx), r);
  }
  // log A_r = B_{r+1}/(r+1) (gamma + log 2 pi)
  //           + 2 (-1)^((r+1)/2) r! zeta'(r+1) / (2 pi)^(r+1)
  BigRational sign = ((r + 1) / 2) % 2 == 0 ? 1 : -1;
  BoundedReal log_a =
      (euler_gamma(ctx) + log_two_pi(ctx)) * (bernoulli(r + 1) / BigRational(r + 1)) +
      zeta_prime_int(r + 1, ctx) * (sign * rf * BigRational(2)) /
          pow_int(two_pi(ctx), r + 1);
  return -log_a - BoundedReal::from_rational(zeta_neg(r) * harmonic(r), prec);
}

BoundedReal log_glaisher(unsigned r, const PrecisionContext& ctx) {
  static detail::Memo<std::pair<unsigned, mpfr_prec_t>, BoundedReal> memo;
  return memo.get({r, ctx.working_bits()}, [&] {
    return -zeta_prime_neg(r, ctx) -
           BoundedReal::from_rational(zeta_neg(r) * harmonic(r), ctx.working_bits());
  });
}

BoundedReal log_gamma_rational(unsigned long p, unsigned long q,
                               const PrecisionContext& ctx) {
  if (q == 0) throw std::invalid_argument("log_gamma_rational: q must be > 0");
  if (p == 0) throw std::domain_error("log_gamma_rational: pole at 0");
  const BigRational x{BigInt(p), BigInt(q)};
  // log Gamma(x) = log Gamma(x + 1) - log x
  return log_factorial(BoundedReal::from_rational(x, ctx.working_bits()), ctx) -
         log_rational(x, ctx.working_bits());
}

BoundedReal dedekind_eta_imag(const BoundedReal& t, const PrecisionContext& ctx) {
  if (!t.certainly_positive()) {
    throw std::domain_error("dedekind_eta_imag: t must be positive");
  }
  const mpfr_prec_t prec = std::max(ctx.working_bits(), t.precision());
  const BoundedReal tt = t.with_precision(prec);
  const BoundedReal pi = BoundedReal::pi(prec);
  const BoundedReal q = exp(-(pi * tt) * BigRational(2));
  const BoundedReal one = BoundedReal::exact(1, prec);
  const BoundedReal eps = epsilon(prec, prec);
  BoundedReal prod = one;
  BoundedReal qv = q;
  for (;;) {
    prod *= one - qv;
    qv *= q;
    // Tail prod_{v > V} (1 - q^v) lies in [1 - q^(V+1)/(1-q), 1].
    BoundedReal tail = qv / (one - q);
    if (below(tail, eps)) {
      BoundedReal value = exp(-(pi * tt) / BigRational(12)) * prod;
      return value.widened(value * tail);
    }
  }
}

BigInt partition_count(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> p{BigInt(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (p.size() <= n) {
    const long m = static_cast<long>(p.size());
    BigInt acc = 0;
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const bool plus = k % 2 == 1;
      long g2 = k * (3 * k + 1) / 2;
      BigInt part = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) part += p[static_cast<std::size_t>(m - g2)];
      if (plus) {
        acc += part;
      } else {
        acc -= part;
      }
    }
    p.push_back(acc);
  }
  return p[n];
}

std::uint64_t abelian_group_count(std::uint64_t n) {
  if (n == 0) throw std::domain_error("abelian_group_count: n must be >= 1");
  std::uint64_t count = 1;
  auto take = [&](std::uint64_t prime) {
    unsigned e = 0;
    while (n % prime == 0) {
      n /= prime;
      ++e;
    }
    if (e > 0) count *= partition_count(e).get_ui();
  };
  take(2);
  for (std::uint64_t d = 3; d * d <= n; d += 2) take(d);
  if (n > 1) take(n);
  return count;
}

}  // namespace bernfact
