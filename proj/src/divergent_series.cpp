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

#include <algorithm>
#include <cmath>

#include "bernfact/special_functions.hpp"

namespace bernfact {

namespace {

bool is_exact_zero(const BoundedReal& v) {
  return v.is_exact() && mpfr_zero_p(v.mid());
}

// |a| < 2^-bits (1 + |b|), judged on midpoints.
bool negligible(const BoundedReal& a, const BoundedReal& b, mpfr_prec_t bits) {
  detail::Mpfr lhs(BoundedReal::kRadiusBits);
  mpfr_abs(lhs.get(), a.mid(), MPFR_RNDU);
  detail::Mpfr rhs(BoundedReal::kRadiusBits);
  mpfr_abs(rhs.get(), b.mid(), MPFR_RNDD);
  mpfr_add_ui(rhs.get(), rhs.get(), 1, MPFR_RNDD);
  mpfr_mul_2si(rhs.get(), rhs.get(), -static_cast<long>(bits), MPFR_RNDD);
  return mpfr_cmp(lhs.get(), rhs.get()) < 0;
}

}  // namespace

BoundedReal TruncationResult::enclosure() const {
  if (is_exact_zero(omitted_term)) return partial_sum;
  return BoundedReal::hull(partial_sum, partial_sum + omitted_term);
}

TruncationResult eval_optimal(const DivergentTail& tail, const BoundedReal& x,
                              const PrecisionContext& ctx) {
  if (!x.certainly_positive()) {
    throw std::domain_error("eval_optimal: x must be positive");
  }
  const mpfr_prec_t prec = std::max(ctx.working_bits(), x.precision());
  const BoundedReal xx = x.with_precision(prec);
  const BoundedReal x_inv2 = BoundedReal::exact(1, prec) / (xx * xx);
  BoundedReal power = pow_int(xx, -(2 * tail.j_start - 1));

  TruncationResult result;
  result.partial_sum = BoundedReal::exact(0, prec);
  result.theta_lo = BoundedReal::exact(0, prec);
  result.theta_hi = BoundedReal::exact(1, prec);

  auto finish = [&](long m, const BoundedReal& omitted) {
    result.m_opt = m;
    result.omitted_term = omitted;
    result.remainder_bound = abs(omitted);
    return result;
  };

  std::optional<BoundedReal> pending;  // smallest term seen, not yet added
  for (long j = tail.j_start;; ++j) {
    if (tail.j_end && j > *tail.j_end) {
      if (pending) result.partial_sum += *pending;
      return finish(j, BoundedReal::exact(0, prec));
    }
    BoundedReal term = tail.coeff(j, ctx) * power;
    power *= x_inv2;
    if (is_exact_zero(term)) {
      if (pending) result.partial_sum += *pending;
      return finish(j, term);
    }
    if (pending) {
      if (term.compare_abs_mid(*pending) >= 0) {
        if (j == tail.j_start + 1) {
          throw NoDecreaseError("eval_optimal: terms of '" + tail.description +
                                "' do not decrease at this argument");
        }
        return finish(j - 1, *pending);
      }
      result.partial_sum += *pending;
      if (negligible(term, result.partial_sum, prec)) {
        result.stopped_at_precision = true;
        return finish(j, term);
      }
    }
    pending = term;
  }
}

DivergentTail stirling_tail() { return dk_tail(1); }

BigRational n_coefficient(long m, long k) {
  if (m < 2 || k < 1) throw std::domain_error("n_coefficient: need m >= 2, k >= 1");
  return bernoulli(static_cast<unsigned>(m)) /
         (BigRational(m * (m - 1)) * pow(BigRational(k), m - 1));
}

DivergentTail dk_tail(long k) {
  if (k < 1) throw std::domain_error("dk_tail: k must be >= 1");
  DivergentTail t;
  t.j_start = 1;
  t.description = k == 1 ? "Stirling series" : "D_" + std::to_string(k);
  t.coeff = [k](long j, const PrecisionContext& ctx) {
    return BoundedReal::from_rational(n_coefficient(2 * j, k), ctx.working_bits());
  };
  return t;
}

BoundedReal log_factorial(const BoundedReal& x, const PrecisionContext& ctx) {
  if (!x.certainly_positive()) {
    throw std::domain_error("log_factorial: x must be positive");
  }
  const mpfr_prec_t prec = std::max(ctx.working_bits(), x.precision());
  const BoundedReal xx = x.with_precision(prec);
  const BoundedReal half_log_two_pi = log_two_pi(ctx) / BigRational(2);
  const DivergentTail tail = stirling_tail();

  // Stirling's series at y reaches e^(-2 pi y) at best.
  const double cutoff = std::ceil(0.4 * ctx.working_digits()) + 4;
  long shift = std::max(0L, static_cast<long>(std::ceil(cutoff - xx.mid_double())));
  for (;; shift = std::max(2 * shift, 1L)) {
    const BoundedReal y = xx + BoundedReal::exact(shift, prec);
    const BoundedReal log_y = log(y);
    const BoundedReal main = half_log_two_pi + (y + BigRational(1, 2)) * log_y - y;
    TruncationResult tr;
    try {
      tr = eval_optimal(tail, y, ctx);
    } catch (const NoDecreaseError&) {
      continue;
    }
    if (!tr.stopped_at_precision && !is_exact_zero(tr.omitted_term) &&
        !negligible(tr.remainder_bound, main, prec - 8)) {
      continue;
    }
    BoundedReal value = main + tr.enclosure();
    if (shift > 0) {
      // log Gamma(x + 1) = log Gamma(y + 1) - log prod_{j=1}^{shift} (x + j)
      BoundedReal prod = BoundedReal::exact(1, prec);
      for (long j = 1; j <= shift; ++j) prod *= xx + BoundedReal::exact(j, prec);
      value -= log(prod);
    }
    return value;
  }
}

}  // namespace bernfact
