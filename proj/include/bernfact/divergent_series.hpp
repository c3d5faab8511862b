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

#ifndef BERNFACT_DIVERGENT_SERIES_HPP_
#define BERNFACT_DIVERGENT_SERIES_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "bernfact/precision.hpp"

namespace bernfact {

/// sum_{j >= j_start} coeff(j) x^-(2j-1), an asymptotic expansion whose
/// remainder after any truncation is theta times the first omitted term with
/// theta in (0, 1).
struct DivergentTail {
  std::function<BoundedReal(long j, const PrecisionContext& ctx)> coeff;
  long j_start = 1;
  std::string description;
  /// Last index with a nonzero coefficient, when the tail terminates.
  std::optional<long> j_end;
};

struct TruncationResult {
  BoundedReal partial_sum;  // sum of term(j) for j_start <= j < m_opt
  long m_opt = 0;           // first omitted index
  BoundedReal omitted_term; // term(m_opt), zero when the tail terminated
  BoundedReal remainder_bound;  // |term(m_opt)|
  BoundedReal theta_lo;         // the remainder is theta * omitted_term
  BoundedReal theta_hi;         // with theta in (theta_lo, theta_hi)
  /// True when the scan stopped because the remaining terms fell below the
  /// working precision before reaching the minimal term.
  bool stopped_at_precision = false;

  /// Ball enclosing partial_sum + theta * omitted_term for every admissible
  /// theta.
  BoundedReal enclosure() const;
};

/// Raised when the second term is not smaller than the first, i.e. x is too
/// small for the expansion to be of any use.
class NoDecreaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Optimal truncation: adds terms while |term| strictly decreases and stops
/// at the smallest one (ties stop at the earlier index). The scan also stops
/// once terms drop below the working precision.
TruncationResult eval_optimal(const DivergentTail& tail, const BoundedReal& x,
                              const PrecisionContext& ctx);

/// log Gamma(x + 1) - (1/2 log 2 pi + (x + 1/2) log x - x):
/// coefficients B_2j / (2j (2j - 1)).
DivergentTail stirling_tail();

/// N_{2j,k} = B_2j / (2j (2j - 1) k^(2j-1)) at exponent -(2j - 1).
DivergentTail dk_tail(long k);

/// N_{m,k} = B_m / (m (m - 1) k^(m-1)), m >= 2.
BigRational n_coefficient(long m, long k);

/// log Gamma(x + 1) for x > 0. Promotes the argument until the Stirling
/// remainder certifies the working precision.
BoundedReal log_factorial(const BoundedReal& x, const PrecisionContext& ctx);

}  // namespace bernfact

#endif  // BERNFACT_DIVERGENT_SERIES_HPP_
