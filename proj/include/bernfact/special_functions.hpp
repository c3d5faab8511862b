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

#ifndef BERNFACT_SPECIAL_FUNCTIONS_HPP_
#define BERNFACT_SPECIAL_FUNCTIONS_HPP_

#include <cstdint>
#include <vector>

#include "bernfact/precision.hpp"

namespace bernfact {

/// B_0 ... B_max_index (with B_1 = -1/2).
struct BernoulliTable {
  unsigned max_index = 0;
  std::vector<BigRational> entries;
};

/// Exact B_n from the integer tangent-number recurrence. Results are served
/// from a process-wide write-once cache.
BigRational bernoulli(unsigned n);
BernoulliTable bernoulli_table(unsigned max_index);

/// Exact B_n from sum_{j<=n} C(n+1, j) B_j = 0. Quadratic in n with large
/// rationals; meant as a cross-check for small n.
BigRational bernoulli_by_recurrence(unsigned n);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
BigRational harmonic(unsigned n);

/// zeta(-r) for r >= 0: -1/2, -1/12, 0, 1/120, ...
BigRational zeta_neg(unsigned r);

BoundedReal euler_gamma(const PrecisionContext& ctx);
BoundedReal two_pi(const PrecisionContext& ctx);
BoundedReal log_two_pi(const PrecisionContext& ctx);

/// zeta(s), s >= 2, by Euler-Maclaurin summation with a certified tail.
BoundedReal zeta_int(long s, const PrecisionContext& ctx);

/// zeta(n) = (2 pi)^n |B_n| / (2 n!) for even n >= 2.
BoundedReal zeta_even_via_bernoulli(long n, const PrecisionContext& ctx);

/// zeta'(s), s >= 2, by Euler-Maclaurin summation of -log(v) v^-s.
BoundedReal zeta_prime_int(long s, const PrecisionContext& ctx);

/// zeta'(-r) for r >= 0. Odd r goes through log A_r expressed by
/// gamma, log 2 pi and zeta'(r + 1).
BoundedReal zeta_prime_neg(unsigned r, const PrecisionContext& ctx);

/// log A_r = -zeta(-r) H_r - zeta'(-r), the generalized Glaisher-Kinkelin
/// constant; log A_0 = 1/2 log 2 pi.
BoundedReal log_glaisher(unsigned r, const PrecisionContext& ctx);

/// log Gamma(p / q) by argument promotion and Stirling's series.
BoundedReal log_gamma_rational(unsigned long p, unsigned long q,
                               const PrecisionContext& ctx);

/// eta(i t) = e^{-pi t / 12} prod_{v >= 1} (1 - e^{-2 pi v t}) for t > 0.
BoundedReal dedekind_eta_imag(const BoundedReal& t, const PrecisionContext& ctx);

/// Number of partitions of n (pentagonal-number recurrence).
BigInt partition_count(unsigned n);

/// Number of non-isomorphic abelian groups of order n.
std::uint64_t abelian_group_count(std::uint64_t n);

}  // namespace bernfact

#endif  // BERNFACT_SPECIAL_FUNCTIONS_HPP_
