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

#ifndef BERNFACT_CONSTANTS_HPP_
#define BERNFACT_CONSTANTS_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bernfact/asymptotic.hpp"
#include "bernfact/divergent_series.hpp"
#include "bernfact/precision.hpp"

namespace bernfact {

enum class Method { closed_form, divergent_series, linear_system, refined_sum };

std::string to_string(Method m);

struct ConstantReport {
  std::string name;  // C1, C2, C3, A, A_r, F_k, F_inf, F_r1, F_rk, B1, B2, B3, Bprime
  Method method = Method::closed_form;
  std::map<std::string, long> params;
  BoundedReal value;
  /// log of the constant; for one-sided series enclosures this is the ball
  /// the value was exponentiated from.
  BoundedReal log_value;
  /// The published error figure of the route: |omitted term| of the log
  /// series for divergent_series, the value-level theta error for
  /// refined_sum. Absent for closed forms.
  std::optional<BoundedReal> error_bound;
  std::optional<TruncationResult> truncation;
  /// Exact form of log(value) when one exists.
  std::optional<ExactConstant> exact_log;
};

/// Raised when two routes that must agree do not overlap, which points to a
/// precision or implementation failure upstream.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest N' with 2^(-N' + 3/N') below a tenth of 10^-working_digits.
long zeta_product_cutoff(const PrecisionContext& ctx);

/// C1 = prod_{v>=2} zeta(v), C2 = prod zeta(2v), C3 = prod zeta(2v+1).
ConstantReport c_constant(int which, const PrecisionContext& ctx);

/// A_r with log A_r = -zeta(-r) H_r - zeta'(-r); name "A" for r = 1.
ConstantReport glaisher_a(unsigned r, const PrecisionContext& ctx);

/// gamma/12 + log(2 pi)/12 - zeta'(2)/(2 pi^2).
BoundedReal log_glaisher_via_zeta_prime_two(const PrecisionContext& ctx);

/// log F_k = -(k + 1/k) log A + 1/(12k) - log(k)/(12k) + k/4 log 2 pi
///           - sum_{v<k} v/k log Gamma(v/k).
ExactConstant f_k_closed_exact(long k);
/// The variant that avoids Gamma(1/k).
ExactConstant f_k_closed_exact_without_first_gamma(long k);

/// Closed form; for k >= 3 the Gamma(1/k)-free route is evaluated too and
/// must overlap, otherwise ConsistencyError.
ConstantReport f_k_closed(long k, const PrecisionContext& ctx);

/// gamma/(12k) plus the optimally truncated series in B_2j zeta(2j-1).
ConstantReport f_k_series(long k, const PrecisionContext& ctx);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Bidiagonal 1/-1 rows with a final row of ones.
IntMatrix matrix_m(long k);
/// k times the inverse of matrix_m(k).
IntMatrix matrix_m_tilde(long k);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Fraction-free Gaussian elimination.
BigInt determinant(IntMatrix m);

struct LinearSystemReport {
  ConstantReport report;
  /// x_{l+1} = constant term of [log prod_v (kv - l)!], l = 0..k-1.
  std::vector<ExactConstant> x_exact;
  std::vector<BoundedReal> x;
  std::vector<ExactConstant> b_exact;
};

/// Solves M_k x = b with the explicit inverse and reads log F_k off x_1.
LinearSystemReport f_k_via_linear_system(long k, const PrecisionContext& ctx);

/// gamma^2/12 + optimally truncated sum of B_2j zeta(2j-1)^2/(2j(2j-1)).
/// The value is the one-sided interval exp(partial + theta omitted).
ConstantReport f_infty_weak(const PrecisionContext& ctx);

struct RefinedInfinityReport {
  ConstantReport report;
  std::vector<BoundedReal> eta;  // eta_1..eta_n
  BoundedReal theta_min;
  BoundedReal theta_max;
  /// (theta_max - theta_min) |R| on the log scale.
  BoundedReal theta_err_log;
  /// The largest remaining term R = B_2m zeta(2m-1)^2 / (2m(2m-1)).
  BoundedReal last_term;
};

/// Uses exact F_1..F_n to pin the remainder of the F_inf series. Internally
/// runs at twice the guard digits. Throws ConsistencyError when some eta_k
/// is not certainly inside (0, 1).
RefinedInfinityReport f_infty_refined(long n, long m, const PrecisionContext& ctx);

/// B1, B2, B3, Bprime in that order. Also checks B1 = C2 F2 A^2 (2 pi)^(1/4)
/// and Bprime = 2^(1/24) 2^(-3/2) B2, throwing ConsistencyError otherwise.
std::vector<ConstantReport> b_family(const PrecisionContext& ctx);

/// log F_{r,1} = alpha_{r,0} + sum_j alpha_{r,j} log A_j from the
/// parity table.
ExactConstant f_r1_exact(unsigned r);
/// 1/2 log A_r - log A_{r+1} + S_r(1; N_{1+d,1} - log A_d).
ExactConstant f_r1_via_power_sums(unsigned r);
/// Odd r only: the real form in zeta(2j+1) and powers of 2 pi.
BoundedReal f_r1_odd_zeta_form(unsigned r, const PrecisionContext& ctx);

/// Table route; checks it against the power-sum form exactly and, for odd
/// r, against the zeta form numerically.
ConstantReport f_r1(unsigned r, const PrecisionContext& ctx);

/// Divergent-series route for F_{r,k}; propagates NoDecreaseError.
ConstantReport f_rk_series(unsigned r, long k, const PrecisionContext& ctx);

/// e^((1 - gamma)/12) / A and (2 pi)^(1/4) / A.
std::pair<BoundedReal, BoundedReal> gamma_power_product_constants(const PrecisionContext& ctx);

/// Resolves every symbol including log F_{r,k}: closed forms for r = 0 or
/// k = 1, the series enclosure otherwise.
BoundedReal constant_symbol_value(const Symbol& s, const PrecisionContext& ctx);

}  // namespace bernfact

#endif  // BERNFACT_CONSTANTS_HPP_
