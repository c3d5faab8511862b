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

#ifndef BERNFACT_VERIFICATION_HPP_
#define BERNFACT_VERIFICATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bernfact/precision.hpp"
#include "json.hpp"

namespace bernfact {

enum class CheckStatus { exact_equal, within_bounds, fail };

/// "exact-equal", "within-bounds", "FAIL".
std::string to_string(CheckStatus s);

using CheckParams = std::map<std::string, long>;

struct IdentityReport {
  std::string name;
  /// The parameter box for a passing family, the offending point otherwise.
  CheckParams params;
  std::string lhs;
  std::string rhs;
  CheckStatus status = CheckStatus::fail;
  /// Numeric checks only.
  std::optional<BoundedReal> gap;
  std::optional<BoundedReal> tolerance;
  /// Number of parameter points checked.
  long points = 1;

  bool passed() const { return status != CheckStatus::fail; }
};

struct RatioReport {
  std::string name;
  CheckParams params;
  /// (n, |log lhs - log rhs|), sorted by n.
  std::vector<std::pair<long, BoundedReal>> gaps;
  /// Every gap certainly below its predecessor.
  bool monotone_tail = false;
  /// Names the two offending n values when monotone_tail is false.
  std::string failure;

  bool passed() const { return monotone_tail; }
};

/// Builds a report and sets monotone_tail and failure from the gaps.
RatioReport make_ratio_report(std::string name, CheckParams params,
                              std::vector<std::pair<long, BoundedReal>> gaps);

/// Raised when an exact oracle would exceed the configured bit-size cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kOracleBitCapEnv = "BERNFACT_ORACLE_BIT_CAP";
constexpr std::uint64_t kDefaultOracleBitCap = std::uint64_t{1} << 26;

/// Cap from BERNFACT_ORACLE_BIT_CAP, else 2^26. Throws std::invalid_argument
/// on an unparsable value.
std::uint64_t oracle_bit_cap();

/// prod_{v=1}^n (kv)!^(v^r); throws OracleLimitError above the cap.
BigInt exact_factorial_product(long k, long n, unsigned r);

/// prod_{v=1}^n v^(v^r); throws OracleLimitError above the cap.
BigInt exact_power_product(long n, unsigned r);

/// The same product as prime exponents, which has no size limit.
std::map<unsigned long, BigInt> power_product_exponents(long n, unsigned r);

/// sum_p e_p log p.
BoundedReal log_factored(const std::map<unsigned long, BigInt>& exponents,
                         const PrecisionContext& ctx);

enum class BernoulliDivisor { plain, over_2nu, over_4nu };

/// prod_{v=1}^n |B_2v|, optionally divided by 2v or 4v.
BigRational exact_bernoulli_product(long n, BernoulliDivisor divisor);

/// M(d) = |B_k| / 2k prod_{v<k} |B_2v| / 4v with d = 2k; 8 must divide d.
BigRational mass_formula(long dimension);

/// Exact product identities, the Gamma product of Euler, the matrix inverse
/// and M(8). Stops at the first FAIL, whose report carries the offending
/// parameters.
std::vector<IdentityReport> identity_suite();

enum class RatioTarget {
  factorial_product,           // prod (kv)!
  bernoulli_product,           // prod |B_2v| against B1
  bernoulli_product_over_2nu,  // prod |B_2v| / 2v against B2 G(n)
  mass_formula,                // M(2n) against B3
  power_product,               // prod v^(v^r)
  factorial_power_product,     // prod (kv)!^(v^r)
  gamma_power_product,         // prod_{v<n} Gamma(v/n)^v
};

struct RatioSpec {
  RatioTarget target;
  long k = 1;
  unsigned r = 0;
};

std::string to_string(const RatioSpec& spec);

/// Every target of the acceptance run: factorial products k = 1..3, both
/// Bernoulli products, the mass formula, power products r = 1..3, the
/// factorial power product r = 1, k = 2 and the Gamma power product.
std::vector<RatioSpec> standard_ratio_targets();

/// Log-gap between the finite product and its asymptotic right side with
/// the constant included. The mass formula needs 4 | n, so its grid points
/// are rounded up to multiples of 4. Throws std::invalid_argument unless
/// n_grid is strictly increasing.
std::vector<RatioReport> ratio_suite(const std::vector<RatioSpec>& targets,
                                     const std::vector<long>& n_grid,
                                     const PrecisionContext& ctx);

/// Primes up to `bound` by the sieve of Eratosthenes.
std::vector<unsigned long> primes_up_to(unsigned long bound);

/// prod_{p <= P} p^(1/12) eta(i log p / pi) against 1 / C2. The tolerance is
/// the rigorous tail bound 5/(2P) on the log.
IdentityReport eta_identity_check(unsigned long prime_bound,
                                  const PrecisionContext& ctx);

/// Exact running means (1/N) sum_{n<=N} a(n) at each checkpoint, where a(n)
/// counts abelian groups of order n.
std::vector<BigRational> abelian_means(const std::vector<long>& checkpoints);

/// |mean - C1| against `tolerance`.
IdentityReport abelian_average_check(long n, const PrecisionContext& ctx,
                                     double tolerance = 0.01);

/// |log(2 B' F(2n+1) / (B2 G(n)))| along the grid.
RatioReport milnor_equivalence_check(const std::vector<long>& n_grid,
                                     const PrecisionContext& ctx);

/// One line per report, e.g.
/// "identity mass_formula d=8 exact-equal gap=0 points=1".
std::string to_text(const IdentityReport& r);
std::string to_text(const RatioReport& r);

/// {name, params, status, gap}; gap is a 4-digit scientific string, the
/// largest gap for ratio reports.
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const RatioReport& r);

}  // namespace bernfact

#endif  // BERNFACT_VERIFICATION_HPP_
