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

#ifndef BERNFACT_PRECISION_HPP_
#define BERNFACT_PRECISION_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace bernfact {

using BigInt = mpz_class;

/// Requested decimal digits plus guard digits. Every numeric routine takes
/// one of these and works at `working_bits()`.
class PrecisionContext {
 public:
  static constexpr int kMinGuardDigits = 10;

  /// Guard digits default to max(10, ceil(target / 10)).
  explicit PrecisionContext(int target_digits);
  PrecisionContext(int target_digits, int guard_digits);

  int target_digits() const { return target_digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return target_digits_ + guard_digits_; }
  mpfr_prec_t working_bits() const;

  /// Same target with twice the guard digits.
  PrecisionContext with_doubled_guard() const;

  bool operator==(const PrecisionContext&) const = default;

 private:
  int target_digits_;
  int guard_digits_;
};

PrecisionContext make_context(int target_digits);

/// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : q_(value) {}  // NOLINT
  /// Throws std::invalid_argument on a zero denominator.
  BigRational(const BigInt& num, const BigInt& den);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& get() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string to_string() const { return q_.get_str(); }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

BigRational abs(const BigRational& x);
BigRational pow(const BigRational& x, long exponent);
std::ostream& operator<<(std::ostream& os, const BigRational& x);

namespace detail {

// RAII owner of an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

}  // namespace detail

/// An arbitrary-precision midpoint with a rigorous absolute error radius.
///
/// Every operation returns a result whose radius covers the propagated input
/// radii plus the rounding error of computing the midpoint. Radii are kept at
/// 64 bits and always rounded upward. A result carries the larger of its
/// operands' precisions.
class BoundedReal {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 64;

  /// Exact zero at 64 bits.
  BoundedReal();

  static BoundedReal exact(long value, mpfr_prec_t prec);
  static BoundedReal from_integer(const BigInt& value, mpfr_prec_t prec);
  static BoundedReal from_rational(const BigRational& value, mpfr_prec_t prec);
  /// Parses a decimal midpoint and radius, e.g. ("1.0466", "1e-2").
  static BoundedReal from_decimal(const std::string& value,
                                  const std::string& radius,
                                  mpfr_prec_t prec);
  /// Smallest ball enclosing [lo, hi]; both inputs' radii are included.
  static BoundedReal hull(const BoundedReal& lo, const BoundedReal& hi);

  static BoundedReal pi(mpfr_prec_t prec);
  static BoundedReal euler_gamma(mpfr_prec_t prec);
  static BoundedReal log2(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mid_.prec(); }
  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr radius() const { return rad_.get(); }
  double mid_double() const;
  double radius_double() const;
  bool is_exact() const;

  /// Upper bound on |x| as a 64-bit value.
  detail::Mpfr magnitude_upper() const;
  /// Lower bound on |x| (zero when the ball contains zero).
  detail::Mpfr magnitude_lower() const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const;
  /// True when every point of `other` lies inside this ball.
  bool contains(const BoundedReal& other) const;
  bool overlaps(const BoundedReal& other) const;

  /// Same midpoint, radius increased by `extra` (rounded up).
  BoundedReal widened(mpfr_srcptr extra) const;
  BoundedReal widened(const BoundedReal& extra_magnitude) const;
  /// Copy re-rounded to another precision.
  BoundedReal with_precision(mpfr_prec_t prec) const;

  BoundedReal operator-() const;
  BoundedReal& operator+=(const BoundedReal& o);
  BoundedReal& operator-=(const BoundedReal& o);
  BoundedReal& operator*=(const BoundedReal& o);
  BoundedReal& operator/=(const BoundedReal& o);

  friend BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
  friend BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
  friend BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
  friend BoundedReal operator/(BoundedReal a, const BoundedReal& b) { return a /= b; }

  BoundedReal operator*(const BigRational& q) const;
  BoundedReal operator/(const BigRational& q) const;
  BoundedReal operator+(const BigRational& q) const;
  BoundedReal operator-(const BigRational& q) const;

  /// Compares midpoints only.
  int compare_mid(const BoundedReal& other) const;
  int compare_abs_mid(const BoundedReal& other) const;

  /// Debug rendering: midpoint to `digits` significant digits and radius.
  std::string debug_string(int digits = 25) const;

 private:
  explicit BoundedReal(mpfr_prec_t prec);
  void add_rounding_error(int ternary);

  friend BoundedReal exp(const BoundedReal& x);
  friend BoundedReal log(const BoundedReal& x);
  friend BoundedReal abs(const BoundedReal& x);

  detail::Mpfr mid_;
  detail::Mpfr rad_;
};

BoundedReal exp(const BoundedReal& x);
/// Throws std::domain_error unless x is certainly positive.
BoundedReal log(const BoundedReal& x);
BoundedReal abs(const BoundedReal& x);
/// x^q for certainly-positive x.
BoundedReal pow(const BoundedReal& x, const BigRational& q);
/// x^n by repeated squaring; any sign of x, n may be negative.
BoundedReal pow_int(const BoundedReal& x, long n);
BoundedReal sqrt(const BoundedReal& x);
/// log of a positive big integer.
BoundedReal log_integer(const BigInt& value, mpfr_prec_t prec);
/// log of a positive rational.
BoundedReal log_rational(const BigRational& value, mpfr_prec_t prec);

std::ostream& operator<<(std::ostream& os, const BoundedReal& x);

/// Decimal rendering with `digits` significant digits, truncated toward zero.
/// When the radius does not certify every printed digit, only the certified
/// leading digits are printed and a trailing '?' is appended.
std::string round_to_digits(const BoundedReal& x, int digits);

/// True when round_to_digits(x, digits) carries no uncertainty marker.
bool certifies_digits(const BoundedReal& x, int digits);

/// Scientific rendering of |x|'s midpoint with `sig` significant digits,
/// rounded to nearest, e.g. "6.321e-22".
std::string format_scientific(const BoundedReal& x, int sig = 4);

/// Runs `compute(ctx)`; when the result does not certify ctx.target_digits(),
/// runs once more with doubled guard digits and returns that result.
template <class Result>
Result compute_with_retry(
    const PrecisionContext& ctx,
    const std::function<Result(const PrecisionContext&)>& compute,
    const std::function<const BoundedReal&(const Result&)>& value_of) {
  Result first = compute(ctx);
  if (certifies_digits(value_of(first), ctx.target_digits())) return first;
  return compute(ctx.with_doubled_guard());
}

}  // namespace bernfact

#endif  // BERNFACT_PRECISION_HPP_
