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

#include "bernfact/precision.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace bernfact {

// ---------------------------------------------------------------------------
// PrecisionContext

PrecisionContext::PrecisionContext(int target_digits)
    : PrecisionContext(target_digits,
                       std::max(kMinGuardDigits, (target_digits + 9) / 10)) {}

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_digits_(target_digits), guard_digits_(guard_digits) {
  if (target_digits_ < 1) {
    throw std::invalid_argument("PrecisionContext: target_digits must be >= 1");
  }
  if (guard_digits_ < kMinGuardDigits) {
    throw std::invalid_argument("PrecisionContext: guard_digits must be >= 10");
  }
}

mpfr_prec_t PrecisionContext::working_bits() const {
  // log2(10) = 3.3219...; 16 spare bits absorb accumulated rounding.
  return static_cast<mpfr_prec_t>(
             std::ceil(working_digits() * 3.3219280948873623)) +
         16;
}

PrecisionContext PrecisionContext::with_doubled_guard() const {
  return PrecisionContext(target_digits_, 2 * guard_digits_);
}

PrecisionContext make_context(int target_digits) {
  return PrecisionContext(target_digits);
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& x, long exponent) {
  if (exponent < 0) return BigRational(1) / pow(x, -exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.get().get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), x.get().get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) {
  return os << x.to_string();
}

// ---------------------------------------------------------------------------
// detail::Mpfr

namespace detail {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(v_, other.prec());
  mpfr_swap(v_, other.v_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(v_); }

}  // namespace detail

// ---------------------------------------------------------------------------
// BoundedReal

namespace {

using detail::Mpfr;
constexpr mpfr_prec_t kRad = BoundedReal::kRadiusBits;

// Upper bound of |v| at radius precision.
Mpfr abs_up(mpfr_srcptr v) {
  Mpfr r(kRad);
  mpfr_abs(r.get(), v, MPFR_RNDU);
  return r;
}

Mpfr abs_down(mpfr_srcptr v) {
  Mpfr r(kRad);
  mpfr_abs(r.get(), v, MPFR_RNDD);
  return r;
}

// Raises the precision of `m` without changing its value.
void raise_precision(Mpfr& m, mpfr_prec_t prec) {
  if (m.prec() < prec) mpfr_prec_round(m.get(), prec, MPFR_RNDN);
}

}  // namespace

BoundedReal::BoundedReal() : BoundedReal(64) {}

BoundedReal::BoundedReal(mpfr_prec_t prec) : mid_(prec), rad_(kRad) {}

void BoundedReal::add_rounding_error(int ternary) {
  if (ternary == 0) return;
  Mpfr err = abs_up(mid_.get());
  mpfr_mul_2si(err.get(), err.get(), 1 - static_cast<long>(mid_.prec()),
               MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), err.get(), MPFR_RNDU);
}

BoundedReal BoundedReal::exact(long value, mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(mpfr_set_si(r.mid_.get(), value, MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::from_integer(const BigInt& value, mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(mpfr_set_z(r.mid_.get(), value.get_mpz_t(), MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::from_rational(const BigRational& value,
                                       mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(
      mpfr_set_q(r.mid_.get(), value.get().get_mpq_t(), MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::from_decimal(const std::string& value,
                                      const std::string& radius,
                                      mpfr_prec_t prec) {
  BoundedReal r(prec);
  if (mpfr_set_str(r.rad_.get(), radius.c_str(), 10, MPFR_RNDU) != 0 ||
      mpfr_sgn(r.rad_.get()) < 0) {
    throw std::invalid_argument("BoundedReal: bad radius '" + radius + "'");
  }
  char* end = nullptr;
  int ternary = mpfr_strtofr(r.mid_.get(), value.c_str(), &end, 10, MPFR_RNDN);
  if (end == value.c_str() || *end != '\0') {
    throw std::invalid_argument("BoundedReal: bad value '" + value + "'");
  }
  r.add_rounding_error(ternary);
  return r;
}

BoundedReal BoundedReal::hull(const BoundedReal& lo, const BoundedReal& hi) {
  mpfr_prec_t prec = std::max(lo.precision(), hi.precision());
  Mpfr a(prec + kRad);
  Mpfr b(prec + kRad);
  mpfr_sub(a.get(), lo.mid(), lo.radius(), MPFR_RNDD);
  mpfr_add(b.get(), hi.mid(), hi.radius(), MPFR_RNDU);
  if (mpfr_cmp(a.get(), b.get()) > 0) std::swap(a, b);
  BoundedReal r(prec);
  mpfr_add(r.mid_.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
  Mpfr d1(kRad);
  Mpfr d2(kRad);
  mpfr_sub(d1.get(), b.get(), r.mid_.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), r.mid_.get(), a.get(), MPFR_RNDU);
  mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::pi(mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(mpfr_const_pi(r.mid_.get(), MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::euler_gamma(mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(mpfr_const_euler(r.mid_.get(), MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::log2(mpfr_prec_t prec) {
  BoundedReal r(prec);
  r.add_rounding_error(mpfr_const_log2(r.mid_.get(), MPFR_RNDN));
  return r;
}

double BoundedReal::mid_double() const { return mpfr_get_d(mid(), MPFR_RNDN); }

double BoundedReal::radius_double() const {
  return mpfr_get_d(radius(), MPFR_RNDU);
}

bool BoundedReal::is_exact() const { return mpfr_zero_p(radius()); }

detail::Mpfr BoundedReal::magnitude_upper() const {
  Mpfr r = abs_up(mid());
  mpfr_add(r.get(), r.get(), radius(), MPFR_RNDU);
  return r;
}

detail::Mpfr BoundedReal::magnitude_lower() const {
  Mpfr r = abs_down(mid());
  mpfr_sub(r.get(), r.get(), radius(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool BoundedReal::certainly_positive() const {
  if (mpfr_sgn(mid()) <= 0) return false;
  Mpfr lo(precision() + kRad);
  mpfr_sub(lo.get(), mid(), radius(), MPFR_RNDD);
  return mpfr_sgn(lo.get()) > 0;
}

bool BoundedReal::certainly_negative() const { return (-*this).certainly_positive(); }

bool BoundedReal::contains_zero() const {
  return !certainly_positive() && !certainly_negative();
}

bool BoundedReal::contains(const BoundedReal& other) const {
  mpfr_prec_t prec = std::max(precision(), other.precision()) + kRad;
  Mpfr this_lo(prec), this_hi(prec), other_lo(prec), other_hi(prec);
  mpfr_sub(this_lo.get(), mid(), radius(), MPFR_RNDU);
  mpfr_add(this_hi.get(), mid(), radius(), MPFR_RNDD);
  mpfr_sub(other_lo.get(), other.mid(), other.radius(), MPFR_RNDD);
  mpfr_add(other_hi.get(), other.mid(), other.radius(), MPFR_RNDU);
  return mpfr_cmp(this_lo.get(), other_lo.get()) <= 0 &&
         mpfr_cmp(other_hi.get(), this_hi.get()) <= 0;
}

bool BoundedReal::overlaps(const BoundedReal& other) const {
  mpfr_prec_t prec = std::max(precision(), other.precision()) + kRad;
  Mpfr this_lo(prec), this_hi(prec), other_lo(prec), other_hi(prec);
  mpfr_sub(this_lo.get(), mid(), radius(), MPFR_RNDD);
  mpfr_add(this_hi.get(), mid(), radius(), MPFR_RNDU);
  mpfr_sub(other_lo.get(), other.mid(), other.radius(), MPFR_RNDD);
  mpfr_add(other_hi.get(), other.mid(), other.radius(), MPFR_RNDU);
  return mpfr_cmp(this_lo.get(), other_hi.get()) <= 0 &&
         mpfr_cmp(other_lo.get(), this_hi.get()) <= 0;
}

BoundedReal BoundedReal::widened(mpfr_srcptr extra) const {
  BoundedReal r = *this;
  Mpfr e = abs_up(extra);
  mpfr_add(r.rad_.get(), r.rad_.get(), e.get(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::widened(const BoundedReal& extra_magnitude) const {
  return widened(extra_magnitude.magnitude_upper().get());
}

BoundedReal BoundedReal::with_precision(mpfr_prec_t prec) const {
  BoundedReal r(prec);
  mpfr_set(r.rad_.get(), radius(), MPFR_RNDU);
  r.add_rounding_error(mpfr_set(r.mid_.get(), mid(), MPFR_RNDN));
  return r;
}

BoundedReal BoundedReal::operator-() const {
  BoundedReal r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

BoundedReal& BoundedReal::operator+=(const BoundedReal& o) {
  raise_precision(mid_, o.precision());
  mpfr_add(rad_.get(), rad_.get(), o.radius(), MPFR_RNDU);
  add_rounding_error(mpfr_add(mid_.get(), mid_.get(), o.mid(), MPFR_RNDN));
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& o) {
  raise_precision(mid_, o.precision());
  mpfr_add(rad_.get(), rad_.get(), o.radius(), MPFR_RNDU);
  add_rounding_error(mpfr_sub(mid_.get(), mid_.get(), o.mid(), MPFR_RNDN));
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& o) {
  raise_precision(mid_, o.precision());
  // |a|rb + |b|ra + ra rb
  Mpfr t1 = abs_up(mid());
  mpfr_mul(t1.get(), t1.get(), o.radius(), MPFR_RNDU);
  Mpfr t2 = abs_up(o.mid());
  mpfr_mul(t2.get(), t2.get(), radius(), MPFR_RNDU);
  Mpfr t3(kRad);
  mpfr_mul(t3.get(), radius(), o.radius(), MPFR_RNDU);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDU);
  mpfr_add(rad_.get(), t1.get(), t3.get(), MPFR_RNDU);
  add_rounding_error(mpfr_mul(mid_.get(), mid_.get(), o.mid(), MPFR_RNDN));
  return *this;
}

BoundedReal& BoundedReal::operator/=(const BoundedReal& o) {
  Mpfr b_lo = o.magnitude_lower();
  if (mpfr_zero_p(b_lo.get())) {
    throw std::domain_error("BoundedReal: divisor ball contains zero");
  }
  raise_precision(mid_, o.precision());
  // (|a|rb + |b|ra) / (|b| (|b| - rb))
  Mpfr num = abs_up(mid());
  mpfr_mul(num.get(), num.get(), o.radius(), MPFR_RNDU);
  Mpfr t = abs_up(o.mid());
  mpfr_mul(t.get(), t.get(), radius(), MPFR_RNDU);
  mpfr_add(num.get(), num.get(), t.get(), MPFR_RNDU);
  Mpfr den = abs_down(o.mid());
  mpfr_mul(den.get(), den.get(), b_lo.get(), MPFR_RNDD);
  mpfr_div(rad_.get(), num.get(), den.get(), MPFR_RNDU);
  add_rounding_error(mpfr_div(mid_.get(), mid_.get(), o.mid(), MPFR_RNDN));
  return *this;
}

BoundedReal BoundedReal::operator*(const BigRational& q) const {
  return *this * from_rational(q, precision());
}

BoundedReal BoundedReal::operator/(const BigRational& q) const {
  return *this / from_rational(q, precision());
}

BoundedReal BoundedReal::operator+(const BigRational& q) const {
  return *this + from_rational(q, precision());
}

BoundedReal BoundedReal::operator-(const BigRational& q) const {
  return *this - from_rational(q, precision());
}

int BoundedReal::compare_mid(const BoundedReal& other) const {
  return mpfr_cmp(mid(), other.mid());
}

int BoundedReal::compare_abs_mid(const BoundedReal& other) const {
  return mpfr_cmpabs(mid(), other.mid());
}

std::string BoundedReal::debug_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re +/- %.3Re", digits, mid(), radius());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BoundedReal exp(const BoundedReal& x) {
  BoundedReal r(x.precision());
  int ternary = mpfr_exp(r.mid_.get(), x.mid(), MPFR_RNDN);
  if (!mpfr_zero_p(x.radius())) {
    // e^a (e^ra - 1), with e^a bounded above including its rounding.
    Mpfr up = abs_up(r.mid());
    Mpfr slack(kRad);
    mpfr_set_ui_2exp(slack.get(), 1, 1 - static_cast<long>(x.precision()),
                     MPFR_RNDU);
    mpfr_add_ui(slack.get(), slack.get(), 1, MPFR_RNDU);
    mpfr_mul(up.get(), up.get(), slack.get(), MPFR_RNDU);
    Mpfr growth(kRad);
    mpfr_expm1(growth.get(), x.radius(), MPFR_RNDU);
    mpfr_mul(r.rad_.get(), up.get(), growth.get(), MPFR_RNDU);
  }
  r.add_rounding_error(ternary);
  return r;
}

BoundedReal log(const BoundedReal& x) {
  if (!x.certainly_positive()) {
    throw std::domain_error("log: argument is not certainly positive");
  }
  BoundedReal r(x.precision());
  int ternary = mpfr_log(r.mid_.get(), x.mid(), MPFR_RNDN);
  if (!mpfr_zero_p(x.radius())) {
    // -log(1 - ra/a)
    Mpfr a = abs_down(x.mid());
    Mpfr u(kRad);
    mpfr_div(u.get(), x.radius(), a.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(u.get(), 1) >= 0) {
      throw std::domain_error("log: argument radius too large");
    }
    mpfr_neg(u.get(), u.get(), MPFR_RNDN);
    mpfr_log1p(u.get(), u.get(), MPFR_RNDD);
    mpfr_neg(r.rad_.get(), u.get(), MPFR_RNDU);
  }
  r.add_rounding_error(ternary);
  return r;
}

BoundedReal abs(const BoundedReal& x) {
  BoundedReal r = x;
  mpfr_abs(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

BoundedReal pow_int(const BoundedReal& x, long n) {
  if (n < 0) return BoundedReal::exact(1, x.precision()) / pow_int(x, -n);
  BoundedReal result = BoundedReal::exact(1, x.precision());
  BoundedReal base = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

BoundedReal pow(const BoundedReal& x, const BigRational& q) {
  if (q.is_integer() && q.num().fits_slong_p()) {
    return pow_int(x, q.num().get_si());
  }
  return exp(log(x) * q);
}

BoundedReal sqrt(const BoundedReal& x) {
  if (mpfr_zero_p(x.mid()) && x.is_exact()) return x;
  return pow(x, BigRational(1, 2));
}

BoundedReal log_integer(const BigInt& value, mpfr_prec_t prec) {
  return log(BoundedReal::from_integer(value, prec));
}

BoundedReal log_rational(const BigRational& value, mpfr_prec_t prec) {
  return log_integer(value.num(), prec) - log_integer(value.den(), prec);
}

std::ostream& operator<<(std::ostream& os, const BoundedReal& x) {
  return os << x.debug_string();
}

// ---------------------------------------------------------------------------
// Decimal rendering

namespace {

struct Digits {
  bool negative = false;
  std::string digits;  // significant digits, no sign
  long exponent = 0;   // value = 0.digits * 10^exponent
  bool operator==(const Digits&) const = default;
};

Digits truncated_digits(mpfr_srcptr v, int n, mpfr_rnd_t rnd = MPFR_RNDZ) {
  Digits d;
  if (mpfr_zero_p(v)) {
    d.digits.assign(static_cast<std::size_t>(n), '0');
    d.exponent = 1;
    return d;
  }
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(n), v, rnd);
  std::string str(s);
  mpfr_free_str(s);
  if (!str.empty() && str[0] == '-') {
    d.negative = true;
    str.erase(0, 1);
  }
  d.digits = str;
  d.exponent = e;
  return d;
}

std::string render(const Digits& d) {
  std::string out = d.negative ? "-" : "";
  const std::string& s = d.digits;
  const long len = static_cast<long>(s.size());
  const long e = d.exponent;
  if (e >= -3 && e <= 21) {
    if (e <= 0) {
      out += "0." + std::string(static_cast<std::size_t>(-e), '0') + s;
    } else if (e < len) {
      out += s.substr(0, static_cast<std::size_t>(e)) + "." +
             s.substr(static_cast<std::size_t>(e));
    } else {
      out += s + std::string(static_cast<std::size_t>(e - len), '0');
    }
  } else {
    out += s.substr(0, 1);
    if (len > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return out;
}

}  // namespace

std::string round_to_digits(const BoundedReal& x, int digits) {
  if (digits < 1) throw std::invalid_argument("round_to_digits: digits < 1");
  if (x.is_exact()) return render(truncated_digits(x.mid(), digits));

  const mpfr_prec_t prec = x.precision() + kRad;
  Mpfr lo(prec);
  Mpfr hi(prec);
  mpfr_sub(lo.get(), x.mid(), x.radius(), MPFR_RNDD);
  mpfr_add(hi.get(), x.mid(), x.radius(), MPFR_RNDU);

  // Truncation is monotone, so equal truncations of both endpoints certify
  // every point in between.
  auto agree = [&](int n) {
    if (mpfr_sgn(lo.get()) * mpfr_sgn(hi.get()) <= 0) return false;
    return truncated_digits(lo.get(), n) == truncated_digits(hi.get(), n);
  };
  if (agree(digits)) return render(truncated_digits(x.mid(), digits));
  int certified = digits - 1;
  while (certified > 0 && !agree(certified)) --certified;
  return render(truncated_digits(x.mid(), std::max(certified, 1))) + "?";
}

bool certifies_digits(const BoundedReal& x, int digits) {
  return round_to_digits(x, digits).back() != '?';
}

std::string format_scientific(const BoundedReal& x, int sig) {
  if (mpfr_zero_p(x.mid())) return "0";
  Mpfr a(x.precision());
  mpfr_abs(a.get(), x.mid(), MPFR_RNDN);
  Digits d = truncated_digits(a.get(), sig, MPFR_RNDN);
  std::string out = d.digits.substr(0, 1);
  if (d.digits.size() > 1) out += "." + d.digits.substr(1);
  return out + "e" + std::to_string(d.exponent - 1);
}

}  // namespace bernfact
