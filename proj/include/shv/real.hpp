// real.hpp -- high-precision real numbers on top of MPFR.
//
// A Real carries a decimal-digit tag set at construction.  Binary operations
// propagate the minimum of the operand tags, so mixed-precision expressions
// never quietly claim more accuracy than their weakest input.  The mantissa
// is allocated with 64 guard bits beyond the tagged decimal precision, which
// keeps final comparisons at the tagged precision honest even after long
// chains of operations.
#pragma once

#include <mpfr.h>

#include <string>

#include "shv/errors.hpp"
#include "shv/rational.hpp"

namespace shv {

// Process-wide default precision in decimal digits (>= 30, default 60).
int working_digits();
void set_working_digits(int d);
mpfr_prec_t bits_for_digits(int d);

class Real {
 public:
  Real();
  explicit Real(long n, int digits = 0);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_rational(const Rational& q, int digits = 0);
  static Real from_bigint(const BigInt& n, int digits = 0);
  static Real parse(const std::string& s, int digits = 0);
  static Real pi(int digits = 0);
  static Real euler_gamma(int digits = 0);
  static Real pow10(long e, int digits = 0);  // exact power of ten

  int digits() const { return digits_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Nearest integer, asserting the value is within `tol` of it.
  BigInt round_to_integer(const Real& tol) const;
  // Decimal string with `sig` significant digits (default: the tag).
  std::string str(int sig = -1) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

 private:
  struct RawTag {};
  Real(RawTag, int digits);  // uninitialized-value ctor for internals
  mpfr_t v_;
  int digits_;

  friend Real unary_op(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr,
                                                mpfr_rnd_t));
  friend Real binary_op(const Real& a, const Real& b,
                        int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr,
                                  mpfr_rnd_t));
  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real sin(const Real& a);
  friend Real cos(const Real& a);
  friend Real pow(const Real& b, const Real& e);
  friend Real powi(const Real& b, long e);
  friend Real gamma_fn(const Real& x);
  friend Real lngamma_fn(const Real& x);
  friend Real digamma_fn(const Real& x);
  friend Real upper_gamma_mpfr(const Real& a, const Real& x);
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real pow(const Real& b, const Real& e);
Real powi(const Real& b, long e);
Real gamma_fn(const Real& x);
Real lngamma_fn(const Real& x);   // log|Gamma(x)|
Real digamma_fn(const Real& x);
// MPFR's own incomplete gamma; used only as an independent cross-check.
Real upper_gamma_mpfr(const Real& a, const Real& x);

}  // namespace shv
