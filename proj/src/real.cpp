// real.cpp -- MPFR-backed Real implementation.

#include "shv/real.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace shv {

namespace {
std::atomic<int> g_digits{60};
constexpr int kMinDigits = 30;
constexpr int kMaxDigits = 2000;
constexpr mpfr_prec_t kGuardBits = 96;
}  // namespace

int working_digits() { return g_digits.load(std::memory_order_relaxed); }

void set_working_digits(int d) {
  if (d < kMinDigits) d = kMinDigits;
  if (d > kMaxDigits) d = kMaxDigits;
  g_digits.store(d, std::memory_order_relaxed);
}

mpfr_prec_t bits_for_digits(int d) {
  // ceil(d * log2(10)) plus guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(d * 3.3219280948873623)) +
         kGuardBits;
}

namespace {
int resolve_digits(int digits) { return digits > 0 ? digits : working_digits(); }
}  // namespace

Real::Real() : digits_(resolve_digits(0)) {
  mpfr_init2(v_, bits_for_digits(digits_));
  mpfr_set_zero(v_, 1);
}

Real::Real(long n, int digits) : digits_(resolve_digits(digits)) {
  mpfr_init2(v_, bits_for_digits(digits_));
  mpfr_set_si(v_, n, MPFR_RNDN);
}

Real::Real(RawTag, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits_));
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  digits_ = o.digits_;
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_rational(const Rational& q, int digits) {
  Real r(RawTag{}, resolve_digits(digits));
  mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
  return r;
}

Real Real::from_bigint(const BigInt& n, int digits) {
  Real r(Real::RawTag{}, resolve_digits(digits));
  mpfr_set_z(r.v_, n.raw(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, int digits) {
  Real r(Real::RawTag{}, resolve_digits(digits));
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw CalcError(ErrKind::BadInput, "bad real literal: " + s);
  return r;
}

Real Real::pi(int digits) {
  Real r(Real::RawTag{}, resolve_digits(digits));
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(int digits) {
  Real r(Real::RawTag{}, resolve_digits(digits));
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e, int digits) {
  Real r(Real::RawTag{}, resolve_digits(digits));
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigInt Real::round_to_integer(const Real& tol) const {
  Real nearest(RawTag{}, digits_);
  mpfr_round(nearest.v_, v_);
  Real diff = *this - nearest;
  if (!(abs(diff) < tol))
    throw CalcError(ErrKind::NonIntegral,
                    "value is not within tolerance of an integer: " + str(30));
  BigInt out;
  mpfr_get_z(out.raw(), nearest.v_, MPFR_RNDN);
  return out;
}

std::string Real::str(int sig) const {
  int n = sig > 0 ? sig : digits_;
  char* buf = nullptr;
  // %Rg prints the shortest faithful form at the requested significance and
  // is deterministic for identical inputs.
  mpfr_asprintf(&buf, "%.*Rg", n, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real binary_op(const Real& a, const Real& b,
               int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  int d = a.digits_ < b.digits_ ? a.digits_ : b.digits_;
  Real r(Real::RawTag{}, d);
  fn(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real unary_op(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r(Real::RawTag{}, a.digits_);
  fn(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) { return binary_op(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary_op(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary_op(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary_op(a, b, mpfr_div); }
Real operator-(const Real& a) { return unary_op(a, mpfr_neg); }

Real abs(const Real& a) { return unary_op(a, mpfr_abs); }
Real sqrt(const Real& a) { return unary_op(a, mpfr_sqrt); }
Real exp(const Real& a) { return unary_op(a, mpfr_exp); }
Real log(const Real& a) { return unary_op(a, mpfr_log); }
Real sin(const Real& a) { return unary_op(a, mpfr_sin); }
Real cos(const Real& a) { return unary_op(a, mpfr_cos); }
Real pow(const Real& b, const Real& e) { return binary_op(b, e, mpfr_pow); }

Real powi(const Real& b, long e) {
  Real r(Real::RawTag{}, b.digits_);
  mpfr_pow_si(r.v_, b.v_, e, MPFR_RNDN);
  return r;
}

Real gamma_fn(const Real& x) { return unary_op(x, mpfr_gamma); }

Real lngamma_fn(const Real& x) {
  Real r(Real::RawTag{}, x.digits_);
  int sign = 0;
  mpfr_lgamma(r.v_, &sign, x.v_, MPFR_RNDN);
  return r;
}

Real digamma_fn(const Real& x) { return unary_op(x, mpfr_digamma); }

Real upper_gamma_mpfr(const Real& a, const Real& x) {
  return binary_op(a, x, mpfr_gamma_inc);
}

}  // namespace shv
