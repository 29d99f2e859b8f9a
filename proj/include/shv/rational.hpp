// rational.hpp -- exact integer and rational arithmetic on top of GMP.
//
// BigInt wraps mpz_t, Rational wraps mpq_t.  Rationals are kept canonical
// (fully reduced, positive denominator) at all times; mpq maintains this as
// long as every value fed in is canonicalized, which the constructors do.
#pragma once

#include <gmp.h>

#include <string>
#include <utility>

#include "shv/errors.hpp"

namespace shv {

class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long n) { mpz_init_set_si(z_, n); }  // NOLINT: implicit by design
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  static BigInt parse(const std::string& s) {
    BigInt r;
    if (mpz_set_str(r.z_, s.c_str(), 10) != 0)
      throw CalcError(ErrKind::BadInput, "bad integer literal: " + s);
    return r;
  }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

  int sgn() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const {
    if (!fits_long())
      throw CalcError(ErrKind::BadInput, "integer too large for machine word");
    return mpz_get_si(z_);
  }
  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a) {
    BigInt r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  // Truncated quotient; use divexact when divisibility is known.
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_tdiv_q(r.z_, a.z_, b.z_);
    return r;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) < 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) <= 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

  static BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  // Euclidean remainder in [0, |b|).
  static BigInt mod(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mod(r.z_, a.z_, b.z_);
    return r;
  }
  static BigInt pow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.z_, b.z_, e);
    return r;
  }
  static BigInt abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.z_, a.z_);
    return r;
  }
  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  // Kronecker symbol (a|b), full convention including b <= 0 and even b.
  static int kronecker(const BigInt& a, const BigInt& b) {
    return mpz_kronecker(a.z_, b.z_);
  }
  static bool probab_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.z_, 40) != 0;
  }
  // Removes all factors p from n; returns (reduced, multiplicity).
  static std::pair<BigInt, long> remove_factor(const BigInt& n,
                                               const BigInt& p) {
    BigInt r;
    mp_bitcnt_t k = mpz_remove(r.z_, n.z_, p.z_);
    return {std::move(r), static_cast<long>(k)};
  }
  static BigInt invert_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.z_, a.z_, m.z_) == 0)
      throw CalcError(ErrKind::BadInput, "non-invertible residue");
    return r;
  }
  static BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
  }
  static BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.z_, n);
    return r;
  }

 private:
  mpz_t z_;
};

class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long n, long d) {
    if (d == 0) throw CalcError(ErrKind::BadInput, "zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
    mpq_t dq;
    mpq_init(dq);
    mpq_set_si(dq, d, 1);
    mpq_div(q_, q_, dq);
    mpq_clear(dq);
  }
  Rational(const BigInt& n, const BigInt& d) {
    if (d.is_zero()) throw CalcError(ErrKind::BadInput, "zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), n.raw());
    mpz_set(mpq_denref(q_), d.raw());
    mpq_canonicalize(q_);
  }
  explicit Rational(const BigInt& n) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), n.raw());
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Accepts "n" or "n/d".
  static Rational parse(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(r.q_)) == 0)
      throw CalcError(ErrKind::BadInput, "bad rational literal: " + s);
    mpq_canonicalize(r.q_);
    return r;
  }

  mpq_srcptr raw() const { return q_; }

  BigInt num() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
  }
  BigInt den() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
  }
  int sgn() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  long to_long() const {
    if (!is_integer())
      throw CalcError(ErrKind::BadInput, "rational is not an integer");
    return num().to_long();
  }
  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw CalcError(ErrKind::BadInput, "division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  static Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.q_, a.q_);
    return r;
  }
  // a^e for any integer e (e < 0 requires a != 0).
  static Rational pow(const Rational& a, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long ue = inv ? -static_cast<unsigned long>(e) : e;
    if (inv && a.is_zero())
      throw CalcError(ErrKind::BadInput, "0 to negative power");
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(a.q_), ue);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(a.q_), ue);
    if (inv) mpq_inv(r.q_, r.q_);
    mpq_canonicalize(r.q_);
    return r;
  }
  // 2^e as an exact rational, e of either sign.
  static Rational pow2(long e) { return pow(Rational(2), e); }

 private:
  mpq_t q_;
};

}  // namespace shv
