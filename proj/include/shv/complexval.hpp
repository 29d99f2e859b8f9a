// complexval.hpp -- complex numbers with Real components.
//
// Used for unit-root sums (Gauss sums, representation-number inversion) and
// for the complex constants in the product-expansion weight formulas.  No
// complex derivatives are ever needed, so there is no complex jet type.
#pragma once

#include "shv/jet.hpp"
#include "shv/real.hpp"

namespace shv {

struct ComplexVal {
  Real re;
  Real im;

  ComplexVal() : re(), im() {}
  explicit ComplexVal(const Real& r) : re(r), im(0, r.digits()) {}
  ComplexVal(const Real& r, const Real& i) : re(r), im(i) {}
  static ComplexVal zero(int digits = 0) {
    return ComplexVal(Real(0, digits), Real(0, digits));
  }
  // i^t for t in {0,1,2,3}.
  static ComplexVal unit_i_pow(int t, int digits = 0) {
    t = ((t % 4) + 4) % 4;
    Real one(1, digits), z(0, digits);
    switch (t) {
      case 0: return ComplexVal(one, z);
      case 1: return ComplexVal(z, one);
      case 2: return ComplexVal(-one, z);
      default: return ComplexVal(z, -one);
    }
  }
  // e(k/c) = exp(2*pi*i*k/c).
  static ComplexVal unit_root(long k, long c, int digits = 0) {
    Real ang = Real(2, digits) * Real::pi(digits) * Real(k, digits) /
               Real(c, digits);
    return ComplexVal(cos(ang), sin(ang));
  }

  friend ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) {
    return ComplexVal(a.re + b.re, a.im + b.im);
  }
  friend ComplexVal operator-(const ComplexVal& a, const ComplexVal& b) {
    return ComplexVal(a.re - b.re, a.im - b.im);
  }
  friend ComplexVal operator-(const ComplexVal& a) {
    return ComplexVal(-a.re, -a.im);
  }
  friend ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
    return ComplexVal(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend ComplexVal operator*(const Real& c, const ComplexVal& a) {
    return ComplexVal(c * a.re, c * a.im);
  }
  friend ComplexVal operator*(const ComplexVal& a, const Real& c) {
    return c * a;
  }
  friend ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
    Real n2 = b.re * b.re + b.im * b.im;
    return ComplexVal((a.re * b.re + a.im * b.im) / n2,
                      (a.im * b.re - a.re * b.im) / n2);
  }
  friend ComplexVal operator/(const ComplexVal& a, const Real& c) {
    return ComplexVal(a.re / c, a.im / c);
  }
  ComplexVal& operator+=(const ComplexVal& b) {
    re += b.re;
    im += b.im;
    return *this;
  }

  ComplexVal conj() const { return ComplexVal(re, -im); }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
  std::string str(int sig = -1) const {
    return re.str(sig) + (im.sgn() < 0 ? " - " : " + ") +
           shv::abs(im).str(sig) + "*i";
  }
};

}  // namespace shv
