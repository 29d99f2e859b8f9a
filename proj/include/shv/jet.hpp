// jet.hpp -- first-order jets (value, derivative) over Real.
//
// A Jet tracks f(s0) and f'(s0) through arithmetic via the truncated product
// and chain rules.  Every s-derivative in the package is obtained by seeding
// Jet::variable(s0) and running the same code path as the plain evaluation,
// so value and derivative can never drift apart.
#pragma once

#include "shv/real.hpp"

namespace shv {

struct Jet {
  Real val;
  Real der;

  Jet() : val(), der() {}
  explicit Jet(const Real& v) : val(v), der(0, v.digits()) {}
  Jet(const Real& v, const Real& d) : val(v), der(d) {}
  static Jet constant(const Real& v) { return Jet(v); }
  static Jet variable(const Real& v) { return Jet(v, Real(1, v.digits())); }

  friend Jet operator+(const Jet& a, const Jet& b) {
    return Jet(a.val + b.val, a.der + b.der);
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    return Jet(a.val - b.val, a.der - b.der);
  }
  friend Jet operator-(const Jet& a) { return Jet(-a.val, -a.der); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return Jet(a.val * b.val, a.der * b.val + a.val * b.der);
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Real q = a.val / b.val;
    return Jet(q, (a.der - q * b.der) / b.val);
  }
  friend Jet operator+(const Jet& a, const Real& c) {
    return Jet(a.val + c, a.der);
  }
  friend Jet operator+(const Real& c, const Jet& a) { return a + c; }
  friend Jet operator-(const Jet& a, const Real& c) {
    return Jet(a.val - c, a.der);
  }
  friend Jet operator-(const Real& c, const Jet& a) {
    return Jet(c - a.val, -a.der);
  }
  friend Jet operator*(const Jet& a, const Real& c) {
    return Jet(a.val * c, a.der * c);
  }
  friend Jet operator*(const Real& c, const Jet& a) { return a * c; }
  friend Jet operator/(const Jet& a, const Real& c) {
    return Jet(a.val / c, a.der / c);
  }
  friend Jet operator/(const Real& c, const Jet& a) {
    return Jet(c) / a;
  }
};

inline Jet exp(const Jet& a) {
  Real e = exp(a.val);
  return Jet(e, e * a.der);
}

inline Jet log(const Jet& a) { return Jet(log(a.val), a.der / a.val); }

// b^e for constant real base b > 0 and jet exponent e: exp(e log b).
inline Jet pow_base(const Real& b, const Jet& e) {
  Real lb = log(b);
  Real v = exp(e.val * lb);
  return Jet(v, v * lb * e.der);
}

// a^k for integer k.
inline Jet powi(const Jet& a, long k) {
  if (k == 0) return Jet(Real(1, a.val.digits()));
  Real vk1 = powi(a.val, k - 1);
  return Jet(vk1 * a.val, Real(k, a.val.digits()) * vk1 * a.der);
}

// Gamma of a jet via Gamma' = Gamma * digamma.
inline Jet gamma_fn(const Jet& a) {
  Real g = gamma_fn(a.val);
  return Jet(g, g * digamma_fn(a.val) * a.der);
}

}  // namespace shv
