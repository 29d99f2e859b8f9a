// lfunctions.cpp -- Hurwitz-zeta engine and the L-function layer above it.

#include "shv/lfunctions.hpp"

#include <cmath>

#include "shv/errors.hpp"

namespace shv {

namespace {

// One Euler--Maclaurin evaluation at truncation N with J tail corrections:
//   zeta(s,x) = sum_{k<N} (x+k)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
//             + sum_{j=1..J} B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1},  w = x+N.
// All factors are jets in s, so the derivative rides along for free.
Jet em_pass(const Jet& s, const Rational& x, int N, int J, bool subtract_pole,
            Real* mag_out) {
  int dgt = s.val.digits();
  Jet acc(Real(0, dgt));
  Real mag(1, dgt);  // peak magnitude seen, for roundoff-aware tolerances
  for (int k = 0; k < N; ++k) {
    Real base = Real::from_rational(x + Rational(k), dgt);
    Jet t = pow_base(base, -s);
    if (abs(t.val) > mag) mag = abs(t.val);
    acc = acc + t;
  }
  Real w = Real::from_rational(x + Rational(N), dgt);
  Real lw = log(w);

  // Pole block: w^{1-s}/(s-1), or its regularization (w^{1-s}-1)/(s-1).
  Jet one_minus_s = Real(1, dgt) - s;
  if (subtract_pole && s.val == Real(1, dgt)) {
    // Limit s -> 1 of (w^{1-s}-1)/(s-1) = -log w + (s-1) log^2(w)/2 + ...
    acc = acc + Jet(-lw, lw * lw / Real(2, dgt) * s.der);
  } else {
    Jet wpow = pow_base(w, one_minus_s);
    if (subtract_pole) wpow = wpow - Real(1, dgt);
    acc = acc + wpow / (s - Real(1, dgt));
  }

  acc = acc + pow_base(w, -s) / Real(2, dgt);

  // Tail corrections with incrementally maintained Pochhammer and power.
  Jet poch(Real(1, dgt));          // (s)_{2j-1}, built up as j advances
  Jet wp = pow_base(w, -s - Real(1, dgt));  // w^{-s-2j+1} at j = 1
  Real w2 = w * w;
  long up = 0;  // next factor index: poch currently = (s)_{up}
  for (int j = 1; j <= J; ++j) {
    while (up < 2 * j - 1) {
      poch = poch * (s + Real(up, dgt));
      ++up;
    }
    Rational coef = bernoulli(2 * j) /
                    Rational(BigInt::factorial(2 * j), BigInt(1));
    Jet t = Real::from_rational(coef, dgt) * poch * wp;
    if (abs(t.val) > mag) mag = abs(t.val);
    acc = acc + t;
    wp = Jet(wp.val / w2, wp.der / w2);
  }
  if (mag_out) *mag_out = mag;
  return acc;
}

}  // namespace

Jet hurwitz_zeta_jet(const Jet& s, const Rational& x, bool subtract_pole) {
  if (x.sgn() <= 0)
    throw CalcError(ErrKind::BadInput, "hurwitz zeta needs x > 0");
  int dgt = s.val.digits();
  if (!subtract_pole && s.val == Real(1, dgt))
    throw CalcError(ErrKind::PoleAtOne, "hurwitz zeta pole at s = 1");
  Real tol = Real::pow10(-(dgt + 8), dgt);
  double sv = s.val.to_double();
  // Fixed truncation: w = x + N only has to be large enough that the
  // correction series bottoms out below tolerance (error floor ~ e^{-2 pi w}),
  // while keeping the peak direct-sum term N^{|s|+1} small at negative s.
  int N = 32 + dgt / 4 + 2 * static_cast<int>(std::ceil(std::fabs(sv)));
  int J = 16;
  Real mag(1, dgt);
  Jet prev = em_pass(s, x, N, J, subtract_pole, &mag);
  for (int iter = 0; iter < 7; ++iter) {
    J *= 2;
    Jet cur = em_pass(s, x, N, J, subtract_pole, &mag);
    // The achievable absolute accuracy is limited by roundoff on the largest
    // intermediate term (relevant at negative s where the direct sum peaks
    // near N^{|s|+1}), so agreement is judged against that scale.
    Real scale_v = abs(cur.val) + mag;
    Real scale_d = abs(cur.der) + mag;
    if (abs(cur.val - prev.val) < tol * scale_v &&
        abs(cur.der - prev.der) < tol * scale_d)
      return cur;
    prev = cur;
  }
  throw CalcError(ErrKind::PrecisionLoss,
                  "hurwitz zeta refinement did not converge");
}

Jet l_value(const CharSpec& chi, const Jet& s,
            const std::vector<long>& deplete_at) {
  int dgt = s.val.digits();
  Jet acc(Real(0, dgt));
  if (chi.trivial) {
    if (s.val == Real(1, dgt))
      throw CalcError(ErrKind::PoleAtOne, "zeta(s) has a pole at s = 1");
    acc = hurwitz_zeta_jet(s, Rational(1));
  } else {
    long f = chi.conductor();
    // Use the pole-subtracted Hurwitz values: the omitted 1/(s-1) pieces
    // cancel exactly against sum_a chi(a) = 0, and the subtracted form stays
    // finite through s = 1.
    for (long a = 1; a <= f; ++a) {
      int c = chi(a);
      if (c == 0) continue;
      Jet t = hurwitz_zeta_jet(s, Rational(a, f), /*subtract_pole=*/true);
      acc = (c > 0) ? acc + t : acc - t;
    }
    acc = acc * pow_base(Real(f, dgt), -s);
  }
  for (long l : deplete_at) {
    int c = chi(l);
    if (c == 0) continue;
    Jet factor = Real(1, dgt) - Real(c, dgt) * pow_base(Real(l, dgt), -s);
    acc = acc * factor;
  }
  return acc;
}

Rational l_nonpositive_exact(const CharSpec& chi, long one_minus_k) {
  if (one_minus_k > 0)
    throw CalcError(ErrKind::BadInput, "needs a non-positive argument");
  long k = 1 - one_minus_k;
  return -gen_bernoulli(static_cast<int>(k), chi) / Rational(k);
}

Real l_dlog_at_0(const FieldData& f) {
  int dgt = working_digits();
  CharSpec eps = f.eps();
  // Exact L(0,eps) and the log-Gamma representation of L'(0,eps).
  Rational L0q = l_nonpositive_exact(eps, 0);
  Real L0 = Real::from_rational(L0q, dgt);
  Real Lp(0, dgt);
  for (long a = 1; a < f.D; ++a) {
    int c = eps(a);
    if (c == 0) continue;
    Real lg = lngamma_fn(Real::from_rational(Rational(a, f.D), dgt));
    Lp = (c > 0) ? Lp + lg : Lp - lg;
  }
  Lp = Lp - log(Real(f.D, dgt)) * L0;
  Real ratio = Lp / L0;

  // Independent route: jet continuation of L(s,eps) at s = 0.
  Jet viaJet = l_value(eps, Jet::variable(Real(0, dgt)));
  Real ratio2 = viaJet.der / viaJet.val;
  if (!(abs(ratio - ratio2) < Real::pow10(5 - dgt, dgt)))
    throw CalcError(ErrKind::PrecisionLoss,
                    "log-Gamma and jet routes for L'(0)/L(0) disagree");
  return ratio;
}

ComplexVal tau_gauss(long r) {
  int dgt = working_digits();
  if (r == 1) return ComplexVal(Real(1, dgt));
  int t = eps4(r);  // i-power: 0 for r=1(4), 1 for r=3(4)
  return ComplexVal::unit_i_pow(t, dgt) * sqrt(Real(r, dgt));
}

ComplexVal tau_gauss_oracle(long r) {
  int dgt = working_digits();
  if (r == 1) return ComplexVal(Real(1, dgt));
  ComplexVal acc = ComplexVal::zero(dgt);
  for (long a = 1; a < r; ++a) {
    int c = kronecker(a, r);
    if (c == 0) continue;
    ComplexVal e = ComplexVal::unit_root(a, r, dgt);
    acc += (c > 0) ? e : -e;
  }
  return acc;
}

Jet lambda_completed(const FieldData& f, const Jet& s) {
  int dgt = s.val.digits();
  Real half(1, dgt);
  half = half / Real(2, dgt);
  Jet shalf = (s + Real(1, dgt)) * half;
  Real dpi = Real(f.D, dgt) / Real::pi(dgt);
  return pow_base(dpi, shalf) * gamma_fn(shalf) * l_value(f.eps(), s);
}

Real psi_int(int k) {
  if (k < 1) throw CalcError(ErrKind::BadInput, "psi_int needs k >= 1");
  int dgt = working_digits();
  Real acc = -Real::euler_gamma(dgt);
  return acc + Real::from_rational(harmonic(k - 1), dgt);
}

}  // namespace shv
