// test_lfunctions.cpp -- L-function engine: anchors, exactness bridge,
// functional-equation closure, depletion identity, tau sums.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shv/lfunctions.hpp"

using namespace shv;

static bool close_to(const Real& a, const Real& b, int tol_exp) {
  return abs(a - b) < Real::pow10(-tol_exp);
}

TEST_CASE("zeta anchors") {
  Jet z2 = l_value(CharSpec::trivial_char(), Jet::variable(Real(2)));
  Real pi = Real::pi();
  CHECK(close_to(z2.val, pi * pi / Real(6), 55));
  // zeta(3), zeta(4) against independent slow sums plus tail integral bound:
  // sum_{n<=N} n^{-s} + N^{1-s}/(s-1) lies within s*N^{-s} of zeta(s).
  for (long s : {3L, 4L}) {
    Jet z = l_value(CharSpec::trivial_char(), Jet::variable(Real(s)));
    Real direct(0);
    long N = 4000;
    for (long n = 1; n <= N; ++n) direct += powi(Real(n), -s);
    Real tail_lo = powi(Real(N + 1), 1 - s) / Real(s - 1);
    Real tail_hi = powi(Real(N), 1 - s) / Real(s - 1);
    CHECK(z.val > direct + tail_lo);
    CHECK(z.val < direct + tail_hi);
  }
  CHECK_THROWS_AS(l_value(CharSpec::trivial_char(), Jet::variable(Real(1))),
                  CalcError);
}

TEST_CASE("class number formula anchor: L(1, eps_7) = pi/sqrt(7)") {
  Jet L1 = l_value(CharSpec::field_char(7), Jet::variable(Real(1)));
  CHECK(close_to(L1.val, Real::pi() / sqrt(Real(7)), 55));
  // D = 15, h = 2: L(1,eps) = 2*pi*h/(w*sqrt(D)).
  Jet L15 = l_value(CharSpec::field_char(15), Jet::variable(Real(1)));
  CHECK(close_to(L15.val, Real(2) * Real::pi() * Real(2) /
                              (Real(2) * sqrt(Real(15))), 55));
}

TEST_CASE("exactness bridge: continuation matches -B_k,chi / k") {
  for (int k = 1; k <= 8; ++k) {
    // trivial character: zeta(1-k); skip the pole at k = 0 side (k>=1 ok,
    // but zeta(0) needs s=0 which is fine).
    Jet z = l_value(CharSpec::trivial_char(), Jet::variable(Real(1 - k)));
    Rational exact = l_nonpositive_exact(CharSpec::trivial_char(), 1 - k);
    INFO("trivial k=" << k);
    CHECK(close_to(z.val, Real::from_rational(exact), 55));
  }
  for (long D : {7L, 15L}) {
    CharSpec eps = CharSpec::field_char(D);
    for (int k = 1; k <= 8; ++k) {
      Jet z = l_value(eps, Jet::variable(Real(1 - k)));
      Rational exact = l_nonpositive_exact(eps, 1 - k);
      INFO("D=" << D << " k=" << k);
      CHECK(close_to(z.val, Real::from_rational(exact), 55));
    }
  }
  CHECK(l_nonpositive_exact(CharSpec::trivial_char(), -1) == Rational(-1, 12));
  CHECK(l_nonpositive_exact(CharSpec::field_char(7), -2) == Rational(-16, 7));
  CHECK(l_nonpositive_exact(CharSpec::field_char(7), 0) == Rational(1));
}

TEST_CASE("depletion identity holds exactly as jets") {
  CharSpec tr = CharSpec::trivial_char();
  Jet s = Jet::variable(Real::parse("2.5"));
  Jet both = l_value(tr, s, {3, 5, 7});
  Jet split = l_value(tr, s, {3});
  int dgt = working_digits();
  for (long l : {5L, 7L}) {
    Jet f = Real(1, dgt) - pow_base(Real(l, dgt), -s);
    split = split * f;
  }
  CHECK(close_to(both.val, split.val, 55));
  CHECK(close_to(both.der, split.der, 55));
  // Depleted zeta at integer argument: zeta(n) prod (1 - l^{-n}).
  Jet zd = l_value(tr, Jet::variable(Real(3)), {3, 5});
  Jet z = l_value(tr, Jet::variable(Real(3)));
  Real expect = z.val * (Real(1) - powi(Real(3), -3)) *
                (Real(1) - powi(Real(5), -3));
  CHECK(close_to(zd.val, expect, 55));
  // Depleting the field character at a ramified prime is a no-op.
  CharSpec eps = CharSpec::field_char(7);
  Jet a = l_value(eps, Jet::variable(Real(2)), {7});
  Jet b = l_value(eps, Jet::variable(Real(2)));
  CHECK(close_to(a.val, b.val, 58));
}

TEST_CASE("functional equation closure at s in {0.3, 0.7}") {
  for (long D : {7L, 15L, 23L}) {
    FieldData f = make_field(D);
    Jet sa = Jet::variable(Real::parse("0.3"));
    Jet sb = Jet::variable(Real::parse("0.7"));
    Jet la = lambda_completed(f, sa);
    Jet lb = lambda_completed(f, sb);
    INFO("D=" << D);
    CHECK(close_to(la.val, lb.val, 55));
    // dlog antisymmetry: Lambda'(s)/Lambda(s) = -Lambda'(1-s)/Lambda(1-s).
    CHECK(close_to(la.der / la.val, -(lb.der / lb.val), 55));
  }
}

TEST_CASE("log-derivative at zero: log-Gamma route vs jet route") {
  for (long D : {3L, 7L, 15L, 23L}) {
    FieldData f = make_field(D);
    Real r = l_dlog_at_0(f);  // internally cross-checks both routes
    Jet viaJet = l_value(f.eps(), Jet::variable(Real(0)));
    INFO("D=" << D);
    CHECK(close_to(r, viaJet.der / viaJet.val, 50));
  }
}

TEST_CASE("quadratic gauss sums: closed form vs character sum") {
  // Anchors.
  ComplexVal t1 = tau_gauss(1);
  CHECK(close_to(t1.re, Real(1), 55));
  CHECK(close_to(t1.im, Real(0), 55));
  ComplexVal t7 = tau_gauss(7);
  CHECK(close_to(t7.re, Real(0), 55));
  CHECK(close_to(t7.im, sqrt(Real(7)), 55));
  ComplexVal t5 = tau_gauss(5);
  CHECK(close_to(t5.re, sqrt(Real(5)), 55));
  CHECK(close_to(t5.im, Real(0), 55));
  // Oracle agreement for every divisor of the working discriminants.
  for (long r : {1L, 3L, 5L, 7L, 11L, 15L, 19L, 23L, 35L, 105L}) {
    ComplexVal closed = tau_gauss(r);
    ComplexVal brute = tau_gauss_oracle(r);
    INFO("r=" << r);
    CHECK(close_to((closed - brute).abs(), Real(0), 54));
  }
}

TEST_CASE("digamma at integers") {
  CHECK(close_to(psi_int(1), -Real::euler_gamma(), 58));
  CHECK(close_to(psi_int(2), Real(1) - Real::euler_gamma(), 58));
  CHECK(close_to(psi_int(4), digamma_fn(Real(4)), 55));
}

TEST_CASE("zeta derivative at -1 sanity") {
  Jet z = l_value(CharSpec::trivial_char(), Jet::variable(Real(-1)));
  CHECK(close_to(z.val, Real::from_rational(Rational(-1, 12)), 55));
  // FE-transported value: differentiating
  //   zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)  at s = -1:
  //   zeta'(-1)/zeta(-1) = log(2pi) + gamma - 12 zeta'(2)/pi^2 ... assembled
  // directly below from jet values at s = 2.
  Jet z2 = l_value(CharSpec::trivial_char(), Jet::variable(Real(2)));
  Real pi = Real::pi();
  // d/ds log zeta(s) at -1 = log 2 + log pi - (pi/2) cot(-pi/2) ... cot term
  // vanishes at s=-1 since cos(-pi/2)=0; Gamma part gives -psi(2); zeta part
  // gives -zeta'(2)/zeta(2).
  Real want = log(Real(2)) + log(pi) - psi_int(2) - z2.der / z2.val;
  CHECK(close_to(z.der / z.val, want, 54));
}
