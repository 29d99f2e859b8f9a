#pragma once
// Archimedean pieces: adaptive Gauss-Legendre quadrature at working precision,
// the confluent hypergeometric function U via its integral representation,
// Whittaker factors W_m(s, v) and their closed s-derivative at the special
// point, and the upper incomplete gamma at integer a <= 1.

#include <functional>

#include "shv/real.hpp"

namespace shv {

struct QuadratureOptions {
  // Relative target; falls back to the absolute floor when the running
  // estimate is tiny.
  int rel_digits = 18;
  long max_evals = 1000000;
};

// Adaptive bisection with a fixed-order Gauss rule per segment; the error
// estimate compares a segment's value against the sum over its halves.
// Throws QuadratureFail when the budget runs out before the tolerance holds.
Real adaptive_integrate(const std::function<Real(const Real&)>& f,
                        const Real& lo, const Real& hi,
                        const QuadratureOptions& opt = {});

// U(a, b, z) = (1/Gamma(a)) Int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt for
// a > 0; a <= 0 is reached by the three-term recurrence in a (U(0,b,z) = 1).
Real hyper_U(const Real& a, const Real& b, const Real& z,
             const QuadratureOptions& opt = {});

// W_m(s, v) = (4 pi |m| v)^{-n/2} e^{2 pi m v} W_{sgn(m) n/2, s}(4 pi |m| v)
// with W_{kappa,mu}(z) = e^{-z/2} z^{1/2+mu} U(1/2 + mu - kappa, 1 + 2 mu, z).
Real whittaker_W(long m, long n, const Real& s, const Real& v,
                 const QuadratureOptions& opt = {});

// d/ds W_m(s, v) at s = (n-1)/2 for m > 0: the closed finite sum
// sum_{j=1}^{n-1} binom(n-1, j) Gamma(j) (4 pi m v)^{-j}.
Real whittaker_deriv_s0(long m, long n, const Real& v);

// Same quantity as the quadrature Int_0^inf e^{-4 pi m v t} ((1+t)^{n-1} - 1)
// dt / t (independent route for tests).
Real whittaker_deriv_quadrature(long m, long n, const Real& v,
                                const QuadratureOptions& opt = {});

// Gamma(a, x) for integer a <= 1, x > 0: downward recurrence from
// Gamma(1, x) = e^{-x} through Gamma(0, x) = E1(x).
Real incomplete_gamma_upper(long a, const Real& x);

// E1 routes exposed for dual-route tests.
Real e1_series(const Real& x);           // -gamma - ln x + alternating series
Real e1_continued_fraction(const Real& x);  // Lentz evaluation, best for x >~ 1

// Quadrature route for Gamma(a, x) (oracle).
Real incomplete_gamma_upper_quadrature(long a, const Real& x,
                                       const QuadratureOptions& opt = {});

}  // namespace shv
