// coefficients.hpp -- non-archimedean Fourier coefficients B(m,0,s) of the
// weight-n incoherent Eisenstein series attached to a space specification.
//
// B is assembled from the closed-form corollary displays:
//
//   B(m,0,s) = - m^{s+(n-1)/2} / a_n(s-s0)
//              * prod_{p | m, p not | D} sum_{g=0}^{v_p(m)} (eps(p)^n p^{-2s})^g
//              * prod_{l | D} L^{(l)}_m(l^{-2s-n}) [ / (1 - l^{-2s-1}), n even ]
//
// with s0 = (n-1)/2 and L^{(l)}_m the local-density Euler polynomial.  The
// value at s0 is an exact rational; the s-derivative is transcendental and
// comes from the jet route.
#pragma once

#include <map>

#include "shv/jet.hpp"
#include "shv/rational.hpp"
#include "shv/real.hpp"
#include "shv/spaces.hpp"

namespace shv {

struct CoeffRequest {
  SpaceSpec spec;
  long m = 0;  // >= 1
};

// The special point s0 = (n-1)/2.
Rational coeff_s0(long n);

// B(m,0,s) as a jet in s, anchored wherever the supplied jet sits.  Pass
// Jet::variable at s0 to read off (B(m,0,s0), B'(m,0,s0)).
// Throws DimensionOutOfScope for n = 1 and BadInput for m < 1.
Jet coeff_B_at(const SpaceSpec& spec, long m, const Jet& s);

// Jet of B(m,0,s) at s = s0.
Jet coeff_B(const CoeffRequest& req);

// Exact rational value B(m,0,s0), by a parallel all-rational assembly.
Rational coeff_B_exact(const SpaceSpec& spec, long m);

// Independent assembly for m coprime to D: the corollary's divisor-sum
// display with twisted sigma in place of the per-prime geometric sums and
// explicit two-term ramified factors in place of the Euler polynomials.
// Throws BadInput when gcd(m, D) > 1.
Jet coeff_B_coprime(const SpaceSpec& spec, long m, const Jet& s);

// I(f) = sum_{m>0} c(-m) B'(m,0,s0) over the finitely supported integer
// coefficient map m -> c(-m).
Real green_integral_rhs(const SpaceSpec& spec,
                        const std::map<long, long>& coeffs);

}  // namespace shv
