// volumes.hpp -- Gamma/L building blocks and the volume web they assemble.
//
// The central object is the product
//
//   a_k(s) = D^{k/2} Gamma(s+k) L(2s+k, eps^k) / (2^k pi^{s+k}),
//
// with eps the quadratic character of the field (eps^k trivial for even k),
// and its invariant-twisted companions b_{V,k}(s) which absorb an Euler
// factor at each ramified prime.  Their product A_V(s) = prod_k b_{V,k}(s)
// carries the geometric and arithmetic volumes of the unitary Shimura
// variety attached to a space specification:
//
//   volC(metrized line bundles)    <-  A_V(0), a positive rational,
//   volHat(arithmetic extensions)  <-  A_V'(0)/A_V(0) plus explicit
//                                      Gamma/L logarithmic constants.
//
// Values at s = 0 have independent exact closed forms (generalized
// Bernoulli numbers); jets and exact routes are cross-checked throughout.
#pragma once

#include <vector>

#include "shv/field.hpp"
#include "shv/jet.hpp"
#include "shv/rational.hpp"
#include "shv/real.hpp"
#include "shv/spaces.hpp"

namespace shv {

// a_k(s) as a first-order jet in s.  Throws PoleAtOne if 2s+k hits the pole
// of zeta for even k.
Jet a_k(const FieldData& field, long k, const Jet& s);

// Exact value a_k(0):
//   even k:  (-1)^{k/2}   D^{k/2}     zeta(1-k)  / 2
//   odd  k:  (-1)^{(k-1)/2} D^{(1-k)/2} L(1-k,eps) / 2
// Anchors: a_1(0) = h/w, a_2(0) = D/24.
Rational a_k_exact0(const FieldData& field, long k);

// a_k'(0)/a_k(0).  Computed from the jet of a_k and, independently, from
// the functional-equation display
//   -2 L'(1-k, eps^k)/L(1-k, eps^k) - psi(k) + log(4 pi / D) + (-1)^k log D;
// throws PrecisionLoss when the two routes disagree beyond 10^(5-digits).
// Returns the jet-route value.
Real a_k_dlog0(const FieldData& field, long k);

// b_{V,k}(s): a_k(s) decorated at the ramified primes l | D by
//   k = 1      :  nothing,
//   k even     :  * prod_l (1 + (-1/l)^{k/2}     inv_l l^{-s-k/2}),
//   k odd >= 3 :  / prod_l (1 + (-1/l)^{(k-1)/2} inv_l l^{-s+(1-k)/2}).
Jet b_Vk(const SpaceSpec& spec, long k, const Jet& s);

// Exact value b_{V,k}(0).
Rational b_Vk_exact0(const SpaceSpec& spec, long k);

// A_V(s) by the direct display: prod_{k=1}^n a_k(s), times, for even n,
// prod_{l|D} (1 + (-1/l)^{n/2} inv_l l^{-s-n/2}).
Jet A_V(const SpaceSpec& spec, const Jet& s);

// A_V(s) as the product prod_{k=1}^n b_{V,k}(s).  Equal to A_V; kept as an
// independent route because consecutive pairs b_{V,k} b_{V,k+1} (k even)
// collapse to a_k a_{k+1} and the two assemblies exercise different code.
Jet A_V_factored(const SpaceSpec& spec, const Jet& s);

// Exact A_V(0) > 0.  Evaluates both the direct display and the b-product
// in exact arithmetic and insists they agree.
Rational A_V_exact0(const SpaceSpec& spec);

// A_V'(0)/A_V(0) from the jet route.
Real A_V_dlog0(const SpaceSpec& spec);

// Faltings height of an elliptic curve with CM by the maximal order,
// averaged over the class group (Chowla-Selberg):
//   hFalt = -(1/2) L'(0,eps)/L(0,eps) - (1/4) log(4 pi^2 D).
Real h_falt(const FieldData& field);

// Logarithmic constants entering the arithmetic volumes.
//   C1      = log(2 pi) + 2 hFalt                      (n-independent)
//   C2(n)   = 2 log(2 e^gamma / D) + (2-n) log(2 pi)   (n >= 2)
//   C3(n)   = (4-2n) hFalt + log(4 pi^2 D)             (n >= 2)
//   C0(n)   = 2 log(4 pi e^gamma / sqrt(D))
//             + (n-4) (L'(0,eps)/L(0,eps) + log(D)/2)  (n >= 1)
// and C0(n) = 2 C1 + C2(n) + C3(n) for n >= 2.
Real C1_const(const FieldData& field);
Real C2_const(const FieldData& field, long n);
Real C3_const(const FieldData& field, long n);
Real C0_const(const FieldData& field, long n);

// An exceptional (vertical) divisor contribution: multiplicity times log p.
struct ExceptionalComponent {
  Rational mult;
  long p = 0;
};

// Everything the volume web knows about one space specification.
//
// Complex volumes (all positive rationals):
//   volC_hodge_MW :  Hodge bundle on the big moduli stack M_W,
//                    A_V(0) * 2^{n-1} (odd n) or A_V(0) * 2^{n-o(D)} (even n)
//   volC_K        :  twisted bundle K on S_V,  h/(2^{o(D)-n} w) * A_V(0)
//   volC_L        :  tautological bundle L on S_V, h/(2^{o(D)-1} w) * A_V(0)
// with volC_K = 2^{n-1} volC_L and volC_hodge_MW * t_n = volC_K, where
// t_n = (h/w) (even n) or (h/w) 2^{1-o(D)} (odd n) is the degree of
// S_V -> M_W.
//
// Arithmetic volumes (n >= 2 except volHat_hodge_MW, defined for n >= 1):
//   volHat_hodge_MW = (2 A'/A - n C0(n) + log D) volC_hodge_MW
//   volHat_hodge_SV = (2 A'/A - n C0(n) + log D) volC_K
//   volHat_K        = (2 A'/A + log D) volC_K
//   volHat_L        = (A'/A + log(D)/2) volC_L
//                     + ((-1)^{n-1}/2) sum_E mult_E log p_E
// where the sum runs over the supplied exceptional components.
//
// For n = 1 only the Hodge entries are populated (A_V = a_1,
// volC_hodge_MW = h/w); the K/L/S_V entries and C2, C3 are left zero.
struct VolumeReport {
  SpaceSpec spec;
  Rational A0;          // exact A_V(0)
  Real A_dlog;          // A_V'(0)/A_V(0)
  Rational t_n;         // degree of S_V -> M_W

  Rational volC_hodge_MW;
  Rational volC_K;
  Rational volC_L;

  Real volHat_hodge_MW;
  Real volHat_hodge_SV;
  Real volHat_K;
  Real volHat_L;

  Real hFalt, C0, C1, C2, C3;
  std::vector<ExceptionalComponent> exceptional;
};

VolumeReport volume_report(
    const SpaceSpec& spec,
    const std::vector<ExceptionalComponent>& exceptional = {});

// Kudla-Rapoport style predictions for the special divisor Z_V(p) attached
// to a prime p split in the field: its Chern-form degree and the heights of
// the two natural bundles restricted to it, expressed through the companion
// space of dimension n-1.  Heights are well defined modulo Q log p; the
// representative returned drops that ambiguity and reports its modulus.
struct KrPrediction {
  SpaceSpec companion;
  Rational chern_integral;  // (p^{n-1} + 1) volC_K(companion)
  Real height_K;            // (p^{n-1} + 1)^{-1} ht_K, mod Q log p
  Real height_hodge;        // (p^{n-1} + 1)^{-1} ht_Hodge, mod Q log p
  long ambiguity_p = 0;
};

KrPrediction kr_predictions(const SpaceSpec& spec, long p);

}  // namespace shv
