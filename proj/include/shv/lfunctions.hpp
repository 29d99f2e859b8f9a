// lfunctions.hpp -- Dirichlet L-functions for the trivial and quadratic
// characters, with s-derivatives carried as jets.
//
// Everything is built on one engine: the Hurwitz zeta function evaluated by
// Euler--Maclaurin summation with jet coefficients, refined by doubling the
// correction order until two successive evaluations agree to the working
// tolerance.  Exact values at non-positive integers come independently from
// generalized Bernoulli numbers, giving the two routes the tests compare.
#pragma once

#include <vector>

#include "shv/complexval.hpp"
#include "shv/field.hpp"
#include "shv/jet.hpp"
#include "shv/numtheory.hpp"

namespace shv {

// Hurwitz zeta(s, x) for rational x > 0 as a jet in s.  With subtract_pole
// the regularized zeta(s,x) - 1/(s-1) is returned instead, which is finite
// at s = 1; character sums against a nontrivial character are unchanged by
// the subtraction since the character values sum to zero.
Jet hurwitz_zeta_jet(const Jet& s, const Rational& x,
                     bool subtract_pole = false);

// L(s, chi) as a jet, multiplied by prod_{l in deplete_at}(1 - chi(l) l^{-s}).
// Defined by analytic continuation for any real s away from the pole of the
// trivial-character case.  Throws PoleAtOne for the trivial character at
// s = 1 (depletion factors never cancel that pole).
Jet l_value(const CharSpec& chi, const Jet& s,
            const std::vector<long>& deplete_at = {});

// Exact L(1-k, chi) = -B_{k,chi}/k for k >= 1, as a rational.
Rational l_nonpositive_exact(const CharSpec& chi, long one_minus_k);

// L'(0,eps)/L(0,eps) via the log-Gamma representation
//   L'(0,eps) = sum_{a=1}^{D} eps(a) log Gamma(a/D) - log(D) L(0,eps),
// cross-checked against the jet continuation of l_value at s = 0.
Real l_dlog_at_0(const FieldData& f);

// Quadratic Gauss sum tau(eps_r) for odd squarefree r: sqrt(r) when
// r = 1 (mod 4) and i sqrt(r) when r = 3 (mod 4); r = 1 gives 1.
ComplexVal tau_gauss(long r);
// Brute-force character sum sum_{a mod r} (a|r) e(a/r).
ComplexVal tau_gauss_oracle(long r);

// Completed L-function Lambda(s) = (D/pi)^{(s+1)/2} Gamma((s+1)/2) L(s,eps),
// which satisfies Lambda(s) = Lambda(1-s).
Jet lambda_completed(const FieldData& f, const Jet& s);

// digamma at a positive integer, exactly: psi(k) = -gamma + H_{k-1}.
Real psi_int(int k);

}  // namespace shv
