#pragma once
// Local data at a prime p: Gauss sums over the residue rings O/p^v O of the
// ring of integers of Q(sqrt(-D)), representation numbers N_m(p^v) of the
// hermitian norm form, and the Euler-factor polynomials packaging their
// generating series.  Every closed form has an independent enumeration or
// series route next to it.

#include <cstdint>
#include <vector>

#include "shv/complexval.hpp"
#include "shv/jet.hpp"
#include "shv/rational.hpp"
#include "shv/spaces.hpp"

namespace shv {

// The ring O/cO presented on pairs (x, y) mod c with norm form
// x^2 + xy + ((1+D)/4) y^2 (that of x + y*omega, omega = (1+sqrt(-D))/2).
class ResidueRing {
 public:
  ResidueRing(long D, long c);
  long c() const { return c_; }
  long D() const { return D_; }
  long norm(long x, long y) const;  // reduced into [0, c)
  // Histogram over all c^2 pairs of unit*norm mod c.  Enumeration-oracle
  // scale only: rejects c beyond 4096.
  std::vector<int64_t> norm_histogram(long unit) const;

 private:
  long D_;
  long c_;
  long q_;  // (1+D)/4 mod c
};

// Exact element of Q(i, sqrt(p)): (re1 + i*im1) + (reS + i*imS) * sqrt(p).
struct AlgebraicGauss {
  Rational re1, im1, reS, imS;
  long p = 0;

  static AlgebraicGauss rational(const Rational& r, long p);
  AlgebraicGauss mul(const AlgebraicGauss& o) const;  // same p required
  bool operator==(const AlgebraicGauss& o) const;
  ComplexVal to_complex(int digits = 0) const;
};

// Single-coordinate Gauss sum G(a, p^nu) = sum over pairs mod p^nu of
// e(a N(x) / p^nu): exact closed form in Q(i, sqrt(p)).
AlgebraicGauss gauss_sum_G_exact(long a, long p, int nu, long D);
ComplexVal gauss_sum_G(long a, long p, int nu, long D, int digits = 0);

// Brute-force route: the literal exponential sum over all p^(2 nu) pairs.
ComplexVal gauss_sum_G_bruteforce(long a, long p, int nu, long D,
                                  int digits = 0);

// Lattice Gauss sum over (pairs mod p^nu)^n as the product over the diagonal
// units (all ones at p not dividing D, local_gram units at p | D) ...
AlgebraicGauss lattice_gauss_sum_exact(long a, long p, int nu,
                                       const std::vector<long>& units, long D);
ComplexVal lattice_gauss_sum(long a, long p, int nu,
                             const std::vector<long>& units, long D,
                             int digits = 0);
// ... and by the one-shot closed form (n-th powers plus the product of
// Legendre symbols of the units when p | D).
AlgebraicGauss lattice_gauss_sum_closed(long a, long p, int nu,
                                        const std::vector<long>& units, long D);
// Full-lattice exponential sum via histogram convolution (oracle scale).
ComplexVal lattice_gauss_sum_bruteforce(long a, long p, int nu,
                                        const std::vector<long>& units, long D,
                                        int digits = 0);

// Diagonal units of the local model of the self-dual lattice at p.
std::vector<long> local_units(const SpaceSpec& spec, long p);

// N_m(p^nu): Fourier inversion (1/p^nu) sum_a G_L(a) e(-a m / p^nu), rounded
// to an integer with residual < 1e-20 (NonIntegral otherwise).  Zero-coset
// counts only; shifted counts go through rep_number_shifted_oracle.
BigInt rep_number(long m, long p, int nu, const SpaceSpec& spec);

// Direct enumeration over (pairs mod p^nu)^n via histogram convolution.
BigInt rep_number_oracle(long m, long p, int nu, const SpaceSpec& spec);

// Third route for n = 2: literal pair scan over the two per-coordinate value
// lists using the runtime-dispatched counting kernel.
BigInt rep_number_pair_scan(long m, long p, int nu, const SpaceSpec& spec);

// Count of x with Q(x + shift) = m mod c, shift given per coordinate as
// (x_i, y_i) numerators over c.  Enumeration only; rank <= 2 and c <= 49.
BigInt rep_number_shifted_oracle(long m, long p, int nu, const SpaceSpec& spec,
                                 const std::vector<std::pair<long, long>>& shift);

// Euler factor L^(p)_m as an exact polynomial in X = p^(-s).
struct EulerFactorPoly {
  long p = 0;
  std::vector<Rational> coeffs;  // coeffs[j] multiplies X^j

  Rational eval_rational(const Rational& X) const;
  Real eval_real(const Real& X) const;
  Jet eval_jet(const Jet& X) const;
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

EulerFactorPoly euler_factor(const SpaceSpec& spec, long p, long m);

// Series route: (1 - p^(2n-1) X) * sum_{v <= nu_max} N_m(p^v) X^v evaluated
// at X = p^(-s) with rep_number supplying the counts.
Real euler_factor_series(const SpaceSpec& spec, long p, long m, long s,
                         int nu_max);

// Quadratic character of the generating-series functional equation:
// trivial for even n, the field character (p -> kronecker(p, D)) for odd n.
int chi_F(const SpaceSpec& spec, long p);

}  // namespace shv
