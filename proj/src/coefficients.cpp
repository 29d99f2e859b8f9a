// coefficients.cpp -- Eisenstein coefficients B(m,0,s): jet assembly around
// s0 = (n-1)/2, exact rational value at s0, and the coprime-m divisor-sum
// display as an independent route.

#include "shv/coefficients.hpp"

#include <string>
#include <utility>
#include <vector>

#include "shv/densities.hpp"
#include "shv/errors.hpp"
#include "shv/lfunctions.hpp"
#include "shv/numtheory.hpp"
#include "shv/volumes.hpp"

namespace shv {

namespace {

void check_domain(const SpaceSpec& spec, long m) {
  validate_space(spec);
  if (spec.n < 2)
    throw CalcError(ErrKind::DimensionOutOfScope,
                    "coefficients need n >= 2 (the n = 1 branch has no "
                    "closed derivative display)");
  if (m < 1) throw CalcError(ErrKind::BadInput, "coefficient index m must be >= 1");
}

// eps(p)^n for the unramified geometric sums: 1 for even n.
int unram_twist(const SpaceSpec& spec, long p) {
  return (spec.n % 2 == 0) ? 1 : kronecker(p, spec.field.D);
}

}  // namespace

Rational coeff_s0(long n) { return Rational(n - 1, 2); }

Jet coeff_B_at(const SpaceSpec& spec, long m, const Jet& s) {
  check_domain(spec, m);
  const int dgt = s.val.digits();
  const long n = spec.n;
  const FieldData& f = spec.field;

  const Real s0 = Real::from_rational(coeff_s0(n), dgt);
  const Jet a_n_shift = a_k(f, n, s - s0);
  const Jet lead = pow_base(Real(m, dgt), s + s0);

  Jet unram = Jet::constant(Real(1, dgt));
  for (const auto& [p, e] : factorize(m)) {
    if (f.D % p == 0) continue;  // ramified primes live in the Euler factors
    const Real t(unram_twist(spec, p), dgt);
    const Jet ratio = t * pow_base(Real(p, dgt), s * Real(-2, dgt));
    Jet geom = Jet::constant(Real(1, dgt));
    Jet power = Jet::constant(Real(1, dgt));
    for (int g = 1; g <= e; ++g) {
      power = power * ratio;
      geom = geom + power;
    }
    unram = unram * geom;
  }

  Jet ram = Jet::constant(Real(1, dgt));
  for (long ell : f.primes) {
    const EulerFactorPoly poly = euler_factor(spec, ell, m);
    const Jet X = pow_base(Real(ell, dgt), s * Real(-2, dgt) - Real(n, dgt));
    Jet factor = poly.eval_jet(X);
    if (n % 2 == 0)
      factor = factor /
               (Real(1, dgt) -
                pow_base(Real(ell, dgt), s * Real(-2, dgt) - Real(1, dgt)));
    ram = ram * factor;
  }

  return -(lead / a_n_shift) * unram * ram;
}

Jet coeff_B(const CoeffRequest& req) {
  check_domain(req.spec, req.m);
  const int dgt = working_digits();
  const Jet s = Jet::variable(Real::from_rational(coeff_s0(req.spec.n), dgt));
  return coeff_B_at(req.spec, req.m, s);
}

Rational coeff_B_exact(const SpaceSpec& spec, long m) {
  check_domain(spec, m);
  const long n = spec.n;
  const FieldData& f = spec.field;

  // m^{2 s0} = m^{n-1}.
  const Rational lead(BigInt::pow(BigInt(m), static_cast<unsigned long>(n - 1)),
                      BigInt(1));
  const Rational a_n0 = a_k_exact0(f, n);

  Rational unram(1);
  for (const auto& [p, e] : factorize(m)) {
    if (f.D % p == 0) continue;
    // (eps(p)^n p^{1-n})^g summed over g = 0..e.
    const Rational ratio(BigInt(unram_twist(spec, p)),
                         BigInt::pow(BigInt(p), static_cast<unsigned long>(n - 1)));
    Rational geom(1);
    Rational power(1);
    for (int g = 1; g <= e; ++g) {
      power = power * ratio;
      geom = geom + power;
    }
    unram = unram * geom;
  }

  Rational ram(1);
  for (long ell : f.primes) {
    const EulerFactorPoly poly = euler_factor(spec, ell, m);
    const Rational X(BigInt(1), BigInt::pow(BigInt(ell),
                                            static_cast<unsigned long>(2 * n - 1)));
    Rational factor = poly.eval_rational(X);
    if (n % 2 == 0)
      factor = factor /
               (Rational(1) - Rational(BigInt(1),
                                       BigInt::pow(BigInt(ell),
                                                   static_cast<unsigned long>(n))));
    ram = ram * factor;
  }

  return -(lead / a_n0) * unram * ram;
}

Jet coeff_B_coprime(const SpaceSpec& spec, long m, const Jet& s) {
  check_domain(spec, m);
  const long n = spec.n;
  const FieldData& f = spec.field;
  for (long ell : f.primes)
    if (m % ell == 0)
      throw CalcError(ErrKind::BadInput,
                      "coprime display needs gcd(m, D) = 1, but " +
                          std::to_string(ell) + " divides m");

  const int dgt = s.val.digits();
  const Real s0 = Real::from_rational(coeff_s0(n), dgt);
  const Jet a_n_shift = a_k(f, n, s - s0);
  const Jet lead = pow_base(Real(m, dgt), s + s0);

  const CharSpec chi = CharSpec::field_char_power(f.D, n);
  const Jet sigma = sigma_jet(m, s * Real(-2, dgt), chi);

  Jet ram = Jet::constant(Real(1, dgt));
  const long half = n / 2;  // n/2 for even n, (n-1)/2 for odd n
  for (long ell : f.primes) {
    const int unit_sq = (half % 2 != 0) ? kronecker(-1, ell) : 1;
    const int inv = spec.inv.at(ell);
    if (n % 2 == 0) {
      // (1 - (-1/l)^{n/2} inv l^{n/2-1-2s}) / (1 - l^{-2s-1})
      const Jet num =
          Real(1, dgt) - Real(unit_sq * inv, dgt) *
                             pow_base(Real(ell, dgt),
                                      Real(half - 1, dgt) - s * Real(2, dgt));
      const Jet den =
          Real(1, dgt) -
          pow_base(Real(ell, dgt), s * Real(-2, dgt) - Real(1, dgt));
      ram = ram * (num / den);
    } else {
      // 1 + (-1/l)^{(n-1)/2} (m/l) inv l^{(n-1)/2-2s}
      const int msym = kronecker(m, ell);
      ram = ram * (Real(1, dgt) +
                   Real(unit_sq * msym * inv, dgt) *
                       pow_base(Real(ell, dgt),
                                Real(half, dgt) - s * Real(2, dgt)));
    }
  }

  return -(lead / a_n_shift) * sigma * ram;
}

Real green_integral_rhs(const SpaceSpec& spec,
                        const std::map<long, long>& coeffs) {
  validate_space(spec);
  if (spec.n < 2)
    throw CalcError(ErrKind::DimensionOutOfScope,
                    "the green integral needs n >= 2");
  const int dgt = working_digits();
  Real total(0, dgt);
  for (const auto& [m, c] : coeffs) {
    if (c == 0) continue;
    const Jet b = coeff_B(CoeffRequest{spec, m});
    total = total + Real(c, dgt) * b.der;
  }
  return total;
}

}  // namespace shv
