// volumes.cpp -- Gamma/L building blocks a_k, b_{V,k}, A_V and the volume
// web (complex volumes as exact rationals, arithmetic volumes as reals).

#include "shv/volumes.hpp"

#include <string>
#include <vector>

#include "shv/errors.hpp"
#include "shv/lfunctions.hpp"
#include "shv/numtheory.hpp"

namespace shv {

namespace {

// 2^e as a rational, e of either sign.
Rational pow2q(long e) {
  if (e >= 0)
    return Rational(BigInt::pow(BigInt(2), static_cast<unsigned long>(e)),
                    BigInt(1));
  return Rational(BigInt(1),
                  BigInt::pow(BigInt(2), static_cast<unsigned long>(-e)));
}

int inv_at(const SpaceSpec& spec, long ell) {
  auto it = spec.inv.find(ell);
  if (it == spec.inv.end())
    throw CalcError(ErrKind::UnknownPrime,
                    "no invariant assigned at prime " + std::to_string(ell));
  return it->second;
}

// (-1/l)^e inv_l, the sign of the ramified decoration with exponent e.
int ram_sign(const SpaceSpec& spec, long ell, long e) {
  const int kr = (e % 2 != 0) ? kronecker(-1, ell) : 1;
  return kr * inv_at(spec, ell);
}

// 1 + (-1/l)^e inv_l l^{-s-e} as a jet in s.
Jet ram_factor_jet(const SpaceSpec& spec, long ell, long e, const Jet& s) {
  const int dgt = s.val.digits();
  const Real sign(ram_sign(spec, ell, e), dgt);
  return Real(1, dgt) + sign * pow_base(Real(ell, dgt), -s - Real(e, dgt));
}

// The same factor at s = 0, exactly.
Rational ram_factor_exact0(const SpaceSpec& spec, long ell, long e) {
  return Rational(1) +
         Rational(BigInt(ram_sign(spec, ell, e)),
                  BigInt::pow(BigInt(ell), static_cast<unsigned long>(e)));
}

Real tol_gate(int dgt) { return Real::pow10(5 - dgt, dgt); }

}  // namespace

Jet a_k(const FieldData& field, long k, const Jet& s) {
  if (k < 1) throw CalcError(ErrKind::BadInput, "a_k needs k >= 1");
  const int dgt = s.val.digits();
  const Real D(field.D, dgt);
  Real dpow = powi(D, k / 2);
  if (k % 2 == 1) dpow = dpow * sqrt(D);
  const Jet gamma_term = gamma_fn(s + Real(k, dgt));
  const Jet l_term = l_value(CharSpec::field_char_power(field.D, k),
                             s * Real(2, dgt) + Real(k, dgt));
  const Jet pi_term = pow_base(Real::pi(dgt), s + Real(k, dgt));
  return gamma_term * l_term * (dpow / powi(Real(2, dgt), k)) / pi_term;
}

Rational a_k_exact0(const FieldData& field, long k) {
  if (k < 1) throw CalcError(ErrKind::BadInput, "a_k needs k >= 1");
  if (k % 2 == 0) {
    // (-1)^{k/2} D^{k/2} zeta(1-k) / 2
    const Rational z = l_nonpositive_exact(CharSpec::trivial_char(), 1 - k);
    Rational out =
        Rational(BigInt::pow(BigInt(field.D), static_cast<unsigned long>(k / 2)),
                 BigInt(2)) *
        z;
    if ((k / 2) % 2 == 1) out = -out;
    return out;
  }
  // (-1)^{(k-1)/2} D^{(1-k)/2} L(1-k, eps) / 2
  const Rational L = l_nonpositive_exact(field.eps(), 1 - k);
  Rational out =
      Rational(BigInt(1), BigInt(2) * BigInt::pow(BigInt(field.D),
                                                  static_cast<unsigned long>(
                                                      (k - 1) / 2))) *
      L;
  if (((k - 1) / 2) % 2 == 1) out = -out;
  return out;
}

Real a_k_dlog0(const FieldData& field, long k) {
  const int dgt = working_digits();
  const Jet a = a_k(field, k, Jet::variable(Real(0, dgt)));
  const Real direct = a.der / a.val;

  // Functional-equation display of the same logarithmic derivative.
  const CharSpec chi = CharSpec::field_char_power(field.D, k);
  const Jet L1k = l_value(chi, Jet::variable(Real(1 - k, dgt)));
  const Real logD = log(Real(field.D, dgt));
  Real fe = Real(-2, dgt) * (L1k.der / L1k.val) - psi_int(static_cast<int>(k)) +
            log(Real(4, dgt) * Real::pi(dgt)) - logD;
  fe = (k % 2 == 0) ? fe + logD : fe - logD;

  if (!(abs(direct - fe) < tol_gate(dgt)))
    throw CalcError(ErrKind::PrecisionLoss,
                    "a_k dlog routes disagree at k = " + std::to_string(k));
  return direct;
}

Jet b_Vk(const SpaceSpec& spec, long k, const Jet& s) {
  const Jet base = a_k(spec.field, k, s);
  if (k == 1) return base;
  const long e = k / 2;  // k/2 for even k, (k-1)/2 for odd k
  Jet prod = Jet::constant(Real(1, s.val.digits()));
  for (long ell : spec.field.primes)
    prod = prod * ram_factor_jet(spec, ell, e, s);
  return (k % 2 == 0) ? base * prod : base / prod;
}

Rational b_Vk_exact0(const SpaceSpec& spec, long k) {
  const Rational base = a_k_exact0(spec.field, k);
  if (k == 1) return base;
  const long e = k / 2;
  Rational prod(1);
  for (long ell : spec.field.primes)
    prod = prod * ram_factor_exact0(spec, ell, e);
  return (k % 2 == 0) ? base * prod : base / prod;
}

Jet A_V(const SpaceSpec& spec, const Jet& s) {
  validate_space(spec);
  Jet prod = Jet::constant(Real(1, s.val.digits()));
  for (long k = 1; k <= spec.n; ++k) prod = prod * a_k(spec.field, k, s);
  if (spec.n % 2 == 0) {
    const long e = spec.n / 2;
    for (long ell : spec.field.primes)
      prod = prod * ram_factor_jet(spec, ell, e, s);
  }
  return prod;
}

Jet A_V_factored(const SpaceSpec& spec, const Jet& s) {
  validate_space(spec);
  Jet prod = Jet::constant(Real(1, s.val.digits()));
  for (long k = 1; k <= spec.n; ++k) prod = prod * b_Vk(spec, k, s);
  return prod;
}

Rational A_V_exact0(const SpaceSpec& spec) {
  validate_space(spec);
  Rational direct(1);
  for (long k = 1; k <= spec.n; ++k)
    direct = direct * a_k_exact0(spec.field, k);
  if (spec.n % 2 == 0) {
    const long e = spec.n / 2;
    for (long ell : spec.field.primes)
      direct = direct * ram_factor_exact0(spec, ell, e);
  }
  Rational factored(1);
  for (long k = 1; k <= spec.n; ++k)
    factored = factored * b_Vk_exact0(spec, k);
  if (!(direct == factored))
    throw CalcError(ErrKind::PrecisionLoss,
                    "A_V exact assemblies disagree for " + spec_to_string(spec));
  if (direct.sgn() <= 0)
    throw CalcError(ErrKind::PrecisionLoss,
                    "A_V(0) not positive for " + spec_to_string(spec));
  return direct;
}

Real A_V_dlog0(const SpaceSpec& spec) {
  const Jet a = A_V(spec, Jet::variable(Real(0, working_digits())));
  return a.der / a.val;
}

Real h_falt(const FieldData& field) {
  const int dgt = working_digits();
  const Real two_pi = Real(2, dgt) * Real::pi(dgt);
  // -(1/2) L'(0)/L(0) - (1/4) log(4 pi^2 D)
  return -(l_dlog_at_0(field) / Real(2, dgt)) -
         (Real(2, dgt) * log(two_pi) + log(Real(field.D, dgt))) / Real(4, dgt);
}

Real C1_const(const FieldData& field) {
  const int dgt = working_digits();
  return log(Real(2, dgt) * Real::pi(dgt)) + Real(2, dgt) * h_falt(field);
}

Real C2_const(const FieldData& field, long n) {
  if (n < 2)
    throw CalcError(ErrKind::DimensionTooSmall, "C2 is defined for n >= 2");
  const int dgt = working_digits();
  // 2 log(2 e^gamma / D) + (2-n) log(2 pi)
  return Real(2, dgt) *
             (log(Real(2, dgt)) + Real::euler_gamma(dgt) -
              log(Real(field.D, dgt))) +
         Real(2 - n, dgt) * log(Real(2, dgt) * Real::pi(dgt));
}

Real C3_const(const FieldData& field, long n) {
  if (n < 2)
    throw CalcError(ErrKind::DimensionTooSmall, "C3 is defined for n >= 2");
  const int dgt = working_digits();
  // (4-2n) hFalt + log(4 pi^2 D)
  return Real(4 - 2 * n, dgt) * h_falt(field) +
         Real(2, dgt) * log(Real(2, dgt) * Real::pi(dgt)) +
         log(Real(field.D, dgt));
}

Real C0_const(const FieldData& field, long n) {
  if (n < 1)
    throw CalcError(ErrKind::DimensionTooSmall, "C0 is defined for n >= 1");
  const int dgt = working_digits();
  const Real logD = log(Real(field.D, dgt));
  // 2 log(4 pi e^gamma / sqrt(D)) + (n-4)(L'(0)/L(0) + log(D)/2)
  return Real(2, dgt) *
             (log(Real(4, dgt) * Real::pi(dgt)) + Real::euler_gamma(dgt)) -
         logD +
         Real(n - 4, dgt) * (l_dlog_at_0(field) + logD / Real(2, dgt));
}

VolumeReport volume_report(const SpaceSpec& spec,
                           const std::vector<ExceptionalComponent>& exceptional) {
  validate_space(spec);
  const int dgt = working_digits();
  const FieldData& f = spec.field;
  const long n = spec.n;

  VolumeReport r;
  r.spec = spec;
  r.exceptional = exceptional;
  r.A0 = A_V_exact0(spec);

  const Jet aj = A_V(spec, Jet::variable(Real(0, dgt)));
  r.A_dlog = aj.der / aj.val;
  if (!(abs(aj.val - Real::from_rational(r.A0, dgt)) < tol_gate(dgt)))
    throw CalcError(ErrKind::PrecisionLoss,
                    "A_V jet value drifts from the exact A_V(0)");

  const Rational hw(BigInt(f.h), BigInt(f.w));
  r.t_n = (n % 2 == 0) ? hw : hw * pow2q(1 - f.oD);
  r.volC_hodge_MW =
      r.A0 * ((n % 2 == 0) ? pow2q(n - f.oD) : pow2q(n - 1));

  r.hFalt = h_falt(f);
  r.C0 = C0_const(f, n);
  r.C1 = C1_const(f);

  const Real logD = log(Real(f.D, dgt));
  const Real slope_hodge =
      Real(2, dgt) * r.A_dlog - Real(n, dgt) * r.C0 + logD;
  r.volHat_hodge_MW =
      slope_hodge * Real::from_rational(r.volC_hodge_MW, dgt);

  if (n < 2) {
    // Only the Hodge entries exist in dimension one.
    r.C2 = Real(0, dgt);
    r.C3 = Real(0, dgt);
    r.volHat_hodge_SV = Real(0, dgt);
    r.volHat_K = Real(0, dgt);
    r.volHat_L = Real(0, dgt);
    if (!exceptional.empty())
      throw CalcError(ErrKind::DimensionTooSmall,
                      "exceptional corrections need n >= 2");
    return r;
  }

  r.C2 = C2_const(f, n);
  r.C3 = C3_const(f, n);
  r.volC_K = hw * pow2q(n - f.oD) * r.A0;
  r.volC_L = hw * pow2q(1 - f.oD) * r.A0;
  if (!(r.volC_K == pow2q(n - 1) * r.volC_L))
    throw CalcError(ErrKind::PrecisionLoss, "volC_K != 2^{n-1} volC_L");
  if (!(r.volC_hodge_MW * r.t_n == r.volC_K))
    throw CalcError(ErrKind::PrecisionLoss, "volC_hodge * t_n != volC_K");

  const Real volK = Real::from_rational(r.volC_K, dgt);
  r.volHat_hodge_SV = slope_hodge * volK;
  r.volHat_K = (Real(2, dgt) * r.A_dlog + logD) * volK;

  Real corr(0, dgt);
  for (const auto& comp : exceptional) {
    if (comp.p < 2 || !is_prime(comp.p))
      throw CalcError(ErrKind::BadPrime,
                      "exceptional component at non-prime " +
                          std::to_string(comp.p));
    corr = corr + Real::from_rational(comp.mult, dgt) * log(Real(comp.p, dgt));
  }
  const int vertical_sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n-1}
  r.volHat_L = (r.A_dlog + logD / Real(2, dgt)) *
                   Real::from_rational(r.volC_L, dgt) +
               Real(vertical_sign, dgt) * corr / Real(2, dgt);
  return r;
}

KrPrediction kr_predictions(const SpaceSpec& spec, long p) {
  validate_space(spec);
  KrPrediction out;
  out.companion = companion_space(spec, p);  // checks n >= 3 and p split
  out.ambiguity_p = p;

  const VolumeReport rep = volume_report(out.companion);
  const int dgt = working_digits();
  const Rational deg(
      BigInt::pow(BigInt(p), static_cast<unsigned long>(spec.n - 1)) +
      BigInt(1));
  out.chern_integral = deg * rep.volC_K;
  out.height_K = rep.volHat_K;
  out.height_hodge =
      rep.volHat_hodge_SV +
      Real(1 - spec.n, dgt) *
          (l_dlog_at_0(spec.field) + log(Real(spec.field.D, dgt)) / Real(2, dgt)) *
          Real::from_rational(rep.volC_K, dgt);
  return out;
}

}  // namespace shv
