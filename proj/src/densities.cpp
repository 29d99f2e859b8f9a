#include "shv/densities.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "shv/errors.hpp"
#include "shv/kernels.hpp"
#include "shv/numtheory.hpp"

namespace shv {

namespace {

long pow_check(long p, int nu) {
  long c = 1;
  for (int i = 0; i < nu; ++i) {
    if (c > (1L << 40) / p) {
      throw CalcError(ErrKind::BadInput, "prime power too large");
    }
    c *= p;
  }
  return c;
}

// Shared cache of the c-th roots of unity e(k/c) at a given precision.
using RootTable = std::vector<ComplexVal>;

std::shared_ptr<const RootTable> root_table(long c, int digits) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const RootTable>> cache;
  const std::pair<long, int> key{c, digits};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<RootTable>();
  table->reserve(static_cast<size_t>(c));
  for (long k = 0; k < c; ++k) {
    table->push_back(ComplexVal::unit_root(k, c, digits));
  }
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 6) cache.clear();
  cache[key] = table;
  return table;
}

// alpha = v_p(gcd(a, p^nu)) and the unit part a' (meaningful when alpha < nu).
void split_a(long a, long p, int nu, long c, int* alpha, long* aprime) {
  long r = ((a % c) + c) % c;
  if (r == 0) {
    *alpha = nu;
    *aprime = 1;
    return;
  }
  int al = 0;
  while (r % p == 0) {
    r /= p;
    ++al;
  }
  *alpha = al;
  *aprime = r;
}

int pow_sign(int sign, long e) { return (sign == -1 && (e & 1)) ? -1 : 1; }

// Multiply an AlgebraicGauss by i^t, t in [0,4).
AlgebraicGauss times_i_pow(const AlgebraicGauss& g, long t) {
  AlgebraicGauss r = g;
  switch (((t % 4) + 4) % 4) {
    case 0:
      break;
    case 1:  // (x + iy) * i = -y + ix
      r.re1 = Rational(-1) * g.im1;
      r.im1 = g.re1;
      r.reS = Rational(-1) * g.imS;
      r.imS = g.reS;
      break;
    case 2:
      r.re1 = Rational(-1) * g.re1;
      r.im1 = Rational(-1) * g.im1;
      r.reS = Rational(-1) * g.reS;
      r.imS = Rational(-1) * g.imS;
      break;
    case 3:
      r.re1 = g.im1;
      r.im1 = Rational(-1) * g.re1;
      r.reS = g.imS;
      r.imS = Rational(-1) * g.reS;
      break;
  }
  return r;
}

}  // namespace

ResidueRing::ResidueRing(long D, long c) : D_(D), c_(c) {
  if (c < 1) throw CalcError(ErrKind::BadInput, "modulus must be positive");
  if (D % 4 != 3) {
    throw CalcError(ErrKind::BadInput, "(1+D)/4 must be integral");
  }
  q_ = ((1 + D) / 4) % c;
}

long ResidueRing::norm(long x, long y) const {
  const __int128 v = static_cast<__int128>(x) * x +
                     static_cast<__int128>(x) * y +
                     static_cast<__int128>(q_) * y % c_ * y;
  return static_cast<long>(((v % c_) + c_) % c_);
}

std::vector<int64_t> ResidueRing::norm_histogram(long unit) const {
  if (c_ > 4096) {
    throw CalcError(ErrKind::BadInput,
                    "histogram enumeration capped at modulus 4096");
  }
  std::vector<int64_t> h(static_cast<size_t>(c_), 0);
  for (long x = 0; x < c_; ++x) {
    for (long y = 0; y < c_; ++y) {
      const long t =
          static_cast<long>(static_cast<__int128>(unit) * norm(x, y) % c_);
      ++h[static_cast<size_t>(t)];
    }
  }
  return h;
}

AlgebraicGauss AlgebraicGauss::rational(const Rational& r, long p) {
  AlgebraicGauss g;
  g.re1 = r;
  g.p = p;
  return g;
}

AlgebraicGauss AlgebraicGauss::mul(const AlgebraicGauss& o) const {
  if (p != o.p) throw CalcError(ErrKind::BadInput, "mixed sqrt(p) rings");
  // (A + B sqrt p)(C + E sqrt p) with Gaussian-rational A, B, C, E.
  const Rational P(p);
  AlgebraicGauss r;
  r.p = p;
  // Gaussian products: (re1, im1) * (o.re1, o.im1) etc.
  r.re1 = re1 * o.re1 - im1 * o.im1 + P * (reS * o.reS - imS * o.imS);
  r.im1 = re1 * o.im1 + im1 * o.re1 + P * (reS * o.imS + imS * o.reS);
  r.reS = re1 * o.reS - im1 * o.imS + reS * o.re1 - imS * o.im1;
  r.imS = re1 * o.imS + im1 * o.reS + reS * o.im1 + imS * o.re1;
  return r;
}

bool AlgebraicGauss::operator==(const AlgebraicGauss& o) const {
  return p == o.p && re1 == o.re1 && im1 == o.im1 && reS == o.reS &&
         imS == o.imS;
}

ComplexVal AlgebraicGauss::to_complex(int digits) const {
  const int dgt = digits > 0 ? digits : working_digits();
  const Real sp = sqrt(Real(p, dgt));
  ComplexVal z = ComplexVal::zero(dgt);
  z.re = Real::from_rational(re1, dgt) + Real::from_rational(reS, dgt) * sp;
  z.im = Real::from_rational(im1, dgt) + Real::from_rational(imS, dgt) * sp;
  return z;
}

AlgebraicGauss gauss_sum_G_exact(long a, long p, int nu, long D) {
  if (nu < 1) throw CalcError(ErrKind::BadInput, "exponent must be >= 1");
  if (!is_prime(p)) throw CalcError(ErrKind::BadInput, "p must be prime");
  const long c = pow_check(p, nu);
  int alpha = 0;
  long aprime = 1;
  split_a(a, p, nu, c, &alpha, &aprime);
  AlgebraicGauss g;
  g.p = p;
  if (alpha == nu) {
    g.re1 = Rational(BigInt::pow(BigInt(p), 2ul * static_cast<unsigned>(nu)),
                     BigInt(1));
    return g;
  }
  const BigInt mag =
      BigInt::pow(BigInt(p), static_cast<unsigned long>(alpha + nu));
  if (D % p != 0) {
    const int s = pow_sign(static_cast<int>(kronecker(-D, p)), nu - alpha);
    g.re1 = Rational(s) * Rational(mag, BigInt(1));
    return g;
  }
  // Ramified case: eps_p * p^(alpha+nu+1/2) * (a'/p) * (D'/p)^(nu-alpha-1).
  const long Dp = D / p;
  int s = static_cast<int>(kronecker(aprime, p)) *
          pow_sign(static_cast<int>(kronecker(Dp, p)), nu - alpha - 1);
  const Rational coef = Rational(s) * Rational(mag, BigInt(1));
  if (eps4(p) == 0) {
    g.reS = coef;
  } else {
    g.imS = coef;
  }
  return g;
}

ComplexVal gauss_sum_G(long a, long p, int nu, long D, int digits) {
  return gauss_sum_G_exact(a, p, nu, D).to_complex(digits);
}

ComplexVal gauss_sum_G_bruteforce(long a, long p, int nu, long D, int digits) {
  const int dgt = digits > 0 ? digits : working_digits();
  const long c = pow_check(p, nu);
  ResidueRing ring(D, c);
  const auto hist = ring.norm_histogram(1);
  const auto roots = root_table(c, dgt);
  ComplexVal sum = ComplexVal::zero(dgt);
  for (long t = 0; t < c; ++t) {
    if (hist[static_cast<size_t>(t)] == 0) continue;
    const long idx = static_cast<long>(static_cast<__int128>(a) * t % c);
    const Real w(hist[static_cast<size_t>(t)], dgt);
    const ComplexVal& r = (*roots)[static_cast<size_t>(((idx % c) + c) % c)];
    sum.re = sum.re + w * r.re;
    sum.im = sum.im + w * r.im;
  }
  return sum;
}

std::vector<long> local_units(const SpaceSpec& spec, long p) {
  if (spec.field.D % p == 0) return local_gram(spec, p).units;
  return std::vector<long>(static_cast<size_t>(spec.n), 1);
}

AlgebraicGauss lattice_gauss_sum_exact(long a, long p, int nu,
                                       const std::vector<long>& units, long D) {
  AlgebraicGauss g = AlgebraicGauss::rational(Rational(1), p);
  for (long u : units) {
    const long au = static_cast<long>(
        static_cast<__int128>(a) * u % pow_check(p, nu));
    g = g.mul(gauss_sum_G_exact(au, p, nu, D));
  }
  return g;
}

ComplexVal lattice_gauss_sum(long a, long p, int nu,
                             const std::vector<long>& units, long D,
                             int digits) {
  return lattice_gauss_sum_exact(a, p, nu, units, D).to_complex(digits);
}

AlgebraicGauss lattice_gauss_sum_closed(long a, long p, int nu,
                                        const std::vector<long>& units,
                                        long D) {
  const long n = static_cast<long>(units.size());
  const long c = pow_check(p, nu);
  int alpha = 0;
  long aprime = 1;
  split_a(a, p, nu, c, &alpha, &aprime);
  AlgebraicGauss g;
  g.p = p;
  if (alpha == nu) {
    g.re1 = Rational(
        BigInt::pow(BigInt(p), 2ul * static_cast<unsigned long>(n) *
                                   static_cast<unsigned>(nu)),
        BigInt(1));
    return g;
  }
  const BigInt mag = BigInt::pow(
      BigInt(p), static_cast<unsigned long>(n) *
                     static_cast<unsigned long>(alpha + nu));
  if (D % p != 0) {
    const int s =
        pow_sign(static_cast<int>(kronecker(-D, p)), n * (nu - alpha));
    g.re1 = Rational(s) * Rational(mag, BigInt(1));
    return g;
  }
  // eps_p^n inv_p p^(n alpha + n nu + n/2) (a'/p)^n (D'/p)^(n(nu-alpha-1)).
  int inv = 1;
  for (long u : units) inv *= static_cast<int>(kronecker(u, p));
  const long Dp = D / p;
  int s = inv * pow_sign(static_cast<int>(kronecker(aprime, p)), n) *
          pow_sign(static_cast<int>(kronecker(Dp, p)), n * (nu - alpha - 1));
  Rational coef = Rational(s) * Rational(mag, BigInt(1));
  // p^(n/2): integral for even n, p^((n-1)/2) sqrt(p) for odd n.
  coef = coef * Rational(BigInt::pow(BigInt(p),
                                     static_cast<unsigned long>(n / 2)),
                         BigInt(1));
  if (n % 2 == 0) {
    g.re1 = coef;
  } else {
    g.reS = coef;
  }
  return times_i_pow(g, n * eps4(p));
}

ComplexVal lattice_gauss_sum_bruteforce(long a, long p, int nu,
                                        const std::vector<long>& units, long D,
                                        int digits) {
  const int dgt = digits > 0 ? digits : working_digits();
  const long c = pow_check(p, nu);
  ResidueRing ring(D, c);
  // Fold per-coordinate histograms: exact integer counts of norm values.
  std::vector<int64_t> acc(static_cast<size_t>(c), 0);
  acc[0] = 1;
  for (long u : units) {
    const auto h = ring.norm_histogram(u);
    std::vector<int64_t> next(static_cast<size_t>(c), 0);
    for (long s = 0; s < c; ++s) {
      if (acc[static_cast<size_t>(s)] == 0) continue;
      for (long t = 0; t < c; ++t) {
        next[static_cast<size_t>((s + t) % c)] +=
            acc[static_cast<size_t>(s)] * h[static_cast<size_t>(t)];
      }
    }
    acc.swap(next);
  }
  const auto roots = root_table(c, dgt);
  ComplexVal sum = ComplexVal::zero(dgt);
  for (long t = 0; t < c; ++t) {
    if (acc[static_cast<size_t>(t)] == 0) continue;
    const long idx = static_cast<long>(static_cast<__int128>(a) * t % c);
    const Real w(acc[static_cast<size_t>(t)], dgt);
    const ComplexVal& r = (*roots)[static_cast<size_t>(((idx % c) + c) % c)];
    sum.re = sum.re + w * r.re;
    sum.im = sum.im + w * r.im;
  }
  return sum;
}

BigInt rep_number(long m, long p, int nu, const SpaceSpec& spec) {
  if (nu < 1) throw CalcError(ErrKind::BadInput, "exponent must be >= 1");
  const int dgt = working_digits();
  const long c = pow_check(p, nu);
  const long D = spec.field.D;
  const auto units = local_units(spec, p);
  const bool ramified_odd = (D % p == 0) && (spec.n % 2 == 1);
  // G_L(a, c) depends on a only through alpha = v_p(a) and, in the ramified
  // odd-rank case, the Legendre symbol of the unit part.  Precompute both.
  std::vector<ComplexVal> g_plus, g_minus;
  for (int al = 0; al <= nu; ++al) {
    const long a_rep = (al == nu) ? 0 : pow_check(p, al);
    g_plus.push_back(
        lattice_gauss_sum_closed(a_rep, p, nu, units, D).to_complex(dgt));
    if (ramified_odd && al < nu) {
      // Representative with non-residue unit part.
      long u = 2;
      while (kronecker(u, p) != -1) ++u;
      const long a_nr =
          static_cast<long>(static_cast<__int128>(a_rep) * u % c);
      g_minus.push_back(
          lattice_gauss_sum_closed(a_nr, p, nu, units, D).to_complex(dgt));
    } else {
      g_minus.push_back(g_plus.back());
    }
  }
  const auto roots = root_table(c, dgt);
  ComplexVal sum = ComplexVal::zero(dgt);
  const long mm = ((m % c) + c) % c;
  for (long a = 0; a < c; ++a) {
    int alpha = 0;
    long aprime = 1;
    split_a(a, p, nu, c, &alpha, &aprime);
    const ComplexVal& g =
        (ramified_odd && alpha < nu && kronecker(aprime, p) == -1)
            ? g_minus[static_cast<size_t>(alpha)]
            : g_plus[static_cast<size_t>(alpha)];
    const long idx =
        (c - static_cast<long>(static_cast<__int128>(a) * mm % c)) % c;
    const ComplexVal& r = (*roots)[static_cast<size_t>(idx)];
    sum.re = sum.re + g.re * r.re - g.im * r.im;
    sum.im = sum.im + g.re * r.im + g.im * r.re;
  }
  const Real inv_c = Real(1, dgt) / Real(c, dgt);
  const Real re = sum.re * inv_c;
  const Real im = sum.im * inv_c;
  const Real tol = Real::pow10(-20, dgt);
  if (!(abs(im) < tol)) {
    throw CalcError(ErrKind::NonIntegral,
                    "representation-number inversion has imaginary residue");
  }
  BigInt N = re.round_to_integer(tol);  // throws NonIntegral past tolerance
  if (N.sgn() < 0) {
    throw CalcError(ErrKind::NonIntegral,
                    "representation number came out negative");
  }
  return N;
}

BigInt rep_number_oracle(long m, long p, int nu, const SpaceSpec& spec) {
  const long c = pow_check(p, nu);
  const long D = spec.field.D;
  ResidueRing ring(D, c);
  std::vector<int64_t> acc(static_cast<size_t>(c), 0);
  acc[0] = 1;
  for (long u : local_units(spec, p)) {
    const auto h = ring.norm_histogram(u);
    std::vector<int64_t> next(static_cast<size_t>(c), 0);
    for (long s = 0; s < c; ++s) {
      if (acc[static_cast<size_t>(s)] == 0) continue;
      for (long t = 0; t < c; ++t) {
        next[static_cast<size_t>((s + t) % c)] +=
            acc[static_cast<size_t>(s)] * h[static_cast<size_t>(t)];
      }
    }
    acc.swap(next);
  }
  return BigInt(acc[static_cast<size_t>(((m % c) + c) % c)]);
}

BigInt rep_number_pair_scan(long m, long p, int nu, const SpaceSpec& spec) {
  if (spec.n != 2) {
    throw CalcError(ErrKind::BadInput, "pair scan is the n = 2 route");
  }
  const long c = pow_check(p, nu);
  if (c > 128) {
    throw CalcError(ErrKind::BadInput, "pair scan capped at modulus 128");
  }
  ResidueRing ring(spec.field.D, c);
  const auto units = local_units(spec, p);
  std::vector<std::vector<uint32_t>> lists;
  for (long u : units) {
    std::vector<uint32_t> vals;
    vals.reserve(static_cast<size_t>(c * c));
    for (long x = 0; x < c; ++x) {
      for (long y = 0; y < c; ++y) {
        vals.push_back(static_cast<uint32_t>(
            static_cast<__int128>(u) * ring.norm(x, y) % c));
      }
    }
    lists.push_back(std::move(vals));
  }
  const uint32_t target = static_cast<uint32_t>(((m % c) + c) % c);
  return BigInt(static_cast<long>(count_pairs_sum_mod(
      lists[0].data(), lists[0].size(), lists[1].data(), lists[1].size(),
      static_cast<uint32_t>(c), target)));
}

BigInt rep_number_shifted_oracle(
    long m, long p, int nu, const SpaceSpec& spec,
    const std::vector<std::pair<long, long>>& shift) {
  const long c = pow_check(p, nu);
  if (spec.n > 2 || c > 49) {
    throw CalcError(ErrKind::BadInput,
                    "shifted enumeration limited to rank <= 2, modulus <= 49");
  }
  if (shift.size() != static_cast<size_t>(spec.n)) {
    throw CalcError(ErrKind::BadInput, "one shift pair per coordinate");
  }
  ResidueRing ring(spec.field.D, c);
  const auto units = local_units(spec, p);
  std::vector<int64_t> acc(static_cast<size_t>(c), 0);
  acc[0] = 1;
  for (size_t i = 0; i < units.size(); ++i) {
    std::vector<int64_t> h(static_cast<size_t>(c), 0);
    for (long x = 0; x < c; ++x) {
      for (long y = 0; y < c; ++y) {
        const long t = static_cast<long>(
            static_cast<__int128>(units[i]) *
            ring.norm(x + shift[i].first, y + shift[i].second) % c);
        ++h[static_cast<size_t>(t)];
      }
    }
    std::vector<int64_t> next(static_cast<size_t>(c), 0);
    for (long s = 0; s < c; ++s) {
      if (acc[static_cast<size_t>(s)] == 0) continue;
      for (long t = 0; t < c; ++t) {
        next[static_cast<size_t>((s + t) % c)] +=
            acc[static_cast<size_t>(s)] * h[static_cast<size_t>(t)];
      }
    }
    acc.swap(next);
  }
  return BigInt(acc[static_cast<size_t>(((m % c) + c) % c)]);
}

namespace {

// Multiply two exact polynomials in X.
std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

Rational p_pow(long p, long e) {
  return Rational(BigInt::pow(BigInt(p), static_cast<unsigned long>(e)),
                  BigInt(1));
}

}  // namespace

Rational EulerFactorPoly::eval_rational(const Rational& X) const {
  Rational r(0);
  for (size_t j = coeffs.size(); j-- > 0;) {
    r = r * X + coeffs[j];
  }
  return r;
}

Real EulerFactorPoly::eval_real(const Real& X) const {
  Real r(0, X.digits());
  for (size_t j = coeffs.size(); j-- > 0;) {
    r = r * X + Real::from_rational(coeffs[j], X.digits());
  }
  return r;
}

Jet EulerFactorPoly::eval_jet(const Jet& X) const {
  const int dgt = X.val.digits();
  Jet r = Jet::constant(Real(0, dgt));
  for (size_t j = coeffs.size(); j-- > 0;) {
    r = r * X + Jet::constant(Real::from_rational(coeffs[j], dgt));
  }
  return r;
}

EulerFactorPoly euler_factor(const SpaceSpec& spec, long p, long m) {
  if (m == 0) {
    throw CalcError(ErrKind::BadInput, "Euler factor defined for nonzero m");
  }
  if (!is_prime(p)) throw CalcError(ErrKind::BadInput, "p must be prime");
  validate_space(spec);
  const long n = spec.n;
  const long D = spec.field.D;
  long beta = 0;
  long mprime = m < 0 ? -m : m;
  long msign = m < 0 ? -1 : 1;
  while (mprime % p == 0) {
    mprime /= p;
    ++beta;
  }
  mprime *= msign;

  EulerFactorPoly out;
  out.p = p;
  if (n % 2 == 0) {
    if (D % p != 0) {
      // (1 - p^(n-1) X) * sum_{g<=beta} p^(n g) X^g
      std::vector<Rational> lin{Rational(1), Rational(-1) * p_pow(p, n - 1)};
      std::vector<Rational> geo;
      for (long g = 0; g <= beta; ++g) geo.push_back(p_pow(p, n * g));
      out.coeffs = poly_mul(lin, geo);
    } else {
      // 1 - w p^(n-1) X + w (1 - p^(n-1) X) sum_{g=1..beta} p^(n g) X^g
      const int halfsign =
          (((n / 2) % 2 == 1) ? static_cast<int>(kronecker(-1, p)) : 1);
      const Rational w =
          Rational(halfsign * spec.inv.at(p)) * p_pow(p, n / 2);
      std::vector<Rational> acc{Rational(1), Rational(-1) * w * p_pow(p, n - 1)};
      if (beta >= 1) {
        std::vector<Rational> lin{Rational(1), Rational(-1) * p_pow(p, n - 1)};
        std::vector<Rational> geo(static_cast<size_t>(beta + 1), Rational(0));
        for (long g = 1; g <= beta; ++g) {
          geo[static_cast<size_t>(g)] = w * p_pow(p, n * g);
        }
        const auto tail = poly_mul(lin, geo);
        acc.resize(std::max(acc.size(), tail.size()), Rational(0));
        for (size_t j = 0; j < tail.size(); ++j) acc[j] = acc[j] + tail[j];
      }
      out.coeffs = std::move(acc);
    }
  } else {
    if (D % p != 0) {
      const int chi = static_cast<int>(kronecker(-D, p));
      std::vector<Rational> lin{Rational(1),
                                Rational(-chi) * p_pow(p, n - 1)};
      std::vector<Rational> geo;
      int cg = 1;
      for (long g = 0; g <= beta; ++g) {
        geo.push_back(Rational(cg) * p_pow(p, n * g));
        cg *= chi;
      }
      out.coeffs = poly_mul(lin, geo);
    } else {
      // 1 + inv_p (-1/p)^((n-1)/2) (D'/p)^beta (m'/p) p^((beta+3/2)n - 1/2) X^(beta+1)
      const long Dp = D / p;
      int s = spec.inv.at(p);
      if (((n - 1) / 2) % 2 == 1) s *= static_cast<int>(kronecker(-1, p));
      s *= pow_sign(static_cast<int>(kronecker(Dp, p)), beta);
      s *= static_cast<int>(kronecker(mprime, p));
      // (beta + 3/2) n - 1/2 = beta n + (3n - 1)/2, integral for odd n.
      const long e = beta * n + (3 * n - 1) / 2;
      out.coeffs.assign(static_cast<size_t>(beta + 2), Rational(0));
      out.coeffs[0] = Rational(1);
      out.coeffs[static_cast<size_t>(beta + 1)] = Rational(s) * p_pow(p, e);
    }
  }
  return out;
}

Real euler_factor_series(const SpaceSpec& spec, long p, long m, long s,
                         int nu_max) {
  const int dgt = working_digits();
  const Real P(p, dgt);
  const Real Xs = powi(P, -s);
  Real sum(1, dgt);  // N_m(p^0) = 1
  Real Xpow = Xs;
  for (int nu = 1; nu <= nu_max; ++nu) {
    sum = sum + Real::from_bigint(rep_number(m, p, nu, spec), dgt) * Xpow;
    Xpow = Xpow * Xs;
  }
  return (Real(1, dgt) - powi(P, 2 * spec.n - 1 - s)) * sum;
}

int chi_F(const SpaceSpec& spec, long p) {
  if (!is_prime(p)) throw CalcError(ErrKind::BadInput, "p must be prime");
  if (spec.n % 2 == 0) return 1;
  return static_cast<int>(kronecker(p, spec.field.D));
}

}  // namespace shv
