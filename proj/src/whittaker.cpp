#include "shv/whittaker.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "shv/errors.hpp"
#include "shv/numtheory.hpp"

namespace shv {

namespace {

constexpr int kGaussOrder = 12;

struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1], positive half mirrored
  std::vector<Real> weights;
};

// Legendre P_k(x) and its derivative by the three-term recurrence.
std::pair<Real, Real> legendre_with_deriv(int k, const Real& x) {
  const int dgt = x.digits();
  Real pm1(1, dgt), p = x;
  for (int j = 2; j <= k; ++j) {
    const Real pj = (Real(2 * j - 1, dgt) * x * p - Real(j - 1, dgt) * pm1) /
                    Real(j, dgt);
    pm1 = p;
    p = pj;
  }
  // P_k'(x) = k (x P_k - P_{k-1}) / (x^2 - 1)
  const Real dp = Real(k, dgt) * (x * p - pm1) / (x * x - Real(1, dgt));
  return {p, dp};
}

std::shared_ptr<const GaussRule> gauss_rule(int dgt) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GaussRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(dgt);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<GaussRule>();
  const Real one(1, dgt);
  const Real pi = Real::pi(dgt);
  const Real stop = Real::pow10(-(dgt - 4), dgt);
  for (int i = 1; i <= kGaussOrder; ++i) {
    // Newton from the Chebyshev-angle initial guess.
    Real x = cos(pi * (Real(4 * i - 1, dgt) / Real(4 * kGaussOrder + 2, dgt)));
    for (int iter = 0; iter < 200; ++iter) {
      const auto [p, dp] = legendre_with_deriv(kGaussOrder, x);
      const Real step = p / dp;
      x = x - step;
      if (abs(step) < stop) break;
    }
    const auto [p, dp] = legendre_with_deriv(kGaussOrder, x);
    (void)p;
    rule->nodes.push_back(x);
    rule->weights.push_back(Real(2, dgt) / ((one - x * x) * dp * dp));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[dgt] = rule;
  return rule;
}

struct Segment {
  Real lo, hi, value;
};

Real gauss_segment(const std::function<Real(const Real&)>& f, const Real& lo,
                   const Real& hi, const GaussRule& rule, long* evals) {
  const int dgt = lo.digits();
  const Real mid = (lo + hi) / Real(2, dgt);
  const Real half = (hi - lo) / Real(2, dgt);
  Real acc(0, dgt);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    acc = acc + rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  *evals += static_cast<long>(rule.nodes.size());
  return acc * half;
}

}  // namespace

Real adaptive_integrate(const std::function<Real(const Real&)>& f,
                        const Real& lo, const Real& hi,
                        const QuadratureOptions& opt) {
  const int dgt = working_digits();
  const auto rule = gauss_rule(dgt);
  long evals = 0;
  const Real total_len = hi - lo;
  if (!(Real(0, dgt) < total_len)) return Real(0, dgt);
  const Real rel_tol = Real::pow10(-opt.rel_digits, dgt);
  const Real abs_floor = Real::pow10(-(dgt + 5), dgt);

  std::vector<Segment> stack;
  stack.push_back({lo, hi, gauss_segment(f, lo, hi, *rule, &evals)});
  Real result(0, dgt);
  Real magnitude = abs(stack.back().value);

  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    if (evals > opt.max_evals) {
      throw CalcError(ErrKind::QuadratureFail,
                      "quadrature budget exhausted before tolerance");
    }
    const Real mid = (seg.lo + seg.hi) / Real(2, dgt);
    const Real left = gauss_segment(f, seg.lo, mid, *rule, &evals);
    const Real right = gauss_segment(f, mid, seg.hi, *rule, &evals);
    const Real refined = left + right;
    if (abs(refined) > magnitude) magnitude = abs(refined);
    // Local share of the global tolerance, in proportion to segment length.
    const Real share = (seg.hi - seg.lo) / total_len;
    const Real allow = (rel_tol * magnitude + abs_floor) * share;
    if (abs(refined - seg.value) < allow) {
      result = result + refined;
    } else {
      stack.push_back({seg.lo, mid, left});
      stack.push_back({mid, seg.hi, right});
    }
  }
  return result;
}

namespace {

// Integral route for U(a, b, z), valid for a > 0.  For a >= 1 the defining
// integral Gamma(a) U = Int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt is used
// directly.  For 0 < a < 1 integrating by parts twice removes the unbounded
// endpoint factor t^{a-1} and tames its derivatives (after a single pass the
// bisection error near t = 0 decays no faster than the error budget):
//   U = 1/Gamma(a+2) Int_0^inf t^{a+1} e^{-zt} (1+t)^{c-2}
//                      (c(c-1) - 2zc(1+t) + z^2 (1+t)^2) dt,   c = b - a - 1,
// which stays well conditioned as a -> 0.
Real hyper_U_positive(const Real& a, const Real& b, const Real& z,
                      const QuadratureOptions& opt) {
  const int dgt = working_digits();
  const Real one(1, dgt);
  const bool parts = a < one;
  const Real c = b - a - one;
  // Power growth of the non-exponential part, for the tail cutoff.
  const double pow_d = (parts ? a.to_double() + 1.0
                              : std::max(0.0, a.to_double() - 1.0)) +
                       std::max(0.0, c.to_double());
  const double zd = z.to_double();
  const double log_tol = (opt.rel_digits + 8) * 2.302585092994046 +
                         2.0 * std::log(1.0 + zd);  // margin under e^{-zT}
  double T = std::max(2.0, 2.0 * (pow_d + 1.0) / zd);
  for (int i = 0; i < 4; ++i) {
    T = std::max(T, (log_tol + pow_d * std::log(std::max(T, 2.0))) / zd);
  }
  const Real upper = Real::parse(std::to_string(T), dgt);

  std::function<Real(const Real&)> f;
  const Real cc1 = c * (c - one);
  const Real two_zc = Real(2, dgt) * z * c;
  if (parts) {
    f = [&](const Real& t) -> Real {
      if (!(Real(0, dgt) < t)) return Real(0, dgt);  // t^{a+1} -> 0 at 0+
      const Real w = one + t;
      return pow(t, a + one) * exp(Real(0, dgt) - z * t) *
             pow(w, c - Real(2, dgt)) * (cc1 - two_zc * w + z * z * w * w);
    };
  } else {
    f = [&](const Real& t) -> Real {
      if (!(Real(0, dgt) < t)) {
        // t^(a-1) at t = 0: zero for a > 1, one for a = 1.
        return a == one ? Real(1, dgt) : Real(0, dgt);
      }
      return exp(Real(0, dgt) - z * t) * pow(t, a - one) * pow(one + t, c);
    };
  }
  const Real integral = adaptive_integrate(f, Real(0, dgt), upper, opt);
  if (parts) {
    return integral / gamma_fn(a + Real(2, dgt));
  }
  return integral / gamma_fn(a);
}

}  // namespace

Real hyper_U(const Real& a, const Real& b, const Real& z,
             const QuadratureOptions& opt) {
  const int dgt = working_digits();
  if (!(Real(0, dgt) < z)) {
    throw CalcError(ErrKind::BadInput, "U integral needs z > 0");
  }
  if (a.is_zero()) return Real(1, dgt);
  if (Real(0, dgt) < a) return hyper_U_positive(a, b, z, opt);
  // Downward recurrence U(a-1,b,z) = -(b-2a-z) U(a,b,z) - a(a-b+1) U(a+1,b,z)
  // starting from the two smallest shifts with positive first argument.
  long k = 1;
  while (!(Real(0, dgt) < a + Real(k, dgt))) ++k;
  Real hi = hyper_U(a + Real(k + 1, dgt), b, z, opt);   // U at a + k + 1
  Real lo_v = hyper_U_positive(a + Real(k, dgt), b, z, opt);  // U at a + k
  for (long j = k; j >= 1; --j) {
    const Real aj = a + Real(j, dgt);  // recurrence anchored at a_j
    const Real down = (Real(0, dgt) - (b - Real(2, dgt) * aj - z)) * lo_v -
                      aj * (aj - b + Real(1, dgt)) * hi;
    hi = lo_v;
    lo_v = down;
  }
  return lo_v;
}

Real whittaker_W(long m, long n, const Real& s, const Real& v,
                 const QuadratureOptions& opt) {
  const int dgt = working_digits();
  if (m == 0) throw CalcError(ErrKind::BadInput, "m must be nonzero");
  if (!(Real(0, dgt) < v)) throw CalcError(ErrKind::BadInput, "v must be > 0");
  const Real z = Real(4, dgt) * Real::pi(dgt) * Real(m < 0 ? -m : m, dgt) * v;
  const Real half = Real::from_rational(Rational(1, 2), dgt);
  const Real kappa = Real(m > 0 ? n : -n, dgt) / Real(2, dgt);
  const Real a = half + s - kappa;
  const Real b = Real(1, dgt) + Real(2, dgt) * s;
  const Real U = hyper_U(a, b, z, opt);
  // (4 pi |m| v)^{-n/2} e^{2 pi m v} e^{-z/2} z^{1/2+s} U: the power of z
  // collapses to z^{1/2 + s - n/2}; the exponentials collapse to e^0 for
  // m > 0 and e^{-z} for m < 0.
  const Real zpow = pow(z, half + s - Real(n, dgt) / Real(2, dgt));
  const Real expo = (m > 0) ? Real(1, dgt) : exp(Real(0, dgt) - z);
  return zpow * expo * U;
}

Real whittaker_deriv_s0(long m, long n, const Real& v) {
  const int dgt = working_digits();
  if (m < 1) throw CalcError(ErrKind::BadInput, "closed sum needs m > 0");
  if (n < 2) throw CalcError(ErrKind::BadInput, "closed sum needs n >= 2");
  const Real z = Real(4, dgt) * Real::pi(dgt) * Real(m, dgt) * v;
  Real acc(0, dgt);
  Real zp = z;
  for (long j = 1; j <= n - 1; ++j) {
    const Real coef = Real::from_bigint(
        BigInt::binomial(static_cast<unsigned long>(n - 1),
                         static_cast<unsigned long>(j)) *
            BigInt::factorial(static_cast<unsigned long>(j - 1)),
        dgt);
    acc = acc + coef / zp;
    zp = zp * z;
  }
  return acc;
}

Real whittaker_deriv_quadrature(long m, long n, const Real& v,
                                const QuadratureOptions& opt) {
  const int dgt = working_digits();
  if (m < 1 || n < 2) throw CalcError(ErrKind::BadInput, "needs m > 0, n >= 2");
  const Real z = Real(4, dgt) * Real::pi(dgt) * Real(m, dgt) * v;
  // Int_0^inf e^{-zt} ((1+t)^{n-1} - 1) dt / t; integrand -> (n-1) at t = 0.
  const double zd = z.to_double();
  double T = std::max(2.0, ((opt.rel_digits + 8) * 2.302585092994046 +
                            (n - 1) * std::log(2.0 + 40.0 / zd)) /
                               zd);
  std::function<Real(const Real&)> f = [&](const Real& t) -> Real {
    if (!(Real(0, dgt) < t)) return Real(n - 1, dgt);
    return exp(Real(0, dgt) - z * t) *
           (powi(Real(1, dgt) + t, n - 1) - Real(1, dgt)) / t;
  };
  return adaptive_integrate(f, Real(0, dgt),
                            Real::parse(std::to_string(T), dgt), opt);
}

Real e1_series(const Real& x) {
  const int dgt = working_digits();
  if (!(Real(0, dgt) < x)) throw CalcError(ErrKind::BadInput, "x must be > 0");
  // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
  Real acc = Real(0, dgt) - Real::euler_gamma(dgt) - log(x);
  Real term(1, dgt);  // x^k / k! running
  const Real stop = Real::pow10(-(dgt + 8), dgt);
  for (long k = 1; k < 100000; ++k) {
    term = term * x / Real(k, dgt);
    const Real add = term / Real(k, dgt);
    acc = (k % 2 == 1) ? (acc + add) : (acc - add);
    if (abs(add) < stop * (abs(acc) + Real(1, dgt))) return acc;
  }
  throw CalcError(ErrKind::PrecisionLoss, "E1 series did not converge");
}

Real e1_continued_fraction(const Real& x) {
  const int dgt = working_digits();
  if (!(Real(0, dgt) < x)) throw CalcError(ErrKind::BadInput, "x must be > 0");
  // Lentz evaluation of Gamma(0, x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(...)))
  // with partial numerators -k^2 and denominators x + 2k + 1.
  const Real tiny = Real::pow10(-(dgt + 30), dgt);
  const Real eps = Real::pow10(-(dgt + 8), dgt);
  Real b0 = x + Real(1, dgt);
  Real f = b0, C = b0, Dd(0, dgt);
  for (long k = 1; k < 200000; ++k) {
    const Real ak = Real(-k * k, dgt) * Real(1, dgt);
    const Real bk = x + Real(2 * k + 1, dgt);
    Dd = bk + ak * Dd;
    if (abs(Dd) < tiny) Dd = tiny;
    C = bk + ak / C;
    if (abs(C) < tiny) C = tiny;
    Dd = Real(1, dgt) / Dd;
    const Real delta = C * Dd;
    f = f * delta;
    if (abs(delta - Real(1, dgt)) < eps) {
      return exp(Real(0, dgt) - x) / f;
    }
  }
  throw CalcError(ErrKind::PrecisionLoss, "E1 continued fraction stalled");
}

Real incomplete_gamma_upper(long a, const Real& x) {
  const int dgt = working_digits();
  if (a > 1) throw CalcError(ErrKind::BadInput, "recurrence covers a <= 1");
  if (!(Real(0, dgt) < x)) throw CalcError(ErrKind::BadInput, "x must be > 0");
  const Real emx = exp(Real(0, dgt) - x);
  if (a == 1) return emx;
  Real g = (x < Real::from_rational(Rational(3, 2), dgt)) ? e1_series(x)
                                           : e1_continued_fraction(x);
  // Gamma(a-1, x) = (Gamma(a, x) - x^{a-1} e^{-x}) / (a - 1), downward from 0.
  for (long j = 0; j > a; --j) {
    g = (g - powi(x, j - 1) * emx) / Real(j - 1, dgt);
  }
  return g;
}

Real incomplete_gamma_upper_quadrature(long a, const Real& x,
                                       const QuadratureOptions& opt) {
  const int dgt = working_digits();
  const double xd = x.to_double();
  const double T =
      xd + std::max(4.0, (opt.rel_digits + 10) * 2.302585092994046);
  std::function<Real(const Real&)> f = [&](const Real& t) -> Real {
    return exp(Real(0, dgt) - t) * powi(t, a - 1);
  };
  return adaptive_integrate(f, x, Real::parse(std::to_string(T), dgt), opt);
}

}  // namespace shv
