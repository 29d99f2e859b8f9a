// numtheory.cpp -- implementation of the elementary number-theory layer.

#include "shv/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace shv {

int kronecker(long a, long b) {
  BigInt A(a), B(b);
  return BigInt::kronecker(A, B);
}

bool is_prime(long n) {
  if (n < 2) return false;
  return BigInt::probab_prime(BigInt(n));
}

long next_prime(long n) {
  long m = n + 1;
  while (!is_prime(m)) ++m;
  return m;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw CalcError(ErrKind::BadInput, "factorize needs n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t base = out.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(long n) {
  if (n < 1) throw CalcError(ErrKind::BadInput, "moebius needs n >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int valuation(long n, long p) {
  if (n == 0) throw CalcError(ErrKind::BadInput, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long pow_mod(long a, long e, long m) {
  a %= m;
  if (a < 0) a += m;
  unsigned __int128 acc = 1, base = static_cast<unsigned long>(a);
  while (e > 0) {
    if (e & 1) acc = acc * base % static_cast<unsigned long>(m);
    base = base * base % static_cast<unsigned long>(m);
    e >>= 1;
  }
  return static_cast<long>(acc);
}

long inv_mod(long a, long m) {
  return BigInt::invert_mod(BigInt(a), BigInt(m)).to_long();
}

long pow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r))
      throw CalcError(ErrKind::BadInput, "integer power overflow");
  }
  return r;
}

namespace {

// Splits n = p^alpha * u; returns (alpha, u).
std::pair<int, long> split_valuation(long n, long p) {
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return {a, n};
}

int mod4(long u) { return static_cast<int>(((u % 4) + 4) % 4); }
int mod8(long u) { return static_cast<int>(((u % 8) + 8) % 8); }

}  // namespace

int hilbert_symbol_ll(long a, long b, long p) {
  if (a == 0 || b == 0)
    throw CalcError(ErrKind::BadInput, "hilbert symbol needs nonzero entries");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (p < 2 || !is_prime(p))
    throw CalcError(ErrKind::BadPrime, "hilbert symbol place must be prime");
  if (p == 2) {
    auto [alpha, u] = split_valuation(a, 2);
    auto [beta, v] = split_valuation(b, 2);
    // (-1)^{eps(u)eps(v) + alpha*omega(v) + beta*omega(u)} with
    // eps(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2.
    int eps_u = (mod4(u) == 3) ? 1 : 0;
    int eps_v = (mod4(v) == 3) ? 1 : 0;
    int om_u = (mod8(u) == 3 || mod8(u) == 5) ? 1 : 0;
    int om_v = (mod8(v) == 3 || mod8(v) == 5) ? 1 : 0;
    int e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return (e % 2 == 0) ? 1 : -1;
  }
  auto [alpha, u] = split_valuation(a, p);
  auto [beta, v] = split_valuation(b, p);
  // (-1)^{alpha*beta*(p-1)/2} (u|p)^beta (v|p)^alpha.
  int r = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) r = -r;
  if (beta & 1) r *= kronecker(u, p);
  if (alpha & 1) r *= kronecker(v, p);
  return r;
}

int hilbert_symbol(const Rational& a, const Rational& b, long p) {
  if (a.is_zero() || b.is_zero())
    throw CalcError(ErrKind::BadInput, "hilbert symbol needs nonzero entries");
  // (a,b)_p only depends on square classes, so replace n/d by n*d.
  BigInt an = a.num() * a.den();
  BigInt bn = b.num() * b.den();
  if (p == 0) return (an.sgn() < 0 && bn.sgn() < 0) ? -1 : 1;
  if (p < 2 || !is_prime(p))
    throw CalcError(ErrKind::BadPrime, "hilbert symbol place must be prime");
  BigInt P(p);
  auto [ua, alpha] = BigInt::remove_factor(an, P);
  auto [ub, beta] = BigInt::remove_factor(bn, P);
  if (p == 2) {
    // Canonical residues in [0,8) encode the square class of the odd parts.
    long u = BigInt::mod(ua, BigInt(8)).to_long();
    long v = BigInt::mod(ub, BigInt(8)).to_long();
    int eps_u = (u % 4 == 3) ? 1 : 0;
    int eps_v = (v % 4 == 3) ? 1 : 0;
    int om_u = (u == 3 || u == 5) ? 1 : 0;
    int om_v = (v == 3 || v == 5) ? 1 : 0;
    long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return (e % 2 == 0) ? 1 : -1;
  }
  int r = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) r = -r;
  if (beta & 1) r *= BigInt::kronecker(ua, P);
  if (alpha & 1) r *= BigInt::kronecker(ub, P);
  return r;
}

int hilbert_symbol_oracle(long a, long b, long p) {
  if (a == 0 || b == 0)
    throw CalcError(ErrKind::BadInput, "hilbert symbol needs nonzero entries");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  // Normalize within square classes so valuations stay small: strip p^2
  // factors, then if both entries have valuation 1 use (a,b) = (a,-ab) to
  // clear the second one.
  auto strip = [&](long n) {
    while (n % (p * p) == 0) n /= p * p;
    return n;
  };
  a = strip(a);
  b = strip(b);
  if (a % p == 0 && b % p == 0) b = strip(-a * b);
  int vab = valuation(a, p) + valuation(b, p) + (p == 2 ? 2 : 0);
  int k = vab + 3;
  long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  // Squares modulo p^k.
  std::vector<char> sq(static_cast<size_t>(pk), 0);
  for (long z = 0; z < pk; ++z)
    sq[static_cast<size_t>(
        static_cast<long>((static_cast<unsigned __int128>(z) * z) %
                          static_cast<unsigned long>(pk)))] = 1;
  auto rmod = [&](long n) {
    long r = n % pk;
    return r < 0 ? r + pk : r;
  };
  long am = rmod(a), bm = rmod(b);
  for (long x = 0; x < pk; ++x) {
    unsigned __int128 ax2 =
        static_cast<unsigned __int128>(am) * x % pk * x % pk;
    for (long y = 0; y < pk; ++y) {
      unsigned __int128 q =
          (ax2 + static_cast<unsigned __int128>(bm) * y % pk * y) %
          static_cast<unsigned long>(pk);
      long qv = static_cast<long>(q);
      if (!sq[static_cast<size_t>(qv)]) continue;
      // Primitivity: some coordinate must be a unit.  If x or y is, done;
      // otherwise require z (hence q) to be one.
      if (x % p != 0 || y % p != 0 || qv % p != 0) return 1;
    }
  }
  return -1;
}

namespace {
std::mutex g_bernoulli_mx;
std::vector<Rational> g_bernoulli{Rational(1), Rational(-1, 2)};
}  // namespace

const Rational& bernoulli(int k) {
  if (k < 0) throw CalcError(ErrKind::BadInput, "bernoulli needs k >= 0");
  std::lock_guard<std::mutex> lock(g_bernoulli_mx);
  while (static_cast<int>(g_bernoulli.size()) <= k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0   =>   solve for B_m.
    int m = static_cast<int>(g_bernoulli.size());
    Rational s(0);
    for (int j = 0; j < m; ++j) {
      Rational c(BigInt::binomial(m + 1, j), BigInt(1));
      s += c * g_bernoulli[j];
    }
    g_bernoulli.push_back(-s / Rational(m + 1));
  }
  return g_bernoulli[k];
}

Rational bernoulli_poly(int k, const Rational& x) {
  Rational s(0);
  Rational xp(1);
  // B_k(x) = sum_j C(k,j) B_{k-j} x^j, accumulated with ascending powers.
  for (int j = 0; j <= k; ++j) {
    Rational c(BigInt::binomial(k, j), BigInt(1));
    s += c * bernoulli(k - j) * xp;
    xp *= x;
  }
  return s;
}

Rational harmonic(int k) {
  Rational s(0);
  for (int j = 1; j <= k; ++j) s += Rational(1, j);
  return s;
}

Rational gen_bernoulli(int k, const CharSpec& chi) {
  long f = chi.conductor();
  Rational s(0);
  for (long a = 1; a <= f; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    Rational t = bernoulli_poly(k, Rational(a, f));
    s += (c > 0) ? t : -t;
  }
  return Rational::pow(Rational(f), k - 1) * s;
}

Jet sigma_jet(long m, const Jet& s, const CharSpec& chi) {
  if (m < 1) throw CalcError(ErrKind::BadInput, "sigma needs m >= 1");
  int dgt = s.val.digits();
  Jet acc(Real(0, dgt));
  for (long d : divisors(m)) {
    int c = chi(d);
    if (c == 0) continue;
    Jet t = pow_base(Real(d, dgt), s);
    acc = (c > 0) ? acc + t : acc - t;
  }
  return acc;
}

Rational sigma_exact(long m, long k, const CharSpec& chi) {
  if (m < 1) throw CalcError(ErrKind::BadInput, "sigma needs m >= 1");
  Rational acc(0);
  for (long d : divisors(m)) {
    int c = chi(d);
    if (c == 0) continue;
    Rational t = Rational::pow(Rational(d), k);
    acc += (c > 0) ? t : -t;
  }
  return acc;
}

int eps4(long r) {
  if (r <= 0 || r % 2 == 0)
    throw CalcError(ErrKind::BadInput, "quarter-turn unit needs odd r > 0");
  return (r % 4 == 1) ? 0 : 1;
}

long class_number_forms(long D) {
  // Discriminant -D < 0 with D = 3 mod 4.  Reduced: |B| <= A <= C with
  // B >= 0 whenever |B| = A or A = C; primitive: gcd(A,B,C) = 1.
  long count = 0;
  for (long A = 1; 3 * A * A <= D; ++A) {
    for (long B = -A; B <= A; ++B) {
      long num = B * B + D;
      if (num % (4 * A) != 0) continue;
      long C = num / (4 * A);
      if (C < A) continue;
      if (B < 0 && (-B == A || A == C)) continue;
      long g = std::__gcd(std::__gcd(std::labs(A), std::labs(B)), std::labs(C));
      if (g != 1) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace shv
