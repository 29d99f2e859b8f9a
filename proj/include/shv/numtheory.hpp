// numtheory.hpp -- elementary number theory over machine integers plus exact
// Bernoulli machinery: Kronecker symbols, factorization, Moebius, Hilbert
// symbols (closed p-adic formulas and an independent solubility search),
// Bernoulli numbers/polynomials, generalized Bernoulli numbers attached to a
// quadratic character, divisor sums as jets, and the reduced-forms class
// number counter used as an oracle.
#pragma once

#include <vector>

#include "shv/jet.hpp"
#include "shv/rational.hpp"

namespace shv {

// Kronecker symbol (a|b), full convention (b may be even, negative, or zero).
int kronecker(long a, long b);
bool is_prime(long n);
long next_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);  // n >= 1
std::vector<long> divisors(long n);                   // ascending
int moebius(long n);
int valuation(long n, long p);
long pow_mod(long a, long e, long m);
long inv_mod(long a, long m);
long pow_long(long b, int e);  // small exact power, checked

// Hilbert symbol (a,b)_p over the p-adics; p = 0 denotes the real place.
// Closed formula route.
int hilbert_symbol_ll(long a, long b, long p);
int hilbert_symbol(const Rational& a, const Rational& b, long p);
// Independent route: decide solubility of z^2 = a x^2 + b y^2 by searching
// for a primitive zero modulo a sufficiently deep prime power.
int hilbert_symbol_oracle(long a, long b, long p);

// Bernoulli numbers with B_1 = -1/2; cached, thread-safe.
const Rational& bernoulli(int k);
// Bernoulli polynomial B_k(x).
Rational bernoulli_poly(int k, const Rational& x);
// Exact harmonic number H_k = 1 + 1/2 + ... + 1/k.
Rational harmonic(int k);

// Quadratic character attached to the field data (conductor D), or the
// trivial character of conductor 1.  chi(a) = Kronecker (a|D).
struct CharSpec {
  bool trivial;
  long D;  // conductor when nontrivial

  static CharSpec trivial_char() { return {true, 1}; }
  static CharSpec field_char(long D) { return {false, D}; }
  // chi^k: even powers collapse to the trivial character.
  static CharSpec field_char_power(long D, long k) {
    return (k % 2 == 0) ? trivial_char() : field_char(D);
  }
  long conductor() const { return trivial ? 1 : D; }
  int operator()(long a) const { return trivial ? 1 : kronecker(a, D); }
  bool operator==(const CharSpec& o) const {
    return trivial == o.trivial && (trivial || D == o.D);
  }
};

// Generalized Bernoulli number B_{k,chi} = f^{k-1} sum_{a=1..f} chi(a) B_k(a/f).
Rational gen_bernoulli(int k, const CharSpec& chi);

// Twisted divisor power sum sigma_{s,chi}(m) = sum_{d|m} chi(d) d^s as a jet
// in s; the derivative slot accumulates sum chi(d) d^s log d.
Jet sigma_jet(long m, const Jet& s, const CharSpec& chi);
// Exact value at integer exponent k (k may be negative).
Rational sigma_exact(long m, long k, const CharSpec& chi);

// Quarter-turn unit attached to an odd r: returns t with epsilon_r = i^t,
// t = 0 for r == 1 (mod 4) and t = 1 for r == 3 (mod 4).
int eps4(long r);

// Number of classes of primitive reduced positive binary quadratic forms of
// discriminant -D.  Used as the class-number oracle.
long class_number_forms(long D);

}  // namespace shv
