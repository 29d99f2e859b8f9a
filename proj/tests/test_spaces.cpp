#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shv/errors.hpp"
#include "shv/numtheory.hpp"
#include "shv/spaces.hpp"

using namespace shv;

namespace {

SpaceSpec make_spec(long D, long n, std::map<long, int> inv) {
  SpaceSpec s;
  s.field = make_field(D);
  s.n = n;
  s.inv = std::move(inv);
  return s;
}

}  // namespace

TEST_CASE("validate_space accepts/rejects per the sign-product rule") {
  CHECK_NOTHROW(validate_space(make_spec(7, 3, {{7, -1}})));
  CHECK_NOTHROW(validate_space(make_spec(15, 4, {{3, 1}, {5, -1}})));
  CHECK_THROWS_WITH_AS(validate_space(make_spec(15, 4, {{3, 1}, {5, 1}})),
                       doctest::Contains("product"), CalcError);
  // key not dividing D
  CHECK_THROWS_AS(validate_space(make_spec(7, 3, {{5, -1}})), CalcError);
  try {
    validate_space(make_spec(7, 3, {{5, -1}}));
  } catch (const CalcError& e) {
    CHECK(e.kind() == ErrKind::UnknownPrime);
  }
  // missing prime
  CHECK_THROWS_AS(validate_space(make_spec(15, 2, {{3, -1}})), CalcError);
  // bad sign value
  CHECK_THROWS_AS(validate_space(make_spec(7, 2, {{7, 2}})), CalcError);
  // bad dimension
  CHECK_THROWS_AS(validate_space(make_spec(7, 0, {{7, -1}})), CalcError);
}

TEST_CASE("enumerate_spaces: count 2^(o-1), lexicographic, all valid") {
  auto one = enumerate_spaces(make_field(7), 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].inv.at(7) == -1);

  auto two = enumerate_spaces(make_field(15), 4);
  REQUIRE(two.size() == 2);
  // +1 sorts before -1 on the smallest prime
  CHECK(two[0].inv.at(3) == 1);
  CHECK(two[0].inv.at(5) == -1);
  CHECK(two[1].inv.at(3) == -1);
  CHECK(two[1].inv.at(5) == 1);

  auto four = enumerate_spaces(make_field(231), 2);  // 3*7*11
  REQUIRE(four.size() == 4);
  for (const auto& s : four) CHECK_NOTHROW(validate_space(s));
  // Lexicographic: (+,+,-), (+,-,+), (-,+,+), (-,-,-)
  CHECK(four[0].inv == std::map<long, int>{{3, 1}, {7, 1}, {11, -1}});
  CHECK(four[1].inv == std::map<long, int>{{3, 1}, {7, -1}, {11, 1}});
  CHECK(four[2].inv == std::map<long, int>{{3, -1}, {7, 1}, {11, 1}});
  CHECK(four[3].inv == std::map<long, int>{{3, -1}, {7, -1}, {11, -1}});
}

TEST_CASE("companion_space: split-prime twist by the Hilbert symbol") {
  auto base = make_spec(7, 3, {{7, -1}});
  // 29 = 1 mod 7 is split and twists trivially
  auto comp = companion_space(base, 29);
  CHECK(comp.n == 2);
  CHECK(comp.inv.at(7) == -1);

  // guards
  CHECK_THROWS_AS(companion_space(make_spec(7, 2, {{7, -1}}), 29), CalcError);
  CHECK_THROWS_AS(companion_space(base, 13), CalcError);  // (-7/13) = -1 inert
  CHECK_THROWS_AS(companion_space(base, 7), CalcError);   // ramified

  // p = 1 mod D leaves every invariant untouched (least split witness per D)
  for (long D : {7L, 15L, 23L}) {
    FieldData F = make_field(D);
    long p = 2;
    while (!(is_prime(p) && p % D == 1)) ++p;
    for (const auto& s : enumerate_spaces(F, 4)) {
      auto c = companion_space(s, p);
      CHECK(c.n == 3);
      CHECK(c.inv == s.inv);
    }
  }
}

TEST_CASE("companion_space keeps the -1 product on random split primes") {
  std::mt19937 rng(20260822u);
  for (long D : {15L, 231L}) {
    FieldData F = make_field(D);
    auto specs = enumerate_spaces(F, 5);
    int tested = 0;
    while (tested < 50) {
      long p = std::uniform_int_distribution<long>(2, 5000)(rng);
      if (!is_prime(p) || kronecker(-D, p) != 1) continue;
      const auto& s = specs[static_cast<size_t>(tested) % specs.size()];
      auto c = companion_space(s, p);
      CHECK_NOTHROW(validate_space(c));  // asserts product -1 via reciprocity
      ++tested;
    }
  }
}

TEST_CASE("local_gram diagonal units") {
  auto g = local_gram(make_spec(7, 2, {{7, -1}}), 7);
  CHECK(g.units == std::vector<long>{3, 1});  // 3 = least non-residue mod 7

  auto g5 = local_gram(make_spec(15, 3, {{3, 1}, {5, -1}}), 5);
  CHECK(g5.units == std::vector<long>{2, 1, 1});

  auto g3 = local_gram(make_spec(15, 3, {{3, 1}, {5, -1}}), 3);
  CHECK(g3.units == std::vector<long>{1, 1, 1});

  // Legendre product always matches the invariant
  for (const auto& s : enumerate_spaces(make_field(231), 4)) {
    for (long p : s.field.primes) {
      auto lg = local_gram(s, p);
      int prod = 1;
      for (long u : lg.units) prod *= static_cast<int>(kronecker(u, p));
      CHECK(prod == s.inv.at(p));
    }
  }
}

TEST_CASE("ell_star and beta_ell closed forms") {
  auto s2 = make_spec(7, 2, {{7, -1}});
  CHECK(ell_star(s2, 7) == 7);  // (-1/7) = -1 times inv -1 times 7
  CHECK(beta_ell(s2, 7) == Rational(-7));

  auto s3 = make_spec(7, 3, {{7, -1}});
  CHECK(beta_ell(s3, 7) == Rational(7));

  // parity flip only moves through the case split: same half-exponent at n and
  // n+1 for even n means beta changes by exactly the (-1)^(n+1) sign
  for (long D : {7L, 15L}) {
    for (const auto& s : enumerate_spaces(make_field(D), 2)) {
      for (long ell : s.field.primes) {
        SpaceSpec odd = s;
        odd.n = 3;  // same floor(n/2) = 1 as n = 2
        CHECK(beta_ell(odd, ell) == Rational(-1) * beta_ell(s, ell));
      }
    }
  }

  // beta_ell magnitude: ell^floor(n/2)
  auto s6 = make_spec(15, 6, {{3, 1}, {5, -1}});
  CHECK(BigInt::abs(beta_ell(s6, 5).num()) == BigInt(125));
  CHECK(beta_ell(s6, 5).is_integer());
}

TEST_CASE("spec string round-trip") {
  auto s = make_spec(15, 4, {{3, 1}, {5, -1}});
  CHECK(spec_to_string(s) == "D=15;n=4;inv=3:+1,5:-1");
  auto back = parse_space("D=15;n=4;inv=3:+1,5:-1");
  CHECK(back.field.D == 15);
  CHECK(back.n == 4);
  CHECK(back.inv == s.inv);
  CHECK(spec_to_string(parse_space("D=7;n=3;inv=7:-1")) == "D=7;n=3;inv=7:-1");

  CHECK_THROWS_AS(parse_space("D=15;n=4"), CalcError);
  CHECK_THROWS_AS(parse_space("D=15;n=4;inv=3:+1,5:+1"), CalcError);
  CHECK_THROWS_AS(parse_space("D=15;n=4;inv=3:+1"), CalcError);
  CHECK_THROWS_AS(parse_space("D=15;n=x;inv=3:+1,5:-1"), CalcError);
  CHECK_THROWS_AS(parse_space("D=15;n=4;inv=3:+1,3:-1"), CalcError);
}
