#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "shv/kernels.hpp"

using namespace shv;

namespace {

// Straight-line double loop, no complement trick: the reference of references.
uint64_t naive(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
               uint32_t c, uint32_t target) {
  uint64_t n = 0;
  for (uint32_t x : a)
    for (uint32_t y : b)
      if ((x + y) % c == target) ++n;
  return n;
}

}  // namespace

TEST_CASE("scalar kernel matches the naive double loop") {
  std::mt19937 rng(7u);
  for (int iter = 0; iter < 20; ++iter) {
    uint32_t c = std::uniform_int_distribution<uint32_t>(1, 97)(rng);
    size_t na = std::uniform_int_distribution<size_t>(0, 300)(rng);
    size_t nb = std::uniform_int_distribution<size_t>(0, 300)(rng);
    std::vector<uint32_t> a(na), b(nb);
    for (auto& x : a) x = rng() % c;
    for (auto& x : b) x = rng() % c;
    uint32_t target = rng() % c;
    CHECK(count_pairs_sum_mod_scalar(a.data(), na, b.data(), nb, c, target) ==
          naive(a, b, c, target));
  }
}

#if defined(SHV_HAVE_AVX2_TU)
TEST_CASE("avx2 kernel is bit-identical to scalar on random inputs") {
  if (!__builtin_cpu_supports("avx2")) {
    MESSAGE("cpu lacks avx2; variant equivalence not exercisable here");
    return;
  }
  std::mt19937 rng(11u);
  for (int iter = 0; iter < 40; ++iter) {
    uint32_t c = std::uniform_int_distribution<uint32_t>(1, 625)(rng);
    // Sizes straddle the 8-lane width, including ragged tails and empties.
    size_t na = std::uniform_int_distribution<size_t>(0, 200)(rng);
    size_t nb = std::uniform_int_distribution<size_t>(0, 200)(rng);
    std::vector<uint32_t> a(na), b(nb);
    for (auto& x : a) x = rng() % c;
    for (auto& x : b) x = rng() % c;
    uint32_t target = rng() % c;
    CHECK(count_pairs_sum_mod_avx2(a.data(), na, b.data(), nb, c, target) ==
          count_pairs_sum_mod_scalar(a.data(), na, b.data(), nb, c, target));
  }
}
#endif

TEST_CASE("dispatcher result agrees with scalar and names its backend") {
  const char* name = pair_kernel_backend();
  CHECK((std::strcmp(name, "scalar") == 0 || std::strcmp(name, "avx2") == 0));
  std::mt19937 rng(13u);
  std::vector<uint32_t> a(137), b(259);
  uint32_t c = 49;
  for (auto& x : a) x = rng() % c;
  for (auto& x : b) x = rng() % c;
  for (uint32_t t = 0; t < c; t += 5) {
    CHECK(count_pairs_sum_mod(a.data(), a.size(), b.data(), b.size(), c, t) ==
          count_pairs_sum_mod_scalar(a.data(), a.size(), b.data(), b.size(), c,
                                     t));
  }
}

TEST_CASE("edge cases: c = 1, empty arrays, all-equal residues") {
  std::vector<uint32_t> a(17, 0), b(9, 0);
  CHECK(count_pairs_sum_mod(a.data(), a.size(), b.data(), b.size(), 1, 0) ==
        17u * 9u);
  CHECK(count_pairs_sum_mod(a.data(), 0, b.data(), b.size(), 5, 0) == 0u);
  CHECK(count_pairs_sum_mod(a.data(), a.size(), b.data(), 0, 5, 0) == 0u);
  std::vector<uint32_t> ones(31, 3), twos(15, 4);
  CHECK(count_pairs_sum_mod(ones.data(), ones.size(), twos.data(), twos.size(),
                            6, 1) == 31u * 15u);
  CHECK(count_pairs_sum_mod(ones.data(), ones.size(), twos.data(), twos.size(),
                            6, 2) == 0u);
}
