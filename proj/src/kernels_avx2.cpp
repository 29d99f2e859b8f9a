// AVX2 variant of the pair-counting kernel.  This translation unit is the only
// one compiled with -mavx2; callers reach it through the runtime dispatcher.
#include "shv/kernels.hpp"

#if defined(SHV_HAVE_AVX2_TU)

#include <immintrin.h>

namespace shv {

uint64_t count_pairs_sum_mod_avx2(const uint32_t* a, size_t na,
                                  const uint32_t* b, size_t nb, uint32_t c,
                                  uint32_t target) {
  uint64_t count = 0;
  for (size_t i = 0; i < na; ++i) {
    const uint32_t need = (target + c - a[i]) % c;
    const __m256i vneed = _mm256_set1_epi32(static_cast<int>(need));
    size_t j = 0;
    uint64_t hits = 0;
    for (; j + 8 <= nb; j += 8) {
      const __m256i vb =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
      const __m256i eq = _mm256_cmpeq_epi32(vb, vneed);
      // 4 set bytes per matching 32-bit lane.
      hits += static_cast<unsigned>(
          __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(eq))));
    }
    count += hits / 4;
    for (; j < nb; ++j) count += (b[j] == need);
  }
  return count;
}

}  // namespace shv

#endif  // SHV_HAVE_AVX2_TU
