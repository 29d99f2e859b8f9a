#pragma once
// Integer enumeration kernels backing the brute-force oracles.  The scalar
// routine is the reference; an AVX2 variant is selected at runtime when the
// CPU supports it (set SHV_DISABLE_AVX2=1 to force the scalar path).  Both
// variants are exported so tests can assert bit-identical results.

#include <cstddef>
#include <cstdint>

namespace shv {

// Number of index pairs (i, j) with (a[i] + b[j]) % c == target.
// All entries of a and b must already lie in [0, c); c >= 1; target in [0, c).
uint64_t count_pairs_sum_mod(const uint32_t* a, size_t na, const uint32_t* b,
                             size_t nb, uint32_t c, uint32_t target);

uint64_t count_pairs_sum_mod_scalar(const uint32_t* a, size_t na,
                                    const uint32_t* b, size_t nb, uint32_t c,
                                    uint32_t target);

#if defined(SHV_HAVE_AVX2_TU)
uint64_t count_pairs_sum_mod_avx2(const uint32_t* a, size_t na,
                                  const uint32_t* b, size_t nb, uint32_t c,
                                  uint32_t target);
#endif

// Name of the variant count_pairs_sum_mod dispatches to ("scalar" / "avx2").
const char* pair_kernel_backend();

}  // namespace shv
