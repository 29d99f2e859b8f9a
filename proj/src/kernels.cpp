#include "shv/kernels.hpp"

#include <cstdlib>

namespace shv {

uint64_t count_pairs_sum_mod_scalar(const uint32_t* a, size_t na,
                                    const uint32_t* b, size_t nb, uint32_t c,
                                    uint32_t target) {
  uint64_t count = 0;
  for (size_t i = 0; i < na; ++i) {
    // Complement of a[i]: the unique residue b[j] must hit.
    const uint32_t need = (target + c - a[i]) % c;
    for (size_t j = 0; j < nb; ++j) {
      count += (b[j] == need);
    }
  }
  return count;
}

namespace {

using KernelFn = uint64_t (*)(const uint32_t*, size_t, const uint32_t*, size_t,
                              uint32_t, uint32_t);

struct Dispatch {
  KernelFn fn;
  const char* name;
};

Dispatch pick_kernel() {
#if defined(SHV_HAVE_AVX2_TU)
  const char* off = std::getenv("SHV_DISABLE_AVX2");
  const bool disabled = off != nullptr && off[0] != '\0' && off[0] != '0';
  if (!disabled && __builtin_cpu_supports("avx2")) {
    return {&count_pairs_sum_mod_avx2, "avx2"};
  }
#endif
  return {&count_pairs_sum_mod_scalar, "scalar"};
}

const Dispatch& kernel() {
  static const Dispatch d = pick_kernel();
  return d;
}

}  // namespace

uint64_t count_pairs_sum_mod(const uint32_t* a, size_t na, const uint32_t* b,
                             size_t nb, uint32_t c, uint32_t target) {
  return kernel().fn(a, na, b, nb, c, target);
}

const char* pair_kernel_backend() { return kernel().name; }

}  // namespace shv
