#include <cstdlib>

#include "ogc/kernels.hpp"

namespace ogc::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

AxpyFn select_axpy() {
#if defined(OGC_HAVE_AVX2)
  if (cpu_has_avx2() && std::getenv("OGC_FORCE_SCALAR") == nullptr) return axpy_mod_avx2;
#endif
  return axpy_mod_scalar;
}

const char* selected_kernel_name() { return select_axpy() == axpy_mod_scalar ? "scalar" : "avx2"; }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

#if !defined(OGC_HAVE_AVX2)
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n) {
  axpy_mod_scalar(y, x, c, p, n);
}
#endif

}  // namespace ogc::kernels
