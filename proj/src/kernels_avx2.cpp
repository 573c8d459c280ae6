#include <immintrin.h>

#include "ogc/kernels.hpp"

namespace ogc::kernels {

// Shoup multiplication: with w = floor(c * 2^32 / p), q = floor(x * w / 2^32)
// underestimates x*c/p by at most one, so x*c - q*p lies in [0, 2p).
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const std::uint32_t w = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i odd_mask = _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(vx, vw), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(vx, 32), vw);
    __m256i q = _mm256_or_si256(even, _mm256_and_si256(odd, odd_mask));
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(vx, vc), _mm256_mullo_epi32(q, vp));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    __m256i s = _mm256_add_epi32(vy, r);
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
  }
  if (i < n) axpy_mod_scalar(y + i, x + i, c, p, n - i);
}

}  // namespace ogc::kernels
