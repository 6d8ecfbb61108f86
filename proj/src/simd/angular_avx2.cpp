// Compiled with -mavx2 and without -mfma; only reached after a runtime check.
#include "hw/simd/angular.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace hw::simd::detail {

#if defined(__AVX2__)

double negative_part_avx2(const AngularNodes& nodes, const Affine& c, double floor) {
  const __m256d c0 = _mm256_set1_pd(c.c0);
  const __m256d cx = _mm256_set1_pd(c.cx);
  const __m256d cy = _mm256_set1_pd(c.cy);
  const __m256d cz = _mm256_set1_pd(c.cz);
  const __m256d threshold = _mm256_set1_pd(-floor);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < nodes.count; k += 4) {
    __m256d v = _mm256_add_pd(c0, _mm256_mul_pd(cx, _mm256_loadu_pd(nodes.nx + k)));
    v = _mm256_add_pd(v, _mm256_mul_pd(cy, _mm256_loadu_pd(nodes.ny + k)));
    v = _mm256_add_pd(v, _mm256_mul_pd(cz, _mm256_loadu_pd(nodes.nz + k)));
    const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(nodes.w + k), v);
    const __m256d mask = _mm256_cmp_pd(v, threshold, _CMP_LT_OQ);
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, t));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

#else

double negative_part_avx2(const AngularNodes& nodes, const Affine& c, double floor) {
  return negative_part_scalar(nodes, c, floor);
}

#endif

}  // namespace hw::simd::detail
