#include "hw/simd/angular.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hw::simd::detail {

#if defined(__aarch64__)

// Lanes 0-1 live in lo, lanes 2-3 in hi.
double negative_part_neon(const AngularNodes& nodes, const Affine& c, double floor) {
  const float64x2_t c0 = vdupq_n_f64(c.c0);
  const float64x2_t cx = vdupq_n_f64(c.cx);
  const float64x2_t cy = vdupq_n_f64(c.cy);
  const float64x2_t cz = vdupq_n_f64(c.cz);
  const float64x2_t threshold = vdupq_n_f64(-floor);
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  auto step = [&](std::size_t i) {
    float64x2_t v = vaddq_f64(c0, vmulq_f64(cx, vld1q_f64(nodes.nx + i)));
    v = vaddq_f64(v, vmulq_f64(cy, vld1q_f64(nodes.ny + i)));
    v = vaddq_f64(v, vmulq_f64(cz, vld1q_f64(nodes.nz + i)));
    const float64x2_t t = vmulq_f64(vld1q_f64(nodes.w + i), v);
    const uint64x2_t mask = vcltq_f64(v, threshold);
    return vreinterpretq_f64_u64(vandq_u64(mask, vreinterpretq_u64_f64(t)));
  };
  for (std::size_t k = 0; k < nodes.count; k += 4) {
    lo = vaddq_f64(lo, step(k));
    hi = vaddq_f64(hi, step(k + 2));
  }
  return (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

#else

double negative_part_neon(const AngularNodes& nodes, const Affine& c, double floor) {
  return negative_part_scalar(nodes, c, floor);
}

#endif

}  // namespace hw::simd::detail
