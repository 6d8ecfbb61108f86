#include "hw/simd/angular.hpp"

namespace hw::simd::detail {

double negative_part_scalar(const AngularNodes& nodes, const Affine& c, double floor) {
  const double threshold = -floor;
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < nodes.count; k += 4) {
    for (int l = 0; l < 4; ++l) {
      const std::size_t i = k + l;
      double v = c.c0 + c.cx * nodes.nx[i];
      v = v + c.cy * nodes.ny[i];
      v = v + c.cz * nodes.nz[i];
      const double t = nodes.w[i] * v;
      lane[l] = lane[l] + (v < threshold ? t : 0.0);
    }
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace hw::simd::detail
