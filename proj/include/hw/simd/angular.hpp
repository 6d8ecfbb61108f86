#pragma once

// Negative-part reduction over the angular nodes of one beta point:
//
//   sum_k w_k * W_k * [W_k < -floor],  W_k = c0 + cx nx_k + cy ny_k + cz nz_k
//
// Every variant accumulates in four lanes (node k goes to lane k % 4),
// evaluates W_k as ((c0 + cx nx) + cy ny) + cz nz without fused multiply-add,
// and combines the lanes as (l0 + l1) + (l2 + l3), so all variants return
// bit-identical results.

#include <cstddef>
#include <string_view>
#include <vector>

namespace hw::simd {

struct AngularNodes {
  const double* nx;
  const double* ny;
  const double* nz;
  const double* w;
  std::size_t count;  // multiple of 4
};

struct Affine {
  double c0, cx, cy, cz;
};

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Variants compiled in and supported by the running CPU; Scalar is always
/// present.
std::vector<Isa> available_isas();

/// Best available variant, chosen once per process.
Isa active_isa();

double negative_part(const AngularNodes& nodes, const Affine& c, double floor);
double negative_part(Isa isa, const AngularNodes& nodes, const Affine& c, double floor);

namespace detail {
double negative_part_scalar(const AngularNodes& nodes, const Affine& c, double floor);
double negative_part_avx2(const AngularNodes& nodes, const Affine& c, double floor);
double negative_part_neon(const AngularNodes& nodes, const Affine& c, double floor);
}  // namespace detail

}  // namespace hw::simd
