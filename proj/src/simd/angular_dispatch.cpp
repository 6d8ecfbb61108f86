#include "hw/simd/angular.hpp"

namespace hw::simd {

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(HW_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa pick() {
  if (cpu_has(Isa::Avx2)) return Isa::Avx2;
  if (cpu_has(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

Isa active_isa() {
  static const Isa isa = pick();
  return isa;
}

double negative_part(Isa isa, const AngularNodes& nodes, const Affine& c, double floor) {
  switch (isa) {
    case Isa::Avx2:
      if (cpu_has(Isa::Avx2)) return detail::negative_part_avx2(nodes, c, floor);
      break;
    case Isa::Neon:
      if (cpu_has(Isa::Neon)) return detail::negative_part_neon(nodes, c, floor);
      break;
    case Isa::Scalar:
      break;
  }
  return detail::negative_part_scalar(nodes, c, floor);
}

double negative_part(const AngularNodes& nodes, const Affine& c, double floor) {
  return negative_part(active_isa(), nodes, c, floor);
}

}  // namespace hw::simd
