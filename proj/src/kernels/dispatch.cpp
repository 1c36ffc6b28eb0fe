#include <string>

#include "lxmod/errors.hpp"
#include "lxmod/kernels.hpp"

namespace lxmod::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::automatic:
      return "auto";
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view text) {
  if (text == "auto") return Isa::automatic;
  if (text == "scalar") return Isa::scalar;
  if (text == "avx2") return Isa::avx2;
  throw Error("unknown kernel '" + std::string(text) + "' (expected auto, scalar or avx2)");
}

bool cpu_has_avx2() {
#if defined(LXMOD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa resolve_isa(Isa requested) {
  if (requested == Isa::automatic) return detect_isa();
  if (requested == Isa::avx2 && !cpu_has_avx2()) throw Error("avx2 kernel requested but not available");
  return requested;
}

EvalFn select(Isa resolved) {
  switch (resolve_isa(resolved)) {
#if defined(LXMOD_HAVE_AVX2)
    case Isa::avx2:
      return &eval_avx2;
#endif
    default:
      return &eval_scalar;
  }
}

}  // namespace lxmod::kernels
