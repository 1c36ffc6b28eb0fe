#include "lxmod/kernels.hpp"

namespace lxmod::kernels {

namespace {

template <bool kReduceEachTerm>
bool candidate_passes(const gf::PackedSystem& s, const std::int32_t* values, std::size_t stride, std::size_t lane) {
  const std::int64_t p = s.modulus;
  for (std::size_t e = 0; e < s.equations(); ++e) {
    std::int64_t acc = s.constants[e];
    for (std::uint32_t t = s.lin_begin[e]; t < s.lin_begin[e + 1]; ++t) {
      acc += std::int64_t{s.lin_coef[t]} * values[s.lin_var[t] * stride + lane];
      if constexpr (kReduceEachTerm) acc %= p;
    }
    for (std::uint32_t t = s.quad_begin[e]; t < s.quad_begin[e + 1]; ++t) {
      const std::int64_t xy = std::int64_t{values[s.quad_a[t] * stride + lane]} * values[s.quad_b[t] * stride + lane];
      if constexpr (kReduceEachTerm) {
        acc = (acc + std::int64_t{s.quad_coef[t]} * (xy % p)) % p;
      } else {
        acc += s.quad_coef[t] * xy;
      }
    }
    if (acc % p != 0) return false;
  }
  return true;
}

}  // namespace

void eval_scalar(const gf::PackedSystem& system, const std::int32_t* values, std::size_t stride, std::size_t lanes,
                 std::uint8_t* pass) {
  const bool wide = system.max_accumulator >= (std::uint64_t{1} << 62);
  for (std::size_t lane = 0; lane < lanes; ++lane) {
    pass[lane] = wide ? candidate_passes<true>(system, values, stride, lane)
                      : candidate_passes<false>(system, values, stride, lane);
  }
}

}  // namespace lxmod::kernels
