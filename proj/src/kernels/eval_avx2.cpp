// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "lxmod/kernels.hpp"

namespace lxmod::kernels {

void eval_avx2(const gf::PackedSystem& s, const std::int32_t* values, std::size_t stride, std::size_t lanes,
               std::uint8_t* pass) {
  if (s.max_accumulator >= kAvx2AccumulatorLimit) {
    eval_scalar(s, values, stride, lanes, pass);
    return;
  }
  const std::int32_t p = static_cast<std::int32_t>(s.modulus);
  const __m256i vp = _mm256_set1_epi32(p);
  const __m256i vneg_p = _mm256_set1_epi32(-p);
  const __m256i vzero = _mm256_setzero_si256();
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));

  std::size_t lane = 0;
  for (; lane + 8 <= lanes; lane += 8) {
    __m256i alive = _mm256_set1_epi32(-1);
    for (std::size_t e = 0; e < s.equations(); ++e) {
      __m256i acc = _mm256_set1_epi32(s.constants[e]);
      for (std::uint32_t t = s.lin_begin[e]; t < s.lin_begin[e + 1]; ++t) {
        const __m256i x =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + s.lin_var[t] * stride + lane));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(x, _mm256_set1_epi32(s.lin_coef[t])));
      }
      for (std::uint32_t t = s.quad_begin[e]; t < s.quad_begin[e + 1]; ++t) {
        const __m256i xa =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + s.quad_a[t] * stride + lane));
        const __m256i xb =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + s.quad_b[t] * stride + lane));
        const __m256i xy = _mm256_mullo_epi32(xa, xb);
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(xy, _mm256_set1_epi32(s.quad_coef[t])));
      }
      // acc < 2^22: the float quotient is off by at most one, so the
      // remainder lands in {-p, 0, p} exactly when p divides acc.
      const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(acc), vinv));
      const __m256i r = _mm256_sub_epi32(acc, _mm256_mullo_epi32(q, vp));
      const __m256i divisible = _mm256_or_si256(
          _mm256_cmpeq_epi32(r, vzero), _mm256_or_si256(_mm256_cmpeq_epi32(r, vp), _mm256_cmpeq_epi32(r, vneg_p)));
      alive = _mm256_and_si256(alive, divisible);
      if (_mm256_testz_si256(alive, alive)) break;
    }
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(alive));
    for (int k = 0; k < 8; ++k) pass[lane + k] = static_cast<std::uint8_t>((mask >> k) & 1);
  }
  if (lane < lanes) {
    // Tail: shift the base pointer so the scalar kernel sees lanes 0..n.
    eval_scalar(s, values + lane, stride, lanes - lane, pass + lane);
  }
}

}  // namespace lxmod::kernels
