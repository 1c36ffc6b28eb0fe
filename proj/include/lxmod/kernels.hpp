#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "lxmod/gf_system.hpp"

namespace lxmod::kernels {

/// Instruction-set variants of the candidate filter.
enum class Isa : std::uint8_t { automatic, scalar, avx2 };

std::string_view isa_name(Isa isa);
/// Parses "auto", "scalar" or "avx2"; throws lxmod::Error otherwise.
Isa parse_isa(std::string_view text);

/// Evaluates a packed system on a block of candidates stored variable-major:
/// candidate `lane` has x_v = values[v * stride + lane]. Sets pass[lane] to 1
/// when every equation vanishes mod p and to 0 otherwise.
using EvalFn = void (*)(const gf::PackedSystem& system, const std::int32_t* values, std::size_t stride,
                        std::size_t lanes, std::uint8_t* pass);

void eval_scalar(const gf::PackedSystem& system, const std::int32_t* values, std::size_t stride, std::size_t lanes,
                 std::uint8_t* pass);

/// Accumulators above this bound go to the scalar path (float-based reduction
/// is exact only below it).
inline constexpr std::uint64_t kAvx2AccumulatorLimit = std::uint64_t{1} << 22;

#if defined(LXMOD_HAVE_AVX2)
void eval_avx2(const gf::PackedSystem& system, const std::int32_t* values, std::size_t stride, std::size_t lanes,
               std::uint8_t* pass);
#endif

bool cpu_has_avx2();

/// Best variant this process can run.
Isa detect_isa();

/// Resolves `requested` (automatic → detect_isa()). Throws lxmod::Error when
/// the requested variant is not compiled in or not supported by the CPU.
Isa resolve_isa(Isa requested);

EvalFn select(Isa resolved);

}  // namespace lxmod::kernels
