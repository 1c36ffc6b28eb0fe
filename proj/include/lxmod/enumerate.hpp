#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lxmod/gf_system.hpp"
#include "lxmod/homotopy.hpp"
#include "lxmod/kernels.hpp"

namespace lxmod {

struct EnumerationOptions {
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;

  /// Largest candidate space scanned before BudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 means hardware concurrency.
  unsigned workers = 0;
  kernels::Isa kernel = kernels::Isa::automatic;
};

/// p^num_vars as a decimal string.
std::string candidate_space_size(std::uint32_t modulus, std::uint32_t num_vars);

/// Indices (ascending) of all assignments in GF(p)^n satisfying the system.
/// Index i encodes the assignment whose base-p digits, most significant
/// first, are x_0 .. x_{n-1}, so index order is lexicographic order. The
/// space is split into contiguous chunks scanned by `workers` threads and
/// merged in chunk order; the result does not depend on the worker count.
/// Throws BudgetExceeded before scanning when p^n exceeds the budget.
std::vector<std::uint64_t> solve_system(const gf::PackedSystem& system, const EnumerationOptions& options = {});

/// Base-p digits of a candidate index (most significant first).
std::vector<std::uint32_t> decode_candidate(std::uint64_t index, std::uint32_t modulus, std::uint32_t num_vars);

/// All crossed-module morphisms source → target over a prime field, in
/// lexicographic order of (f1 row-major, f0 row-major). Throws
/// UnsupportedField over Q and BudgetExceeded for oversized spaces.
std::vector<CrossedMorphism> enumerate_morphisms(const CrossedModulePtr& source, const CrossedModulePtr& target,
                                                 const EnumerationOptions& options = {});

/// All f0-derivations at f, in lexicographic order of d (row-major).
std::vector<Derivation> enumerate_derivations(const CrossedMorphism& f, const EnumerationOptions& options = {});

/// Every ideal of a Lie algebra over a prime field, each as a row-reduced
/// basis. Ordered by dimension, then pivot columns, then free entries.
std::vector<std::vector<Vector>> enumerate_ideals(const LieAlgebra& algebra);

}  // namespace lxmod
