#pragma once

#include "lxmod/lie.hpp"

namespace lxmod {

/// Morphism (f1, f0): (M, P, ∂) → (M', P', ∂'), f1: M → M', f0: P → P'.
/// Construction checks shapes only; validate_crossed_morphism checks the axioms.
class CrossedMorphism {
 public:
  CrossedMorphism(CrossedModulePtr source, CrossedModulePtr target, LinearMap f1, LinearMap f0);

  const CrossedModule& source() const noexcept { return *source_; }
  const CrossedModule& target() const noexcept { return *target_; }
  const CrossedModulePtr& source_ptr() const noexcept { return source_; }
  const CrossedModulePtr& target_ptr() const noexcept { return target_; }
  const LinearMap& f1() const noexcept { return f1_; }
  const LinearMap& f0() const noexcept { return f0_; }

  /// Same endpoints (structurally) and same matrices.
  friend bool operator==(const CrossedMorphism& a, const CrossedMorphism& b);

  std::size_t hash() const;

 private:
  CrossedModulePtr source_;
  CrossedModulePtr target_;
  LinearMap f1_;
  LinearMap f0_;
};

/// True when the two crossed modules are structurally equal (pointer
/// equality short-circuits).
bool same_crossed_module(const CrossedModulePtr& a, const CrossedModulePtr& b);

/// Axiom "lie_morphism": f[e_i, e_j] = [f e_i, f e_j] on all basis pairs.
ValidationReport is_lie_morphism(const LinearMap& f, const LieAlgebra& domain, const LieAlgebra& codomain);

/// Axioms "f1_morphism", "f0_morphism", "equivariance" (indices p,m) and
/// "square" (index m; compares ∂'f1(e_m) with f0∂(e_m)).
ValidationReport validate_crossed_morphism(const CrossedMorphism& morphism);

/// chi ∘ phi. Throws EndpointMismatch unless target(phi) equals source(chi).
CrossedMorphism compose_morphisms(const CrossedMorphism& phi, const CrossedMorphism& chi);

CrossedMorphism identity_morphism(const CrossedModulePtr& xmod);

}  // namespace lxmod

template <>
struct std::hash<lxmod::CrossedMorphism> {
  std::size_t operator()(const lxmod::CrossedMorphism& f) const { return f.hash(); }
};
