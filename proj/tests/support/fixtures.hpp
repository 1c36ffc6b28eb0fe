#pragma once

#include <memory>
#include <vector>

#include "lxmod/enumerate.hpp"
#include "lxmod/groupoid.hpp"
#include "lxmod/homotopy.hpp"
#include "lxmod/lie.hpp"
#include "lxmod/morphism.hpp"

namespace lxmod::fixtures {

LieAlgebraPtr abelian(const FieldSpec& field, std::size_t dim);
/// [e1, e2] = e2.
LieAlgebraPtr affine2(const FieldSpec& field);
/// Basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebraPtr sl2(const FieldSpec& field);
/// [e1, e2] = e3.
LieAlgebraPtr heisenberg(const FieldSpec& field);

/// M = P = 1-dim abelian, ∂ = id, zero action.
CrossedModulePtr x_triv(const FieldSpec& field);
/// span(e2) ⊂ affine2 with the adjoint action.
CrossedModulePtr x_aff(const FieldSpec& field);
/// Endomorphism of x_aff: f0(e1) = a e1 + b e2, f0(e2) = d e2, f1 = [d].
CrossedMorphism x_aff_endo(const CrossedModulePtr& x, long long a, long long b, long long d);

inline LinearMap row(const FieldSpec& field, std::initializer_list<long long> values) {
  return LinearMap::from_ints(field, 1, values.size(), values);
}

/// Crossed modules used for the property sweeps: inclusions of every ideal
/// of affine2 and of the Heisenberg algebra (the whole algebra gives the
/// adjoint module), abelian modules with zero boundary, and X_triv.
std::vector<CrossedModulePtr> battery(const FieldSpec& field);

}  // namespace lxmod::fixtures
