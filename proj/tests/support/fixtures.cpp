#include "fixtures.hpp"

#include <string>

namespace lxmod::fixtures {

LieAlgebraPtr abelian(const FieldSpec& field, std::size_t dim) {
  return std::make_shared<const LieAlgebra>(LieAlgebra::abelian("k" + std::to_string(dim), field, dim));
}

LieAlgebraPtr affine2(const FieldSpec& field) {
  const LieAlgebra::Entry e[] = {{0, 1, 1, Scalar::one(field)}};
  return std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets("aff2", field, 2, e));
}

LieAlgebraPtr sl2(const FieldSpec& field) {
  const LieAlgebra::Entry e[] = {
      {0, 1, 1, Scalar::from_int(field, 2)},
      {0, 2, 2, Scalar::from_int(field, -2)},
      {1, 2, 0, Scalar::one(field)},
  };
  return std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets("sl2", field, 3, e));
}

LieAlgebraPtr heisenberg(const FieldSpec& field) {
  const LieAlgebra::Entry e[] = {{0, 1, 2, Scalar::one(field)}};
  return std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets("heis", field, 3, e));
}

CrossedModulePtr x_triv(const FieldSpec& field) {
  const auto k = abelian(field, 1);
  return std::make_shared<const CrossedModule>("X_triv", k, k, LinearMap::identity(field, 1), LieAction::zero(k, k));
}

CrossedModulePtr x_aff(const FieldSpec& field) {
  const Vector ideal[] = {Vector::basis(field, 2, 1)};
  return std::make_shared<const CrossedModule>(inclusion_crossed_module(affine2(field), ideal, "X_aff"));
}

CrossedMorphism x_aff_endo(const CrossedModulePtr& x, long long a, long long b, long long d) {
  const FieldSpec& f = x->field();
  return CrossedMorphism(x, x, LinearMap::from_ints(f, 1, 1, {d}), LinearMap::from_ints(f, 2, 2, {a, 0, b, d}));
}

std::vector<CrossedModulePtr> battery(const FieldSpec& field) {
  std::vector<CrossedModulePtr> out;
  int n = 0;
  const auto add = [&](CrossedModule x) { out.push_back(std::make_shared<const CrossedModule>(std::move(x))); };
  for (const auto& P : {affine2(field), heisenberg(field)}) {
    for (const auto& ideal : enumerate_ideals(*P)) {
      add(inclusion_crossed_module(P, ideal, "inc" + std::to_string(n++)));
    }
  }
  const auto aff = affine2(field);
  const auto line = abelian(field, 1);
  for (long long lambda : {0, 1}) {
    // e1 acts on the line by lambda, e2 acts trivially.
    const LieAction::Entry e[] = {{0, 0, 0, Scalar::from_int(field, lambda)}};
    add(abelian_zero_crossed_module(aff, LieAction::from_entries(aff, line, e), "ab_aff_" + std::to_string(lambda)));
  }
  {
    // A one-dimensional P acting on the plane by a nilpotent matrix.
    const auto plane = abelian(field, 2);
    const LieAction::Entry e[] = {{0, 0, 1, Scalar::one(field)}};
    add(abelian_zero_crossed_module(line, LieAction::from_entries(line, plane, e), "ab_nil"));
  }
  out.push_back(x_triv(field));
  return out;
}

}  // namespace lxmod::fixtures
