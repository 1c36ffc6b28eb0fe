#include "lxmod/morphism.hpp"

#include "lxmod/errors.hpp"

namespace lxmod {

CrossedMorphism::CrossedMorphism(CrossedModulePtr source, CrossedModulePtr target, LinearMap f1, LinearMap f0)
    : source_(std::move(source)), target_(std::move(target)), f1_(std::move(f1)), f0_(std::move(f0)) {
  if (!source_ || !target_) throw InvalidStructure("morphism needs both endpoints");
  if (source_->field() != target_->field() || f1_.field() != source_->field() || f0_.field() != source_->field()) {
    throw FieldMismatch("morphism mixes fields");
  }
  if (f1_.rows() != target_->m_algebra().dim() || f1_.cols() != source_->m_algebra().dim()) {
    throw ShapeMismatch("f1 must be " + std::to_string(target_->m_algebra().dim()) + "x" +
                        std::to_string(source_->m_algebra().dim()));
  }
  if (f0_.rows() != target_->p_algebra().dim() || f0_.cols() != source_->p_algebra().dim()) {
    throw ShapeMismatch("f0 must be " + std::to_string(target_->p_algebra().dim()) + "x" +
                        std::to_string(source_->p_algebra().dim()));
  }
}

bool same_crossed_module(const CrossedModulePtr& a, const CrossedModulePtr& b) {
  return a == b || (a && b && *a == *b);
}

bool operator==(const CrossedMorphism& a, const CrossedMorphism& b) {
  return a.f1_ == b.f1_ && a.f0_ == b.f0_ && same_crossed_module(a.source_, b.source_) &&
         same_crossed_module(a.target_, b.target_);
}

std::size_t CrossedMorphism::hash() const { return hash_combine(f1_.hash(), f0_.hash()); }

ValidationReport is_lie_morphism(const LinearMap& f, const LieAlgebra& L, const LieAlgebra& L2) {
  if (f.cols() != L.dim() || f.rows() != L2.dim()) throw ShapeMismatch("map shape does not match the algebras");
  ValidationReport report;
  report.checked("lie_morphism");
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector lhs = f.apply(L.bracket(L.basis(i), L.basis(j)));
      const Vector rhs = L2.bracket(f.column(i), f.column(j));
      if (!(lhs == rhs)) report.fail("lie_morphism", {i, j}, lhs, rhs);
    }
  }
  return report;
}

namespace {

void rename_into(ValidationReport& out, const ValidationReport& in, const std::string& axiom) {
  ValidationReport renamed;
  renamed.checked(axiom);
  for (const auto& f : in.failures()) renamed.fail(axiom, f.indices, f.lhs, f.rhs);
  out.merge(renamed);
}

}  // namespace

ValidationReport validate_crossed_morphism(const CrossedMorphism& phi) {
  const CrossedModule& X = phi.source();
  const CrossedModule& Y = phi.target();
  ValidationReport report;
  rename_into(report, is_lie_morphism(phi.f1(), X.m_algebra(), Y.m_algebra()), "f1_morphism");
  rename_into(report, is_lie_morphism(phi.f0(), X.p_algebra(), Y.p_algebra()), "f0_morphism");
  report.checked("equivariance");
  report.checked("square");
  const LieAlgebra& P = X.p_algebra();
  const LieAlgebra& M = X.m_algebra();
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const Vector lhs = phi.f1().apply(X.action().act(P.basis(i), M.basis(j)));
      const Vector rhs = Y.action().act(phi.f0().column(i), phi.f1().column(j));
      if (!(lhs == rhs)) report.fail("equivariance", {i, j}, lhs, rhs);
    }
  }
  const LinearMap top = compose(Y.boundary(), phi.f1());
  const LinearMap bottom = compose(phi.f0(), X.boundary());
  for (std::size_t j = 0; j < M.dim(); ++j) {
    const Vector lhs = top.column(j);
    const Vector rhs = bottom.column(j);
    if (!(lhs == rhs)) report.fail("square", {j}, lhs, rhs);
  }
  return report;
}

CrossedMorphism compose_morphisms(const CrossedMorphism& phi, const CrossedMorphism& chi) {
  if (!same_crossed_module(phi.target_ptr(), chi.source_ptr())) {
    throw EndpointMismatch("cannot compose: target of the first morphism is not the source of the second");
  }
  return CrossedMorphism(phi.source_ptr(), chi.target_ptr(), compose(chi.f1(), phi.f1()), compose(chi.f0(), phi.f0()));
}

CrossedMorphism identity_morphism(const CrossedModulePtr& X) {
  return CrossedMorphism(X, X, LinearMap::identity(X->field(), X->m_algebra().dim()),
                         LinearMap::identity(X->field(), X->p_algebra().dim()));
}

}  // namespace lxmod
