#include "lxmod/lie.hpp"

#include "lxmod/errors.hpp"

namespace lxmod {

namespace {

void require_tensor_fields(const FieldSpec& field, std::span<const Scalar> tensor) {
  for (const auto& s : tensor) {
    if (s.field() != field) throw FieldMismatch("tensor entry over " + s.field().to_string() + ", expected " + field.to_string());
  }
}

void require_vector(const Vector& v, const FieldSpec& field, std::size_t dim, const char* role) {
  if (v.field() != field) throw FieldMismatch(std::string(role) + " is over " + v.field().to_string());
  if (v.dim() != dim) {
    throw ShapeMismatch(std::string(role) + " has dimension " + std::to_string(v.dim()) + ", expected " +
                        std::to_string(dim));
  }
}

Vector single(const Scalar& s) { return Vector(s.field(), {s}); }

}  // namespace

LieAlgebra::LieAlgebra(std::string name, FieldSpec field, std::size_t dim, std::vector<Scalar> structure)
    : name_(std::move(name)), field_(field), dim_(dim), structure_(std::move(structure)) {
  if (structure_.size() != dim_ * dim_ * dim_) {
    throw ShapeMismatch("structure tensor of '" + name_ + "' needs " + std::to_string(dim_ * dim_ * dim_) +
                        " entries, got " + std::to_string(structure_.size()));
  }
  require_tensor_fields(field_, structure_);
}

LieAlgebra LieAlgebra::abelian(std::string name, const FieldSpec& field, std::size_t dim) {
  return LieAlgebra(std::move(name), field, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(field)));
}

LieAlgebra LieAlgebra::from_brackets(std::string name, const FieldSpec& field, std::size_t dim,
                                     std::span<const Entry> entries) {
  std::vector<Scalar> c(dim * dim * dim, Scalar::zero(field));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) throw ShapeMismatch("bracket entry index out of range");
    if (e.i >= e.j) throw ShapeMismatch("bracket entries must have i < j");
    c[(e.i * dim + e.j) * dim + e.k] += e.c;
    c[(e.j * dim + e.i) * dim + e.k] -= e.c;
  }
  return LieAlgebra(std::move(name), field, dim, std::move(c));
}

bool LieAlgebra::is_abelian() const {
  for (const auto& s : structure_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_vector(x, field_, dim_, "left bracket argument");
  require_vector(y, field_, dim_, "right bracket argument");
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return Vector(field_, std::move(out));
}

LieAction::LieAction(LieAlgebraPtr actor, LieAlgebraPtr acted, std::vector<Scalar> tensor)
    : actor_(std::move(actor)), acted_(std::move(acted)), tensor_(std::move(tensor)) {
  if (!actor_ || !acted_) throw InvalidStructure("action needs both algebras");
  if (actor_->field() != acted_->field()) throw FieldMismatch("actor and acted algebras have different fields");
  const std::size_t expected = actor_->dim() * acted_->dim() * acted_->dim();
  if (tensor_.size() != expected) {
    throw ShapeMismatch("action tensor needs " + std::to_string(expected) + " entries, got " +
                        std::to_string(tensor_.size()));
  }
  require_tensor_fields(actor_->field(), tensor_);
}

LieAction LieAction::zero(LieAlgebraPtr actor, LieAlgebraPtr acted) {
  const std::size_t n = actor->dim() * acted->dim() * acted->dim();
  const FieldSpec field = actor->field();
  return LieAction(std::move(actor), std::move(acted), std::vector<Scalar>(n, Scalar::zero(field)));
}

LieAction LieAction::from_entries(LieAlgebraPtr actor, LieAlgebraPtr acted, std::span<const Entry> entries) {
  const std::size_t np = actor->dim();
  const std::size_t nm = acted->dim();
  std::vector<Scalar> a(np * nm * nm, Scalar::zero(actor->field()));
  for (const auto& e : entries) {
    if (e.i >= np || e.j >= nm || e.k >= nm) throw ShapeMismatch("action entry index out of range");
    a[(e.i * nm + e.j) * nm + e.k] += e.c;
  }
  return LieAction(std::move(actor), std::move(acted), std::move(a));
}

Vector LieAction::act(const Vector& p, const Vector& m) const {
  const FieldSpec& field = actor_->field();
  const std::size_t np = actor_->dim();
  const std::size_t nm = acted_->dim();
  require_vector(p, field, np, "acting element");
  require_vector(m, field, nm, "acted element");
  std::vector<Scalar> out(nm, Scalar::zero(field));
  for (std::size_t i = 0; i < np; ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < nm; ++j) {
      if (m[j].is_zero()) continue;
      const Scalar w = p[i] * m[j];
      for (std::size_t k = 0; k < nm; ++k) {
        const Scalar& a = coefficient(i, j, k);
        if (!a.is_zero()) out[k] += w * a;
      }
    }
  }
  return Vector(field, std::move(out));
}

CrossedModule::CrossedModule(std::string name, LieAlgebraPtr m_algebra, LieAlgebraPtr p_algebra, LinearMap boundary,
                             LieAction action)
    : name_(std::move(name)),
      m_(std::move(m_algebra)),
      p_(std::move(p_algebra)),
      boundary_(std::move(boundary)),
      action_(std::move(action)) {
  if (!m_ || !p_) throw InvalidStructure("crossed module needs both algebras");
  if (m_->field() != p_->field() || boundary_.field() != p_->field()) {
    throw FieldMismatch("crossed module '" + name_ + "' mixes fields");
  }
  if (boundary_.rows() != p_->dim() || boundary_.cols() != m_->dim()) {
    throw ShapeMismatch("boundary of '" + name_ + "' must be " + std::to_string(p_->dim()) + "x" +
                        std::to_string(m_->dim()));
  }
  if (!(action_.actor() == *p_) || !(action_.acted() == *m_)) {
    throw InvalidStructure("action of '" + name_ + "' is not an action of P on M");
  }
}

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y) { return algebra.bracket(x, y); }

Vector act(const LieAction& action, const Vector& p, const Vector& m) { return action.act(p, m); }

ValidationReport validate_lie_algebra(const LieAlgebra& L) {
  ValidationReport report;
  report.checked("antisymmetry");
  report.checked("jacobi");
  const std::size_t n = L.dim();
  const FieldSpec& field = L.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar lhs = L.constant(i, j, k);
        const Scalar rhs = i == j ? Scalar::zero(field) : -L.constant(j, i, k);
        if (!(lhs == rhs)) report.fail("antisymmetry", {i, j, k}, single(lhs), single(rhs));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        const Vector ei = L.basis(i), ej = L.basis(j), el = L.basis(l);
        const Vector sum = L.bracket(ei, L.bracket(ej, el)) + L.bracket(ej, L.bracket(el, ei)) +
                           L.bracket(el, L.bracket(ei, ej));
        if (!sum.is_zero()) report.fail("jacobi", {i, j, l}, sum, Vector::zero(field, n));
      }
    }
  }
  return report;
}

ValidationReport validate_action(const LieAction& A) {
  ValidationReport report;
  report.checked("action_bracket");
  report.checked("action_leibniz");
  const LieAlgebra& P = A.actor();
  const LieAlgebra& M = A.acted();
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < P.dim(); ++j) {
      for (std::size_t k = 0; k < M.dim(); ++k) {
        const Vector pi = P.basis(i), pj = P.basis(j), m = M.basis(k);
        const Vector lhs = A.act(P.bracket(pi, pj), m);
        const Vector rhs = A.act(pi, A.act(pj, m)) - A.act(pj, A.act(pi, m));
        if (!(lhs == rhs)) report.fail("action_bracket", {i, j, k}, lhs, rhs);
      }
    }
  }
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      for (std::size_t k = 0; k < M.dim(); ++k) {
        const Vector p = P.basis(i), mj = M.basis(j), mk = M.basis(k);
        const Vector lhs = A.act(p, M.bracket(mj, mk));
        const Vector rhs = M.bracket(A.act(p, mj), mk) + M.bracket(mj, A.act(p, mk));
        if (!(lhs == rhs)) report.fail("action_leibniz", {i, j, k}, lhs, rhs);
      }
    }
  }
  return report;
}

ValidationReport validate_crossed_module(const CrossedModule& X) {
  ValidationReport report;
  report.checked("boundary_morphism");
  report.checked("cm1");
  report.checked("cm2");
  const LieAlgebra& M = X.m_algebra();
  const LieAlgebra& P = X.p_algebra();
  const LinearMap& bd = X.boundary();
  const LieAction& A = X.action();
  for (std::size_t i = 0; i < M.dim(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const Vector lhs = bd.apply(M.bracket(M.basis(i), M.basis(j)));
      const Vector rhs = P.bracket(bd.column(i), bd.column(j));
      if (!(lhs == rhs)) report.fail("boundary_morphism", {i, j}, lhs, rhs);
    }
  }
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const Vector lhs = bd.apply(A.act(P.basis(i), M.basis(j)));
      const Vector rhs = P.bracket(P.basis(i), bd.column(j));
      if (!(lhs == rhs)) report.fail("cm1", {i, j}, lhs, rhs);
    }
  }
  for (std::size_t i = 0; i < M.dim(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const Vector lhs = A.act(bd.column(i), M.basis(j));
      const Vector rhs = M.bracket(M.basis(i), M.basis(j));
      if (!(lhs == rhs)) report.fail("cm2", {i, j}, lhs, rhs);
    }
  }
  return report;
}

ValidationReport validate_crossed_module_full(const CrossedModule& X) {
  ValidationReport report;
  report.merge(validate_lie_algebra(X.m_algebra()), "M.");
  report.merge(validate_lie_algebra(X.p_algebra()), "P.");
  report.merge(validate_action(X.action()));
  report.merge(validate_crossed_module(X));
  return report;
}

CrossedModule inclusion_crossed_module(const LieAlgebraPtr& P, std::span<const Vector> ideal_basis, std::string name) {
  const FieldSpec& field = P->field();
  for (const auto& v : ideal_basis) require_vector(v, field, P->dim(), "ideal basis vector");
  if (rank(field, P->dim(), ideal_basis) != ideal_basis.size()) {
    throw InvalidStructure("ideal basis vectors are linearly dependent");
  }
  const std::size_t k = ideal_basis.size();
  const auto coords = [&](const Vector& w) { return coordinates_in(ideal_basis, w); };

  std::vector<Scalar> action(P->dim() * k * k, Scalar::zero(field));
  for (std::size_t i = 0; i < P->dim(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector w = P->bracket(P->basis(i), ideal_basis[j]);
      const auto c = coords(w);
      if (!c) throw NotAnIdeal(i, j, w.to_string());
      for (std::size_t t = 0; t < k; ++t) action[(i * k + j) * k + t] = (*c)[t];
    }
  }
  std::vector<Scalar> structure(k * k * k, Scalar::zero(field));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto c = coords(P->bracket(ideal_basis[a], ideal_basis[b]));
      // Brackets inside an ideal stay in it once closure under P is known.
      if (!c) throw InvalidStructure("bracket of ideal vectors leaves the span");
      for (std::size_t t = 0; t < k; ++t) structure[(a * k + b) * k + t] = (*c)[t];
    }
  }
  if (name.empty()) name = "inc(" + P->name() + ")";
  auto M = std::make_shared<const LieAlgebra>(name + ".M", field, k, std::move(structure));
  LinearMap boundary = LinearMap::from_columns(field, P->dim(), ideal_basis);
  LieAction bracket_action(P, M, std::move(action));
  return CrossedModule(std::move(name), M, P, std::move(boundary), std::move(bracket_action));
}

CrossedModule adjoint_crossed_module(const LieAlgebraPtr& P, std::string name) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < P->dim(); ++i) basis.push_back(P->basis(i));
  if (name.empty()) name = "ad(" + P->name() + ")";
  return inclusion_crossed_module(P, basis, std::move(name));
}

CrossedModule abelian_zero_crossed_module(const LieAlgebraPtr& P, const LieAction& module_action, std::string name) {
  if (!(module_action.actor() == *P)) throw InvalidStructure("module action is not an action of the given P");
  if (!module_action.acted().is_abelian()) {
    throw InvalidStructure("kernel algebra '" + module_action.acted().name() +
                           "' is not abelian; the Peiffer identity would fail with a zero boundary");
  }
  const std::size_t nm = module_action.acted().dim();
  if (name.empty()) name = "zero(" + P->name() + ")";
  return CrossedModule(std::move(name), module_action.acted_ptr(), P, LinearMap::zero(P->field(), P->dim(), nm),
                       module_action);
}

ImageIdealResult image_is_ideal(const CrossedModule& X) {
  const LieAlgebra& P = X.p_algebra();
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < X.boundary().cols(); ++j) columns.push_back(X.boundary().column(j));
  ImageIdealResult result;
  result.spanning_set = span_basis(P.field(), P.dim(), columns);
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < result.spanning_set.size(); ++j) {
      if (!coordinates_in(result.spanning_set, P.bracket(P.basis(i), result.spanning_set[j]))) {
        result.witness = std::make_pair(i, j);
        return result;
      }
    }
  }
  result.is_ideal = true;
  return result;
}

}  // namespace lxmod
