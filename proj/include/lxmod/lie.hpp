#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lxmod/linear.hpp"
#include "lxmod/report.hpp"

namespace lxmod {

/// Finite-dimensional Lie algebra given by dense structure constants:
/// [e_i, e_j] = Σ_k c[i][j][k] e_k. Construction only checks shapes; the
/// axioms are checked by validate_lie_algebra.
class LieAlgebra {
 public:
  /// Nonzero bracket entry c[i][j][k] (0-based).
  struct Entry {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar c;
  };

  LieAlgebra(std::string name, FieldSpec field, std::size_t dim, std::vector<Scalar> structure);

  static LieAlgebra abelian(std::string name, const FieldSpec& field, std::size_t dim);
  /// Builds from entries with i < j; c[j][i][k] = -c[i][j][k] is filled in.
  static LieAlgebra from_brackets(std::string name, const FieldSpec& field, std::size_t dim,
                                  std::span<const Entry> entries);

  const std::string& name() const noexcept { return name_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  std::span<const Scalar> structure() const noexcept { return structure_; }
  bool is_abelian() const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis(std::size_t i) const { return Vector::basis(field_, dim_, i); }

  /// Structural: field, dimension and tensor. Names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.structure_ == b.structure_;
  }

 private:
  std::string name_;
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Scalar> structure_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Bilinear action P × M → M: e_i^P · e_j^M = Σ_k a[i][j][k] e_k^M.
class LieAction {
 public:
  struct Entry {
    std::size_t i;  // actor basis index
    std::size_t j;  // acted basis index
    std::size_t k;
    Scalar c;
  };

  LieAction(LieAlgebraPtr actor, LieAlgebraPtr acted, std::vector<Scalar> tensor);

  static LieAction zero(LieAlgebraPtr actor, LieAlgebraPtr acted);
  static LieAction from_entries(LieAlgebraPtr actor, LieAlgebraPtr acted, std::span<const Entry> entries);

  const LieAlgebra& actor() const noexcept { return *actor_; }
  const LieAlgebra& acted() const noexcept { return *acted_; }
  const LieAlgebraPtr& actor_ptr() const noexcept { return actor_; }
  const LieAlgebraPtr& acted_ptr() const noexcept { return acted_; }
  const FieldSpec& field() const noexcept { return actor_->field(); }
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t m = acted_->dim();
    return tensor_[(i * m + j) * m + k];
  }
  std::span<const Scalar> tensor() const noexcept { return tensor_; }

  Vector act(const Vector& p, const Vector& m) const;

  friend bool operator==(const LieAction& a, const LieAction& b) {
    return *a.actor_ == *b.actor_ && *a.acted_ == *b.acted_ && a.tensor_ == b.tensor_;
  }

 private:
  LieAlgebraPtr actor_;
  LieAlgebraPtr acted_;
  std::vector<Scalar> tensor_;
};

/// (M, P, ∂) with an action of P on M.
class CrossedModule {
 public:
  CrossedModule(std::string name, LieAlgebraPtr m_algebra, LieAlgebraPtr p_algebra, LinearMap boundary,
                LieAction action);

  const std::string& name() const noexcept { return name_; }
  const FieldSpec& field() const noexcept { return p_->field(); }
  const LieAlgebra& m_algebra() const noexcept { return *m_; }
  const LieAlgebra& p_algebra() const noexcept { return *p_; }
  const LieAlgebraPtr& m_ptr() const noexcept { return m_; }
  const LieAlgebraPtr& p_ptr() const noexcept { return p_; }
  const LinearMap& boundary() const noexcept { return boundary_; }
  const LieAction& action() const noexcept { return action_; }

  /// Structural equality; names are ignored.
  friend bool operator==(const CrossedModule& a, const CrossedModule& b) {
    return *a.m_ == *b.m_ && *a.p_ == *b.p_ && a.boundary_ == b.boundary_ && a.action_ == b.action_;
  }

 private:
  std::string name_;
  LieAlgebraPtr m_;
  LieAlgebraPtr p_;
  LinearMap boundary_;
  LieAction action_;
};

using CrossedModulePtr = std::shared_ptr<const CrossedModule>;

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y);
Vector act(const LieAction& action, const Vector& p, const Vector& m);

/// Axioms "antisymmetry" (indices i,j,k; i <= j) and "jacobi" (i < j < l).
/// In characteristic 2 antisymmetry includes c[i][i][k] = 0.
ValidationReport validate_lie_algebra(const LieAlgebra& algebra);

/// Axioms "action_bracket" ([p,p']·m = p·(p'·m) - p'·(p·m); indices p,p',m)
/// and "action_leibniz" (p·[m,m'] = [p·m,m'] + [m,p·m']; indices p,m,m').
ValidationReport validate_action(const LieAction& action);

/// Axioms "boundary_morphism", "cm1" (indices p,m) and "cm2" (indices m,m').
ValidationReport validate_crossed_module(const CrossedModule& xmod);

/// Everything: both algebras ("M."/"P." prefixes), the action and the
/// crossed-module axioms.
ValidationReport validate_crossed_module_full(const CrossedModule& xmod);

/// (I, P, inc) for the ideal I spanned by `ideal_basis`. M is given the
/// structure constants of I in that basis and the action is the bracket of P.
/// Throws NotAnIdeal naming the first basis pair leaving the span, and
/// InvalidStructure when the vectors are dependent.
CrossedModule inclusion_crossed_module(const LieAlgebraPtr& p_algebra, std::span<const Vector> ideal_basis,
                                       std::string name = {});

/// Inclusion of P into itself (∂ = identity, adjoint action).
CrossedModule adjoint_crossed_module(const LieAlgebraPtr& p_algebra, std::string name = {});

/// (M, P, 0) for an action of P on an abelian M. Throws InvalidStructure when
/// M has a nonzero bracket.
CrossedModule abelian_zero_crossed_module(const LieAlgebraPtr& p_algebra, const LieAction& module_action,
                                          std::string name = {});

struct ImageIdealResult {
  bool is_ideal = false;
  /// Row-reduced basis of ∂M inside P.
  std::vector<Vector> spanning_set;
  /// (P basis index, spanning-set index) of the first bracket leaving ∂M.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ImageIdealResult image_is_ideal(const CrossedModule& xmod);

}  // namespace lxmod
