#include "lxmod/homotopy.hpp"

#include <stdexcept>

namespace lxmod {

namespace {

void require_shape(const LinearMap& d, const CrossedMorphism& f) {
  const std::size_t rows = f.target().m_algebra().dim();
  const std::size_t cols = f.source().p_algebra().dim();
  if (d.field() != f.source().field()) throw FieldMismatch("derivation matrix is over the wrong field");
  if (d.rows() != rows || d.cols() != cols) {
    throw ShapeMismatch("derivation must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                        std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
  }
}

}  // namespace

Derivation::Derivation(CrossedMorphism base, LinearMap d) : base_(std::move(base)), d_(std::move(d)) {
  require_shape(d_, base_);
}

ValidationReport is_f0_derivation(const LinearMap& d, const CrossedMorphism& f) {
  require_shape(d, f);
  const LieAlgebra& P = f.source().p_algebra();
  const LieAlgebra& M2 = f.target().m_algebra();
  const LieAction& action = f.target().action();
  ValidationReport report;
  report.checked("derivation_law");
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = 0; j < P.dim(); ++j) {
      const Vector di = d.column(i);
      const Vector dj = d.column(j);
      const Vector lhs = d.apply(P.bracket(P.basis(i), P.basis(j)));
      const Vector rhs =
          action.act(f.f0().column(i), dj) - action.act(f.f0().column(j), di) + M2.bracket(di, dj);
      if (!(lhs == rhs)) report.fail("derivation_law", {i, j}, lhs, rhs);
    }
  }
  return report;
}

CrossedMorphism detail::induced_morphism(const CrossedMorphism& f, const LinearMap& d) {
  require_shape(d, f);
  return CrossedMorphism(f.source_ptr(), f.target_ptr(), add(f.f1(), compose(d, f.source().boundary())),
                         add(f.f0(), compose(f.target().boundary(), d)));
}

CrossedMorphism homotopy_target(const CrossedMorphism& f, const LinearMap& d) {
  const auto base_report = validate_crossed_morphism(f);
  if (!base_report.ok()) throw InvalidStructure("source is not a crossed-module morphism: " + base_report.summary());
  auto law = is_f0_derivation(d, f);
  if (!law.ok()) throw DerivationLawViolated(std::move(law));
  CrossedMorphism g = detail::induced_morphism(f, d);
  // validate_crossed_morphism covers both g0∂ = ∂'g1 ("square") and
  // g1(p·m) = g0(p)·g1(m) ("equivariance").
  const auto g_report = validate_crossed_morphism(g);
  if (!g_report.ok()) throw std::logic_error("induced morphism failed validation: " + g_report.summary());
  return g;
}

CrossedMorphism homotopy_target(const Derivation& h) { return homotopy_target(h.base(), h.d()); }

bool connects(const LinearMap& d, const CrossedMorphism& f, const CrossedMorphism& g) {
  if (!same_crossed_module(f.source_ptr(), g.source_ptr()) || !same_crossed_module(f.target_ptr(), g.target_ptr())) {
    throw EndpointMismatch("connects: f and g have different endpoints");
  }
  const CrossedMorphism induced = detail::induced_morphism(f, d);
  if (!(induced.f0() == g.f0()) || !(induced.f1() == g.f1())) return false;
  return is_f0_derivation(d, f).ok();
}

Derivation identity_homotopy(const CrossedMorphism& f) {
  return Derivation(f, LinearMap::zero(f.source().field(), f.target().m_algebra().dim(), f.source().p_algebra().dim()));
}

Derivation inverse_homotopy(const Derivation& h) {
  return Derivation(detail::induced_morphism(h.base(), h.d()), negate(h.d()));
}

Derivation concat_homotopies(const Derivation& h1, const Derivation& h2) {
  if (!(detail::induced_morphism(h1.base(), h1.d()) == h2.base())) {
    throw EndpointMismatch("concat: second homotopy does not start at the target of the first");
  }
  return Derivation(h1.base(), add(h1.d(), h2.d()));
}

}  // namespace lxmod
