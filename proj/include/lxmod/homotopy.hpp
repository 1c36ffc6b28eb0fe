#pragma once

#include "lxmod/errors.hpp"
#include "lxmod/morphism.hpp"

namespace lxmod {

/// A homotopy arrow: a linear map d: P → M' anchored at its source morphism
/// f: (M, P, ∂) → (M', P', ∂'). The arrow runs from f to
/// g = (f1 + d∂, f0 + ∂'d). The derivation law is checked by
/// is_f0_derivation, not by the constructor.
class Derivation {
 public:
  Derivation(CrossedMorphism base, LinearMap d);

  const CrossedMorphism& base() const noexcept { return base_; }
  const LinearMap& d() const noexcept { return d_; }

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  CrossedMorphism base_;
  LinearMap d_;
};

/// d fails the f0-derivation law; carries the report.
class DerivationLawViolated : public Error {
 public:
  explicit DerivationLawViolated(ValidationReport report)
      : Error("not an f0-derivation: " + report.summary()), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Axiom "derivation_law" on all basis pairs (i, j) of P:
/// d[e_i,e_j] = f0(e_i)·d(e_j) - f0(e_j)·d(e_i) + [d(e_i), d(e_j)].
ValidationReport is_f0_derivation(const LinearMap& d, const CrossedMorphism& f);

/// g with g0 = f0 + ∂'∘d and g1 = f1 + d∘∂. Throws InvalidStructure if f is
/// not a crossed-module morphism and DerivationLawViolated if d is not an
/// f0-derivation. The result is re-validated; a failure there is a logic_error.
CrossedMorphism homotopy_target(const CrossedMorphism& f, const LinearMap& d);
CrossedMorphism homotopy_target(const Derivation& h);

/// The two homotopy equations plus the derivation law. Throws EndpointMismatch
/// when f and g have different endpoints.
bool connects(const LinearMap& d, const CrossedMorphism& f, const CrossedMorphism& g);

Derivation identity_homotopy(const CrossedMorphism& f);
/// (g, -d) where g is the target of h.
Derivation inverse_homotopy(const Derivation& h);
/// (source of h1, d1 + d2); h2 must start where h1 ends (EndpointMismatch).
Derivation concat_homotopies(const Derivation& h1, const Derivation& h2);

namespace detail {

/// (f1 + d∂, f0 + ∂'d) without any axiom checks.
CrossedMorphism induced_morphism(const CrossedMorphism& f, const LinearMap& d);

}  // namespace detail

}  // namespace lxmod
