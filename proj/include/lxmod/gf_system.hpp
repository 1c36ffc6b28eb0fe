#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace lxmod {

class CrossedModule;
class CrossedMorphism;

namespace gf {

/// One polynomial equation of degree <= 2 over GF(p) in candidate variables
/// x_0 .. x_{n-1}: constant + Σ c_v x_v + Σ c_ab x_a x_b = 0. Coefficients are
/// residues in [1, p); terms are sorted and merged.
struct Equation {
  struct Linear {
    std::uint32_t var;
    std::uint32_t coef;
    auto operator<=>(const Linear&) const = default;
  };
  struct Quadratic {
    std::uint32_t a;  // a <= b
    std::uint32_t b;
    std::uint32_t coef;
    auto operator<=>(const Quadratic&) const = default;
  };

  std::uint32_t constant = 0;
  std::vector<Linear> linear;
  std::vector<Quadratic> quadratic;

  std::size_t terms() const noexcept { return linear.size() + quadratic.size() + (constant ? 1 : 0); }
  auto operator<=>(const Equation&) const = default;
};

/// Accumulates signed integer terms, reduced mod p as they arrive.
class EquationBuilder {
 public:
  explicit EquationBuilder(std::uint32_t modulus) : modulus_(modulus) {}

  void constant(long long c) { constant_ = fold(constant_, c); }
  void linear(std::uint32_t var, long long c) {
    auto& slot = linear_[var];
    slot = fold(slot, c);
  }
  void quadratic(std::uint32_t a, std::uint32_t b, long long c) {
    if (a > b) std::swap(a, b);
    auto& slot = quadratic_[{a, b}];
    slot = fold(slot, c);
  }

  /// Equation with zero terms dropped.
  Equation reduce() const;

 private:
  long long fold(long long acc, long long c) const {
    const long long p = modulus_;
    return ((acc + c % p) % p + p) % p;
  }

  std::uint32_t modulus_;
  long long constant_ = 0;
  std::map<std::uint32_t, long long> linear_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, long long> quadratic_;
};

/// Flat, cache-friendly form consumed by the evaluation kernels. Equations
/// are ordered by term count so cheap filters reject candidates first.
struct PackedSystem {
  std::uint32_t modulus = 2;
  std::uint32_t num_vars = 0;
  std::vector<std::int32_t> constants;
  std::vector<std::uint32_t> lin_begin;   // equations + 1 offsets
  std::vector<std::uint32_t> quad_begin;  // equations + 1 offsets
  std::vector<std::uint32_t> lin_var;
  std::vector<std::int32_t> lin_coef;
  std::vector<std::uint32_t> quad_a;
  std::vector<std::uint32_t> quad_b;
  std::vector<std::int32_t> quad_coef;
  /// Largest value any equation's unreduced accumulator can reach
  /// (saturates at UINT64_MAX).
  std::uint64_t max_accumulator = 0;

  std::size_t equations() const noexcept { return constants.size(); }
};

/// System of equations over GF(p); normalized (leading coefficient 1) and
/// deduplicated on insertion, so equivalent equations are stored once.
class PolySystem {
 public:
  PolySystem(std::uint32_t modulus, std::uint32_t num_vars);

  void add(const EquationBuilder& builder);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t num_vars() const noexcept { return num_vars_; }
  /// True when some equation reduced to a nonzero constant.
  bool inconsistent() const noexcept { return inconsistent_; }
  const std::set<Equation>& equations() const noexcept { return equations_; }

  /// Direct evaluation at one assignment (values in [0, p)).
  bool satisfied_by(const std::vector<std::uint32_t>& values) const;

  PackedSystem pack() const;

 private:
  std::uint32_t modulus_;
  std::uint32_t num_vars_;
  bool inconsistent_ = false;
  std::set<Equation> equations_;
};

/// Variables: f1 entries (row-major) followed by f0 entries (row-major). The
/// solutions are exactly the pairs passing validate_crossed_morphism.
PolySystem compile_morphism_system(const CrossedModule& source, const CrossedModule& target);

/// Variables: entries of d: P → M' (row-major). The solutions are exactly the
/// f0-derivations at f.
PolySystem compile_derivation_system(const CrossedMorphism& f);

}  // namespace gf
}  // namespace lxmod
