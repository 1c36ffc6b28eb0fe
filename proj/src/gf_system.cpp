#include "lxmod/gf_system.hpp"

#include <algorithm>
#include <numeric>

#include "lxmod/errors.hpp"
#include "lxmod/morphism.hpp"

namespace lxmod::gf {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * a % p;
    a = a * a % p;
    exp >>= 1;
  }
  return result;
}

std::uint32_t residue(const Scalar& s) { return s.residue(); }

}  // namespace

Equation EquationBuilder::reduce() const {
  Equation eq;
  eq.constant = static_cast<std::uint32_t>(constant_);
  for (const auto& [var, c] : linear_) {
    if (c) eq.linear.push_back({var, static_cast<std::uint32_t>(c)});
  }
  for (const auto& [key, c] : quadratic_) {
    if (c) eq.quadratic.push_back({key.first, key.second, static_cast<std::uint32_t>(c)});
  }
  return eq;
}

PolySystem::PolySystem(std::uint32_t modulus, std::uint32_t num_vars) : modulus_(modulus), num_vars_(num_vars) {}

void PolySystem::add(const EquationBuilder& builder) {
  Equation eq = builder.reduce();
  if (eq.linear.empty() && eq.quadratic.empty()) {
    if (eq.constant != 0) {
      inconsistent_ = true;
      equations_.insert(Equation{1, {}, {}});
    }
    return;
  }
  // Scale so the leading non-constant coefficient is 1.
  const std::uint32_t lead = eq.quadratic.empty() ? eq.linear.front().coef : eq.quadratic.front().coef;
  if (lead != 1) {
    const std::uint64_t inv = inverse_mod(lead, modulus_);
    eq.constant = static_cast<std::uint32_t>(eq.constant * inv % modulus_);
    for (auto& t : eq.linear) t.coef = static_cast<std::uint32_t>(t.coef * inv % modulus_);
    for (auto& t : eq.quadratic) t.coef = static_cast<std::uint32_t>(t.coef * inv % modulus_);
  }
  equations_.insert(std::move(eq));
}

bool PolySystem::satisfied_by(const std::vector<std::uint32_t>& x) const {
  for (const auto& eq : equations_) {
    std::uint64_t acc = eq.constant;
    for (const auto& t : eq.linear) acc = (acc + std::uint64_t{t.coef} * x[t.var]) % modulus_;
    for (const auto& t : eq.quadratic) acc = (acc + std::uint64_t{t.coef} * x[t.a] % modulus_ * x[t.b]) % modulus_;
    if (acc != 0) return false;
  }
  return true;
}

PackedSystem PolySystem::pack() const {
  std::vector<const Equation*> order;
  order.reserve(equations_.size());
  for (const auto& eq : equations_) order.push_back(&eq);
  std::stable_sort(order.begin(), order.end(), [](const Equation* a, const Equation* b) {
    return a->terms() < b->terms();
  });

  PackedSystem packed;
  packed.modulus = modulus_;
  packed.num_vars = num_vars_;
  packed.lin_begin.push_back(0);
  packed.quad_begin.push_back(0);
  const unsigned __int128 top = modulus_ - 1;
  for (const Equation* eq : order) {
    unsigned __int128 bound = eq->constant;
    packed.constants.push_back(static_cast<std::int32_t>(eq->constant));
    for (const auto& t : eq->linear) {
      packed.lin_var.push_back(t.var);
      packed.lin_coef.push_back(static_cast<std::int32_t>(t.coef));
      bound += t.coef * top;
    }
    for (const auto& t : eq->quadratic) {
      packed.quad_a.push_back(t.a);
      packed.quad_b.push_back(t.b);
      packed.quad_coef.push_back(static_cast<std::int32_t>(t.coef));
      bound += t.coef * top * top;
    }
    packed.lin_begin.push_back(static_cast<std::uint32_t>(packed.lin_var.size()));
    packed.quad_begin.push_back(static_cast<std::uint32_t>(packed.quad_a.size()));
    const std::uint64_t clamped = bound > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(bound);
    packed.max_accumulator = std::max(packed.max_accumulator, clamped);
  }
  return packed;
}

PolySystem compile_morphism_system(const CrossedModule& X, const CrossedModule& Y) {
  if (X.field() != Y.field()) throw FieldMismatch("source and target crossed modules have different fields");
  if (!X.field().is_prime()) throw UnsupportedField("finite field required for enumeration");
  const std::uint32_t p = X.field().modulus();
  const LieAlgebra& M = X.m_algebra();
  const LieAlgebra& P = X.p_algebra();
  const LieAlgebra& M2 = Y.m_algebra();
  const LieAlgebra& P2 = Y.p_algebra();
  const std::uint32_t nM = static_cast<std::uint32_t>(M.dim());
  const std::uint32_t nP = static_cast<std::uint32_t>(P.dim());
  const std::uint32_t nM2 = static_cast<std::uint32_t>(M2.dim());
  const std::uint32_t nP2 = static_cast<std::uint32_t>(P2.dim());
  const auto f1 = [&](std::uint32_t r, std::uint32_t c) { return r * nM + c; };
  const auto f0 = [&](std::uint32_t r, std::uint32_t c) { return nM2 * nM + r * nP + c; };

  PolySystem system(p, nM2 * nM + nP2 * nP);

  // f[e_i, e_j] - [f e_i, f e_j] = 0, componentwise.
  const auto lie_morphism = [&](const LieAlgebra& L, const LieAlgebra& L2, auto var) {
    const std::uint32_t n = static_cast<std::uint32_t>(L.dim());
    const std::uint32_t n2 = static_cast<std::uint32_t>(L2.dim());
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t r = 0; r < n2; ++r) {
          EquationBuilder eq(p);
          for (std::uint32_t k = 0; k < n; ++k) eq.linear(var(r, k), residue(L.constant(i, j, k)));
          for (std::uint32_t a = 0; a < n2; ++a) {
            for (std::uint32_t b = 0; b < n2; ++b) {
              if (const auto c = residue(L2.constant(a, b, r))) eq.quadratic(var(a, i), var(b, j), -(long long)c);
            }
          }
          system.add(eq);
        }
      }
    }
  };
  lie_morphism(M, M2, f1);
  lie_morphism(P, P2, f0);

  // f1(e_i · e_j) - f0(e_i) · f1(e_j) = 0.
  for (std::uint32_t i = 0; i < nP; ++i) {
    for (std::uint32_t j = 0; j < nM; ++j) {
      for (std::uint32_t r = 0; r < nM2; ++r) {
        EquationBuilder eq(p);
        for (std::uint32_t k = 0; k < nM; ++k) eq.linear(f1(r, k), residue(X.action().coefficient(i, j, k)));
        for (std::uint32_t a = 0; a < nP2; ++a) {
          for (std::uint32_t b = 0; b < nM2; ++b) {
            if (const auto c = residue(Y.action().coefficient(a, b, r))) eq.quadratic(f0(a, i), f1(b, j), -(long long)c);
          }
        }
        system.add(eq);
      }
    }
  }

  // ∂' f1 - f0 ∂ = 0.
  for (std::uint32_t j = 0; j < nM; ++j) {
    for (std::uint32_t r = 0; r < nP2; ++r) {
      EquationBuilder eq(p);
      for (std::uint32_t k = 0; k < nM2; ++k) eq.linear(f1(k, j), residue(Y.boundary().at(r, k)));
      for (std::uint32_t k = 0; k < nP; ++k) eq.linear(f0(r, k), -(long long)residue(X.boundary().at(k, j)));
      system.add(eq);
    }
  }
  return system;
}

PolySystem compile_derivation_system(const CrossedMorphism& f) {
  const CrossedModule& X = f.source();
  const CrossedModule& Y = f.target();
  if (!X.field().is_prime()) throw UnsupportedField("finite field required for enumeration");
  const std::uint32_t p = X.field().modulus();
  const LieAlgebra& P = X.p_algebra();
  const LieAlgebra& M2 = Y.m_algebra();
  const std::uint32_t nP = static_cast<std::uint32_t>(P.dim());
  const std::uint32_t nP2 = static_cast<std::uint32_t>(Y.p_algebra().dim());
  const std::uint32_t nM2 = static_cast<std::uint32_t>(M2.dim());
  const auto d = [&](std::uint32_t r, std::uint32_t c) { return r * nP + c; };
  const LieAction& action = Y.action();

  PolySystem system(p, nM2 * nP);
  for (std::uint32_t i = 0; i < nP; ++i) {
    for (std::uint32_t j = 0; j < nP; ++j) {
      for (std::uint32_t r = 0; r < nM2; ++r) {
        EquationBuilder eq(p);
        // d[e_i, e_j]
        for (std::uint32_t k = 0; k < nP; ++k) eq.linear(d(r, k), residue(P.constant(i, j, k)));
        // - f0(e_i)·d(e_j) + f0(e_j)·d(e_i)
        for (std::uint32_t a = 0; a < nP2; ++a) {
          const long long fi = residue(f.f0().at(a, i));
          const long long fj = residue(f.f0().at(a, j));
          for (std::uint32_t b = 0; b < nM2; ++b) {
            const long long c = residue(action.coefficient(a, b, r));
            if (c == 0) continue;
            if (fi) eq.linear(d(b, j), -fi * c);
            if (fj) eq.linear(d(b, i), fj * c);
          }
        }
        // - [d(e_i), d(e_j)]
        for (std::uint32_t a = 0; a < nM2; ++a) {
          for (std::uint32_t b = 0; b < nM2; ++b) {
            if (const auto c = residue(M2.constant(a, b, r))) eq.quadratic(d(a, i), d(b, j), -(long long)c);
          }
        }
        system.add(eq);
      }
    }
  }
  return system;
}

}  // namespace lxmod::gf
