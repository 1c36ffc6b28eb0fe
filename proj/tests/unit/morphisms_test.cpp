#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lxmod/errors.hpp"

namespace lxmod {
namespace {

using namespace fixtures;

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F3 = FieldSpec::prime(3);

TEST(IsLieMorphism, Examples) {
  const auto aff = affine2(Q);
  EXPECT_TRUE(is_lie_morphism(LinearMap::identity(Q, 2), *aff, *aff).ok());
  EXPECT_TRUE(is_lie_morphism(LinearMap::from_ints(Q, 2, 2, {1, 0, 0, 2}), *aff, *aff).ok());

  const auto report = is_lie_morphism(LinearMap::from_ints(Q, 2, 2, {0, 1, 1, 0}), *aff, *aff);
  const Failure* f = report.first_failure("lie_morphism");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(f->lhs, Vector::from_ints(Q, {1, 0}));
  EXPECT_EQ(f->rhs, Vector::from_ints(Q, {0, -1}));
  EXPECT_THROW(is_lie_morphism(LinearMap::identity(Q, 3), *aff, *aff), ShapeMismatch);
}

TEST(ValidateCrossedMorphism, Examples) {
  const auto x = x_aff(Q);
  EXPECT_TRUE(validate_crossed_morphism(identity_morphism(x)).ok());
  EXPECT_TRUE(validate_crossed_morphism(x_aff_endo(x, 1, 1, 1)).ok());

  const CrossedMorphism bad(x, x, LinearMap::from_ints(Q, 1, 1, {2}), LinearMap::identity(Q, 2));
  const auto report = validate_crossed_morphism(bad);
  const auto fails = report.failures_of("square");
  ASSERT_EQ(fails.size(), 1u);
  EXPECT_EQ(fails[0].lhs, Vector::from_ints(Q, {0, 2}));
  EXPECT_EQ(fails[0].rhs, Vector::from_ints(Q, {0, 1}));
}

TEST(ValidateCrossedMorphism, ClassifiedEndomorphismFamily) {
  // Over GF(3) the endomorphisms of X_aff are exactly c = 0, d(1 - a) = 0.
  const auto x = x_aff(F3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d) {
        const bool expected = (d * (1 - a)) % 3 == 0;
        EXPECT_EQ(validate_crossed_morphism(x_aff_endo(x, a, b, d)).ok(), expected) << a << b << d;
      }
}

TEST(Compose, Examples) {
  const auto x = x_aff(Q);
  const CrossedMorphism phi = x_aff_endo(x, 1, 1, 1);
  EXPECT_EQ(compose_morphisms(identity_morphism(x), phi), phi);
  EXPECT_EQ(compose_morphisms(phi, identity_morphism(x)), phi);
  EXPECT_EQ(compose_morphisms(phi, phi), x_aff_endo(x, 1, 2, 1));
}

TEST(Compose, EndpointMismatch) {
  const auto x = x_aff(Q);
  const auto t = x_triv(Q);
  EXPECT_THROW(compose_morphisms(identity_morphism(x), identity_morphism(t)), EndpointMismatch);
}

TEST(Compose, StructuralEndpointsSuffice) {
  // Two separately built copies of X_aff are the same crossed module.
  const auto x = x_aff(Q);
  const auto y = x_aff(Q);
  EXPECT_NO_THROW(compose_morphisms(identity_morphism(x), identity_morphism(y)));
  EXPECT_EQ(identity_morphism(x), identity_morphism(y));
}

TEST(Identity, Shapes) {
  const FieldSpec F2 = FieldSpec::prime(2);
  const CrossedMorphism id = identity_morphism(x_triv(F2));
  EXPECT_EQ(id.f1(), LinearMap::identity(F2, 1));
  EXPECT_EQ(id.f0(), LinearMap::identity(F2, 1));
  const auto empty = abelian(Q, 0);
  const auto zero = std::make_shared<const CrossedModule>("0", empty, empty, LinearMap::zero(Q, 0, 0), LieAction::zero(empty, empty));
  const CrossedMorphism z = identity_morphism(zero);
  EXPECT_EQ(z.f1().rows(), 0u);
  EXPECT_TRUE(validate_crossed_morphism(z).ok());
}

TEST(Compose, ClosedAndAssociativeOnEnumeratedEndos) {
  const auto x = x_aff(F3);
  const auto endos = enumerate_morphisms(x, x);
  ASSERT_EQ(endos.size(), 15u);
  for (const auto& f : endos) {
    for (const auto& g : endos) {
      const auto fg = compose_morphisms(f, g);
      EXPECT_TRUE(validate_crossed_morphism(fg).ok());
      for (const auto& h : endos) {
        EXPECT_EQ(compose_morphisms(fg, h), compose_morphisms(f, compose_morphisms(g, h)));
      }
    }
  }
}

}  // namespace
}  // namespace lxmod
