#include <gtest/gtest.h>

#include <random>

#include "lxmod/errors.hpp"
#include "lxmod/linear.hpp"

namespace lxmod {
namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F3 = FieldSpec::prime(3);

Scalar q(const char* text) { return Scalar::parse(Q, text); }

TEST(Scalar, RationalArithmeticIsExact) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_EQ((q("1/2") + q("1/3")).to_string(), "5/6");
  EXPECT_EQ(q("-3/4") * q("4/3"), q("-1"));
  EXPECT_EQ(q("1") / q("3"), q("1/3"));
}

TEST(Scalar, PrimeFieldWrapsAround) {
  EXPECT_EQ(Scalar::from_int(F3, 2) * Scalar::from_int(F3, 2), Scalar::one(F3));
  EXPECT_EQ((-Scalar::one(F3)).to_string(), "2");
  EXPECT_EQ(Scalar::from_int(F3, -7).residue(), 2u);
  EXPECT_EQ(Scalar::from_int(F3, 2).inverse(), Scalar::from_int(F3, 2));
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(q("2/4").to_string(), "1/2");
  EXPECT_EQ(q("2/4"), q("1/2"));
  EXPECT_EQ(q("6/3").to_string(), "2");
  EXPECT_EQ(q("0/5").to_string(), "0");
  EXPECT_EQ(std::hash<Scalar>{}(q("2/4")), std::hash<Scalar>{}(q("1/2")));
}

TEST(Scalar, ParseRejectsBadLiterals) {
  EXPECT_THROW(Scalar::parse(F3, "3"), InvalidStructure);
  EXPECT_THROW(Scalar::parse(F3, "-1"), InvalidStructure);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), Error);
  EXPECT_THROW(Scalar::parse(Q, "x"), InvalidStructure);
  EXPECT_THROW(Scalar::parse(Q, ""), InvalidStructure);
}

TEST(Scalar, FieldMixingThrows) {
  EXPECT_THROW(Scalar::one(Q) + Scalar::one(F3), FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::prime(5)) * Scalar::one(F3), FieldMismatch);
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar::zero(Q).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::one(F3) / Scalar::zero(F3), DivisionByZero);
}

TEST(FieldSpec, RejectsComposite) {
  EXPECT_THROW(FieldSpec::prime(4), InvalidStructure);
  EXPECT_THROW(FieldSpec::prime(1), InvalidStructure);
  EXPECT_EQ(FieldSpec::prime(7).to_string(), "GF(7)");
  EXPECT_EQ(Q.to_string(), "Q");
}

TEST(FieldAxioms, HoldOnSamples) {
  std::mt19937 rng(7);
  for (const FieldSpec& field : {Q, FieldSpec::prime(7), FieldSpec::prime(2147483647)}) {
    std::uniform_int_distribution<long long> pick(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
      const Scalar a = Scalar::from_int(field, pick(rng));
      const Scalar b = field.is_prime() ? Scalar::from_int(field, pick(rng)) : Scalar::from_int(field, pick(rng)) / Scalar::from_int(field, 7);
      const Scalar c = Scalar::from_int(field, pick(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(LinearMap, ApplyExamples) {
  const LinearMap id = LinearMap::identity(Q, 2);
  EXPECT_EQ(id.apply(Vector::from_ints(Q, {1, 2})), Vector::from_ints(Q, {1, 2}));
  EXPECT_TRUE(LinearMap::zero(Q, 3, 2).apply(Vector::from_ints(Q, {5, -1})).is_zero());
  const FieldSpec F2 = FieldSpec::prime(2);
  const LinearMap swap = LinearMap::from_ints(F2, 2, 2, {0, 1, 1, 0});
  EXPECT_EQ(map_apply(swap, Vector::from_ints(F2, {1, 0})), Vector::from_ints(F2, {0, 1}));
}

TEST(LinearMap, CombineExamples) {
  const LinearMap f = LinearMap::from_ints(Q, 2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(compose(LinearMap::identity(Q, 2), f), f);
  EXPECT_EQ(compose(f, LinearMap::identity(Q, 3)), f);
  EXPECT_TRUE(add(f, negate(f)).is_zero());
  EXPECT_EQ(negate(LinearMap::from_ints(F3, 1, 1, {1})), LinearMap::from_ints(F3, 1, 1, {2}));
}

TEST(LinearMap, ShapeChecks) {
  const LinearMap f = LinearMap::zero(Q, 2, 3);
  EXPECT_THROW(add(f, LinearMap::zero(Q, 3, 2)), ShapeMismatch);
  EXPECT_THROW(compose(f, f), ShapeMismatch);
  EXPECT_THROW(f.apply(Vector::zero(Q, 2)), ShapeMismatch);
  EXPECT_THROW(LinearMap(Q, 2, 2, {Scalar::one(Q)}), ShapeMismatch);
}

TEST(LinearMap, CompositionIsAssociative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> pick(0, 6);
  const FieldSpec F7 = FieldSpec::prime(7);
  const auto random_map = [&](std::size_t r, std::size_t c) {
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < r * c; ++i) e.push_back(Scalar::from_int(F7, pick(rng)));
    return LinearMap(F7, r, c, std::move(e));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const LinearMap a = random_map(2, 3), b = random_map(3, 4), c = random_map(4, 2);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    const LinearMap b2 = random_map(3, 4);
    EXPECT_EQ(compose(a, b + b2), compose(a, b) + compose(a, b2));
  }
}

TEST(Span, CoordinatesAndRank) {
  const Vector basis[] = {Vector::from_ints(Q, {1, 0, 1}), Vector::from_ints(Q, {0, 1, 1})};
  const auto coords = coordinates_in(basis, Vector::from_ints(Q, {2, 3, 5}));
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(*coords, Vector::from_ints(Q, {2, 3}));
  EXPECT_FALSE(coordinates_in(basis, Vector::from_ints(Q, {0, 0, 1})).has_value());
  const Vector dependent[] = {Vector::from_ints(Q, {1, 2}), Vector::from_ints(Q, {2, 4})};
  EXPECT_EQ(rank(Q, 2, dependent), 1u);
  EXPECT_EQ(span_basis(Q, 2, dependent).size(), 1u);
}

}  // namespace
}  // namespace lxmod
