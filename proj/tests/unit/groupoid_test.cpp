#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

namespace lxmod {
namespace {

using namespace fixtures;

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

std::vector<std::size_t> sizes(const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.size());
  return out;
}

TEST(UnionFind, Basics) {
  UnionFind uf(5);
  EXPECT_TRUE(uf.unite(0, 3));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_FALSE(uf.unite(4, 0));
  EXPECT_EQ(uf.find(0), uf.find(4));
  EXPECT_NE(uf.find(1), uf.find(0));
}

TEST(HomGroupoid, TrivialOverGf2) {
  const auto x = x_triv(F2);
  const HomGroupoid G = build_hom_groupoid(x, x);
  EXPECT_EQ(G.objects.size(), 2u);
  EXPECT_EQ(G.arrows.size(), 4u);
  EXPECT_TRUE(validate_groupoid(G).ok());
  EXPECT_EQ(sizes(homotopy_classes(G)), (std::vector<std::size_t>{2}));
}

TEST(HomGroupoid, AffineOverGf3) {
  const auto x = x_aff(F3);
  const HomGroupoid G = build_hom_groupoid(x, x);
  EXPECT_EQ(G.objects.size(), 15u);
  EXPECT_EQ(G.arrows.size(), 99u);
  const auto report = validate_groupoid(G);
  EXPECT_TRUE(report.ok()) << report.summary();
  const auto classes = homotopy_classes(G);
  ASSERT_EQ(classes.size(), 3u);
  // Ordered by smallest member: the a = 0 class, then a = 1, then a = 2.
  EXPECT_EQ(sizes(classes), (std::vector<std::size_t>{3, 9, 3}));
  for (std::size_t c = 0; c < 3; ++c) {
    for (const std::size_t o : classes[c]) EXPECT_EQ(G.objects[o].f0().at(0, 0).residue(), c);
  }
}

TEST(HomGroupoid, ArrowsPerObject) {
  const auto x = x_aff(F3);
  const HomGroupoid G = build_hom_groupoid(x, x);
  std::vector<std::size_t> out(G.objects.size());
  for (const auto& a : G.arrows) ++out[a.source];
  for (std::size_t o = 0; o < G.objects.size(); ++o) {
    EXPECT_EQ(out[o], G.objects[o].f0().at(0, 0).is_one() ? 9u : 3u);
  }
}

TEST(HomGroupoid, EmptyWhenNoMorphisms) {
  // A hand-made object list with no arrows is vacuously a groupoid.
  HomGroupoid G;
  G.source_module = x_aff(F3);
  G.target_module = G.source_module;
  EXPECT_TRUE(validate_groupoid(G).ok());
  EXPECT_TRUE(homotopy_classes(G).empty());
}

TEST(HomGroupoid, IdentitiesOnlyGiveSingletonClasses) {
  const auto x = x_aff(F3);
  HomGroupoid G = build_hom_groupoid(x, x);
  std::erase_if(G.arrows, [](const HomGroupoid::Arrow& a) { return !a.homotopy.d().is_zero(); });
  EXPECT_TRUE(validate_groupoid(G).ok());
  EXPECT_EQ(homotopy_classes(G).size(), G.objects.size());
}

TEST(HomGroupoid, CorruptedTargetIsReported) {
  const auto x = x_aff(F3);
  HomGroupoid G = build_hom_groupoid(x, x);
  const std::size_t victim = 5;
  G.arrows[victim].target = (G.arrows[victim].target + 1) % G.objects.size();
  const auto report = validate_groupoid(G);
  ASSERT_FALSE(report.ok());
  const Failure* f = report.first_failure("bookkeeping");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->indices, (std::vector<std::size_t>{victim}));
}

TEST(HomGroupoid, MissingInverseIsReported) {
  const auto x = x_aff(F3);
  HomGroupoid G = build_hom_groupoid(x, x);
  // Drop a non-identity arrow; its inverse loses its partner.
  const auto it = std::find_if(G.arrows.begin(), G.arrows.end(),
                               [](const HomGroupoid::Arrow& a) { return a.source != a.target; });
  ASSERT_NE(it, G.arrows.end());
  G.arrows.erase(it);
  const auto report = validate_groupoid(G);
  EXPECT_FALSE(report.failures_of("inverse").empty());
}

TEST(HomGroupoid, DeterministicAcrossBuildsAndWorkers) {
  const auto x = x_aff(F3);
  EnumerationOptions one, eight;
  one.workers = 1;
  eight.workers = 8;
  const HomGroupoid a = build_hom_groupoid(x, x, one);
  const HomGroupoid b = build_hom_groupoid(x, x, eight);
  const HomGroupoid c = build_hom_groupoid(x, x, one);
  EXPECT_EQ(a.objects, b.objects);
  EXPECT_EQ(a.objects, c.objects);
  ASSERT_EQ(a.arrows.size(), b.arrows.size());
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    EXPECT_EQ(a.arrows[i].source, b.arrows[i].source);
    EXPECT_EQ(a.arrows[i].target, b.arrows[i].target);
    EXPECT_EQ(a.arrows[i].homotopy, b.arrows[i].homotopy);
  }
}

TEST(HomGroupoid, ArrowCountsAreSymmetric) {
  const auto x = x_aff(F3);
  const HomGroupoid G = build_hom_groupoid(x, x);
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const auto& a : G.arrows) ++count[{a.source, a.target}];
  for (const auto& [key, n] : count) {
    const auto back = count.find({key.second, key.first});
    ASSERT_NE(back, count.end());
    EXPECT_EQ(n, back->second);
  }
}

TEST(HomGroupoid, NonAbelianTargetOverGf3) {
  // ad(affine2): M' is non-abelian, so the bracket term of the law matters.
  const auto ad = std::make_shared<const CrossedModule>(adjoint_crossed_module(affine2(F3)));
  const HomGroupoid G = build_hom_groupoid(ad, ad);
  const auto report = validate_groupoid(G);
  EXPECT_TRUE(report.ok()) << report.summary();
  std::size_t total = 0;
  for (const auto& c : homotopy_classes(G)) total += c.size();
  EXPECT_EQ(total, G.objects.size());
}

}  // namespace
}  // namespace lxmod
