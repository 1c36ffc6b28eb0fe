#pragma once

#include <cstddef>
#include <vector>

#include "lxmod/enumerate.hpp"

namespace lxmod {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when already joined.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// HOM(X, X'): objects are morphisms X → X', arrows are homotopies.
struct HomGroupoid {
  struct Arrow {
    std::size_t source = 0;  // index into objects
    std::size_t target = 0;
    Derivation homotopy;
  };

  CrossedModulePtr source_module;
  CrossedModulePtr target_module;
  std::vector<CrossedMorphism> objects;
  /// Grouped by source object, each group in lexicographic order of d.
  std::vector<Arrow> arrows;
};

/// Enumerates objects and arrows; every arrow target is resolved to an
/// object index (a missing target is a logic_error).
HomGroupoid build_hom_groupoid(const CrossedModulePtr& source, const CrossedModulePtr& target,
                               const EnumerationOptions& options = {});

/// Axioms, all checked exhaustively:
///   "bookkeeping"   arrow endpoints match the objects (index: arrow)
///   "identity"      zero arrow at each object and unit laws (index: object or arrow)
///   "inverse"       inverse arrow present, composites are identities (index: arrow)
///   "associativity" on all composable triples, composites present (indices: arrows)
ValidationReport validate_groupoid(const HomGroupoid& groupoid);

/// Connected components of the arrow graph; each class sorted, classes
/// ordered by smallest member.
std::vector<std::vector<std::size_t>> homotopy_classes(const HomGroupoid& groupoid);

}  // namespace lxmod
