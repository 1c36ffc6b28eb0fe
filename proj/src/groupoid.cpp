#include "lxmod/groupoid.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace lxmod {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

namespace {

struct ArrowKey {
  std::size_t source;
  const LinearMap* d;

  friend bool operator==(const ArrowKey& a, const ArrowKey& b) { return a.source == b.source && *a.d == *b.d; }
};

struct ArrowKeyHash {
  std::size_t operator()(const ArrowKey& k) const { return hash_combine(k.source, k.d->hash()); }
};

using ObjectIndex = std::unordered_map<CrossedMorphism, std::size_t>;

ObjectIndex index_objects(const HomGroupoid& G) {
  ObjectIndex index;
  for (std::size_t i = 0; i < G.objects.size(); ++i) index.emplace(G.objects[i], i);
  return index;
}

Vector index_vector(std::size_t value) {
  // Witness vectors for bookkeeping failures carry object indices over Q.
  return Vector(FieldSpec::rational(), {Scalar::from_int(FieldSpec::rational(), static_cast<long long>(value))});
}

}  // namespace

HomGroupoid build_hom_groupoid(const CrossedModulePtr& source, const CrossedModulePtr& target,
                               const EnumerationOptions& options) {
  HomGroupoid G;
  G.source_module = source;
  G.target_module = target;
  G.objects = enumerate_morphisms(source, target, options);
  const ObjectIndex index = index_objects(G);
  for (std::size_t i = 0; i < G.objects.size(); ++i) {
    for (auto& h : enumerate_derivations(G.objects[i], options)) {
      const auto it = index.find(detail::induced_morphism(h.base(), h.d()));
      if (it == index.end()) throw std::logic_error("homotopy target is not an enumerated morphism");
      G.arrows.push_back({i, it->second, std::move(h)});
    }
  }
  return G;
}

ValidationReport validate_groupoid(const HomGroupoid& G) {
  ValidationReport report;
  for (const char* axiom : {"bookkeeping", "identity", "inverse", "associativity"}) report.checked(axiom);

  const ObjectIndex objects = index_objects(G);
  std::unordered_map<ArrowKey, std::size_t, ArrowKeyHash> arrows;
  for (std::size_t a = 0; a < G.arrows.size(); ++a) arrows.emplace(ArrowKey{G.arrows[a].source, &G.arrows[a].homotopy.d()}, a);
  std::vector<std::vector<std::size_t>> outgoing(G.objects.size());

  // Bookkeeping first; later checks only use arrows that pass it.
  std::vector<bool> sound(G.arrows.size(), false);
  for (std::size_t a = 0; a < G.arrows.size(); ++a) {
    const auto& arrow = G.arrows[a];
    if (arrow.source >= G.objects.size() || arrow.target >= G.objects.size() ||
        !(arrow.homotopy.base() == G.objects[arrow.source])) {
      report.fail("bookkeeping", {a}, index_vector(arrow.source), index_vector(arrow.target));
      continue;
    }
    const auto it = objects.find(detail::induced_morphism(arrow.homotopy.base(), arrow.homotopy.d()));
    const std::size_t actual = it == objects.end() ? G.objects.size() : it->second;
    if (actual != arrow.target) {
      report.fail("bookkeeping", {a}, index_vector(arrow.target), index_vector(actual));
      continue;
    }
    sound[a] = true;
    outgoing[arrow.source].push_back(a);
  }

  const auto find_arrow = [&](const Derivation& h) -> std::optional<std::size_t> {
    const auto obj = objects.find(h.base());
    if (obj == objects.end()) return std::nullopt;
    const auto it = arrows.find(ArrowKey{obj->second, &h.d()});
    if (it == arrows.end()) return std::nullopt;
    return it->second;
  };
  const auto d_vector = [](const Derivation& h) {
    return Vector(h.d().field(), std::vector<Scalar>(h.d().entries().begin(), h.d().entries().end()));
  };

  std::vector<std::size_t> identity(G.objects.size(), G.arrows.size());
  for (std::size_t o = 0; o < G.objects.size(); ++o) {
    const Derivation id = identity_homotopy(G.objects[o]);
    const auto a = find_arrow(id);
    if (!a || !sound[*a] || G.arrows[*a].target != o) {
      report.fail("identity", {o}, d_vector(id), index_vector(a ? *a : G.arrows.size()));
      continue;
    }
    identity[o] = *a;
  }

  for (std::size_t a = 0; a < G.arrows.size(); ++a) {
    if (!sound[a]) continue;
    const auto& h = G.arrows[a];
    // Unit laws.
    if (identity[h.source] < G.arrows.size()) {
      const Derivation left = concat_homotopies(G.arrows[identity[h.source]].homotopy, h.homotopy);
      if (!(left == h.homotopy)) report.fail("identity", {a}, d_vector(left), d_vector(h.homotopy));
    }
    if (identity[h.target] < G.arrows.size()) {
      const Derivation right = concat_homotopies(h.homotopy, G.arrows[identity[h.target]].homotopy);
      if (!(right == h.homotopy)) report.fail("identity", {a}, d_vector(right), d_vector(h.homotopy));
    }
    // Inverses.
    const Derivation inv = inverse_homotopy(h.homotopy);
    const auto ia = find_arrow(inv);
    if (!ia || !sound[*ia] || G.arrows[*ia].target != h.source) {
      report.fail("inverse", {a}, d_vector(h.homotopy), d_vector(inv));
      continue;
    }
    const Derivation there_and_back = concat_homotopies(h.homotopy, inv);
    const Derivation back_and_there = concat_homotopies(inv, h.homotopy);
    if (!(there_and_back == identity_homotopy(G.objects[h.source]))) {
      report.fail("inverse", {a, *ia}, d_vector(there_and_back), d_vector(identity_homotopy(G.objects[h.source])));
    }
    if (!(back_and_there == identity_homotopy(G.objects[h.target]))) {
      report.fail("inverse", {*ia, a}, d_vector(back_and_there), d_vector(identity_homotopy(G.objects[h.target])));
    }
  }

  // Associativity over every composable triple h1: x→y, h2: y→z, h3: z→w.
  for (std::size_t a1 = 0; a1 < G.arrows.size(); ++a1) {
    if (!sound[a1]) continue;
    for (const std::size_t a2 : outgoing[G.arrows[a1].target]) {
      const Derivation h12 = concat_homotopies(G.arrows[a1].homotopy, G.arrows[a2].homotopy);
      const auto c12 = find_arrow(h12);
      if (!c12) {
        report.fail("associativity", {a1, a2}, d_vector(h12), d_vector(h12));
        continue;
      }
      for (const std::size_t a3 : outgoing[G.arrows[a2].target]) {
        const Derivation h23 = concat_homotopies(G.arrows[a2].homotopy, G.arrows[a3].homotopy);
        const Derivation left = concat_homotopies(h12, G.arrows[a3].homotopy);
        const Derivation right = concat_homotopies(G.arrows[a1].homotopy, h23);
        if (!(left == right)) report.fail("associativity", {a1, a2, a3}, d_vector(left), d_vector(right));
      }
    }
  }
  return report;
}

std::vector<std::vector<std::size_t>> homotopy_classes(const HomGroupoid& G) {
  const std::size_t n = G.objects.size();
  UnionFind uf(n);
  std::vector<std::vector<std::size_t>> outgoing(n);
  for (const auto& arrow : G.arrows) {
    uf.unite(arrow.source, arrow.target);
    outgoing[arrow.source].push_back(arrow.target);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of_root(n, n);
  for (std::size_t o = 0; o < n; ++o) {
    const std::size_t root = uf.find(o);
    if (class_of_root[root] == n) {
      class_of_root[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back(o);
  }
  // With inverses present, following arrows forward from the representative
  // must reach the whole component.
  std::vector<bool> seen(n, false);
  for (const auto& cls : classes) {
    std::queue<std::size_t> todo;
    todo.push(cls.front());
    seen[cls.front()] = true;
    std::size_t reached = 0;
    while (!todo.empty()) {
      const std::size_t x = todo.front();
      todo.pop();
      ++reached;
      for (const std::size_t y : outgoing[x]) {
        if (!seen[y]) {
          seen[y] = true;
          todo.push(y);
        }
      }
    }
    if (reached != cls.size()) throw std::logic_error("directed reachability differs from connectivity");
  }
  return classes;
}

}  // namespace lxmod
