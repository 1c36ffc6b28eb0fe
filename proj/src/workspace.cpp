#include "lxmod/workspace.hpp"

#include <json.hpp>

namespace lxmod {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(child(path, key), "missing required key");
  return *it;
}

std::size_t index_1based(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    throw ParseError(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(i - 1);
}

Scalar scalar(const json& v, const FieldSpec& field, const std::string& path) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    throw ParseError(path, "expected a scalar string");
  }
  try {
    return Scalar::parse(field, text);
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

LinearMap matrix(const json& v, const FieldSpec& field, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!v.is_array() || v.size() != rows) {
    throw ParseError(path, "shape mismatch: expected " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = v[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(child(path, r), "shape mismatch: expected " + std::to_string(cols) + " columns");
    }
    for (std::size_t c = 0; c < cols; ++c) entries.push_back(scalar(row[c], field, child(child(path, r), c)));
  }
  return LinearMap(field, rows, cols, std::move(entries));
}

std::string reference(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a name");
  return v.get<std::string>();
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& map, const std::string& name, const std::string& path,
                                         const char* kind) {
  const auto it = map.find(name);
  if (it == map.end()) throw UnknownReference(path, std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

// Sparse [{i, j, out: [{k, c}]}] list into a dense n_i × n_j × n_k tensor.
std::vector<Scalar> sparse_tensor(const json& list, const FieldSpec& field, std::size_t ni, std::size_t nj,
                                  std::size_t nk, bool upper_only, const std::string& path) {
  std::vector<Scalar> t(ni * nj * nk, Scalar::zero(field));
  if (!list.is_array()) throw ParseError(path, "expected an array");
  std::vector<bool> seen(ni * nj, false);
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string ep = child(path, n);
    const std::size_t i = index_1based(member(list[n], "i", ep), ni, child(ep, "i"));
    const std::size_t j = index_1based(member(list[n], "j", ep), nj, child(ep, "j"));
    if (upper_only && i >= j) throw ParseError(ep, "bracket entries must have i < j");
    if (seen[i * nj + j]) throw ParseError(ep, "duplicate entry for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    seen[i * nj + j] = true;
    const json& out = member(list[n], "out", ep);
    if (!out.is_array()) throw ParseError(child(ep, "out"), "expected an array");
    for (std::size_t m = 0; m < out.size(); ++m) {
      const std::string op = child(child(ep, "out"), m);
      const std::size_t k = index_1based(member(out[m], "k", op), nk, child(op, "k"));
      t[(i * nj + j) * nk + k] += scalar(member(out[m], "c", op), field, child(op, "c"));
    }
  }
  if (upper_only) {
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t j = i + 1; j < nj; ++j) {
        for (std::size_t k = 0; k < nk; ++k) t[(j * nj + i) * nk + k] = -t[(i * nj + j) * nk + k];
      }
    }
  }
  return t;
}

FieldSpec parse_field(const json& v, const std::string& path) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "Q") return FieldSpec::rational();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
      try {
        return FieldSpec::prime(std::stoull(s.substr(3, s.size() - 4)));
      } catch (const std::exception& e) {
        throw ParseError(path, std::string("bad field: ") + e.what());
      }
    }
    throw ParseError(path, "unknown field '" + s + "'");
  }
  const json& kind = member(v, "kind", path);
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    const json& p = member(v, "p", path);
    if (!p.is_number_unsigned()) throw ParseError(child(path, "p"), "expected a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      throw ParseError(child(path, "p"), e.what());
    }
  }
  throw ParseError(child(path, "kind"), "expected \"rational\" or \"prime\"");
}

const json* optional_section(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return nullptr;
  if (!it->is_object()) throw ParseError("/" + key, "expected an object");
  return &*it;
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json matrix_json(const LinearMap& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(scalar_json(f.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json field_json(const FieldSpec& field) {
  if (field.is_prime()) return {{"kind", "prime"}, {"p", field.modulus()}};
  return {{"kind", "rational"}};
}

}  // namespace

const CrossedModulePtr& Workspace::crossed_module(const std::string& name) const {
  return resolve(crossed_modules, name, "", "crossed module");
}

const CrossedMorphism& Workspace::morphism(const std::string& name) const {
  return resolve(morphisms, name, "", "morphism");
}

const DerivationCertificate& Workspace::derivation(const std::string& name) const {
  return resolve(derivations, name, "", "derivation");
}

bool operator==(const Workspace& a, const Workspace& b) {
  const auto same_keys = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j) {
      if (i->first != j->first) return false;
    }
    return true;
  };
  if (!(a.field == b.field) || !same_keys(a.algebras, b.algebras) || !same_keys(a.crossed_modules, b.crossed_modules) ||
      !same_keys(a.morphisms, b.morphisms) || !same_keys(a.derivations, b.derivations)) {
    return false;
  }
  for (const auto& [name, alg] : a.algebras) {
    if (!(*alg == *b.algebras.at(name))) return false;
  }
  for (const auto& [name, x] : a.crossed_modules) {
    const auto& y = b.crossed_modules.at(name);
    if (!(*x == *y) || x->m_algebra().name() != y->m_algebra().name() ||
        x->p_algebra().name() != y->p_algebra().name()) {
      return false;
    }
  }
  for (const auto& [name, f] : a.morphisms) {
    const auto& g = b.morphisms.at(name);
    if (!(f == g) || f.source().name() != g.source().name() || f.target().name() != g.target().name()) return false;
  }
  for (const auto& [name, d] : a.derivations) {
    if (!(d == b.derivations.at(name))) return false;
  }
  return true;
}

Workspace parse_workspace(std::string_view text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "document must be an object");

  Workspace ws;
  ws.field = parse_field(member(doc, "field", ""), "/field");
  const FieldSpec& field = ws.field;

  if (const json* algebras = optional_section(doc, "algebras")) {
    for (const auto& [name, entry] : algebras->items()) {
      const std::string path = "/algebras/" + name;
      const json& dim_json = member(entry, "dim", path);
      if (!dim_json.is_number_unsigned()) throw ParseError(child(path, "dim"), "expected a non-negative integer");
      const auto dim = dim_json.get<std::size_t>();
      if (dim > options.max_dim) {
        throw ParseError(child(path, "dim"), "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(options.max_dim));
      }
      std::vector<Scalar> c(dim * dim * dim, Scalar::zero(field));
      if (const auto it = entry.find("brackets"); it != entry.end()) {
        c = sparse_tensor(*it, field, dim, dim, dim, true, child(path, "brackets"));
      }
      ws.algebras.emplace(name, std::make_shared<const LieAlgebra>(name, field, dim, std::move(c)));
    }
  }

  if (const json* xmods = optional_section(doc, "crossed_modules")) {
    for (const auto& [name, entry] : xmods->items()) {
      const std::string path = "/crossed_modules/" + name;
      const auto& M = resolve(ws.algebras, reference(member(entry, "m", path), child(path, "m")), child(path, "m"), "algebra");
      const auto& P = resolve(ws.algebras, reference(member(entry, "p", path), child(path, "p")), child(path, "p"), "algebra");
      LinearMap boundary = matrix(member(entry, "boundary", path), field, P->dim(), M->dim(), child(path, "boundary"));
      std::vector<Scalar> a(P->dim() * M->dim() * M->dim(), Scalar::zero(field));
      if (const auto it = entry.find("action"); it != entry.end()) {
        a = sparse_tensor(*it, field, P->dim(), M->dim(), M->dim(), false, child(path, "action"));
      }
      LieAction action(P, M, std::move(a));
      ws.crossed_modules.emplace(name, std::make_shared<const CrossedModule>(name, M, P, std::move(boundary), std::move(action)));
    }
  }

  if (const json* morphisms = optional_section(doc, "morphisms")) {
    for (const auto& [name, entry] : morphisms->items()) {
      const std::string path = "/morphisms/" + name;
      const auto& X = resolve(ws.crossed_modules, reference(member(entry, "source", path), child(path, "source")),
                              child(path, "source"), "crossed module");
      const auto& Y = resolve(ws.crossed_modules, reference(member(entry, "target", path), child(path, "target")),
                              child(path, "target"), "crossed module");
      LinearMap f1 = matrix(member(entry, "f1", path), field, Y->m_algebra().dim(), X->m_algebra().dim(), child(path, "f1"));
      LinearMap f0 = matrix(member(entry, "f0", path), field, Y->p_algebra().dim(), X->p_algebra().dim(), child(path, "f0"));
      ws.morphisms.emplace(name, CrossedMorphism(X, Y, std::move(f1), std::move(f0)));
    }
  }

  if (const json* derivations = optional_section(doc, "derivations")) {
    for (const auto& [name, entry] : derivations->items()) {
      const std::string path = "/derivations/" + name;
      const std::string base = reference(member(entry, "base", path), child(path, "base"));
      const CrossedMorphism& f = resolve(ws.morphisms, base, child(path, "base"), "morphism");
      LinearMap d = matrix(member(entry, "d", path), field, f.target().m_algebra().dim(), f.source().p_algebra().dim(),
                           child(path, "d"));
      ws.derivations.emplace(name, DerivationCertificate{base, std::move(d)});
    }
  }
  return ws;
}

std::string serialize_workspace(const Workspace& ws) {
  json doc;
  doc["field"] = field_json(ws.field);
  json algebras = json::object();
  for (const auto& [name, L] : ws.algebras) {
    json brackets = json::array();
    for (std::size_t i = 0; i < L->dim(); ++i) {
      for (std::size_t j = i + 1; j < L->dim(); ++j) {
        json out = json::array();
        for (std::size_t k = 0; k < L->dim(); ++k) {
          if (!L->constant(i, j, k).is_zero()) out.push_back({{"k", k + 1}, {"c", scalar_json(L->constant(i, j, k))}});
        }
        if (!out.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"out", std::move(out)}});
      }
    }
    algebras[name] = {{"dim", L->dim()}, {"brackets", std::move(brackets)}};
  }
  doc["algebras"] = std::move(algebras);

  json xmods = json::object();
  for (const auto& [name, X] : ws.crossed_modules) {
    json action = json::array();
    const std::size_t np = X->p_algebra().dim();
    const std::size_t nm = X->m_algebra().dim();
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < nm; ++j) {
        json out = json::array();
        for (std::size_t k = 0; k < nm; ++k) {
          const Scalar& c = X->action().coefficient(i, j, k);
          if (!c.is_zero()) out.push_back({{"k", k + 1}, {"c", scalar_json(c)}});
        }
        if (!out.empty()) action.push_back({{"i", i + 1}, {"j", j + 1}, {"out", std::move(out)}});
      }
    }
    xmods[name] = {{"m", X->m_algebra().name()},
                   {"p", X->p_algebra().name()},
                   {"boundary", matrix_json(X->boundary())},
                   {"action", std::move(action)}};
  }
  doc["crossed_modules"] = std::move(xmods);

  json morphisms = json::object();
  for (const auto& [name, f] : ws.morphisms) {
    morphisms[name] = {{"source", f.source().name()},
                       {"target", f.target().name()},
                       {"f1", matrix_json(f.f1())},
                       {"f0", matrix_json(f.f0())}};
  }
  doc["morphisms"] = std::move(morphisms);

  json derivations = json::object();
  for (const auto& [name, d] : ws.derivations) derivations[name] = {{"base", d.base}, {"d", matrix_json(d.d)}};
  doc["derivations"] = std::move(derivations);
  return doc.dump(2) + "\n";
}

}  // namespace lxmod
