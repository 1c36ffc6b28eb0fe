#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "lxmod/homotopy.hpp"

namespace lxmod {

/// Malformed document. `path()` is a JSON pointer into the document
/// ("/crossed_modules/X/p"), or empty for syntax errors.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error((path.empty() ? std::string() : path + ": ") + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class UnknownReference : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A derivation given by name in a document: its base morphism and matrix.
struct DerivationCertificate {
  std::string base;
  LinearMap d;

  friend bool operator==(const DerivationCertificate&, const DerivationCertificate&) = default;
};

/// Everything declared in one document, with references resolved.
struct Workspace {
  FieldSpec field;
  std::map<std::string, LieAlgebraPtr> algebras;
  std::map<std::string, CrossedModulePtr> crossed_modules;
  std::map<std::string, CrossedMorphism> morphisms;
  std::map<std::string, DerivationCertificate> derivations;

  const CrossedModulePtr& crossed_module(const std::string& name) const;
  const CrossedMorphism& morphism(const std::string& name) const;
  const DerivationCertificate& derivation(const std::string& name) const;
};

/// Structural comparison of every entry under the same names.
bool operator==(const Workspace& a, const Workspace& b);

struct ParseOptions {
  /// Largest accepted algebra dimension.
  std::size_t max_dim = 8;
};

/// Parses the JSON document format:
///
///   { "field": {"kind": "prime", "p": 3} | {"kind": "rational"},
///     "algebras": { name: {"dim": n, "brackets": [{"i", "j", "out": [{"k", "c"}]}]} },
///     "crossed_modules": { name: {"m", "p", "boundary": matrix,
///                                  "action": [{"i", "j", "out": [{"k", "c"}]}]} },
///     "morphisms": { name: {"source", "target", "f1": matrix, "f0": matrix} },
///     "derivations": { name: {"base", "d": matrix} } }
///
/// Indices are 1-based; brackets list only i < j (the rest follows by
/// antisymmetry). Matrices are row-major arrays of scalar strings.
Workspace parse_workspace(std::string_view text, const ParseOptions& options = {});

/// Inverse of parse_workspace for tensors in that form (antisymmetric
/// brackets with zero diagonal). Output is pretty-printed and key-sorted.
std::string serialize_workspace(const Workspace& workspace);

}  // namespace lxmod
