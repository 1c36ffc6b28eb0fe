#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lxmod/linear.hpp"

namespace lxmod {

/// One failed axiom instance: which basis tuple, and both sides evaluated.
struct Failure {
  std::string axiom;
  std::vector<std::size_t> indices;  // 0-based basis indices
  Vector lhs;
  Vector rhs;

  /// "(1,2,2): lhs=(1) rhs=(-1)" with 1-based indices.
  std::string witness() const;
};

/// Outcome of a validator. Records which axioms were checked, in order, and
/// every failing instance in lexicographic basis order.
class ValidationReport {
 public:
  void checked(std::string axiom);
  void fail(std::string axiom, std::vector<std::size_t> indices, Vector lhs, Vector rhs);
  /// Appends `other`; axiom names get `prefix` prepended.
  void merge(const ValidationReport& other, const std::string& prefix = {});

  bool ok() const noexcept { return failures_.empty(); }
  const std::vector<std::string>& axioms() const noexcept { return axioms_; }
  const std::vector<Failure>& failures() const noexcept { return failures_; }
  std::vector<Failure> failures_of(const std::string& axiom) const;
  /// First failure of `axiom`, or nullptr.
  const Failure* first_failure(const std::string& axiom) const;

  /// "valid" or the first failure rendered as "<axiom> <witness>".
  std::string summary() const;

 private:
  std::vector<std::string> axioms_;
  std::vector<Failure> failures_;
};

}  // namespace lxmod
