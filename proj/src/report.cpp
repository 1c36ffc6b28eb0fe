#include "lxmod/report.hpp"

#include <algorithm>

namespace lxmod {

std::string Failure::witness() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i] + 1);
  }
  return out + "): lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

void ValidationReport::checked(std::string axiom) {
  if (std::find(axioms_.begin(), axioms_.end(), axiom) == axioms_.end()) axioms_.push_back(std::move(axiom));
}

void ValidationReport::fail(std::string axiom, std::vector<std::size_t> indices, Vector lhs, Vector rhs) {
  checked(axiom);
  failures_.push_back(Failure{std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& a : other.axioms_) checked(prefix + a);
  for (const auto& f : other.failures_) {
    failures_.push_back(f);
    failures_.back().axiom = prefix + f.axiom;
  }
}

std::vector<Failure> ValidationReport::failures_of(const std::string& axiom) const {
  std::vector<Failure> out;
  std::copy_if(failures_.begin(), failures_.end(), std::back_inserter(out),
               [&](const Failure& f) { return f.axiom == axiom; });
  return out;
}

const Failure* ValidationReport::first_failure(const std::string& axiom) const {
  auto it = std::find_if(failures_.begin(), failures_.end(), [&](const Failure& f) { return f.axiom == axiom; });
  return it == failures_.end() ? nullptr : &*it;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  return failures_.front().axiom + " " + failures_.front().witness();
}

}  // namespace lxmod
