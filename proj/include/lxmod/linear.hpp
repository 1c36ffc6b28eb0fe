#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lxmod/field.hpp"

namespace lxmod {

/// Coordinates of a vector in a fixed basis.
class Vector {
 public:
  Vector() = default;
  Vector(FieldSpec field, std::vector<Scalar> entries);

  static Vector zero(const FieldSpec& field, std::size_t dim);
  /// i-th standard basis vector (0-based).
  static Vector basis(const FieldSpec& field, std::size_t dim, std::size_t i);
  static Vector from_ints(const FieldSpec& field, std::initializer_list<long long> values);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  Vector operator-() const;
  Vector scaled(const Scalar& s) const;

  friend bool operator==(const Vector&, const Vector&) = default;

  /// "(a, b, c)".
  std::string to_string() const;

 private:
  void require_compatible(const Vector& other) const;

  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Matrix of a linear map between based spaces; column j is the image of the
/// j-th domain basis vector. Entries are stored row-major.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static LinearMap zero(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static LinearMap identity(const FieldSpec& field, std::size_t n);
  /// Columns must share dimension `rows`.
  static LinearMap from_columns(const FieldSpec& field, std::size_t rows, std::span<const Vector> columns);
  /// Row-major integer entries, reduced into the field.
  static LinearMap from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                             std::initializer_list<long long> values);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  Vector column(std::size_t c) const;
  bool is_zero() const;

  Vector apply(const Vector& v) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

  /// "[[a,b],[c,d]]".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Vector map_apply(const LinearMap& f, const Vector& v);
/// f ∘ g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap negate(const LinearMap& f);

inline LinearMap operator+(const LinearMap& f, const LinearMap& g) { return add(f, g); }
inline LinearMap operator-(const LinearMap& f) { return negate(f); }

/// Rank of the span of `vectors` (all of dimension `dim`).
std::size_t rank(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors);

/// A basis for span(vectors), in reduced row echelon form.
std::vector<Vector> span_basis(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors);

/// Coordinates c with Σ c_j basis_j = target, or nullopt when target is not in
/// the span. `basis` must be linearly independent.
std::optional<Vector> coordinates_in(std::span<const Vector> basis, const Vector& target);

}  // namespace lxmod

template <>
struct std::hash<lxmod::LinearMap> {
  std::size_t operator()(const lxmod::LinearMap& f) const { return f.hash(); }
};
