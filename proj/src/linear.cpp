#include "lxmod/linear.hpp"

#include <utility>

#include "lxmod/errors.hpp"

namespace lxmod {

namespace {

void require_field(const FieldSpec& expected, const Scalar& s) {
  if (s.field() != expected) {
    throw FieldMismatch("entry over " + s.field().to_string() + " in a " + expected.to_string() + " object");
  }
}

void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw FieldMismatch("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

// Row-reduces `rows` in place; returns pivot columns in order.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const Scalar factor = rows[o][c];
      for (std::size_t k = c; k < width; ++k) rows[o][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vector::Vector(FieldSpec field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_field(field_, e);
}

Vector Vector::zero(const FieldSpec& field, std::size_t dim) {
  return Vector(field, std::vector<Scalar>(dim, Scalar::zero(field)));
}

Vector Vector::basis(const FieldSpec& field, std::size_t dim, std::size_t i) {
  if (i >= dim) throw ShapeMismatch("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
  std::vector<Scalar> e(dim, Scalar::zero(field));
  e[i] = Scalar::one(field);
  return Vector(field, std::move(e));
}

Vector Vector::from_ints(const FieldSpec& field, std::initializer_list<long long> values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long long v : values) e.push_back(Scalar::from_int(field, v));
  return Vector(field, std::move(e));
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void Vector::require_compatible(const Vector& other) const {
  require_same(field_, other.field_);
  if (dim() != other.dim()) {
    throw ShapeMismatch("vector dimensions differ: " + std::to_string(dim()) + " vs " + std::to_string(other.dim()));
  }
}

Vector& Vector::operator+=(const Vector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Vector Vector::scaled(const Scalar& s) const {
  Vector out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

LinearMap::LinearMap(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeMismatch("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                        std::to_string(entries_.size()) + " entries");
  }
  for (const auto& e : entries_) require_field(field_, e);
}

LinearMap LinearMap::zero(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  return LinearMap(field, rows, cols, std::vector<Scalar>(rows * cols, Scalar::zero(field)));
}

LinearMap LinearMap::identity(const FieldSpec& field, std::size_t n) {
  std::vector<Scalar> e(n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar::one(field);
  return LinearMap(field, n, n, std::move(e));
}

LinearMap LinearMap::from_columns(const FieldSpec& field, std::size_t rows, std::span<const Vector> columns) {
  const std::size_t cols = columns.size();
  std::vector<Scalar> e(rows * cols, Scalar::zero(field));
  for (std::size_t c = 0; c < cols; ++c) {
    require_same(field, columns[c].field());
    if (columns[c].dim() != rows) throw ShapeMismatch("column " + std::to_string(c) + " has wrong dimension");
    for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
  }
  return LinearMap(field, rows, cols, std::move(e));
}

LinearMap LinearMap::from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                               std::initializer_list<long long> values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long long v : values) e.push_back(Scalar::from_int(field, v));
  return LinearMap(field, rows, cols, std::move(e));
}

Vector LinearMap::column(std::size_t c) const {
  if (c >= cols_) throw ShapeMismatch("column index out of range");
  std::vector<Scalar> e;
  e.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) e.push_back(at(r, c));
  return Vector(field_, std::move(e));
}

bool LinearMap::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector LinearMap::apply(const Vector& v) const {
  require_same(field_, v.field());
  if (v.dim() != cols_) {
    throw ShapeMismatch("cannot apply a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " map to a vector of dimension " + std::to_string(v.dim()));
  }
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return Vector(field_, std::move(out));
}

std::string LinearMap::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ",";
      out += at(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

std::size_t LinearMap::hash() const {
  std::size_t h = hash_combine(rows_, cols_);
  for (const auto& e : entries_) h = hash_combine(h, e.hash());
  return h;
}

Vector map_apply(const LinearMap& f, const Vector& v) { return f.apply(v); }

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same(f.field(), g.field());
  if (f.cols() != g.rows()) {
    throw ShapeMismatch("cannot compose " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " after " +
                        std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  }
  const FieldSpec& field = f.field();
  std::vector<Scalar> e(f.rows() * g.cols(), Scalar::zero(field));
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Scalar& a = f.at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < g.cols(); ++c) e[r * g.cols() + c] += a * g.at(k, c);
    }
  }
  return LinearMap(field, f.rows(), g.cols(), std::move(e));
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
  require_same(f.field(), g.field());
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeMismatch("cannot add matrices of different shapes");
  std::vector<Scalar> e(f.entries().begin(), f.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += g.entries()[i];
  return LinearMap(f.field(), f.rows(), f.cols(), std::move(e));
}

LinearMap negate(const LinearMap& f) {
  std::vector<Scalar> e;
  e.reserve(f.entries().size());
  for (const auto& x : f.entries()) e.push_back(-x);
  return LinearMap(f.field(), f.rows(), f.cols(), std::move(e));
}

std::vector<Vector> span_basis(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_same(field, v.field());
    if (v.dim() != dim) throw ShapeMismatch("vector dimension differs from ambient dimension");
    rows.emplace_back(v.entries().begin(), v.entries().end());
  }
  const auto pivots = row_reduce(rows, dim);
  std::vector<Vector> out;
  out.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.emplace_back(field, std::move(rows[r]));
  return out;
}

std::size_t rank(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors) {
  return span_basis(field, dim, vectors).size();
}

std::optional<Vector> coordinates_in(std::span<const Vector> basis, const Vector& target) {
  const FieldSpec& field = target.field();
  const std::size_t n = target.dim();
  const std::size_t k = basis.size();
  // Augmented system [b_1 ... b_k | target], one row per ambient coordinate.
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(k + 1, Scalar::zero(field)));
  for (std::size_t j = 0; j < k; ++j) {
    require_same(field, basis[j].field());
    if (basis[j].dim() != n) throw ShapeMismatch("basis vector dimension differs from target");
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) rows[i][k] = target[i];
  const auto pivots = row_reduce(rows, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw InvalidStructure("basis vectors are linearly dependent");
  std::vector<Scalar> coords(k, Scalar::zero(field));
  for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = rows[r][k];
  return Vector(field, std::move(coords));
}

}  // namespace lxmod
