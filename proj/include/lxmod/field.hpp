#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace lxmod {

/// Ground field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { rational, prime };

  /// Largest accepted modulus. Products of two residues must fit in 64 bits.
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  FieldSpec() = default;  // rationals

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws InvalidStructure unless `p` is a prime in [2, kMaxModulus].
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// p for GF(p), 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::rational;
  std::uint32_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are reduced into [0, p). Equality is structural.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  /// Image of an integer in the field.
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_rational(mpq_class value);
  /// Residue `value mod p`; `field` must be prime.
  static Scalar from_residue(const FieldSpec& field, std::uint64_t value);

  /// Parses a literal: "a", "-a" or "a/b" over Q, a decimal residue in [0, p)
  /// over GF(p). Throws InvalidStructure on malformed or out-of-range text.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); prime fields only.
  std::uint32_t residue() const;
  /// Canonical rational value; rational field only.
  const mpq_class& rational() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" (denominator omitted when 1) or the decimal residue.
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace lxmod

template <>
struct std::hash<lxmod::Scalar> {
  std::size_t operator()(const lxmod::Scalar& s) const { return s.hash(); }
};
