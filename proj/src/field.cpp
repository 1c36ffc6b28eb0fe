#include "lxmod/field.hpp"

#include <charconv>
#include <ostream>

#include "lxmod/errors.hpp"

namespace lxmod {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxModulus || !is_prime_number(p)) {
    throw InvalidStructure("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "GF(" + std::to_string(modulus_) + ")" : "Q";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  Scalar s;
  s.field_ = field;
  if (field.is_prime()) {
    const long long p = field.modulus();
    long long r = value % p;
    if (r < 0) r += p;
    s.value_ = static_cast<std::uint32_t>(r);
  } else {
    static_assert(sizeof(long) == sizeof(long long));
    s.value_ = mpq_class(static_cast<long>(value));
  }
  return s;
}

Scalar Scalar::from_rational(mpq_class value) {
  value.canonicalize();
  Scalar s;
  s.value_ = std::move(value);
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& field, std::uint64_t value) {
  if (!field.is_prime()) throw FieldMismatch("residue requested over " + field.to_string());
  Scalar s;
  s.field_ = field;
  s.value_ = static_cast<std::uint32_t>(value % field.modulus());
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  const std::string shown(text);
  if (field.is_prime()) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (!all_digits(text) || ec != std::errc{} || ptr != text.data() + text.size()) {
      throw InvalidStructure("bad scalar literal '" + shown + "' for " + field.to_string());
    }
    if (v >= field.modulus()) {
      throw InvalidStructure("residue '" + shown + "' out of range for " + field.to_string());
    }
    return from_residue(field, v);
  }
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidStructure("bad scalar literal '" + shown + "' for Q");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidStructure("zero denominator in scalar literal '" + shown + "'");
  if (text.front() == '-') n = -n;
  return from_rational(mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw FieldMismatch("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw FieldMismatch("rational() on a " + field_.to_string() + " scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("scalar field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_prime()) {
    // Fermat: a^(p-2).
    const std::uint64_t p = field_.modulus();
    std::uint64_t base = std::get<std::uint32_t>(value_);
    std::uint64_t exp = p - 2;
    std::uint64_t acc = 1;
    while (exp > 0) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return from_residue(field_, acc);
  }
  return from_rational(1 / std::get<mpq_class>(value_));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    const std::uint64_t sum = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(sum % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t diff = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(diff % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    const std::uint64_t prod = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(prod % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  return zero(field_) - *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::uint32_t>{}(field_.modulus());
  if (field_.is_prime()) return hash_combine(h, std::get<std::uint32_t>(value_));
  return hash_combine(h, std::hash<std::string>{}(to_string()));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lxmod
