#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace cochain {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A computable coefficient field: either F_p for a prime p < 2^31, or Q.
class Field {
 public:
  // Throws InvalidArgument unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::int64_t p);
  static Field rationals() { return Field{}; }

  bool is_prime() const { return modulus_ != 0; }
  bool is_rational() const { return modulus_ == 0; }

  // p for F_p, 0 for Q.
  std::uint32_t modulus() const { return modulus_; }

  // "F5" or "Q".
  std::string name() const;

  // Inverse of name(); also accepts a bare decimal prime such as "5".
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field() = default;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Field& field);

bool is_prime_number(std::int64_t n);

// A single field element. Prime-field elements are stored as canonical
// residues 0..p-1; rationals are always reduced with positive denominator.
class Scalar {
 public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_integer(const Field& field, const BigInt& value);
  static Scalar from_rational(const Field& field, const Rational& value);

  // Accepts "n", "-n", "a/b". Throws InvalidArgument on malformed text and
  // on a zero denominator (or a denominator divisible by p).
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;

  // Prime field only.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  // Rational field only.
  const Rational& rational() const { return std::get<Rational>(value_); }

  // Canonical text: residue for F_p, "n" or "a/b" for Q.
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Throws std::domain_error on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(Field field, std::variant<std::uint32_t, Rational> value)
      : field_(field), value_(std::move(value)) {}

  Field field_;
  std::variant<std::uint32_t, Rational> value_;
};

}  // namespace cochain
