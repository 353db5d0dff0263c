#include "cochain/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "arith.hpp"
#include "cochain/error.hpp"

namespace cochain {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw InvalidArgument("malformed integer '" + std::string(text) + "'");
  BigInt value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw InvalidArgument("malformed integer '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::uint32_t reduce(const BigInt& value, std::uint32_t p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("scalars over " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= kMaxModulus || !is_prime_number(p)) {
    throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  Field f;
  f.modulus_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus_);
}

std::ostream& operator<<(std::ostream& os, const Field& field) { return os << field.name(); }

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == 'F') digits.remove_prefix(1);
  std::int64_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("unknown field '" + std::string(text) + "' (expected \"Q\" or \"F<p>\")");
  }
  return prime(p);
}

Scalar Scalar::zero(const Field& field) { return from_integer(field, 0); }
Scalar Scalar::one(const Field& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const Field& field, const BigInt& value) {
  if (field.is_prime()) return Scalar(field, reduce(value, field.modulus()));
  return Scalar(field, Rational(value));
}

Scalar Scalar::from_rational(const Field& field, const Rational& value) {
  if (field.is_rational()) return Scalar(field, value);
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce(boost::multiprecision::denominator(value), p);
  if (den == 0) throw InvalidArgument("denominator divisible by the characteristic");
  const detail::PrimeArith arith{p};
  return Scalar(field, arith.mul(reduce(boost::multiprecision::numerator(value), p), arith.inv(den)));
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(field, parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("malformed fraction '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return from_rational(field, Rational(num, den));
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return rational() == 0;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().str();
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return Scalar(field_, detail::PrimeArith{field_.modulus()}.neg(residue()));
  return Scalar(field_, Rational(-rational()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    return Scalar(a.field_, detail::PrimeArith{a.field_.modulus()}.add(a.residue(), b.residue()));
  }
  return Scalar(a.field_, Rational(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    return Scalar(a.field_, detail::PrimeArith{a.field_.modulus()}.mul(a.residue(), b.residue()));
  }
  return Scalar(a.field_, Rational(a.rational() * b.rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in " + field_.name());
  if (field_.is_prime()) return Scalar(field_, detail::PrimeArith{field_.modulus()}.inv(residue()));
  return Scalar(field_, detail::RationalArith{}.inv(rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace cochain
