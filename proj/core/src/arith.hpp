#pragma once

// Arithmetic policies used by the dense kernels. Each policy exposes the
// element type and the handful of operations Gaussian elimination needs.

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cochain/field.hpp"
#include "cochain/matrix.hpp"

namespace cochain::detail {

struct PrimeArith {
  using value_type = std::uint32_t;

  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(p - (b - a));
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(p - a); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p);
  }
  // a - b * c
  value_type sub_mul(value_type a, value_type b, value_type c) const { return sub(a, mul(b, c)); }
  value_type inv(value_type a) const;
};

struct RationalArith {
  using value_type = Rational;

  value_type zero() const { return Rational{0}; }
  value_type one() const { return Rational{1}; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const {
    return a - b * c;
  }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Rational{1} / a;
  }
};

// Modular inverse by the extended Euclidean algorithm.
inline PrimeArith::value_type PrimeArith::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<value_type>(((t0 % m) + m) % m);
}

// Calls fn(arith, entries) with the policy and storage matching the matrix.
template <class M, class Fn>
decltype(auto) visit_entries(M& m, Fn&& fn) {
  if (m.field().is_prime()) {
    return fn(PrimeArith{m.field().modulus()}, m.template entries<std::uint32_t>());
  }
  return fn(RationalArith{}, m.template entries<Rational>());
}

}  // namespace cochain::detail
