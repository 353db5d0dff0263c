#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cochain/matrix.hpp"

namespace cochain {

// A bounded cochain complex
//
//   ... -> 0 -> C^lo -> C^{lo+1} -> ... -> C^hi -> 0 -> ...
//
// over a field. Degrees outside [lo, hi] hold the zero space. The
// differential d^i : C^i -> C^{i+1} is a dim(i+1) x dim(i) matrix.
//
// Construction checks shapes but not d^2 = 0; use validate_complex for that
// (the session parser and every algebraic operation do).
class CochainComplex {
 public:
  // dims: degree -> dimension (absent means 0, keys must lie in [lo, hi]).
  // diffs: degree -> matrix (absent means zero map). Throws ShapeMismatch /
  // FieldMismatch / InvalidArgument.
  CochainComplex(Field field, int lo, int hi, const std::map<int, std::size_t>& dims,
                 const std::map<int, Matrix>& diffs = {});

  // The zero complex, window [0, 0].
  static CochainComplex zero(const Field& field);

  // Convenience: dims listed from degree lo upwards, differentials d^lo, ...
  static CochainComplex from_sequence(const Field& field, int lo, const std::vector<std::size_t>& dims,
                                      const std::vector<Matrix>& diffs);

  const Field& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  std::size_t dim(int degree) const;
  Matrix differential(int degree) const;

  // Same field and identical dimensions and differentials in every degree.
  // The stored window does not take part: zero padding is invisible.
  friend bool operator==(const CochainComplex& a, const CochainComplex& b);

 private:
  Field field_;
  int lo_ = 0;
  int hi_ = 0;
  std::vector<std::size_t> dims_;  // index i - lo
  std::vector<Matrix> diffs_;      // d^i for lo <= i < hi, index i - lo
};

struct ComplexReport {
  bool ok = true;
  int degree = 0;                // first failing degree i
  std::optional<Matrix> product;  // d^{i+1} d^i at that degree

  explicit operator bool() const { return ok; }
};

// OK, or the first degree where d^{i+1} d^i != 0.
ComplexReport validate_complex(const CochainComplex& c);

// Throws InvalidComplex with the failing degree.
void require_valid(const CochainComplex& c);

// C[n]: dims'(i) = dims(i + n), d'(i) = (-1)^n d(i + n).
CochainComplex shift(const CochainComplex& c, int n);

// Degreewise a (+) b with block-diagonal differentials, a first.
CochainComplex direct_sum_complex(const CochainComplex& a, const CochainComplex& b);

// H^i with a canonical basis.
//
// cocycle_basis spans ker d^i (columns, from kernel_basis). The boundaries
// im d^{i-1} written in cocycle coordinates are row-reduced; the cocycle
// coordinates that are not pivots of that reduction index the quotient
// representatives (rep_columns). projection sends cocycle coordinates to
// coordinates in that quotient basis and vanishes on boundaries.
struct CohomologySpace {
  int degree = 0;
  std::size_t dim = 0;
  Matrix cocycle_basis;
  std::vector<std::size_t> rep_columns;
  Matrix projection;
  Matrix boundary_coordinates;  // im d^{i-1} in cocycle coordinates

  // Representative cocycles, one column per basis vector of H^i.
  Matrix representatives() const { return select_columns(cocycle_basis, rep_columns); }
};

// Throws InvalidComplex if c is not a complex.
CohomologySpace cohomology(const CochainComplex& c, int degree);

// Skips the validity check; callers must have validated c.
CohomologySpace cohomology_unchecked(const CochainComplex& c, int degree);

bool is_acyclic(const CochainComplex& c);

// sum (-1)^i dim C^i
long long euler_characteristic(const CochainComplex& c);

}  // namespace cochain
