#include "cochain/complex.hpp"

#include <algorithm>

#include "cochain/error.hpp"

namespace cochain {

CochainComplex::CochainComplex(Field field, int lo, int hi, const std::map<int, std::size_t>& dims,
                               const std::map<int, Matrix>& diffs)
    : field_(field), lo_(lo), hi_(hi) {
  if (lo > hi) {
    throw InvalidArgument("complex window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] is empty");
  }
  dims_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [degree, n] : dims) {
    if (degree < lo || degree > hi) {
      if (n == 0) continue;
      throw InvalidArgument("dimension declared at degree " + std::to_string(degree) +
                            " outside window");
    }
    dims_[static_cast<std::size_t>(degree - lo)] = n;
  }
  for (int i = lo; i < hi; ++i) diffs_.emplace_back(field, dim(i + 1), dim(i));
  for (const auto& [degree, m] : diffs) {
    if (!(m.field() == field)) {
      throw FieldMismatch("differential at degree " + std::to_string(degree) + " is over " +
                          m.field().name());
    }
    if (m.rows() != dim(degree + 1) || m.cols() != dim(degree)) {
      throw ShapeMismatch("differential at degree " + std::to_string(degree) + " has shape " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                          std::to_string(dim(degree + 1)) + "x" + std::to_string(dim(degree)));
    }
    if (degree >= lo && degree < hi) diffs_[static_cast<std::size_t>(degree - lo)] = m;
  }
}

CochainComplex CochainComplex::zero(const Field& field) { return CochainComplex(field, 0, 0, {}); }

CochainComplex CochainComplex::from_sequence(const Field& field, int lo,
                                             const std::vector<std::size_t>& dims,
                                             const std::vector<Matrix>& diffs) {
  std::map<int, std::size_t> dim_map;
  std::map<int, Matrix> diff_map;
  for (std::size_t k = 0; k < dims.size(); ++k) dim_map[lo + static_cast<int>(k)] = dims[k];
  for (std::size_t k = 0; k < diffs.size(); ++k) diff_map.emplace(lo + static_cast<int>(k), diffs[k]);
  const int hi = dims.empty() ? lo : lo + static_cast<int>(dims.size()) - 1;
  return CochainComplex(field, lo, hi, dim_map, diff_map);
}

std::size_t CochainComplex::dim(int degree) const {
  if (degree < lo_ || degree > hi_) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

Matrix CochainComplex::differential(int degree) const {
  if (degree >= lo_ && degree < hi_) return diffs_[static_cast<std::size_t>(degree - lo_)];
  return Matrix(field_, dim(degree + 1), dim(degree));
}

bool operator==(const CochainComplex& a, const CochainComplex& b) {
  if (!(a.field_ == b.field_)) return false;
  const int lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi_, b.hi_);
  for (int i = lo; i <= hi; ++i) {
    if (a.dim(i) != b.dim(i)) return false;
  }
  for (int i = lo; i < hi; ++i) {
    if (!(a.differential(i) == b.differential(i))) return false;
  }
  return true;
}

ComplexReport validate_complex(const CochainComplex& c) {
  for (int i = c.lo(); i + 1 < c.hi(); ++i) {
    Matrix product = c.differential(i + 1) * c.differential(i);
    if (!product.is_zero()) return {false, i, std::move(product)};
  }
  return {};
}

void require_valid(const CochainComplex& c) {
  const ComplexReport report = validate_complex(c);
  if (!report) {
    throw InvalidComplex("d^" + std::to_string(report.degree + 1) + " d^" +
                         std::to_string(report.degree) + " = " + report.product->to_string() +
                         " is not zero");
  }
}

CochainComplex shift(const CochainComplex& c, int n) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  const bool negate = (n % 2) != 0;
  for (int i = c.lo(); i <= c.hi(); ++i) dims[i - n] = c.dim(i);
  for (int i = c.lo(); i < c.hi(); ++i) {
    Matrix d = c.differential(i);
    diffs.emplace(i - n, negate ? -d : std::move(d));
  }
  return CochainComplex(c.field(), c.lo() - n, c.hi() - n, dims, diffs);
}

CochainComplex direct_sum_complex(const CochainComplex& a, const CochainComplex& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum of complexes over different fields");
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int i = lo; i <= hi; ++i) dims[i] = a.dim(i) + b.dim(i);
  for (int i = lo; i < hi; ++i) diffs.emplace(i, block_diag(a.differential(i), b.differential(i)));
  return CochainComplex(a.field(), lo, hi, dims, diffs);
}

CohomologySpace cohomology_unchecked(const CochainComplex& c, int degree) {
  const Field& field = c.field();
  Matrix cocycles = kernel_basis(c.differential(degree));
  const Matrix boundaries = c.differential(degree - 1);
  std::optional<Matrix> coords = solve_linear(cocycles, boundaries);
  if (!coords) {
    throw std::logic_error("boundaries at degree " + std::to_string(degree) +
                           " are not cocycles; complex was not validated");
  }

  // Rows of rref(coords^T) span the boundary subspace of cocycle space.
  const RowEchelon ech = rref(transpose(*coords));
  const std::size_t z = cocycles.cols();
  std::vector<bool> is_pivot(z, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < z; ++j) {
    if (!is_pivot[j]) reps.push_back(j);
  }

  // Reducing a coordinate vector x by the boundary rows clears its pivot
  // coordinates: x - sum_r x[pivot_r] row_r. The surviving entries at the
  // representative positions are its class coordinates.
  Matrix projection(field, reps.size(), z);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    projection.set(k, reps[k], Scalar::one(field));
  }
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      projection.set(k, ech.pivots[r], -ech.reduced.at(r, reps[k]));
    }
  }

  return CohomologySpace{degree, reps.size(), std::move(cocycles), std::move(reps), std::move(projection),
                         std::move(*coords)};
}

CohomologySpace cohomology(const CochainComplex& c, int degree) {
  require_valid(c);
  return cohomology_unchecked(c, degree);
}

bool is_acyclic(const CochainComplex& c) {
  require_valid(c);
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const std::size_t cocycles = c.dim(i) - rank(c.differential(i));
    if (cocycles != rank(c.differential(i - 1))) return false;
  }
  return true;
}

long long euler_characteristic(const CochainComplex& c) {
  long long chi = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const auto n = static_cast<long long>(c.dim(i));
    chi += (i % 2 == 0) ? n : -n;
  }
  return chi;
}

}  // namespace cochain
