#include "cochain/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "arith.hpp"
#include "cochain/error.hpp"

namespace cochain {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(std::string(op) + ": matrices over " + a.field().name() + " and " +
                        b.field().name());
  }
}

std::string shape_of(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Gauss-Jordan elimination on a row-major buffer. Pivots are only sought
// in the first pivot_cols columns; the remaining columns ride along (the
// right-hand side of an augmented system).
template <class Arith, class T>
std::vector<std::size_t> gauss_jordan(const Arith& ar, std::vector<T>& e, std::size_t rows,
                                      std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < pivot_cols && next_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = next_row; r < rows; ++r) {
      if (!ar.is_zero(e[r * cols + c])) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != next_row) {
      std::swap_ranges(e.begin() + static_cast<std::ptrdiff_t>(found * cols),
                       e.begin() + static_cast<std::ptrdiff_t>((found + 1) * cols),
                       e.begin() + static_cast<std::ptrdiff_t>(next_row * cols));
    }
    T* pivot_row = e.data() + next_row * cols;
    const T inv = ar.inv(pivot_row[c]);
    for (std::size_t j = c; j < cols; ++j) pivot_row[j] = ar.mul(pivot_row[j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row) continue;
      T* row = e.data() + r * cols;
      if (ar.is_zero(row[c])) continue;
      const T factor = row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!ar.is_zero(pivot_row[j])) row[j] = ar.sub_mul(row[j], factor, pivot_row[j]);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime()) {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  } else {
    data_ = std::vector<Rational>(rows * cols);
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::from_scalars(const Field& field, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) {
    throw ShapeMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(entries.size()));
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i / cols, i % cols, entries[i]);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> entries) {
  std::vector<Scalar> scalars;
  scalars.reserve(entries.size());
  for (long long v : entries) scalars.push_back(Scalar::from_integer(field, v));
  return from_scalars(field, rows, cols, scalars);
}

bool Matrix::is_zero() const {
  return detail::visit_entries(*this, [](const auto& ar, const auto& e) {
    return std::all_of(e.begin(), e.end(), [&](const auto& x) { return ar.is_zero(x); });
  });
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("entry index out of range");
  if (field_.is_prime()) {
    return Scalar::from_integer(field_, entries<std::uint32_t>()[r * cols_ + c]);
  }
  return Scalar::from_rational(field_, entries<Rational>()[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("entry index out of range");
  if (!(value.field() == field_)) throw FieldMismatch("scalar field differs from matrix field");
  if (field_.is_prime()) {
    entries<std::uint32_t>()[r * cols_ + c] = value.residue();
  } else {
    entries<Rational>()[r * cols_ + c] = value.rational();
  }
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << at(r, c).to_string();
    }
    os << ']';
  }
  os << ']';
  if (empty()) os << " (" << shape_of(*this) << ")";
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("mat_mul: " + shape_of(a) + " times " + shape_of(b));
  }
  Matrix out(a.field(), a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& lhs = a.entries<T>();
    const auto& rhs = b.entries<T>();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        const T& x = lhs[i * k + t];
        if (ar.is_zero(x)) continue;
        for (std::size_t j = 0; j < m; ++j) {
          dst[i * m + j] = ar.add(dst[i * m + j], ar.mul(x, rhs[t * m + j]));
        }
      }
    }
  });
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("add: " + shape_of(a) + " plus " + shape_of(b));
  }
  Matrix out = a;
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& rhs = b.entries<T>();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ar.add(dst[i], rhs[i]);
  });
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix out = a;
  detail::visit_entries(out, [](const auto& ar, auto& dst) {
    for (auto& x : dst) x = ar.neg(x);
  });
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix scale(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  const Matrix factor = Matrix::from_scalars(m.field(), 1, 1, {s});
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const T f = factor.entries<T>()[0];
    for (auto& x : dst) x = ar.mul(f, x);
  });
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& src = m.entries<T>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) dst[c * m.rows() + r] = src[r * m.cols() + c];
    }
  });
  return out;
}

Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t nrows, std::size_t col0,
                 std::size_t ncols) {
  if (row0 + nrows > m.rows() || col0 + ncols > m.cols()) {
    throw ShapeMismatch("submatrix out of range of " + shape_of(m));
  }
  Matrix out(m.field(), nrows, ncols);
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& src = m.entries<T>();
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c = 0; c < ncols; ++c) {
        dst[r * ncols + c] = src[(row0 + r) * m.cols() + col0 + c];
      }
    }
  });
  return out;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols()) throw ShapeMismatch("column index out of range");
  }
  detail::visit_entries(out, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& src = m.entries<T>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        dst[r * cols.size() + j] = src[r * m.cols() + cols[j]];
      }
    }
  });
  return out;
}

BlockBuilder::BlockBuilder(Field field, std::vector<std::size_t> row_sizes,
                           std::vector<std::size_t> col_sizes)
    : result_(field, 0, 0) {
  std::size_t total_rows = 0, total_cols = 0;
  for (std::size_t s : row_sizes) {
    row_offsets_.push_back(total_rows);
    total_rows += s;
  }
  row_offsets_.push_back(total_rows);
  for (std::size_t s : col_sizes) {
    col_offsets_.push_back(total_cols);
    total_cols += s;
  }
  col_offsets_.push_back(total_cols);
  result_ = Matrix(field, total_rows, total_cols);
}

BlockBuilder& BlockBuilder::put(std::size_t block_row, std::size_t block_col, const Matrix& block) {
  if (block_row + 1 >= row_offsets_.size() || block_col + 1 >= col_offsets_.size()) {
    throw ShapeMismatch("block index out of range");
  }
  const std::size_t r0 = row_offsets_[block_row], c0 = col_offsets_[block_col];
  if (block.rows() != row_offsets_[block_row + 1] - r0 ||
      block.cols() != col_offsets_[block_col + 1] - c0) {
    throw ShapeMismatch("block (" + std::to_string(block_row) + "," + std::to_string(block_col) +
                        ") has shape " + shape_of(block));
  }
  require_same_field(result_, block, "block");
  const std::size_t width = result_.cols();
  detail::visit_entries(result_, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& src = block.entries<T>();
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t c = 0; c < block.cols(); ++c) {
        dst[(r0 + r) * width + c0 + c] = src[r * block.cols() + c];
      }
    }
  });
  return *this;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "block_diag");
  return BlockBuilder(a.field(), {a.rows(), b.rows()}, {a.cols(), b.cols()})
      .put(0, 0, a)
      .put(1, 1, b)
      .build();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack: row counts differ");
  return BlockBuilder(a.field(), {a.rows()}, {a.cols(), b.cols()}).put(0, 0, a).put(0, 1, b).build();
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack: column counts differ");
  return BlockBuilder(a.field(), {a.rows(), b.rows()}, {a.cols()}).put(0, 0, a).put(1, 0, b).build();
}

RowEchelon rref(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = detail::visit_entries(reduced, [&](const auto& ar, auto& e) {
    return gauss_jordan(ar, e, m.rows(), m.cols(), m.cols());
  });
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  const RowEchelon ech = rref(m);
  std::vector<std::size_t> free_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(m.field(), m.cols(), free_cols.size());
  const std::size_t width = free_cols.size();
  detail::visit_entries(basis, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& red = ech.reduced.entries<T>();
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      const std::size_t fc = free_cols[j];
      dst[fc * width + j] = ar.one();
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        dst[ech.pivots[r] * width + j] = ar.neg(red[r * m.cols() + fc]);
      }
    }
  });
  return basis;
}

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b) {
  require_same_field(m, b, "solve_linear");
  if (m.rows() != b.rows()) {
    throw ShapeMismatch("solve_linear: system " + shape_of(m) + " with right-hand side " +
                        shape_of(b));
  }
  Matrix aug = hstack(m, b);
  const std::size_t n = m.cols(), width = aug.cols();
  const auto pivots = detail::visit_entries(aug, [&](const auto& ar, auto& e) {
    return gauss_jordan(ar, e, m.rows(), width, n);
  });
  Matrix x(m.field(), n, b.cols());
  const bool consistent = detail::visit_entries(x, [&](const auto& ar, auto& dst) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    const auto& red = aug.template entries<T>();
    for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
      for (std::size_t c = n; c < width; ++c) {
        if (!ar.is_zero(red[r * width + c])) return false;
      }
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) dst[pivots[r] * b.cols() + c] = red[r * width + n + c];
    }
    return true;
  });
  if (!consistent) return std::nullopt;
  return x;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace cochain
