#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cochain/field.hpp"

namespace cochain {

// Dense row-major matrix over a Field. Zero-row and zero-column matrices
// are ordinary values and stand for linear maps to or from the zero space.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  // entries are row-major, length rows*cols.
  static Matrix from_scalars(const Field& field, std::size_t rows, std::size_t cols,
                             const std::vector<Scalar>& entries);
  // Integers are mapped into the field (reduced mod p for F_p).
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long long> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_zero() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);

  // Raw row-major storage; T is std::uint32_t for F_p and Rational for Q.
  template <class T>
  std::vector<T>& entries() {
    return std::get<std::vector<T>>(data_);
  }
  template <class T>
  const std::vector<T>& entries() const {
    return std::get<std::vector<T>>(data_);
  }

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<Rational>> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Arithmetic. All binary operations throw FieldMismatch / ShapeMismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(const Scalar& s, const Matrix& m);
Matrix transpose(const Matrix& m);

// Block matrix assembly.
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t nrows, std::size_t col0,
                 std::size_t ncols);
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols);

// Builds a matrix from a grid of blocks. Block (r, c) must be
// row_sizes[r] x col_sizes[c]; a missing block is zero.
class BlockBuilder {
 public:
  BlockBuilder(Field field, std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);
  BlockBuilder& put(std::size_t block_row, std::size_t block_col, const Matrix& block);
  Matrix build() const { return result_; }

 private:
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> col_offsets_;
  Matrix result_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Pivot search runs over columns left to right
// and takes the first row with a nonzero entry, so the result is
// deterministic.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}, one per free column of rref(m) in
// increasing column order.
Matrix kernel_basis(const Matrix& m);

// Some x with m x = b (free variables set to 0), or nullopt when the system
// is inconsistent. b may have several columns; they are solved jointly.
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b);

bool is_invertible(const Matrix& m);

}  // namespace cochain
