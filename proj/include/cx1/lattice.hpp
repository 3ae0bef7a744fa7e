#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Everything here is pure: inputs are taken by const reference and results are
// returned by value, so all functions are safe to call concurrently.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cx1 {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
// gcd of the entries; zero for the zero vector.
Integer content(const IntVector& v);
bool is_zero(const IntVector& v);
IntVector scaled(const IntVector& v, const Integer& factor);
IntVector added(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Zero-row input yields a 0 x cols matrix.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& other) const = default;

  // Elementary operations used by the normal-form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
  // Diagonal entries greater than one (the torsion orders of coker A).
  std::vector<Integer> torsion() const;
};

// Fraction-free Bareiss elimination. Throws DimensionMismatch if A is not square.
Integer determinant(const IntMatrix& A);

SmithDecomposition smith_normal_form(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

// Row-style Hermite normal form of the row lattice of A. Zero rows are dropped,
// pivots are positive and entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& A);

// Saturated basis of ker(A) in Z^cols, as HNF rows.
std::vector<IntVector> integer_kernel(const IntMatrix& A);

// v / content(v), first nonzero entry made positive. Throws DegenerateInput for v = 0.
IntVector primitive(const IntVector& v);
// v / content(v) keeping the caller's orientation.
IntVector primitive_keep_sign(const IntVector& v);
bool is_primitive(const IntVector& v);

// True iff the vectors extend to a Z-basis of Z^n.
bool is_unimodular_extension(const std::vector<IntVector>& vs, std::size_t n);

// Inverse of a matrix with determinant +-1. Throws DegenerateInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& A);

// Integer coordinates x with x * basis = v, where the rows of `basis` are
// linearly independent. Returns false if v is not in the row lattice.
bool coordinates_in_lattice(const IntMatrix& basis, const IntVector& v, IntVector& coords);

// For a primitive character alpha in Z^n:
//   kernel_basis  ((n-1) x n): HNF basis of {x : <alpha, x> = 0}
//   projection    ((n-1) x n): rows with projection * kernel_basis^T = I and
//                  [projection; alpha] unimodular; rows reduced modulo alpha.
struct KernelSplit {
  IntMatrix kernel_basis;
  IntMatrix projection;
};
KernelSplit split_along(const IntVector& alpha);

}  // namespace cx1
