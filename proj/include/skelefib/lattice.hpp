#pragma once
// Exact integer and rational linear algebra over GMP.
//
// Everything here is fraction-free or exact-rational; there is no floating
// point in this module. Matrices are small (the ambient lattice of a stratum
// fan has rank n+1 with n the relative dimension), so clarity wins over
// asymptotics except in exact_rank, which also has an OpenMP variant in
// kernels.hpp.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "skelefib/error.hpp"

namespace skelefib {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const std::vector<T>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const;
  std::vector<T> column(std::size_t c) const;
  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
RationalVector operator*(const RatMatrix& a, std::span<const Rational> v);

RatMatrix to_rational(const IntMatrix& m);
/// Throws DimensionMismatch if any entry has a denominator other than 1.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);
bool is_integral(std::span<const Rational> v);

/// Rational with positive denominator in lowest terms.
Rational make_rational(const Integer& num, const Integer& den);
Rational floor_of(const Rational& q);

/// Result of a column-style Hermite normal form: H = M * U.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  /// Column holding the pivot of each row, or -1 when the row has none.
  std::vector<long> pivot_columns;
};

/// Column-style HNF: H = M*U with U unimodular, H lower echelon with
/// positive pivots and the entries left of each pivot reduced into
/// [0, pivot). Euclidean steps always pick the smallest nonzero |entry| in
/// the current row (lowest column on ties), so the output is deterministic.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Square matrix with last row d and determinant +-1. Requires gcd(d) = 1.
IntMatrix complete_last_row_to_unimodular(std::span<const Integer> d);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// D with D^T * M = I, i.e. the columns of D are the dual basis of the
/// columns of M. Requires |det M| = 1.
RatMatrix dual_basis(const IntMatrix& m);

/// The integer vector c with B*c = w, for B square with |det B| = 1.
IntVector express_in_basis(const IntMatrix& b, std::span<const Integer> w);

/// gcd of all entries; 0 when every entry is 0.
Integer gcd_all(std::span<const Integer> xs);
bool is_primitive(std::span<const Integer> v);

/// Exact inverse over Q; throws SingularLattice when det = 0.
RatMatrix inverse(const RatMatrix& m);

/// Some x with A*x = b, or std::nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<RationalVector> solve_linear(const RatMatrix& a, std::span<const Rational> b);

/// Basis of the right kernel of A over Q.
std::vector<RationalVector> kernel_basis(const RatMatrix& a);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t exact_rank(IntMatrix m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace skelefib
