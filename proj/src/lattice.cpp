#include "skelefib/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace skelefib {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularLattice: return "SingularLattice";
    case ErrorCode::ZeroHeightRay: return "ZeroHeightRay";
    case ErrorCode::NonPositiveHeight: return "NonPositiveHeight";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::MissingCurveData: return "MissingCurveData";
    case ErrorCode::PostconditionViolated: return "PostconditionViolated";
    case ErrorCode::NotASurfaceModel: return "NotASurfaceModel";
    case ErrorCode::DegenerateQuad: return "DegenerateQuad";
    case ErrorCode::InvalidCurveData: return "InvalidCurveData";
    case ErrorCode::NormalizationError: return "NormalizationError";
    case ErrorCode::NonPositiveValuation: return "NonPositiveValuation";
    case ErrorCode::NonPositiveB: return "NonPositiveB";
    case ErrorCode::NotLogCalabiYau: return "NotLogCalabiYau";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NonUnimodularTransition: return "NonUnimodularTransition";
    case ErrorCode::BrokenCycle: return "BrokenCycle";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Matrix<T>

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(std::span<const std::vector<T>> columns) {
  if (columns.empty()) return Matrix();
  const std::size_t rows = columns.front().size();
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column lengths differ");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <class T>
void Matrix<T>::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> apply(const Matrix<T>& a, std::span<const T> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, std::span<const Integer> v) { return apply(a, v); }
RationalVector operator*(const RatMatrix& a, std::span<const Rational> v) { return apply(a, v); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) throw Error(ErrorCode::DimensionMismatch, "matrix entry is not an integer");
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).get_den() != 1) return false;
  return true;
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::SingularLattice, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

void sub_column_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) -= q * m(r, source);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::vector<long> pivots(m.rows(), -1);

  std::size_t pc = 0;
  for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
    bool has_pivot = false;
    for (;;) {
      // smallest nonzero |entry| at or right of pc
      std::size_t best = h.cols();
      for (std::size_t c = pc; c < h.cols(); ++c) {
        if (sgn(h(r, c)) == 0) continue;
        if (best == h.cols() || abs(h(r, c)) < abs(h(r, best))) best = c;
      }
      if (best == h.cols()) break;
      has_pivot = true;
      h.swap_columns(pc, best);
      u.swap_columns(pc, best);
      bool cleared = true;
      for (std::size_t c = pc + 1; c < h.cols(); ++c) {
        if (sgn(h(r, c)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(r, pc).get_mpz_t());
        sub_column_multiple(h, c, pc, q);
        sub_column_multiple(u, c, pc, q);
        if (sgn(h(r, c)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (sgn(h(r, pc)) < 0) {
      negate_column(h, pc);
      negate_column(u, pc);
    }
    for (std::size_t c = 0; c < pc; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(r, pc).get_mpz_t());
      if (sgn(q) == 0) continue;
      sub_column_multiple(h, c, pc, q);
      sub_column_multiple(u, c, pc, q);
    }
    pivots[r] = static_cast<long>(pc);
    ++pc;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

IntMatrix complete_last_row_to_unimodular(std::span<const Integer> d) {
  if (d.empty()) throw Error(ErrorCode::EmptyInput, "empty row");
  if (gcd_all(d) != 1) {
    std::ostringstream os;
    os << "gcd of (";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ") is " << gcd_all(d) << ", expected 1";
    throw Error(ErrorCode::NotCoprime, os.str());
  }
  IntMatrix row(1, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) row(0, i) = d[i];
  // d*U = (1, 0, ..., 0), so d is the first row of U^{-1}.
  const HermiteForm hnf = hermite_normal_form(row);
  const IntMatrix u_inv = to_integer(inverse(to_rational(hnf.u)));
  const std::size_t n = d.size();
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = u_inv((r + 1) % n, c);
  return out;
}

// ---------------------------------------------------------------------------
// Determinants, inverses, ranks

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularLattice, "matrix is singular");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix dual_basis(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "dual basis of a non-square matrix");
  const Integer det = determinant(m);
  if (abs(det) != 1) throw Error(ErrorCode::NotUnimodular, "columns are not a lattice basis (det = " + det.get_str() + ")");
  return inverse(to_rational(m)).transpose();
}

IntVector express_in_basis(const IntMatrix& b, std::span<const Integer> w) {
  if (!b.square()) throw Error(ErrorCode::NotSquare, "basis matrix is not square");
  if (b.rows() != w.size()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match basis");
  const Integer det = determinant(b);
  if (abs(det) != 1) throw Error(ErrorCode::NotUnimodular, "basis has det " + det.get_str());
  const IntMatrix b_inv = to_integer(inverse(to_rational(b)));
  return b_inv * w;
}

Integer gcd_all(std::span<const Integer> xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyInput, "gcd of an empty sequence");
  Integer g = 0;
  for (const Integer& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_primitive(std::span<const Integer> v) { return !v.empty() && gcd_all(v) == 1; }

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational pivot = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_linear(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::vector<RationalVector> kernel_basis(const RatMatrix& a) {
  RatMatrix m = a;
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t exact_rank(IntMatrix a) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace {

template <class T>
std::ostream& print(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return print(os, m); }
std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return print(os, m); }

}  // namespace skelefib
