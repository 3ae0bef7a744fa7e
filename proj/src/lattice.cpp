#include "cx1/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cx1/errors.hpp"

namespace cx1 {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector scaled(const IntVector& v, const Integer& factor) {
  IntVector out(v);
  for (auto& x : out) x *= factor;
  return out;
}

IntVector added(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: vectors of different length");
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVector negated(const IntVector& v) { return scaled(v, Integer(-1)); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row of wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw DimensionMismatch("from_rows: no rows and no column count");
  return from_rows(rows, rows.front().size());
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transposed();
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product: dimensions differ");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ',';
    out << cx1::to_string(row(r));
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// Determinant

Integer determinant(const IntMatrix& A) {
  if (!A.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && M(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      M.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        M(i, j) = t;
      }
      M(i, k) = 0;
    }
    previous = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::vector<Integer> SmithDecomposition::torsion() const {
  std::vector<Integer> t;
  for (const auto& x : diagonal())
    if (x > 1) t.push_back(x);
  return t;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool find_min_entry(const IntMatrix& D, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < D.rows(); ++i)
    for (std::size_t j = t; j < D.cols(); ++j) {
      if (D(i, j) == 0) continue;
      Integer a = abs(D(i, j));
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  std::size_t rank = 0;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_entry(D, t, pr, pc)) break;
    while (true) {
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_columns(t, pc);
      V.swap_columns(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        D.add_column_multiple(j, t, -q);
        V.add_column_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_min_entry(D, t, pr, pc);
        continue;
      }
      // Row t and column t are clear; enforce the divisibility chain.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, Integer(1));
            U.add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
      pr = t;
      pc = t;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    ++rank;
  }
  return SmithDecomposition{std::move(U), std::move(D), std::move(V), rank};
}

std::size_t rank(const IntMatrix& A) { return smith_normal_form(A).rank; }

// ---------------------------------------------------------------------------
// Hermite normal form and kernels

IntMatrix hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  const std::size_t m = H.rows();
  const std::size_t n = H.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t r = row; r < m; ++r)
        if (H(r, col) != 0 && (best == m || abs(H(r, col)) < abs(H(best, col)))) best = r;
      if (best == m) break;
      H.swap_rows(row, best);
      bool clear = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (H(r, col) == 0) continue;
        Integer q = H(r, col) / H(row, col);
        H.add_row_multiple(r, row, -q);
        if (H(r, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) H.negate_row(row);
    for (std::size_t r = 0; r < row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(r, col).get_mpz_t(), H(row, col).get_mpz_t());
      H.add_row_multiple(r, row, -q);
    }
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = H(r, c);
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  SmithDecomposition snf = smith_normal_form(A);
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank; j < n; ++j) basis.push_back(snf.V.column(j));
  if (basis.empty()) return basis;
  return hermite_normal_form(IntMatrix::from_rows(basis, n)).row_vectors();
}

IntVector primitive_keep_sign(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw DegenerateInput("primitive: zero vector");
  IntVector out(v);
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(const IntVector& v) {
  IntVector out = primitive_keep_sign(v);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) out = negated(out);
    break;
  }
  return out;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

bool is_unimodular_extension(const std::vector<IntVector>& vs, std::size_t n) {
  if (vs.size() > n) throw DimensionMismatch("is_unimodular_extension: more vectors than dimension");
  if (vs.empty()) return true;
  SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(vs, n));
  if (snf.rank != vs.size()) return false;
  for (const auto& d : snf.diagonal())
    if (d != 1) return false;
  return true;
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
  const Integer det = determinant(A);
  if (det != 1 && det != -1) throw DegenerateInput("unimodular_inverse: determinant is " + det.get_str());
  const std::size_t n = A.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  // Adjugate; the sizes in this library are tiny.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = A(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = cof * det;
    }
  return inv;
}

bool coordinates_in_lattice(const IntMatrix& basis, const IntVector& v, IntVector& coords) {
  // x B = v  <=>  B^T x^T = v^T. With U B^T V = D:  D (V^-1 x) = U v.
  const IntMatrix Bt = basis.transposed();
  SmithDecomposition snf = smith_normal_form(Bt);
  if (snf.rank != basis.rows()) throw DegenerateInput("coordinates_in_lattice: basis rows are dependent");
  IntVector rhs = snf.U * v;
  IntVector y(basis.rows());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < snf.rank) {
      if (rhs[i] % snf.D(i, i) != 0) return false;
      y[i] = rhs[i] / snf.D(i, i);
    } else if (rhs[i] != 0) {
      return false;
    }
  }
  coords = snf.V * y;
  return true;
}

KernelSplit split_along(const IntVector& alpha) {
  const std::size_t n = alpha.size();
  if (n < 2) throw DimensionMismatch("split_along: need dimension at least 2");
  if (!is_primitive(alpha)) throw DegenerateInput("split_along: character " + to_string(alpha) + " is not primitive");

  IntMatrix row = IntMatrix::from_rows({alpha}, n);
  IntMatrix K = IntMatrix::from_rows(integer_kernel(row), n);

  // K saturated: U K V = [I | 0], so P = U^T [I | 0] V^T is a left inverse of K^T.
  SmithDecomposition snf = smith_normal_form(K);
  IntMatrix selector(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) selector(i, i) = 1;
  IntMatrix P = snf.U.transposed() * selector * snf.V.transposed();

  // P is unique modulo alpha; reduce at alpha's first nonzero coordinate.
  std::size_t pivot = 0;
  while (alpha[pivot] == 0) ++pivot;
  const Integer modulus = abs(alpha[pivot]);
  const int s = sgn(alpha[pivot]);
  for (std::size_t r = 0; r < P.rows(); ++r) {
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), P(r, pivot).get_mpz_t(), modulus.get_mpz_t());
    t *= s;
    for (std::size_t c = 0; c < n; ++c) P(r, c) -= t * alpha[c];
  }
  return KernelSplit{std::move(K), std::move(P)};
}

}  // namespace cx1
