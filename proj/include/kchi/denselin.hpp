#pragma once

// Dense complex linear algebra at desk scale.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kchi {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix diagonal(std::span<const double> diag);
  /// Matrix whose columns are the given vectors (all of equal length).
  static CMatrix from_columns(std::span<const CVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cplx> values);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx scalar);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CVector operator*(const CMatrix& a, std::span<const cplx> x);

cplx dot(std::span<const cplx> x, std::span<const cplx> y);  // x^* y
double norm2(std::span<const cplx> x);

/// Weakly decreasing nonnegative reals.
class SingularValues {
 public:
  SingularValues() = default;
  /// Throws DomainError unless sorted descending and nonnegative.
  explicit SingularValues(std::vector<double> values);
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

struct HermitianEigen {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column j belongs to values[j]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices (the input is symmetrized).
HermitianEigen eigh(const CMatrix& h);

struct Svd {
  CMatrix u;
  SingularValues s;
  CMatrix v;  // A = U diag(s) V^*
};

/// One-sided Jacobi SVD of a square matrix. Dimension <= 400.
Svd svd(const CMatrix& a);

struct Polar {
  CMatrix p;  // positive semidefinite
  CMatrix w;  // unitary, p = t * w
};

Polar polar(const CMatrix& t);

double spectral_norm(const CMatrix& a);

/// ||a v|| for the unit vector v reached by power iteration on a^* a. Never
/// exceeds spectral_norm(a); stops once successive values agree to 1e-14.
double spectral_norm_lower_bound(const CMatrix& a, int max_iterations = 500);

/// Kronecker product; the result dimension is capped by max_tensor_dim().
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Cap on n^m for explicit tensor-space objects: 4096, or lower via KCHI_MAX_DIM.
std::size_t max_tensor_dim();

/// LU with partial pivoting. Throws NumericError for singular input.
CMatrix inverse(const CMatrix& a);

struct GramSchmidt {
  std::vector<CVector> ortho;
  /// ortho[a] = sum_g coeffs(g, a) * input[g]; upper triangular.
  CMatrix coeffs;
};

/// Modified Gram-Schmidt with reorthogonalization. Throws DomainError when a
/// residual falls below 1e-9 relative to its input vector.
GramSchmidt gram_schmidt(std::span<const CVector> vectors);

/// (x1 (x) ... (x) xm) y for n x n factors, without forming the Kronecker product.
CVector apply_kron(std::span<const CMatrix* const> factors, std::span<const cplx> y);

}  // namespace kchi
