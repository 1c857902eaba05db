#include "kchi/denselin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "kchi/error.hpp"

namespace kchi {

namespace {

constexpr std::size_t kDefaultTensorCap = 4096;
constexpr std::size_t kMaxSvdDim = 400;
constexpr int kMaxSweeps = 100;
constexpr double kEighOffTolerance = 1e-13;
constexpr double kGramSchmidtPivot = 1e-9;

void require_square(const CMatrix& a, const char* who) {
  if (!a.is_square()) throw DomainError(std::string(who) + ": matrix must be square");
}

}  // namespace

// ------------------------------------------------------------------ CMatrix

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DomainError("CMatrix: entry count differs from rows*cols");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns) {
  if (columns.empty()) return {};
  CMatrix out(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) out.set_column(c, columns[c]);
  return out;
}

CVector CMatrix::column(std::size_t c) const {
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void CMatrix::set_column(std::size_t c, std::span<const cplx> values) {
  if (values.size() != rows_) throw DomainError("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const { return norm2(data_); }

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx scalar) {
  for (cplx& z : data_) z *= scalar;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimension mismatch");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const cplx ail = a(i, l);
      if (ail == cplx(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += ail * b(l, j);
    }
  return out;
}

CVector operator*(const CMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw DomainError("matrix-vector product: dimension mismatch");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm2(std::span<const cplx> x) {
  double scale = 0.0;
  for (const cplx& z : x) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const cplx& z : x) sum += std::norm(z / scale);
  return scale * std::sqrt(sum);
}

// ------------------------------------------------------------ SingularValues

SingularValues::SingularValues(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0)) throw DomainError("singular values must be nonnegative");
    if (i > 0 && values_[i] > values_[i - 1]) throw DomainError("singular values must be sorted descending");
  }
}

// --------------------------------------------------------------------- eigh

HermitianEigen eigh(const CMatrix& input) {
  require_square(input, "eigh");
  const std::size_t n = input.rows();
  CMatrix h = (input + input.adjoint()) * cplx(0.5);
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += std::norm(h(p, q));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= kEighOffTolerance * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double a = std::abs(h(p, q));
        if (a == 0.0) continue;
        const cplx phase = h(p, q) / a;  // e^{i phi}
        const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * a);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const cplx conj_phase = std::conj(phase);
        for (std::size_t r = 0; r < n; ++r) {
          const cplx hp = h(r, p), hq = h(r, q);
          h(r, p) = c * hp - s * conj_phase * hq;
          h(r, q) = s * hp + c * conj_phase * hq;
          const cplx vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp - s * conj_phase * vq;
          v(r, q) = s * vp + c * conj_phase * vq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cplx hp = h(p, r), hq = h(q, r);
          h(p, r) = c * hp - s * phase * hq;
          h(q, r) = s * hp + c * phase * hq;
        }
        h(p, q) = h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
      }
  }
  if (sweep == kMaxSweeps && off_norm() > kEighOffTolerance * scale)
    throw NumericError("eigh: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });
  HermitianEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = h(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }
  return out;
}

// ---------------------------------------------------------------------- svd

Svd svd(const CMatrix& a) {
  require_square(a, "svd");
  const std::size_t n = a.rows();
  if (n > kMaxSvdDim) throw ResourceError("svd: dimension exceeds 400");
  if (!a.all_finite()) throw NumericError("svd: non-finite input");

  // Columns are stored contiguously to keep the rotations cache friendly.
  std::vector<CVector> g(n), v(n, CVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    g[j] = a.column(j);
    v[j][j] = 1.0;
  }
  const double tol = 4.0 * static_cast<double>(std::max<std::size_t>(n, 1)) *
                     std::numeric_limits<double>::epsilon();
  // Columns at rounding level carry no direction; rotating them never settles.
  const double negligible = std::pow(tol * a.frobenius_norm(), 2);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = std::real(dot(g[p], g[p]));
        const double beta = std::real(dot(g[q], g[q]));
        const cplx gamma = dot(g[p], g[q]);
        const double abs_gamma = std::abs(gamma);
        if (abs_gamma == 0.0 || abs_gamma <= tol * std::sqrt(alpha * beta)) continue;
        if (std::min(alpha, beta) <= negligible) continue;
        converged = false;
        const cplx conj_phase = std::conj(gamma / abs_gamma);
        const double zeta = (beta - alpha) / (2.0 * abs_gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(zeta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = c * t;
        for (auto* cols : {&g, &v}) {
          CVector& xp = (*cols)[p];
          CVector& xq = (*cols)[q];
          for (std::size_t r = 0; r < n; ++r) {
            const cplx up = xp[r], uq = xq[r] * conj_phase;
            xp[r] = c * up - s * uq;
            xq[r] = s * up + c * uq;
          }
        }
      }
  }
  if (!converged) throw NumericError("svd: one-sided Jacobi did not converge");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm2(g[j]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double sigma_max = n ? sigma[order[0]] : 0.0;
  std::vector<CVector> u_cols;
  std::vector<double> s_sorted(n);
  CMatrix v_out(n, n);
  std::vector<std::size_t> missing;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    s_sorted[j] = sigma[src];
    for (std::size_t r = 0; r < n; ++r) v_out(r, j) = v[src][r];
    if (sigma_max > 0.0 && sigma[src] > 1e-14 * sigma_max) {
      CVector u = g[src];
      for (cplx& z : u) z /= sigma[src];
      u_cols.push_back(std::move(u));
    } else {
      u_cols.emplace_back();
      missing.push_back(j);
    }
  }
  // Null-space directions: complete U from the standard basis.
  for (std::size_t j : missing) {
    CVector best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < n; ++e) {
      CVector w(n);
      w[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (const CVector& u : u_cols) {
          if (u.empty()) continue;
          const cplx r = dot(u, w);
          for (std::size_t i = 0; i < n; ++i) w[i] -= r * u[i];
        }
      const double wn = norm2(w);
      if (wn > best_norm) {
        best_norm = wn;
        best = std::move(w);
      }
    }
    for (cplx& z : best) z /= best_norm;
    u_cols[j] = std::move(best);
  }
  return Svd{CMatrix::from_columns(u_cols), SingularValues(std::move(s_sorted)), std::move(v_out)};
}

Polar polar(const CMatrix& t) {
  const Svd d = svd(t);
  const CMatrix sigma = CMatrix::diagonal(std::span<const double>(d.s.values()));
  CMatrix p = d.u * sigma * d.u.adjoint();
  p = (p + p.adjoint()) * cplx(0.5);
  return Polar{std::move(p), d.v * d.u.adjoint()};
}

double spectral_norm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  if (a.is_square()) return svd(a).s[0];
  const std::size_t n = std::max(a.rows(), a.cols());
  CMatrix padded(n, n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) padded(r, c) = a(r, c);
  return svd(padded).s[0];
}

double spectral_norm_lower_bound(const CMatrix& a, int max_iterations) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const CMatrix adj = a.adjoint();
  // Fixed, generic start vector keeps the result deterministic.
  CVector v(a.cols());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(1.0 + 0.37 * static_cast<double>(i), 0.11 * static_cast<double>(i % 3));
  double value = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    const double len = norm2(v);
    if (len == 0.0) break;
    for (cplx& z : v) z /= len;
    const CVector av = a * std::span<const cplx>(v);
    const double next = norm2(av);
    const bool settled = next - value <= 1e-14 * next;
    value = std::max(value, next);
    if (settled) break;
    v = adj * std::span<const cplx>(av);
  }
  return value;
}

// --------------------------------------------------------------------- kron

std::size_t max_tensor_dim() {
  if (const char* env = std::getenv("KCHI_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kDefaultTensorCap);
  }
  return kDefaultTensorCap;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_tensor_dim() || cols > max_tensor_dim())
    throw ResourceError("kron: result dimension exceeds the tensor cap");
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CVector apply_kron(std::span<const CMatrix* const> factors, std::span<const cplx> y) {
  if (factors.empty()) return CVector(y.begin(), y.end());
  const std::size_t n = factors.front()->rows();
  std::size_t total = 1;
  for (const CMatrix* f : factors) {
    if (f->rows() != n || f->cols() != n) throw DomainError("apply_kron: factors must be n x n");
    total *= n;
  }
  if (y.size() != total) throw DomainError("apply_kron: vector length differs from n^m");

  CVector cur(y.begin(), y.end()), next(total);
  std::size_t stride = total;
  for (const CMatrix* f : factors) {
    stride /= n;
    const std::size_t block = stride * n;
    for (std::size_t outer = 0; outer < total; outer += block)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t inner = 0; inner < stride; ++inner) {
          cplx s = 0.0;
          for (std::size_t l = 0; l < n; ++l) s += (*f)(i, l) * cur[outer + l * stride + inner];
          next[outer + i * stride + inner] = s;
        }
    std::swap(cur, next);
  }
  return cur;
}

// ------------------------------------------------------------------ inverse

CMatrix inverse(const CMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  CMatrix lu = a;
  CMatrix inv = CMatrix::identity(n);
  const double scale = std::max(a.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (std::abs(lu(pivot, col)) <= 1e-14 * scale) throw NumericError("inverse: matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(lu(pivot, c), lu(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const cplx d = lu(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      lu(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = lu(r, col);
      if (f == cplx(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        lu(r, c) -= f * lu(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

// ------------------------------------------------------------- Gram-Schmidt

GramSchmidt gram_schmidt(std::span<const CVector> vectors) {
  const std::size_t d = vectors.size();
  GramSchmidt out;
  CMatrix r(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    CVector w = vectors[j];
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        const cplx c = dot(out.ortho[i], w);
        r(i, j) += c;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * out.ortho[i][k];
      }
    const double input_norm = norm2(vectors[j]);
    const double wn = norm2(w);
    if (input_norm == 0.0 || wn <= kGramSchmidtPivot * input_norm)
      throw DomainError("gram_schmidt: input vectors are linearly dependent");
    r(j, j) = wn;
    for (cplx& z : w) z /= wn;
    out.ortho.push_back(std::move(w));
  }
  // coeffs = R^{-1}, by back substitution column by column.
  out.coeffs = CMatrix(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t i = col + 1; i-- > 0;) {
      cplx s = (i == col) ? cplx(1.0) : cplx(0.0);
      for (std::size_t k = i + 1; k <= col; ++k) s -= r(i, k) * out.coeffs(k, col);
      out.coeffs(i, col) = s / r(i, i);
    }
  }
  return out;
}

}  // namespace kchi
