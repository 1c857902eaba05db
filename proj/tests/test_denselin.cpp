#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "kchi/denselin.hpp"
#include "kchi/error.hpp"
#include "test_util.hpp"

namespace kchi {
namespace {

using testing::is_hermitian;
using testing::is_unitary;
using testing::max_diff;
using testing::rng_for;

const cplx I1(0.0, 1.0);

CMatrix reconstruct(const Svd& d) {
  return d.u * CMatrix::diagonal(std::span<const double>(d.s.values())) * d.v.adjoint();
}

// Oracle: power iteration on A^* A.
double power_iteration_norm(const CMatrix& a) {
  CVector x(a.cols(), cplx(1.0, 0.3));
  double lambda = 0.0;
  const CMatrix g = a.adjoint() * a;
  for (int it = 0; it < 5000; ++it) {
    CVector y = g * std::span<const cplx>(x);
    const double ny = norm2(y);
    if (ny == 0.0) return 0.0;
    for (auto& v : y) v /= ny;
    lambda = ny;
    x = std::move(y);
  }
  return std::sqrt(lambda);
}

TEST(CMatrix, BasicOperations) {
  const CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const CMatrix b{{0.0, I1}, {1.0, 0.0}};
  EXPECT_EQ(a * CMatrix::identity(2), a);
  EXPECT_EQ((a * b)(0, 0), cplx(2.0, 0.0));
  EXPECT_EQ((a * b)(0, 1), I1);
  EXPECT_EQ(b.adjoint()(1, 0), -I1);
  EXPECT_EQ(a.trace(), cplx(5.0, 0.0));
  EXPECT_NEAR(a.frobenius_norm(), std::sqrt(30.0), 1e-15);
  EXPECT_THROW(CMatrix(2, 2, std::vector<cplx>(3)), DomainError);
  EXPECT_THROW(a * CMatrix(3, 3), DomainError);
}

TEST(Svd, Examples) {
  const Svd id = svd(CMatrix::identity(3));
  EXPECT_EQ(id.s.values(), std::vector<double>({1.0, 1.0, 1.0}));

  const CMatrix d = CMatrix::diagonal(std::vector<double>{1.0, 3.0, 2.0});
  const Svd sd = svd(d);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(sd.s[i], 3.0 - static_cast<double>(i), 1e-14);

  const CMatrix rank_one{{1.0, 1.0}, {1.0, 1.0}};
  const Svd r = svd(rank_one);
  EXPECT_NEAR(r.s[0], 2.0, 1e-14);
  EXPECT_NEAR(r.s[1], 0.0, 1e-14);
  EXPECT_TRUE(is_unitary(r.u, 1e-13));
  EXPECT_TRUE(is_unitary(r.v, 1e-13));
  EXPECT_LE(max_diff(reconstruct(r), rank_one), 1e-13);

  const Svd z = svd(CMatrix::zeros(3, 3));
  EXPECT_EQ(z.s.values(), std::vector<double>(3, 0.0));
  EXPECT_TRUE(is_unitary(z.u, 1e-14));
  EXPECT_THROW(svd(CMatrix(2, 3)), DomainError);
}

TEST(Svd, RandomMatricesAgainstEigenOracle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto rng = rng_for(1, n);
    const CMatrix a = random_gaussian(n, rng);
    const Svd d = svd(a);
    EXPECT_TRUE(is_unitary(d.u, 1e-12));
    EXPECT_TRUE(is_unitary(d.v, 1e-12));
    EXPECT_LE(max_diff(reconstruct(d), a), 1e-12 * a.frobenius_norm());
    const HermitianEigen e = eigh(a.adjoint() * a);
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_NEAR(d.s[i] * d.s[i], e.values[i], 1e-11 * e.values[0]);
  }
}

TEST(Eigh, ResidualsAndOrthonormality) {
  auto rng = rng_for(2);
  const CMatrix g = random_gaussian(5, rng);
  const CMatrix h = g + g.adjoint();
  const HermitianEigen e = eigh(h);
  EXPECT_TRUE(is_unitary(e.vectors, 1e-12));
  for (std::size_t j = 0; j < 5; ++j) {
    const CVector v = e.vectors.column(j);
    CVector hv = h * std::span<const cplx>(v);
    for (std::size_t i = 0; i < 5; ++i) hv[i] -= e.values[j] * v[i];
    EXPECT_LE(norm2(hv), 1e-12 * h.frobenius_norm());
    if (j > 0) {
      EXPECT_GE(e.values[j - 1], e.values[j]);
    }
  }
  // trace is the sum of the eigenvalues
  double sum = 0.0;
  for (double v : e.values) sum += v;
  EXPECT_NEAR(sum, h.trace().real(), 1e-12);
}

TEST(Polar, Cases) {
  // positive definite input: W = I
  const CMatrix pd{{2.0, 0.5}, {0.5, 1.0}};
  const Polar p1 = polar(pd);
  EXPECT_LE(max_diff(p1.w, CMatrix::identity(2)), 1e-13);
  EXPECT_LE(max_diff(p1.p, pd), 1e-13);

  // unitary input: P = I
  auto rng = rng_for(3);
  const CMatrix u = random_unitary(4, rng);
  const Polar p2 = polar(u);
  EXPECT_LE(max_diff(p2.p, CMatrix::identity(4)), 1e-12);

  // singular input still gives a unitary W with P = T W
  const CMatrix singular{{1.0, 2.0}, {2.0, 4.0}};
  const Polar p3 = polar(singular);
  EXPECT_TRUE(is_unitary(p3.w, 1e-12));
  EXPECT_LE(max_diff(singular * p3.w, p3.p), 1e-12);

  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = rng_for(4, n);
    const CMatrix t = random_gaussian(n, r);
    const Polar pw = polar(t);
    EXPECT_TRUE(is_unitary(pw.w, 1e-12));
    EXPECT_TRUE(is_hermitian(pw.p, 1e-12));
    EXPECT_LE(max_diff(t * pw.w, pw.p), 1e-12 * t.frobenius_norm());
    for (double v : eigh(pw.p).values) EXPECT_GE(v, -1e-12);
  }
}

TEST(SpectralNorm, MatchesPowerIteration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto rng = rng_for(5, n);
    const CMatrix a = random_gaussian(n, rng);
    EXPECT_NEAR(spectral_norm(a), power_iteration_norm(a), 1e-9 * spectral_norm(a));
  }
  EXPECT_NEAR(spectral_norm(CMatrix{{1.0, 2.0, 3.0}}), std::sqrt(14.0), 1e-14);
  EXPECT_EQ(spectral_norm(CMatrix::zeros(2, 2)), 0.0);
}

TEST(SpectralNorm, LowerBoundNeverExceedsAndConverges) {
  for (std::size_t n = 1; n <= 40; n += 3) {
    auto rng = rng_for(50, n);
    const CMatrix a = random_gaussian(n, rng);
    const double exact = spectral_norm(a);
    const double lower = spectral_norm_lower_bound(a);
    EXPECT_LE(lower, exact * (1 + 1e-14));
    EXPECT_NEAR(lower, exact, 1e-9 * exact);
  }
  // Tied top singular values: still a lower bound, and exact for a unitary.
  auto rng = rng_for(51);
  const CMatrix u = random_unitary(5, rng);
  EXPECT_NEAR(spectral_norm_lower_bound(u), 1.0, 1e-13);
  EXPECT_EQ(spectral_norm_lower_bound(CMatrix::zeros(3, 3)), 0.0);
  // Rank one with the top direction on a single coordinate.
  const CMatrix e{{0.0, 0.0}, {0.0, 3.0}};
  EXPECT_NEAR(spectral_norm_lower_bound(e), 3.0, 1e-14);
}

TEST(SpectralNorm, Submultiplicative) {
  for (int i = 0; i < 20; ++i) {
    auto rng = rng_for(6, static_cast<std::uint64_t>(i));
    const CMatrix a = random_gaussian(4, rng);
    const CMatrix b = random_gaussian(4, rng);
    EXPECT_LE(spectral_norm(a * b), spectral_norm(a) * spectral_norm(b) * (1 + 1e-12));
  }
}

TEST(Kron, ExampleAndNorm) {
  const CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const CMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 1), cplx(1.0));
  EXPECT_EQ(k(1, 0), cplx(1.0));
  EXPECT_EQ(k(0, 3), cplx(2.0));
  EXPECT_EQ(k(3, 2), cplx(4.0));
  EXPECT_EQ(k(0, 0), cplx(0.0));
  EXPECT_NEAR(spectral_norm(k), spectral_norm(a) * spectral_norm(b), 1e-12);
}

TEST(Kron, ApplyKronMatchesExplicitProduct) {
  auto rng = rng_for(7);
  const CMatrix a = random_gaussian(3, rng);
  const CMatrix b = random_gaussian(3, rng);
  const CMatrix c = random_gaussian(3, rng);
  const CMatrix full = kron(kron(a, b), c);
  CVector y(27);
  std::normal_distribution<double> g;
  for (auto& v : y) v = cplx(g(rng), g(rng));
  const CMatrix* factors[] = {&a, &b, &c};
  const CVector fast = apply_kron(factors, y);
  const CVector slow = full * std::span<const cplx>(y);
  for (std::size_t i = 0; i < 27; ++i) EXPECT_LT(std::abs(fast[i] - slow[i]), 1e-12);
}

TEST(Kron, RespectsDimensionCap) {
  ::setenv("KCHI_MAX_DIM", "8", 1);
  EXPECT_EQ(max_tensor_dim(), 8u);
  EXPECT_THROW(kron(CMatrix::identity(3), CMatrix::identity(3)), ResourceError);
  ::unsetenv("KCHI_MAX_DIM");
  EXPECT_EQ(max_tensor_dim(), 4096u);
}

TEST(Inverse, RoundTripAndSingular) {
  auto rng = rng_for(8);
  const CMatrix a = random_gaussian(5, rng);
  EXPECT_LE(max_diff(a * inverse(a), CMatrix::identity(5)), 1e-12);
  EXPECT_THROW(inverse(CMatrix{{1.0, 2.0}, {2.0, 4.0}}), NumericError);
}

TEST(GramSchmidt, OrthonormalAndTriangular) {
  auto rng = rng_for(9);
  const CMatrix a = random_gaussian(4, rng);
  std::vector<CVector> cols;
  for (std::size_t j = 0; j < 3; ++j) cols.push_back(a.column(j));
  const GramSchmidt gs = gram_schmidt(cols);
  const CMatrix q = CMatrix::from_columns(gs.ortho);
  EXPECT_TRUE(is_unitary(q, 1e-13));
  const CMatrix input = CMatrix::from_columns(cols);
  EXPECT_LE(max_diff(input * gs.coeffs, q), 1e-12);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < r; ++c) EXPECT_EQ(gs.coeffs(r, c), cplx(0.0));

  std::vector<CVector> dependent{{1.0, 0.0}, {2.0, 0.0}};
  EXPECT_THROW(gram_schmidt(dependent), DomainError);
}

}  // namespace
}  // namespace kchi
