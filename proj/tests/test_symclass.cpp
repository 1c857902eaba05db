#include <gtest/gtest.h>

#include <cmath>

#include "kchi/error.hpp"
#include "kchi/immanant.hpp"
#include "kchi/symclass.hpp"
#include "kchi/symgroup.hpp"
#include "test_util.hpp"

namespace kchi {
namespace {

using testing::central_difference;
using testing::is_hermitian;
using testing::is_unitary;
using testing::max_diff;
using testing::rng_for;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
MultiIndex MI(std::vector<int> entries, int n) { return MultiIndex(std::move(entries), n); }

// Oracle: explicit Kronecker product of the factors, compressed by the inclusion.
CMatrix compress_explicit(const SymmetryClass& sc, const std::vector<const CMatrix*>& factors) {
  CMatrix full = *factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) full = kron(full, *factors[i]);
  return sc.inclusion().adjoint() * full * sc.inclusion();
}

// Oracle: rank of a Hermitian projector from its spectrum.
std::size_t projector_rank(const CMatrix& k) {
  std::size_t rank = 0;
  for (double v : eigh(k).values) rank += v > 0.5;
  return rank;
}

std::vector<Partition> all_chi_up_to(int max_m) {
  std::vector<Partition> out;
  for (int m = 1; m <= max_m; ++m)
    for (const auto& p : partitions_of(m)) out.push_back(p);
  return out;
}

TEST(SymmetryClass, DimensionExamples) {
  EXPECT_EQ(SymmetryClass::build(P({1, 1}), 2).dim(), 1u);
  EXPECT_EQ(SymmetryClass::build(P({2}), 2).dim(), 3u);

  const auto s21 = SymmetryClass::build(P({2, 1}), 3);
  EXPECT_EQ(s21.dim(), 16u);
  EXPECT_EQ(s21.delta_bar().size(), 7u);  // six of type (2,1), one of type (1,1,1)

  const auto s21n2 = SymmetryClass::build(P({2, 1}), 2);
  EXPECT_EQ(s21n2.dim(), 4u);
  EXPECT_EQ(s21n2.delta_bar().size(), 2u);  // basis strictly larger than the orbit representatives

  EXPECT_THROW(SymmetryClass::build(P({1, 1, 1}), 2), DomainError);
  EXPECT_THROW(SymmetryClass::build(P({7}), 2), ResourceError);
}

TEST(SymmetryClass, OneDimensionalAlternatingClassAtTopDegree) {
  const auto sc = SymmetryClass::build(P({1, 1, 1}), 3);
  ASSERT_EQ(sc.dim(), 1u);
  EXPECT_EQ(sc.delta_hat()[0], MI({1, 2, 3}, 3));
}

TEST(SymmetryClass, ProjectorIdentitiesAndRankForEveryChi) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      const CMatrix& k = sc.projector();
      EXPECT_LE(max_diff(k * k, k), 1e-12) << chi.to_string();
      EXPECT_TRUE(is_hermitian(k, 1e-12));
      EXPECT_EQ(projector_rank(k), sc.dim()) << chi.to_string() << " n=" << n;
      EXPECT_TRUE(is_unitary(sc.inclusion(), 1e-11));
      EXPECT_LE(max_diff(k * sc.inclusion(), sc.inclusion()), 1e-11);
    }
}

TEST(SymmetryClass, BasisIndexSetsForTrivialAndAlternatingCharacters) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      if (m <= n) {
        const auto alt = SymmetryClass::build(Partition::column(m), n);
        EXPECT_EQ(alt.delta_hat(), enumerate(IndexSet::strict, m, n));
      }
      const auto sym = SymmetryClass::build(Partition::row(m), n);
      EXPECT_EQ(sym.delta_hat(), enumerate(IndexSet::increasing, m, n));
      EXPECT_EQ(sym.delta_hat(), sym.delta_bar());
    }
}

TEST(SymmetryClass, DeltaBarIsContainedInDeltaHat) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      for (const auto& alpha : sc.delta_bar())
        EXPECT_NE(std::find(sc.delta_hat().begin(), sc.delta_hat().end(), alpha), sc.delta_hat().end());
      for (std::size_t i = 1; i < sc.delta_hat().size(); ++i)
        EXPECT_LT(sc.delta_hat()[i - 1], sc.delta_hat()[i]);
    }
}

TEST(SymmetryClass, DecomposableNormsAndVanishing) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      const double scale = static_cast<double>(sc.chi_id()) / static_cast<double>(factorial(sc.m()));
      for (const auto& alpha : enumerate(IndexSet::gamma, sc.m(), n)) {
        const CVector e = sc.estar(alpha);
        const double sq = norm2(e) * norm2(e);
        EXPECT_NEAR(sq, scale * static_cast<double>(character_sum_over_stabilizer(chi, alpha)), 1e-12);
        const bool in_omega =
            std::find(sc.omega().begin(), sc.omega().end(), alpha) != sc.omega().end();
        EXPECT_EQ(sq > 1e-12, in_omega) << chi.to_string() << " " << alpha.to_string();
      }
    }
}

TEST(KChi, MatchesExplicitKroneckerCompression) {
  for (const auto& chi : all_chi_up_to(3)) {
    const int n = 3;
    const auto sc = SymmetryClass::build(chi, n);
    auto rng = rng_for(100);
    const CMatrix a = random_gaussian(3, rng);
    const std::vector<const CMatrix*> factors(static_cast<std::size_t>(sc.m()), &a);
    EXPECT_LE(max_diff(k_chi_matrix(sc, a), compress_explicit(sc, factors)), 1e-12);
  }
}

TEST(KChi, Functoriality) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      auto rng = rng_for(101, static_cast<std::uint64_t>(n));
      const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
      const CMatrix b = random_gaussian(static_cast<std::size_t>(n), rng);
      const CMatrix ka = k_chi_matrix(sc, a);
      const double scale = std::pow(spectral_norm(a) * spectral_norm(b), sc.m());
      EXPECT_LE(max_diff(ka * k_chi_matrix(sc, b), k_chi_matrix(sc, a * b)), 1e-12 * scale);
      EXPECT_LE(max_diff(k_chi_matrix(sc, a.adjoint()), ka.adjoint()), 1e-12 * scale);
      EXPECT_LE(max_diff(k_chi_matrix(sc, CMatrix::identity(static_cast<std::size_t>(n))),
                         CMatrix::identity(sc.dim())),
                1e-12);
    }
}

TEST(KChi, DeterminantAndPermanentAtTopDegree) {
  auto rng = rng_for(102);
  for (int n = 1; n <= 4; ++n) {
    const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
    const auto alt = SymmetryClass::build(Partition::column(n), n);
    const CMatrix k = k_chi_matrix(alt, a);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_LT(std::abs(k(0, 0) - immanant(Partition::column(n), a)), 1e-12 * std::pow(a.max_abs() * n, n));
  }
}

TEST(KChi, PositiveSemidefiniteInputsGivePositiveImages) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      auto rng = rng_for(103, static_cast<std::uint64_t>(n));
      const CMatrix p = random_psd(static_cast<std::size_t>(n), rng);
      const CMatrix k = k_chi_matrix(sc, p);
      EXPECT_TRUE(is_hermitian(k, 1e-10 * std::pow(spectral_norm(p), sc.m())));
      for (double v : eigh(k).values) EXPECT_GE(v, -1e-10 * std::pow(spectral_norm(p), sc.m()));
    }
}

TEST(KChi, ImmanantRouteAgrees) {
  for (const auto& chi : all_chi_up_to(3))
    for (int n = std::max(2, chi.length()); n <= 3; ++n) {
      if (chi.total() > n) continue;
      const auto sc = SymmetryClass::build(chi, n);
      for (int trial = 0; trial < 5; ++trial) {
        auto rng = rng_for(104, static_cast<std::uint64_t>(trial));
        const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
        EXPECT_LE(max_diff(k_chi_matrix(sc, a), k_chi_matrix_via_immanants(sc, a)), 1e-9)
            << chi.to_string() << " n=" << n;
      }
    }
}

TEST(SymOpProduct, GroupedMatchesDirectAndIsOrderInvariant) {
  const auto sc = SymmetryClass::build(P({2, 1}), 2);
  auto rng = rng_for(105);
  const CMatrix a = random_gaussian(2, rng);
  const CMatrix b = random_gaussian(2, rng);
  const CMatrix c = random_gaussian(2, rng);

  const std::vector<CMatrix> abc{a, b, c};
  const std::vector<CMatrix> cab{c, a, b};
  const std::vector<CMatrix> bca{b, c, a};
  const CMatrix direct = sym_op_product(sc, abc);
  EXPECT_EQ(direct, sym_op_product(sc, cab));
  EXPECT_EQ(direct, sym_op_product(sc, bca));

  const std::vector<int> ones{1, 1, 1};
  EXPECT_LE(max_diff(direct, sym_op_product_grouped(sc, abc, ones)), 1e-13);

  const std::vector<CMatrix> aab{a, a, b};
  const std::vector<CMatrix> ab{a, b};
  const std::vector<int> two_one{2, 1};
  EXPECT_LE(max_diff(sym_op_product(sc, aab), sym_op_product_grouped(sc, ab, two_one)), 1e-13);
}

// Oracle: T^{m-k} * I^k as a normalized sum over placements of T among m slots.
TEST(SymOpProduct, PlacementSumOracle) {
  for (const auto& chi : all_chi_up_to(3)) {
    const int n = 2;
    if (chi.length() > n) continue;
    const auto sc = SymmetryClass::build(chi, n);
    const int m = sc.m();
    auto rng = rng_for(106);
    const CMatrix p = random_psd(2, rng);
    const CMatrix id = CMatrix::identity(2);
    for (int k = 0; k <= m; ++k) {
      std::vector<CMatrix> ops(static_cast<std::size_t>(m - k), p);
      ops.insert(ops.end(), static_cast<std::size_t>(k), id);
      const CMatrix product = sym_op_product(sc, ops);

      CMatrix oracle = CMatrix::identity(sc.dim());
      if (k < m) {
        oracle = CMatrix(sc.dim(), sc.dim());
        for (const auto& beta : enumerate(IndexSet::strict, m - k, m)) {
          std::vector<const CMatrix*> factors(static_cast<std::size_t>(m), &id);
          for (int pos : beta.entries()) factors[static_cast<std::size_t>(pos - 1)] = &p;
          oracle += compress_explicit(sc, factors);
        }
      }
      const double w = static_cast<double>(factorial(k) * factorial(m - k)) / static_cast<double>(factorial(m));
      EXPECT_LE(max_diff(product, oracle * cplx(w)), 1e-12) << chi.to_string() << " k=" << k;
    }
  }
}

TEST(DkKChi, EdgeCases) {
  const auto sc = SymmetryClass::build(P({2, 1}), 2);
  auto rng = rng_for(107);
  const CMatrix t = random_gaussian(2, rng);
  EXPECT_EQ(dk_kchi(sc, t, {}), k_chi_matrix(sc, t));
  const std::vector<CMatrix> four(4, t);
  EXPECT_EQ(dk_kchi(sc, t, four), CMatrix::zeros(sc.dim(), sc.dim()));
  const std::vector<CMatrix> bad{CMatrix::identity(3)};
  EXPECT_THROW(dk_kchi(sc, t, bad), DomainError);

  // top derivative does not depend on the base point
  const std::vector<CMatrix> three{t, t.adjoint(), t * t};
  EXPECT_LE(max_diff(dk_kchi(sc, t, three), dk_kchi(sc, CMatrix::identity(2), three)), 1e-12);
}

TEST(DkKChi, MixedImmanantRouteAgrees) {
  for (const auto& chi : all_chi_up_to(3))
    for (int n = std::max(2, chi.length()); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      auto rng = rng_for(108, static_cast<std::uint64_t>(n));
      const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
      for (int k = 0; k <= sc.m(); ++k) {
        std::vector<CMatrix> xs;
        for (int i = 0; i < k; ++i) xs.push_back(random_gaussian(static_cast<std::size_t>(n), rng));
        EXPECT_LE(max_diff(dk_kchi(sc, a, xs), dk_kchi_via_mixed_immanants(sc, a, xs)), 1e-9)
            << chi.to_string() << " n=" << n << " k=" << k;
      }
    }
}

TEST(DkKChi, FiniteDifferences) {
  for (const auto& chi : all_chi_up_to(3)) {
    const int n = 3;
    const auto sc = SymmetryClass::build(chi, n);
    for (int trial = 0; trial < 3; ++trial) {
      auto rng = rng_for(109, static_cast<std::uint64_t>(trial));
      const CMatrix a = random_unit_matrix(3, rng);
      const CMatrix x1 = random_unit_matrix(3, rng);
      const CMatrix x2 = random_unit_matrix(3, rng);
      const auto f = [&](const std::vector<double>& ts) {
        CMatrix shifted = a + x1 * cplx(ts[0]);
        if (ts.size() > 1) shifted += x2 * cplx(ts[1]);
        return k_chi_matrix(sc, shifted);
      };
      const std::vector<CMatrix> one{x1};
      const std::vector<CMatrix> two{x1, x2};
      const CMatrix d1 = dk_kchi(sc, a, one);
      const CMatrix d2 = dk_kchi(sc, a, two);
      EXPECT_LE(max_diff(central_difference(f, 1, 1e-4), d1), 1e-5 * std::max(1.0, d1.max_abs()));
      EXPECT_LE(max_diff(central_difference(f, 2, 1e-4), d2), 1e-5 * std::max(1.0, d2.max_abs()));
    }
  }
}

TEST(DkKChi, TaylorExpansionIsExact) {
  for (const auto& chi : all_chi_up_to(4))
    for (int n = chi.length(); n <= 3; ++n) {
      const auto sc = SymmetryClass::build(chi, n);
      auto rng = rng_for(110, static_cast<std::uint64_t>(n));
      const CMatrix a = random_unit_matrix(static_cast<std::size_t>(n), rng);
      const CMatrix x = random_unit_matrix(static_cast<std::size_t>(n), rng);
      CMatrix sum(sc.dim(), sc.dim());
      for (int k = 0; k <= sc.m(); ++k) {
        const std::vector<CMatrix> xs(static_cast<std::size_t>(k), x);
        sum += dk_kchi(sc, a, xs) * cplx(1.0 / static_cast<double>(factorial(k)));
      }
      EXPECT_LE(max_diff(sum, k_chi_matrix(sc, a + x)), 1e-11);
    }
}

}  // namespace
}  // namespace kchi
