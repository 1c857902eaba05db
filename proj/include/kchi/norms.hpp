#pragma once

// Closed-form norms of derivatives of chi-symmetric tensor powers, the
// immanant derivative bound, and the sampled checks that back them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kchi/combinat.hpp"
#include "kchi/denselin.hpp"
#include "kchi/symclass.hpp"

namespace kchi {

/// p_t(xs): sum over t-subsets of products. p_0 = 1; t > |xs| gives 0.
double elementary_symmetric(int t, std::span<const double> xs);

/// nu_alpha = (nu_{alpha(1)}, ..., nu_{alpha(m)}).
std::vector<double> select(const SingularValues& nu, const MultiIndex& alpha);

/// nu_{omega(chi)}: nu_1 repeated chi_1 times, nu_2 repeated chi_2 times, ...
std::vector<double> nu_omega(const Partition& chi, const SingularValues& nu);

/// ||D^k K_chi(T)|| = k! p_{m-k}(nu_{omega(chi)}). Requires 1 <= k <= m <= n = |nu|.
double dk_norm_formula(const Partition& chi, int k, const SingularValues& nu, int n);

/// First-derivative norm written as sum_j prod_{i != j} nu_{omega(chi)(i)}.
double first_derivative_norm_sum_form(const Partition& chi, const SingularValues& nu);

/// lambda(alpha) = k! p_{m-k}(nu_alpha), the eigenvalue of D^k K_chi(P)(I,...,I) at e*_alpha.
double lambda_eigenvalue(const MultiIndex& alpha, int k, const SingularValues& nu);

struct DerivTolerances {
  double identity_rel = 1e-7;  // |identity - formula| <= tol * max(1, formula)
  double attained_rel = 1e-7;
  double sample_abs = 1e-7;    // sample_max <= formula + tol
};

struct DerivReport {
  Partition chi;
  int m = 0;
  int n = 0;
  int k = 0;
  double formula_value = 0.0;
  double identity_value = 0.0;  // ||D^k K_chi(P)(I,...,I)||, P = T W
  double attained_value = 0.0;  // ||D^k K_chi(T)(W^-1,...,W^-1)||
  double sample_max = 0.0;      // lower bound from random unit tuples
  int samples = 0;
  std::uint64_t seed = 0;
  DerivTolerances tolerances;

  bool identity_ok() const;
  bool attained_ok() const;
  bool sample_ok() const;
  bool passes() const { return identity_ok() && attained_ok() && sample_ok(); }
};

/// Runs the polar reduction, evaluates at the identity tuple and at W^-1, and
/// samples random unit tuples.
DerivReport dk_norm_verify(const SymmetryClass& sc, const CMatrix& t, int k, int samples,
                           std::uint64_t seed, DerivTolerances tolerances = {});

/// k! p_{n-k}(nu_{omega(chi)}), n = |chi|. Zero for k > n.
///
/// This bounds ||D^k d_chi(A)|| only for one-dimensional chi. In general the
/// coordinates of e*_{(1,...,n)} have squared length chi(id)^2/n!, and the
/// valid bound is chi(id) times this value: at A = X^i = I the derivative is
/// chi(id) n!/(n-k)!.
double dk_immanant_bound(const Partition& chi, int k, const SingularValues& nu);

/// chi(id) * dk_immanant_bound(chi, k, nu).
double dk_immanant_bound_degree_scaled(const Partition& chi, int k, const SingularValues& nu);

/// D^k d_chi(A)(X^1..X^k) read off D^k K_chi(A) as (n!/chi(id)) C^* D^k K_chi(A)(X) C,
/// with C the coordinates of e*_{(1,...,n)} in the orthonormal basis. sc must be built for (chi, n = |chi|).
cplx dk_immanant_via_kchi(const SymmetryClass& sc, const CMatrix& a, std::span<const CMatrix> xs);

struct ImmanantReport {
  Partition chi;
  int n = 0;
  int k = 0;
  int chi_id = 0;
  cplx value;          // d_chi(A)
  double bound = 0.0;  // k! p_{n-k}(nu_{omega(chi)})
  double degree_scaled_bound = 0.0;
  double sample_max = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-7;

  bool passes() const { return sample_max <= bound + tolerance; }
  bool passes_degree_scaled() const { return sample_max <= degree_scaled_bound + tolerance; }
};

ImmanantReport dk_immanant_verify(const Partition& chi, const CMatrix& a, int k, int samples,
                                  std::uint64_t seed, double tolerance = 1e-7);

struct PerturbationBounds {
  double kchi_bound = 0.0;
  /// Only defined when chi is a partition of n = |nu|. Carries the same
  /// caveat as dk_immanant_bound; imm_bound_degree_scaled is chi(id) * imm_bound.
  std::optional<double> imm_bound;
  std::optional<double> imm_bound_degree_scaled;
};

/// sum_{k=1}^{m} p_{m-k}(nu_{omega(chi)}) delta^k, and its immanant counterpart with m = n.
PerturbationBounds perturbation_bounds(const Partition& chi, const SingularValues& nu, double delta);

}  // namespace kchi
