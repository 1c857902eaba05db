#include "kchi/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kchi/error.hpp"
#include "kchi/immanant.hpp"
#include "kchi/sampling.hpp"
#include "kchi/symgroup.hpp"

namespace kchi {

double elementary_symmetric(int t, std::span<const double> xs) {
  if (t < 0) throw DomainError("elementary_symmetric: negative degree");
  if (static_cast<std::size_t>(t) > xs.size()) return 0.0;
  std::vector<double> e(static_cast<std::size_t>(t) + 1, 0.0);
  e[0] = 1.0;
  for (double x : xs)
    for (std::size_t j = static_cast<std::size_t>(t); j >= 1; --j) e[j] += x * e[j - 1];
  return e.back();
}

std::vector<double> select(const SingularValues& nu, const MultiIndex& alpha) {
  std::vector<double> out;
  out.reserve(alpha.entries().size());
  for (int e : alpha.entries()) {
    if (static_cast<std::size_t>(e) > nu.size()) throw DomainError("select: index beyond the spectrum");
    out.push_back(nu[static_cast<std::size_t>(e - 1)]);
  }
  return out;
}

std::vector<double> nu_omega(const Partition& chi, const SingularValues& nu) {
  if (static_cast<std::size_t>(chi.length()) > nu.size())
    throw DomainError("nu_omega: l(chi) exceeds the number of singular values");
  return select(nu, omega_of(chi, static_cast<int>(nu.size())));
}

double dk_norm_formula(const Partition& chi, int k, const SingularValues& nu, int n) {
  const int m = chi.total();
  if (k < 1 || k > m) throw DomainError("dk_norm_formula: requires 1 <= k <= m");
  if (m > n) throw DomainError("dk_norm_formula: requires m <= n");
  if (static_cast<int>(nu.size()) != n) throw DomainError("dk_norm_formula: expected n singular values");
  const auto values = nu_omega(chi, nu);
  return static_cast<double>(factorial(k)) * elementary_symmetric(m - k, values);
}

double first_derivative_norm_sum_form(const Partition& chi, const SingularValues& nu) {
  const auto values = nu_omega(chi, nu);
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    double prod = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (i != j) prod *= values[i];
    total += prod;
  }
  return total;
}

double lambda_eigenvalue(const MultiIndex& alpha, int k, const SingularValues& nu) {
  if (k < 1 || k > alpha.m()) throw DomainError("lambda_eigenvalue: requires 1 <= k <= m");
  return static_cast<double>(factorial(k)) * elementary_symmetric(alpha.m() - k, select(nu, alpha));
}

bool DerivReport::identity_ok() const {
  return std::abs(identity_value - formula_value) <= tolerances.identity_rel * std::max(1.0, formula_value);
}

bool DerivReport::attained_ok() const {
  return std::abs(attained_value - formula_value) <= tolerances.attained_rel * std::max(1.0, formula_value);
}

bool DerivReport::sample_ok() const { return sample_max <= formula_value + tolerances.sample_abs; }

DerivReport dk_norm_verify(const SymmetryClass& sc, const CMatrix& t, int k, int samples,
                           std::uint64_t seed, DerivTolerances tolerances) {
  if (samples < 1) throw DomainError("dk_norm_verify: at least one sample required");
  const auto n = static_cast<std::size_t>(sc.n());
  DerivReport report;
  report.chi = sc.chi();
  report.m = sc.m();
  report.n = sc.n();
  report.k = k;
  report.samples = samples;
  report.seed = seed;
  report.tolerances = tolerances;

  const Svd d = svd(t);
  report.formula_value = dk_norm_formula(sc.chi(), k, d.s, sc.n());

  const Polar pw = polar(t);
  const std::vector<CMatrix> identities(static_cast<std::size_t>(k), CMatrix::identity(n));
  report.identity_value = spectral_norm(dk_kchi(sc, pw.p, identities));
  const std::vector<CMatrix> w_inverse(static_cast<std::size_t>(k), pw.w.adjoint());
  report.attained_value = spectral_norm(dk_kchi(sc, t, w_inverse));

  const auto estimate = sample_sup(
      [&](std::span<const CMatrix> xs) { return spectral_norm_lower_bound(dk_kchi(sc, t, xs)); }, n, k,
      samples, seed);
  report.sample_max = estimate.value;
  return report;
}

double dk_immanant_bound(const Partition& chi, int k, const SingularValues& nu) {
  const int n = chi.total();
  if (k < 0) throw DomainError("dk_immanant_bound: negative order");
  if (k > n) return 0.0;
  return static_cast<double>(factorial(k)) * elementary_symmetric(n - k, nu_omega(chi, nu));
}

double dk_immanant_bound_degree_scaled(const Partition& chi, int k, const SingularValues& nu) {
  return character(chi, Partition::column(chi.total())) * dk_immanant_bound(chi, k, nu);
}

cplx dk_immanant_via_kchi(const SymmetryClass& sc, const CMatrix& a, std::span<const CMatrix> xs) {
  if (sc.m() != sc.n()) throw DomainError("dk_immanant_via_kchi: requires m = n");
  std::vector<int> identity(static_cast<std::size_t>(sc.n()));
  std::iota(identity.begin(), identity.end(), 1);
  const CVector estar = sc.estar(MultiIndex(identity, sc.n()));
  const CVector coords = sc.inclusion().adjoint() * std::span<const cplx>(estar);
  const CMatrix deriv = dk_kchi(sc, a, xs);
  const CVector image = deriv * std::span<const cplx>(coords);
  const double scale = static_cast<double>(factorial(sc.n())) / static_cast<double>(sc.chi_id());
  return scale * dot(coords, image);
}

ImmanantReport dk_immanant_verify(const Partition& chi, const CMatrix& a, int k, int samples,
                                  std::uint64_t seed, double tolerance) {
  const int n = chi.total();
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
    throw DomainError("dk_immanant_verify: matrix must be |chi| x |chi|");
  if (k < 0 || k > n) throw DomainError("dk_immanant_verify: requires 0 <= k <= n");
  ImmanantReport report;
  report.chi = chi;
  report.n = n;
  report.k = k;
  report.chi_id = character(chi, Partition::column(n));
  report.value = immanant(chi, a);
  report.bound = dk_immanant_bound(chi, k, svd(a).s);
  report.degree_scaled_bound = report.chi_id * report.bound;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tolerance;
  report.sample_max =
      sample_sup([&](std::span<const CMatrix> xs) { return std::abs(dk_immanant(chi, a, xs)); },
                 static_cast<std::size_t>(n), k, samples, seed)
          .value;
  return report;
}

PerturbationBounds perturbation_bounds(const Partition& chi, const SingularValues& nu, double delta) {
  if (!(delta >= 0.0)) throw DomainError("perturbation_bounds: delta must be nonnegative");
  const int m = chi.total();
  const auto values = nu_omega(chi, nu);
  PerturbationBounds out;
  double power = 1.0;
  for (int k = 1; k <= m; ++k) {
    power *= delta;
    out.kchi_bound += elementary_symmetric(m - k, values) * power;
  }
  // The immanant bound has the same shape with m replaced by n; it is only
  // defined when chi labels a character of S_n.
  if (static_cast<std::size_t>(m) == nu.size()) {
    out.imm_bound = out.kchi_bound;
    out.imm_bound_degree_scaled = character(chi, Partition::column(m)) * out.kchi_bound;
  }
  return out;
}

}  // namespace kchi
