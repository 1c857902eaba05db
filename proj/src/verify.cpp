#include "kchi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "kchi/error.hpp"
#include "kchi/immanant.hpp"
#include "kchi/norms.hpp"
#include "kchi/sampling.hpp"
#include "kchi/symclass.hpp"
#include "kchi/symgroup.hpp"

namespace kchi {

namespace {

constexpr char kDegreeNote[] =
    "bound omits a factor chi(id): at A = X^i = I the derivative equals chi(id) n!/(n-k)!, "
    "so characters of degree > 1 violate it; chi(id) times the bound holds";

constexpr char kPerturbationNote[] =
    "immanant perturbation bound omits a factor chi(id): at A = I, Y = delta I the change is "
    "chi(id) ((1 + delta)^n - 1); chi(id) times the bound holds. The K_chi bound holds as stated";

// Stream ids keep the random inputs of different criteria independent.
std::mt19937_64 case_rng(const VerifyOptions& o, std::uint64_t criterion, std::uint64_t index) {
  return sample_rng(o.seed, criterion, index);
}

std::uint64_t case_seed(const VerifyOptions& o, std::uint64_t criterion, std::uint64_t index) {
  return case_rng(o, criterion + 1000, index)();
}

double rel_err(double observed, double expected) {
  return std::abs(observed - expected) / std::max(1.0, std::abs(expected));
}

Check at_most(std::string name, Json params, double limit, double observed, double tol) {
  Check c{std::move(name), std::move(params), limit, observed, tol, "observed <= expected + tolerance", false, false};
  c.pass = observed <= limit + tol;
  return c;
}

Check error_below(std::string name, Json params, double error, double tol) {
  Check c{std::move(name), std::move(params), 0.0, error, tol, "error <= tolerance", false, false};
  c.pass = error <= tol;
  return c;
}

std::vector<SingularValues> random_spectra(const VerifyOptions& o, std::uint64_t stream, int count, int n) {
  std::vector<SingularValues> out;
  for (int i = 0; i < count; ++i) {
    auto rng = case_rng(o, stream, static_cast<std::uint64_t>(i));
    std::uniform_real_distribution<double> u(0.05, 2.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = u(rng);
    std::sort(v.begin(), v.end(), std::greater<>());
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<CMatrix> identities(int k, int n) {
  return std::vector<CMatrix>(static_cast<std::size_t>(k), CMatrix::identity(static_cast<std::size_t>(n)));
}

double falling_factorial(int n, int k) {
  return static_cast<double>(factorial(n)) / static_cast<double>(factorial(n - k));
}

// ---- 1: norm of D^k K_chi(P)(I,...,I) against the closed form
Criterion norm_formula(const VerifyOptions& o) {
  Criterion c{1, "derivative norm formula", {}, ""};
  std::uint64_t index = 0;
  for (int n = 2; n <= o.max_n; ++n)
    for (int m = 2; m <= n; ++m)
      for (const auto& chi : partitions_of(m)) {
        const auto sc = SymmetryClass::build(chi, n);
        std::vector<Polar> polars;
        std::vector<SingularValues> spectra;
        for (int t = 0; t < 20; ++t) {
          auto rng = case_rng(o, 1, index++);
          const CMatrix tm = random_gaussian(static_cast<std::size_t>(n), rng);
          polars.push_back(polar(tm));
          spectra.push_back(svd(tm).s);
        }
        for (int k = 1; k <= m; ++k) {
          double worst = 0.0, worst_formula = 0.0, worst_value = 0.0;
          for (std::size_t t = 0; t < polars.size(); ++t) {
            const double formula = dk_norm_formula(chi, k, spectra[t], n);
            const double value = spectral_norm(dk_kchi(sc, polars[t].p, identities(k, n)));
            const double err = std::abs(value - formula) / formula;
            if (err >= worst) std::tie(worst, worst_formula, worst_value) = std::tuple(err, formula, value);
          }
          Check check{"norm_at_identity_tuple",
                      {{"chi", chi.to_string()}, {"n", n}, {"k", k}, {"trials", 20}},
                      worst_formula, worst_value, 1e-7, "max relative error over trials <= tolerance", worst <= 1e-7,
                      false};
          c.checks.push_back(std::move(check));
        }
      }
  return c;
}

// ---- 2: symmetric and alternating reductions, first-derivative sum form
Criterion special_cases(const VerifyOptions& o) {
  Criterion c{2, "special-case reductions", {}, ""};
  const int n = o.max_n;
  const auto spectra = random_spectra(o, 2, 50, n);
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) {
      double sym_err = 0.0, alt_err = 0.0;
      for (const auto& nu : spectra) {
        const double sym = falling_factorial(m, k) * std::pow(nu[0], m - k);
        sym_err = std::max(sym_err, rel_err(dk_norm_formula(Partition::row(m), k, nu, n), sym));
        const std::vector<double> top(nu.values().begin(), nu.values().begin() + m);
        const double alt = static_cast<double>(factorial(k)) * elementary_symmetric(m - k, top);
        alt_err = std::max(alt_err, rel_err(dk_norm_formula(Partition::column(m), k, nu, n), alt));
      }
      c.checks.push_back(error_below("symmetric_power", {{"m", m}, {"n", n}, {"k", k}, {"spectra", 50}}, sym_err, 1e-9));
      c.checks.push_back(error_below("exterior_power", {{"m", m}, {"n", n}, {"k", k}, {"spectra", 50}}, alt_err, 1e-9));
    }
  for (int m = 1; m <= n; ++m)
    for (const auto& chi : partitions_of(m)) {
      if (chi.length() > n) continue;
      double err = 0.0;
      for (const auto& nu : spectra)
        err = std::max(err, rel_err(first_derivative_norm_sum_form(chi, nu), dk_norm_formula(chi, 1, nu, n)));
      c.checks.push_back(error_below("first_derivative_sum_form", {{"chi", chi.to_string()}, {"n", n}, {"spectra", 50}},
                                     err, 1e-10));
    }
  return c;
}

// ---- 3: sampled unit tuples stay below the closed form, W^-1 attains it
Criterion polar_chain(const VerifyOptions& o) {
  Criterion c{3, "Russo-Dye and polar chain", {}, ""};
  const int cases[][3] = {{3, 2, 1}, {3, 3, 2}, {4, 3, 1}};  // (n, m, k)
  std::uint64_t index = 0;
  for (const auto& nmk : cases) {
    const int n = nmk[0], m = nmk[1], k = nmk[2];
    if (n > o.max_n) continue;
    for (const auto& chi : partitions_of(m)) {
      const auto sc = SymmetryClass::build(chi, n);
      double sample_excess = -1e300, attain_err = 0.0;
      double formula_at_worst = 0.0, sample_at_worst = 0.0;
      for (int t = 0; t < 10; ++t) {
        auto rng = case_rng(o, 3, index);
        const CMatrix tm = random_gaussian(static_cast<std::size_t>(n), rng);
        const DerivReport r = dk_norm_verify(sc, tm, k, 1000, case_seed(o, 3, index));
        ++index;
        if (r.sample_max - r.formula_value > sample_excess) {
          sample_excess = r.sample_max - r.formula_value;
          formula_at_worst = r.formula_value;
          sample_at_worst = r.sample_max;
        }
        attain_err = std::max(attain_err, std::abs(r.attained_value - r.formula_value));
      }
      const Json params{{"chi", chi.to_string()}, {"n", n}, {"m", m}, {"k", k}, {"trials", 10}, {"samples", 1000}};
      c.checks.push_back(at_most("sampled_sup_below_formula", params, formula_at_worst, sample_at_worst, 1e-7));
      c.checks.push_back(error_below("inverse_polar_factor_attains", params, attain_err, 1e-7));
    }
  }
  return c;
}

// ---- 4: algebraic derivative against central differences
Criterion finite_differences(const VerifyOptions& o) {
  Criterion c{4, "derivative matches finite differences", {}, ""};
  if (o.max_n < 3) return c;
  const int n = 3;
  const double h = 1e-4;
  std::uint64_t index = 0;
  for (const auto& chi : partitions_of(3)) {
    const auto sc = SymmetryClass::build(chi, n);
    for (int k = 1; k <= 2; ++k) {
      double worst = 0.0;
      for (int t = 0; t < 10; ++t) {
        auto rng = case_rng(o, 4, index++);
        const CMatrix a = random_unit_matrix(3, rng);
        std::vector<CMatrix> xs;
        for (int i = 0; i < k; ++i) xs.push_back(random_unit_matrix(3, rng));
        const auto f = [&](double s1, double s2) {
          CMatrix shifted = a + xs[0] * cplx(s1);
          if (k == 2) shifted += xs[1] * cplx(s2);
          return k_chi_matrix(sc, shifted);
        };
        const CMatrix numeric =
            k == 1 ? (f(h, 0) - f(-h, 0)) * cplx(1.0 / (2 * h))
                   : (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) * cplx(1.0 / (4 * h * h));
        const CMatrix exact = dk_kchi(sc, a, xs);
        worst = std::max(worst, (numeric - exact).max_abs() / std::max(1.0, exact.max_abs()));
      }
      c.checks.push_back(error_below("central_difference", {{"chi", chi.to_string()}, {"n", n}, {"k", k}, {"step", h}, {"trials", 10}},
                                     worst, 1e-5));
    }
  }
  return c;
}

// ---- 5: spectrum of D^k K_chi(P)(I,...,I) is {lambda(alpha) : alpha in delta_hat}
Criterion spectrum_identity(const VerifyOptions& o) {
  Criterion c{5, "spectrum identity", {}, ""};
  std::uint64_t index = 0;
  for (int n = 1; n <= std::min(3, o.max_n); ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& chi : partitions_of(m)) {
        const auto sc = SymmetryClass::build(chi, n);
        auto rng = case_rng(o, 5, index++);
        const CMatrix tm = random_gaussian(static_cast<std::size_t>(n), rng);
        const Polar pw = polar(tm);
        const SingularValues nu = svd(tm).s;
        for (int k = 1; k <= m; ++k) {
          std::vector<double> observed = eigh(dk_kchi(sc, pw.p, identities(k, n))).values;
          std::vector<double> expected;
          for (const auto& alpha : sc.delta_hat()) expected.push_back(lambda_eigenvalue(alpha, k, nu));
          std::sort(observed.begin(), observed.end());
          std::sort(expected.begin(), expected.end());
          double err = observed.size() == expected.size() ? 0.0 : 1e300;
          for (std::size_t i = 0; i < std::min(observed.size(), expected.size()); ++i)
            err = std::max(err, rel_err(observed[i], expected[i]));
          c.checks.push_back(error_below("sorted_eigenvalues",
                                         {{"chi", chi.to_string()}, {"n", n}, {"k", k}, {"dim", sc.dim()}}, err, 1e-7));
        }
      }
  return c;
}

// ---- 6: nonvanishing decomposable tensors, two criteria
Criterion omega_criterion(const VerifyOptions& o) {
  Criterion c{6, "Omega criterion", {}, ""};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= o.max_n; ++n) {
      long long disagreements = 0, tested = 0;
      for (const auto& chi : partitions_of(m))
        for (const auto& alpha : enumerate(IndexSet::gamma, m, n)) {
          const bool by_sum = character_sum_over_stabilizer(chi, alpha) != 0;
          const bool by_order = majorizes(chi, multiplicity_partition(alpha));
          disagreements += by_sum != by_order;
          ++tested;
        }
      Check check{"stabilizer_sum_vs_majorization", {{"m", m}, {"n", n}, {"pairs", tested}}, 0.0,
                  static_cast<double>(disagreements), 0.0, "exact", disagreements == 0, false};
      c.checks.push_back(std::move(check));
    }
  return c;
}

// ---- 7: K_chi(A) through immanants of submatrices
Criterion immanant_route(const VerifyOptions& o) {
  Criterion c{7, "immanant route to K_chi(A)", {}, ""};
  const int cases[][2] = {{2, 2}, {2, 3}, {3, 3}};  // (m, n)
  std::uint64_t index = 0;
  for (const auto& mn : cases) {
    const int m = mn[0], n = mn[1];
    if (n > o.max_n) continue;
    for (const auto& chi : partitions_of(m)) {
      if (chi.length() > n) continue;
      const auto sc = SymmetryClass::build(chi, n);
      double worst = 0.0;
      for (int t = 0; t < 20; ++t) {
        auto rng = case_rng(o, 7, index++);
        const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
        worst = std::max(worst, (k_chi_matrix(sc, a) - k_chi_matrix_via_immanants(sc, a)).max_abs());
      }
      c.checks.push_back(error_below("compression_vs_immanants", {{"chi", chi.to_string()}, {"m", m}, {"n", n}, {"trials", 20}},
                                     worst, 1e-9));
    }
  }
  return c;
}

// ---- 8: immanant derivative bound
Criterion immanant_bound(const VerifyOptions& o) {
  Criterion c{8, "immanant derivative bound", {}, kDegreeNote};
  std::uint64_t index = 0;
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& chi : partitions_of(n)) {
      const int degree = character(chi, Partition::column(n));
      auto rng = case_rng(o, 8, index);
      const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
      const SingularValues nu = svd(a).s;
      const CMatrix id = CMatrix::identity(static_cast<std::size_t>(n));
      for (int k = 0; k <= n; ++k) {
        const Json params{{"chi", chi.to_string()}, {"chi_id", degree}, {"n", n}, {"k", k}};
        const ImmanantReport r = dk_immanant_verify(chi, a, k, 1000, case_seed(o, 8, index * 16 + static_cast<std::uint64_t>(k)));
        Json sampled = params;
        sampled["samples"] = 1000;
        c.checks.push_back(at_most("sampled_sup_below_bound", sampled, r.bound, r.sample_max, 1e-7));

        const auto refined = sample_sup(
            [&](std::span<const CMatrix> xs) { return std::abs(dk_immanant(chi, a, xs)); },
            static_cast<std::size_t>(n), k, 1000, case_seed(o, 8, index * 16 + 8 + static_cast<std::uint64_t>(k)),
            SupSearch::refine);
        Json scaled = params;
        scaled["samples"] = 1000;
        scaled["search"] = "refine";
        c.checks.push_back(at_most("refined_sup_below_degree_scaled_bound", scaled,
                                   dk_immanant_bound_degree_scaled(chi, k, nu), refined.value, 1e-7));

        const std::vector<CMatrix> xs(static_cast<std::size_t>(k), id);
        Check witness = at_most("identity_tuple_below_bound", params, dk_immanant_bound(chi, k, svd(id).s),
                                std::abs(dk_immanant(chi, id, xs)), 1e-7);
        witness.witness = true;
        c.checks.push_back(std::move(witness));
      }
      ++index;
    }

  if (o.max_n >= 2) {
    const CMatrix a = CMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const auto est = sample_sup([&](std::span<const CMatrix> xs) { return std::abs(dk_immanant(Partition::row(2), a, xs)); },
                                2, 1, 10000, case_seed(o, 8, 900), SupSearch::refine);
    const double bound = dk_immanant_bound(Partition::row(2), 1, svd(a).s);
    Check strict = at_most("permanent_strict_inequality", {{"chi", "2"}, {"A", "diag(1,0)"}, {"k", 1}, {"samples", 10000}},
                           bound - 0.05, est.value, 0.0);
    c.checks.push_back(std::move(strict));
  }
  for (int n = 2; n <= o.max_n; ++n) {
    auto rng = case_rng(o, 8, 1000 + static_cast<std::uint64_t>(n));
    const CMatrix a = random_gaussian(static_cast<std::size_t>(n), rng);
    const Partition chi = Partition::column(n);
    const double bound = dk_immanant_bound(chi, 1, svd(a).s);
    const auto est = sample_sup([&](std::span<const CMatrix> xs) { return std::abs(dk_immanant(chi, a, xs)); },
                                static_cast<std::size_t>(n), 1, 10000, case_seed(o, 8, 950 + static_cast<std::uint64_t>(n)),
                                SupSearch::refine);
    Check attained{"determinant_bound_approached", {{"chi", chi.to_string()}, {"n", n}, {"k", 1}, {"samples", 10000}},
                   bound, est.value, 0.02, "observed >= (1 - tolerance) * expected", est.value >= 0.98 * bound, false};
    c.checks.push_back(std::move(attained));
  }
  return c;
}

// ---- 9: Taylor reconstruction and perturbation bounds
Criterion taylor_perturbation(const VerifyOptions& o) {
  Criterion c{9, "Taylor reconstruction and perturbation bounds", {}, kPerturbationNote};
  std::uint64_t index = 0;
  for (int n = 1; n <= o.max_n; ++n)
    for (int m = 1; m <= std::min(n, 4); ++m)
      for (const auto& chi : partitions_of(m)) {
        const auto sc = SymmetryClass::build(chi, n);
        auto rng = case_rng(o, 9, index++);
        const CMatrix t = random_unit_matrix(static_cast<std::size_t>(n), rng);
        const CMatrix x = random_unit_matrix(static_cast<std::size_t>(n), rng);
        CMatrix sum(sc.dim(), sc.dim());
        for (int k = 0; k <= m; ++k) {
          const std::vector<CMatrix> xs(static_cast<std::size_t>(k), x);
          sum += dk_kchi(sc, t, xs) * cplx(1.0 / static_cast<double>(factorial(k)));
        }
        c.checks.push_back(error_below("taylor_kchi", {{"chi", chi.to_string()}, {"n", n}},
                                       (sum - k_chi_matrix(sc, t + x)).max_abs(), 1e-9));
      }
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& chi : partitions_of(n)) {
      auto rng = case_rng(o, 9, index++);
      const CMatrix a = random_unit_matrix(static_cast<std::size_t>(n), rng);
      const CMatrix y = random_unit_matrix(static_cast<std::size_t>(n), rng);
      cplx sum = 0.0;
      for (int k = 0; k <= n; ++k) {
        const std::vector<CMatrix> ys(static_cast<std::size_t>(k), y);
        sum += dk_immanant(chi, a, ys) / static_cast<double>(factorial(k));
      }
      c.checks.push_back(error_below("taylor_immanant", {{"chi", chi.to_string()}, {"n", n}},
                                     std::abs(sum - immanant(chi, a + y)), 1e-9));
    }

  const double deltas[] = {0.01, 0.1, 1.0};
  const int pn = std::min(3, o.max_n);
  for (const auto& chi : partitions_of(pn)) {
    const auto sc = SymmetryClass::build(chi, pn);
    const int degree = character(chi, Partition::column(pn));
    // 200 perturbations per character, cycling through the three sizes.
    double kchi_ratio[3] = {0, 0, 0}, imm_ratio[3] = {0, 0, 0}, scaled_ratio[3] = {0, 0, 0};
    for (int t = 0; t < 200; ++t) {
      auto rng = case_rng(o, 9, index++);
      const double delta = deltas[t % 3];
      const CMatrix a = random_gaussian(static_cast<std::size_t>(pn), rng);
      const CMatrix x = random_unit_matrix(static_cast<std::size_t>(pn), rng) * cplx(delta);
      const auto b = perturbation_bounds(chi, svd(a).s, delta);
      const double lhs_k = spectral_norm(k_chi_matrix(sc, a + x) - k_chi_matrix(sc, a));
      const double lhs_d = std::abs(immanant(chi, a + x) - immanant(chi, a));
      kchi_ratio[t % 3] = std::max(kchi_ratio[t % 3], lhs_k / b.kchi_bound);
      imm_ratio[t % 3] = std::max(imm_ratio[t % 3], lhs_d / *b.imm_bound);
      scaled_ratio[t % 3] = std::max(scaled_ratio[t % 3], lhs_d / *b.imm_bound_degree_scaled);
    }
    for (int d = 0; d < 3; ++d) {
      const Json params{{"chi", chi.to_string()}, {"chi_id", degree}, {"n", pn}, {"delta", deltas[d]}};
      Json sampled = params;
      sampled["perturbations"] = 67 - (d > 1);
      c.checks.push_back(at_most("kchi_perturbation_ratio", sampled, 1.0, kchi_ratio[d], 1e-12));
      c.checks.push_back(at_most("immanant_perturbation_ratio", sampled, 1.0, imm_ratio[d], 1e-12));
      c.checks.push_back(at_most("immanant_perturbation_ratio_degree_scaled", sampled, 1.0, scaled_ratio[d], 1e-12));

      const CMatrix id = CMatrix::identity(static_cast<std::size_t>(pn));
      const double lhs = std::abs(immanant(chi, id * cplx(1.0 + deltas[d])) - immanant(chi, id));
      const auto bound = perturbation_bounds(chi, svd(id).s, deltas[d]);
      Check witness = at_most("immanant_perturbation_at_identity", params, *bound.imm_bound, lhs, 1e-12);
      witness.witness = true;
      c.checks.push_back(std::move(witness));
    }
  }
  return c;
}

// ---- 10: character table sanity
std::uint64_t hook_length_degree(const Partition& lambda) {
  std::uint64_t hooks = 1;
  const auto& rows = lambda.parts();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int leg = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++leg;
      hooks *= static_cast<std::uint64_t>(rows[i] - j + leg);
    }
  return factorial(lambda.total()) / hooks;
}

Criterion characters(const VerifyOptions&) {
  Criterion c{10, "character table", {}, ""};
  for (int m = 1; m <= 6; ++m) {
    const auto parts = partitions_of(m);
    long long bad_orthogonality = 0, bad_degree = 0;
    for (const auto& a : parts) {
      bad_degree += static_cast<std::uint64_t>(character(a, Partition::column(m))) != hook_length_degree(a);
      for (const auto& b : parts) {
        long long sum = 0;
        for (const auto& rho : parts)
          sum += static_cast<long long>(class_size(rho)) * character(a, rho) * character(b, rho);
        bad_orthogonality += sum != (a == b ? static_cast<long long>(factorial(m)) : 0);
      }
    }
    c.checks.push_back(Check{"first_orthogonality", {{"m", m}}, 0.0, static_cast<double>(bad_orthogonality), 0.0,
                             "exact", bad_orthogonality == 0, false});
    c.checks.push_back(Check{"hook_length_degree", {{"m", m}}, 0.0, static_cast<double>(bad_degree), 0.0, "exact",
                             bad_degree == 0, false});
  }
  const auto& perms = all_permutations(3);
  const auto& values = character_values(Partition({2, 1}));
  long long bad = 0;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += perms[s](i) == i;
    bad += values[s] != fixed - 1;
  }
  c.checks.push_back(Check{"s3_standard_is_fix_minus_one", {{"m", 3}}, 0.0, static_cast<double>(bad), 0.0, "exact",
                           bad == 0, false});
  return c;
}

}  // namespace

bool Criterion::pass() const { return failures() == 0; }

std::size_t Criterion::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& x) { return !x.pass; }));
}

std::vector<Criterion> run_acceptance(const VerifyOptions& options) {
  if (options.max_n < 2 || options.max_n > 4) throw DomainError("verify: max-n must lie in [2, 4]");
  using Runner = Criterion (*)(const VerifyOptions&);
  const Runner runners[] = {norm_formula,    special_cases,  polar_chain,    finite_differences,  spectrum_identity,
                            omega_criterion, immanant_route, immanant_bound, taylor_perturbation, characters};
  std::vector<Criterion> out;
  for (Runner run : runners) out.push_back(run(options));
  return out;
}

Json verify_report(const VerifyOptions& options, const std::vector<Criterion>& criteria) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "verify";
  report["max_n"] = options.max_n;
  report["seed"] = options.seed;
  Json list = Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : criteria) {
    Json entry;
    entry["id"] = c.id;
    entry["title"] = c.title;
    entry["status"] = c.skipped() ? "skipped" : (c.pass() ? "pass" : "fail");
    if (!c.note.empty()) entry["note"] = c.note;
    Json checks = Json::array();
    for (const auto& k : c.checks) {
      Json item;
      item["name"] = k.name;
      item["parameters"] = k.parameters;
      item["expected"] = k.expected;
      item["observed"] = k.observed;
      item["tolerance"] = k.tolerance;
      item["relation"] = k.relation;
      item["pass"] = k.pass;
      if (k.witness) item["witness"] = true;
      checks.push_back(std::move(item));
    }
    entry["checks"] = std::move(checks);
    list.push_back(std::move(entry));
    (c.skipped() ? skipped : c.pass() ? passed : failed) += 1;
  }
  report["criteria"] = std::move(list);
  report["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  report["pass"] = failed == 0;
  return report;
}

bool failures_are_documented(const std::vector<Criterion>& criteria) {
  for (const auto& c : criteria)
    for (const auto& k : c.checks) {
      if (!k.witness) {
        if (!k.pass) return false;
        continue;
      }
      const bool higher_degree = k.parameters.at("chi_id").get<int>() > 1;
      if (k.pass == higher_degree) return false;
    }
  return true;
}

}  // namespace kchi
