#include "kchi/symclass.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kchi/error.hpp"
#include "kchi/immanant.hpp"
#include "kchi/symgroup.hpp"

namespace kchi {

namespace {

constexpr int kMaxDegree = 6;
constexpr double kRankThreshold = 1e-9;

void check_operand(const SymmetryClass& sc, const CMatrix& x, const char* who) {
  const auto n = static_cast<std::size_t>(sc.n());
  if (x.rows() != n || x.cols() != n) throw DomainError(std::string(who) + ": operators must be n x n");
}

// Q^* [ f(q_j) ]_j for a linear map f on the tensor space that leaves V_chi invariant.
template <typename Apply>
CMatrix compress(const SymmetryClass& sc, Apply&& apply) {
  const CMatrix& q = sc.inclusion();
  const std::size_t d = sc.dim();
  CMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const CVector image = apply(q.column(j));
    for (std::size_t i = 0; i < d; ++i) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < image.size(); ++r) s += std::conj(q(r, i)) * image[r];
      out(i, j) = s;
    }
  }
  return out;
}

bool lex_less(const CMatrix& a, const CMatrix& b) {
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].real() != y[i].real()) return x[i].real() < y[i].real();
    if (x[i].imag() != y[i].imag()) return x[i].imag() < y[i].imag();
  }
  return false;
}

}  // namespace

SymmetryClass SymmetryClass::build(const Partition& chi, int n) {
  const int m = chi.total();
  if (m < 1 || m > kMaxDegree) throw ResourceError("symmetry class: |chi| must lie in [1, 6]");
  if (n < 1) throw DomainError("symmetry class: n must be positive");
  if (chi.length() > n) throw DomainError("symmetry class: l(chi) > n, so V_chi is zero");
  std::size_t dim = 1;
  for (int j = 0; j < m; ++j) {
    dim *= static_cast<std::size_t>(n);
    if (dim > max_tensor_dim()) throw ResourceError("symmetry class: n^m exceeds the tensor cap");
  }

  SymmetryClass sc;
  sc.chi_ = chi;
  sc.n_ = n;
  const auto& perms = all_permutations(m);
  const auto& chi_values = character_values(chi);
  sc.chi_id_ = chi_values.front();  // identity is the first permutation
  const double scale = static_cast<double>(sc.chi_id_) / static_cast<double>(factorial(m));

  sc.projector_ = CMatrix(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const MultiIndex alpha = MultiIndex::from_linear_index(a, m, n);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      if (chi_values[s] == 0) continue;
      sc.projector_(act(alpha, perms[s]).linear_index(), a) += scale * chi_values[s];
    }
  }

  // Omega two ways: nonvanishing stabilizer character sum, and majorization.
  for (std::size_t a = 0; a < dim; ++a) {
    const MultiIndex alpha = MultiIndex::from_linear_index(a, m, n);
    const bool by_sum = character_sum_over_stabilizer(chi, alpha) != 0;
    const bool by_order = majorizes(chi, multiplicity_partition(alpha));
    if (by_sum != by_order)
      throw std::logic_error("symmetry class: stabilizer and majorization criteria disagree at " +
                             alpha.to_string());
    if (by_sum) sc.omega_.push_back(alpha);
  }
  for (const MultiIndex& alpha : sc.omega_)
    if (alpha.is_increasing()) sc.delta_bar_.push_back(alpha);

  // Greedy basis extension. e*_alpha is supported on the orbit of alpha, so
  // the span decomposes orthogonally over orbits and independence only has
  // to be tested against earlier picks from the same orbit.
  std::map<MultiIndex, std::vector<CVector>> picked_by_orbit;
  for (const MultiIndex& alpha : sc.omega_) {
    std::vector<int> sorted = alpha.entries();
    std::sort(sorted.begin(), sorted.end());
    auto& picked = picked_by_orbit[MultiIndex(sorted, n)];
    CVector w = sc.estar(alpha);
    const double input_norm = norm2(w);
    for (int pass = 0; pass < 2; ++pass)
      for (const CVector& u : picked) {
        const cplx c = dot(u, w);
        for (std::size_t r = 0; r < w.size(); ++r) w[r] -= c * u[r];
      }
    const double residual = norm2(w);
    if (residual <= kRankThreshold * input_norm) continue;
    for (cplx& z : w) z /= residual;
    picked.push_back(std::move(w));
    sc.delta_hat_.push_back(alpha);
  }

  std::vector<CVector> estars;
  estars.reserve(sc.delta_hat_.size());
  for (const MultiIndex& alpha : sc.delta_hat_) estars.push_back(sc.estar(alpha));
  GramSchmidt gs = gram_schmidt(estars);
  sc.inclusion_ = CMatrix::from_columns(gs.ortho);
  sc.basis_change_ = std::move(gs.coeffs);

  const double rank = sc.projector_.trace().real();
  if (std::abs(rank - static_cast<double>(sc.dim())) > 1e-6)
    throw NumericError("symmetry class: basis size differs from the projector rank");
  return sc;
}

CVector SymmetryClass::estar(const MultiIndex& alpha) const {
  if (alpha.m() != m() || alpha.n() != n_) throw DomainError("estar: multi-index not in Gamma_{m,n}");
  return projector_.column(alpha.linear_index());
}

std::vector<MultiIndex> delta_hat_basis(const SymmetryClass& sc) { return sc.delta_hat(); }

CMatrix sym_op_product(const SymmetryClass& sc, std::span<const CMatrix> ops) {
  const int m = sc.m();
  if (static_cast<int>(ops.size()) != m) throw DomainError("sym_op_product: expected m operators");
  for (const CMatrix& x : ops) check_operand(sc, x, "sym_op_product");

  std::vector<const CMatrix*> canonical;
  for (const CMatrix& x : ops) canonical.push_back(&x);
  std::stable_sort(canonical.begin(), canonical.end(),
                   [](const CMatrix* a, const CMatrix* b) { return lex_less(*a, *b); });

  const auto& perms = all_permutations(m);
  const double weight = 1.0 / static_cast<double>(perms.size());
  std::vector<const CMatrix*> slots(static_cast<std::size_t>(m));
  return compress(sc, [&](const CVector& q) {
    CVector acc(q.size());
    for (const Permutation& sigma : perms) {
      for (int j = 0; j < m; ++j) slots[static_cast<std::size_t>(j)] = canonical[static_cast<std::size_t>(sigma(j))];
      const CVector term = apply_kron(slots, q);
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += term[r];
    }
    for (cplx& z : acc) z *= weight;
    return acc;
  });
}

CMatrix sym_op_product_grouped(const SymmetryClass& sc, std::span<const CMatrix> distinct,
                               std::span<const int> multiplicity) {
  if (distinct.size() != multiplicity.size())
    throw DomainError("sym_op_product_grouped: one multiplicity per operator required");
  std::vector<int> labels;
  double weight = 1.0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    check_operand(sc, distinct[i], "sym_op_product_grouped");
    if (multiplicity[i] < 0) throw DomainError("sym_op_product_grouped: negative multiplicity");
    labels.insert(labels.end(), static_cast<std::size_t>(multiplicity[i]), static_cast<int>(i));
    weight *= static_cast<double>(factorial(multiplicity[i]));
  }
  if (static_cast<int>(labels.size()) != sc.m())
    throw DomainError("sym_op_product_grouped: multiplicities must sum to m");
  weight /= static_cast<double>(factorial(sc.m()));

  std::vector<std::vector<const CMatrix*>> arrangements;
  do {
    std::vector<const CMatrix*> slots;
    for (int l : labels) slots.push_back(&distinct[static_cast<std::size_t>(l)]);
    arrangements.push_back(std::move(slots));
  } while (std::next_permutation(labels.begin(), labels.end()));

  return compress(sc, [&](const CVector& q) {
    CVector acc(q.size());
    for (const auto& slots : arrangements) {
      const CVector term = apply_kron(slots, q);
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += term[r];
    }
    for (cplx& z : acc) z *= weight;
    return acc;
  });
}

CMatrix k_chi_matrix(const SymmetryClass& sc, const CMatrix& a) {
  check_operand(sc, a, "k_chi_matrix");
  const std::vector<const CMatrix*> slots(static_cast<std::size_t>(sc.m()), &a);
  return compress(sc, [&](const CVector& q) { return apply_kron(slots, q); });
}

CMatrix k_chi_matrix_via_immanants(const SymmetryClass& sc, const CMatrix& a) {
  check_operand(sc, a, "k_chi_matrix_via_immanants");
  const auto& basis = sc.delta_hat();
  const std::size_t d = basis.size();
  CMatrix imm(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) imm(i, j) = immanant(sc.chi(), submatrix(a, basis[i], basis[j]));
  const CMatrix& b = sc.basis_change();
  const double scale = static_cast<double>(sc.chi_id()) / static_cast<double>(factorial(sc.m()));
  return (b.adjoint() * imm * b) * cplx(scale);
}

CMatrix dk_kchi(const SymmetryClass& sc, const CMatrix& t, std::span<const CMatrix> xs) {
  check_operand(sc, t, "dk_kchi");
  for (const CMatrix& x : xs) check_operand(sc, x, "dk_kchi");
  const int m = sc.m();
  const int k = static_cast<int>(xs.size());
  if (k == 0) return k_chi_matrix(sc, t);
  if (k > m) return CMatrix::zeros(sc.dim(), sc.dim());

  std::vector<CMatrix> distinct;
  std::vector<int> multiplicity;
  if (k < m) {
    distinct.push_back(t);
    multiplicity.push_back(m - k);
  }
  for (const CMatrix& x : xs) {
    distinct.push_back(x);
    multiplicity.push_back(1);
  }
  const double scale = static_cast<double>(factorial(m)) / static_cast<double>(factorial(m - k));
  return sym_op_product_grouped(sc, distinct, multiplicity) * cplx(scale);
}

CMatrix dk_kchi_via_mixed_immanants(const SymmetryClass& sc, const CMatrix& a,
                                    std::span<const CMatrix> xs) {
  check_operand(sc, a, "dk_kchi_via_mixed_immanants");
  for (const CMatrix& x : xs) check_operand(sc, x, "dk_kchi_via_mixed_immanants");
  const int m = sc.m();
  const int k = static_cast<int>(xs.size());
  if (k > m) return CMatrix::zeros(sc.dim(), sc.dim());
  const auto& basis = sc.delta_hat();
  const std::size_t d = basis.size();
  CMatrix mix(d, d);
  std::vector<CMatrix> sub_x(xs.size());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < xs.size(); ++l) sub_x[l] = submatrix(xs[l], basis[i], basis[j]);
      mix(i, j) = mixed_immanant(sc.chi(), submatrix(a, basis[i], basis[j]), sub_x);
    }
  const CMatrix& b = sc.basis_change();
  const double scale = static_cast<double>(sc.chi_id()) / static_cast<double>(factorial(m - k));
  return (b.adjoint() * mix * b) * cplx(scale);
}

}  // namespace kchi
