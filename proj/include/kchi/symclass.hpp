#pragma once

// Symmetry classes of tensors V_chi inside the m-th tensor power of C^n.
//
// Tensor-space objects use the basis e_alpha = e_{alpha(1)} (x) ... (x) e_{alpha(m)},
// ordered by MultiIndex::linear_index(). Operators restricted to V_chi are
// returned as matrices in the orthonormal basis obtained by Gram-Schmidt from
// the decomposable symmetrized tensors e*_alpha, alpha in delta_hat(), taken in
// lexicographic order.

#include <span>
#include <vector>

#include "kchi/combinat.hpp"
#include "kchi/denselin.hpp"

namespace kchi {

class SymmetryClass {
 public:
  /// Assembles the projector and the bases. |chi| <= 6, n^m <= max_tensor_dim().
  /// Throws DomainError when l(chi) > n (V_chi = 0).
  static SymmetryClass build(const Partition& chi, int n);

  const Partition& chi() const { return chi_; }
  int m() const { return chi_.total(); }
  int n() const { return n_; }
  /// chi(id), the degree of the character.
  int chi_id() const { return chi_id_; }
  std::size_t tensor_dim() const { return projector_.rows(); }
  /// dim V_chi = |delta_hat|.
  std::size_t dim() const { return delta_hat_.size(); }

  /// K_chi = chi(id)/m! * sum_sigma chi(sigma) P(sigma), n^m x n^m.
  const CMatrix& projector() const { return projector_; }
  /// Multi-indices with nonzero e*_alpha, lexicographic.
  const std::vector<MultiIndex>& omega() const { return omega_; }
  /// Orbit representatives (lexicographically first) lying in omega.
  const std::vector<MultiIndex>& delta_bar() const { return delta_bar_; }
  /// Basis indices: delta_bar extended greedily in lexicographic order.
  const std::vector<MultiIndex>& delta_hat() const { return delta_hat_; }
  /// Coordinates of e*_alpha = K_chi e_alpha in the tensor basis.
  CVector estar(const MultiIndex& alpha) const;
  /// Inclusion V_chi -> tensor space; columns are the orthonormal basis vectors.
  const CMatrix& inclusion() const { return inclusion_; }
  /// B with v_alpha = sum_gamma B(gamma, alpha) e*_gamma; upper triangular.
  const CMatrix& basis_change() const { return basis_change_; }

 private:
  SymmetryClass() = default;

  Partition chi_;
  int n_ = 0;
  int chi_id_ = 0;
  CMatrix projector_;
  std::vector<MultiIndex> omega_;
  std::vector<MultiIndex> delta_bar_;
  std::vector<MultiIndex> delta_hat_;
  CMatrix inclusion_;
  CMatrix basis_change_;
};

std::vector<MultiIndex> delta_hat_basis(const SymmetryClass& sc);

/// X^1 * ... * X^m: the symmetrized tensor product (1/m!) sum_sigma X^{sigma(1)} (x) ... (x) X^{sigma(m)}
/// compressed to V_chi. Direct sum over S_m; the operands are put in a canonical
/// order first so any permutation of `ops` gives a bit-identical result.
CMatrix sym_op_product(const SymmetryClass& sc, std::span<const CMatrix> ops);

/// Same product where distinct[i] occurs multiplicity[i] times. Sums over the
/// distinct slot arrangements only, each weighted by prod(multiplicity!)/m!.
CMatrix sym_op_product_grouped(const SymmetryClass& sc, std::span<const CMatrix> distinct,
                               std::span<const int> multiplicity);

/// K_chi(A) in the orthonormal basis: compression of (x)^m A.
CMatrix k_chi_matrix(const SymmetryClass& sc, const CMatrix& a);

/// K_chi(A) through immanants of submatrices: chi(id)/m! * B^* imm_chi(A) B.
CMatrix k_chi_matrix_via_immanants(const SymmetryClass& sc, const CMatrix& a);

/// D^k K_chi(T)(X^1..X^k) = m!/(m-k)! * T * ... * T * X^1 * ... * X^k (m-k copies of T).
/// k = 0 gives K_chi(T); k > m gives the zero matrix.
CMatrix dk_kchi(const SymmetryClass& sc, const CMatrix& t, std::span<const CMatrix> xs);

/// D^k K_chi(A)(X^1..X^k) through mixed immanants: chi(id)/(m-k)! * B^* miximm_chi(A; X) B.
CMatrix dk_kchi_via_mixed_immanants(const SymmetryClass& sc, const CMatrix& a,
                                    std::span<const CMatrix> xs);

}  // namespace kchi
