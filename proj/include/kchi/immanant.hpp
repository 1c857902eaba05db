#pragma once

// Immanants and mixed immanants by direct summation over S_n.

#include <span>

#include "kchi/combinat.hpp"
#include "kchi/denselin.hpp"

namespace kchi {

/// d_chi(A) = sum_sigma chi(sigma) prod_i a_{i,sigma(i)}. A is n x n with n = |chi| <= 8.
cplx immanant(const Partition& chi, const CMatrix& a);

/// Mixed immanant: (1/n!) sum_sigma d_chi(column j of xs[sigma(j)]). n = |xs| = |chi| <= 6.
cplx mixed_immanant(const Partition& chi, std::span<const CMatrix> xs);

/// Mixed immanant with `a` filling the first n - |xs| slots.
cplx mixed_immanant(const Partition& chi, const CMatrix& a, std::span<const CMatrix> xs);

/// Mixed immanant of `distinct[i]` repeated `multiplicity[i]` times; sums over
/// distinct column arrangements only.
cplx mixed_immanant_grouped(const Partition& chi, std::span<const CMatrix> distinct,
                            std::span<const int> multiplicity);

/// D^k d_chi(A)(X^1, ..., X^k) = n!/(n-k)! * mixed_immanant(chi, A; X^1..X^k). n <= 6.
cplx dk_immanant(const Partition& chi, const CMatrix& a, std::span<const CMatrix> xs);

/// A[gamma|delta]: entry (i, j) is a_{gamma(i), delta(j)} (1-based multi-indices).
CMatrix submatrix(const CMatrix& a, const MultiIndex& gamma, const MultiIndex& delta);

}  // namespace kchi
