#pragma once

// Seeded random matrices and a sampled lower-bound estimator for norms of
// multilinear maps. Every draw is derived from (seed, stream, index), so a
// sample does not depend on how many draws preceded it.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "kchi/denselin.hpp"

namespace kchi {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Entries with independent standard normal real and imaginary parts.
CMatrix random_gaussian(std::size_t n, std::mt19937_64& rng);
/// Gaussian matrix scaled to spectral norm 1.
CMatrix random_unit_matrix(std::size_t n, std::mt19937_64& rng);
/// G G^* for Gaussian G.
CMatrix random_psd(std::size_t n, std::mt19937_64& rng);
/// Haar-like unitary from the polar factor of a Gaussian matrix.
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

struct SupEstimate {
  double value = 0.0;           // best value seen; a lower bound for the sup
  std::vector<CMatrix> argmax;  // the tuple that produced it
  int samples = 0;
};

enum class SupSearch {
  random,  // independent random unit tuples
  refine,  // first half random, second half unitary perturbations of the incumbent
};

using TupleFunctional = std::function<double(std::span<const CMatrix>)>;

/// max of f over `samples` tuples of k unit-norm n x n matrices.
SupEstimate sample_sup(const TupleFunctional& f, std::size_t n, int k, int samples,
                       std::uint64_t seed, SupSearch search = SupSearch::random);

}  // namespace kchi
