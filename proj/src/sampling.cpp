#include "kchi/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "kchi/error.hpp"

namespace kchi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CMatrix normalized(CMatrix x) {
  const double norm = spectral_norm(x);
  if (norm == 0.0) throw NumericError("cannot normalize a zero matrix");
  return x * cplx(1.0 / norm);
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::uint64_t mixed = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
  return std::mt19937_64(mixed);
}

CMatrix random_gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix out(n, n);
  for (cplx& z : out.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = cplx(re, im);
  }
  return out;
}

CMatrix random_unit_matrix(std::size_t n, std::mt19937_64& rng) {
  return normalized(random_gaussian(n, rng));
}

CMatrix random_psd(std::size_t n, std::mt19937_64& rng) {
  const CMatrix g = random_gaussian(n, rng);
  return g * g.adjoint();
}

CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  return polar(random_gaussian(n, rng)).w;
}

SupEstimate sample_sup(const TupleFunctional& f, std::size_t n, int k, int samples,
                       std::uint64_t seed, SupSearch search) {
  if (samples < 1) throw DomainError("sample_sup: at least one sample required");
  if (k < 0) throw DomainError("sample_sup: negative arity");
  const auto arity = static_cast<std::size_t>(k);
  SupEstimate best;
  best.value = -1.0;
  const int random_draws = search == SupSearch::refine ? std::max(1, samples / 2) : samples;
  // Refinement stays on the unitary group: |f| is convex in each argument, so
  // its sup over the unit ball is reached at extreme points.
  double step = 0.3;
  const double noise_scale = 1.0 / std::sqrt(2.0 * static_cast<double>(std::max<std::size_t>(n, 1)));

  std::vector<CMatrix> tuple(arity);
  for (int s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, 0, static_cast<std::uint64_t>(s));
    if (s < random_draws) {
      for (auto& x : tuple) x = random_unit_matrix(n, rng);
    } else {
      for (std::size_t i = 0; i < arity; ++i)
        tuple[i] = polar(best.argmax[i] + random_gaussian(n, rng) * cplx(step * noise_scale)).w.adjoint();
    }
    const double value = f(tuple);
    const bool improved = value > best.value;
    if (improved) {
      best.value = value;
      best.argmax = tuple;
    }
    if (s >= random_draws) step = std::clamp(improved ? step * 1.5 : step * 0.9, 1e-4, 1.0);
  }
  best.samples = samples;
  return best;
}

}  // namespace kchi
