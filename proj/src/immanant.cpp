#include "kchi/immanant.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "kchi/error.hpp"
#include "kchi/symgroup.hpp"

namespace kchi {

namespace {

constexpr int kMaxMixedDegree = 6;

void check_square(const Partition& chi, const CMatrix& a, const char* who) {
  const auto n = static_cast<std::size_t>(chi.total());
  if (a.rows() != n || a.cols() != n)
    throw DomainError(std::string(who) + ": matrix must be |chi| x |chi|");
}

}  // namespace

cplx immanant(const Partition& chi, const CMatrix& a) {
  check_square(chi, a, "immanant");
  const int n = chi.total();
  const auto& perms = all_permutations(n);
  const auto& values = character_values(chi);
  cplx total = 0.0;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    if (values[s] == 0) continue;
    cplx prod = 1.0;
    for (int i = 0; i < n && prod != cplx(0.0); ++i)
      prod *= a(static_cast<std::size_t>(i), static_cast<std::size_t>(perms[s](i)));
    total += static_cast<double>(values[s]) * prod;
  }
  return total;
}

cplx mixed_immanant_grouped(const Partition& chi, std::span<const CMatrix> distinct,
                            std::span<const int> multiplicity) {
  const int n = chi.total();
  if (n > kMaxMixedDegree) throw ResourceError("mixed immanant: n must be at most 6");
  if (distinct.size() != multiplicity.size())
    throw DomainError("mixed immanant: one multiplicity per matrix required");
  std::vector<int> labels;
  double weight = 1.0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    check_square(chi, distinct[i], "mixed immanant");
    if (multiplicity[i] < 0) throw DomainError("mixed immanant: negative multiplicity");
    labels.insert(labels.end(), static_cast<std::size_t>(multiplicity[i]), static_cast<int>(i));
    weight *= static_cast<double>(factorial(multiplicity[i]));
  }
  if (static_cast<int>(labels.size()) != n)
    throw DomainError("mixed immanant: number of arguments must equal |chi|");
  weight /= static_cast<double>(factorial(n));

  const auto nn = static_cast<std::size_t>(n);
  CMatrix mixed(nn, nn);
  cplx total = 0.0;
  // labels is sorted, so next_permutation visits each distinct arrangement once.
  do {
    for (std::size_t j = 0; j < nn; ++j) {
      const CMatrix& src = distinct[static_cast<std::size_t>(labels[j])];
      for (std::size_t i = 0; i < nn; ++i) mixed(i, j) = src(i, j);
    }
    total += immanant(chi, mixed);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return weight * total;
}

cplx mixed_immanant(const Partition& chi, std::span<const CMatrix> xs) {
  std::vector<int> ones(xs.size(), 1);
  return mixed_immanant_grouped(chi, xs, ones);
}

cplx mixed_immanant(const Partition& chi, const CMatrix& a, std::span<const CMatrix> xs) {
  const int k = static_cast<int>(xs.size());
  if (k > chi.total()) throw DomainError("mixed immanant: more arguments than |chi|");
  std::vector<CMatrix> distinct;
  std::vector<int> multiplicity;
  if (k < chi.total()) {
    distinct.push_back(a);
    multiplicity.push_back(chi.total() - k);
  }
  for (const CMatrix& x : xs) {
    distinct.push_back(x);
    multiplicity.push_back(1);
  }
  return mixed_immanant_grouped(chi, distinct, multiplicity);
}

cplx dk_immanant(const Partition& chi, const CMatrix& a, std::span<const CMatrix> xs) {
  check_square(chi, a, "dk_immanant");
  const int n = chi.total();
  const int k = static_cast<int>(xs.size());
  if (k > n) return 0.0;
  if (k == 0) return immanant(chi, a);
  const double scale = static_cast<double>(factorial(n)) / static_cast<double>(factorial(n - k));
  return scale * mixed_immanant(chi, a, xs);
}

CMatrix submatrix(const CMatrix& a, const MultiIndex& gamma, const MultiIndex& delta) {
  CMatrix out(static_cast<std::size_t>(gamma.m()), static_cast<std::size_t>(delta.m()));
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const auto r = static_cast<std::size_t>(gamma[i] - 1);
      const auto c = static_cast<std::size_t>(delta[j] - 1);
      if (r >= a.rows() || c >= a.cols()) throw DomainError("submatrix: index out of range");
      out(i, j) = a(r, c);
    }
  return out;
}

}  // namespace kchi
