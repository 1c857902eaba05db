#pragma once

// Irreducible characters of the symmetric group.
//
// Characters of S_m are integer valued, hence real: the complex conjugate
// character coincides with the character itself, and every formula that
// involves a conjugated character is evaluated with the character.

#include <cstdint>
#include <memory>
#include <vector>

#include "kchi/combinat.hpp"

namespace kchi {

/// Full character table of S_m. Immutable once built; share through table(m).
class CharTable {
 public:
  /// Builds the table by Murnaghan-Nakayama. 1 <= m <= 10.
  explicit CharTable(int m);

  /// Cached table for S_m, built once per m; safe to call concurrently.
  static std::shared_ptr<const CharTable> table(int m);

  int degree() const { return m_; }
  /// Row labels lambda and column labels rho, both in partitions_of(m) order.
  const std::vector<Partition>& partitions() const { return partitions_; }
  int value(const Partition& lambda, const Partition& rho) const;
  int value(std::size_t lambda_index, std::size_t rho_index) const {
    return values_[lambda_index * partitions_.size() + rho_index];
  }
  std::size_t index_of(const Partition& p) const;

 private:
  int m_;
  std::vector<Partition> partitions_;
  std::vector<int> values_;  // row-major, rows = lambda, columns = rho
};

/// chi_lambda evaluated on any permutation of cycle type rho.
int character(const Partition& lambda, const Partition& rho);

/// chi_lambda(sigma) for every sigma in all_permutations(m), same order. m <= 8. Cached.
const std::vector<int>& character_values(const Partition& lambda);

/// Sum of chi_lambda over the stabilizer G_alpha. m <= 8.
std::int64_t character_sum_over_stabilizer(const Partition& lambda, const MultiIndex& alpha);

/// Number of permutations of S_m with cycle type rho.
std::uint64_t class_size(const Partition& rho);

}  // namespace kchi
