#include "kchi/symgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "kchi/error.hpp"

namespace kchi {

namespace {

constexpr int kMaxTableDegree = 10;

using Key = std::pair<std::vector<int>, std::vector<int>>;

// Beta-set (first-column hook lengths) of a partition with `len` rows.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

// Murnaghan-Nakayama: strip a border strip of length rho[0] (the largest
// remaining cycle) in every possible way. Removing a strip of length r is
// moving one bead of the beta-set from b to b - r; the height of the strip is
// the number of beads strictly between.
int mn_recursive(const std::vector<int>& lambda, const std::vector<int>& rho,
                 std::map<Key, int>& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, rho};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  const std::vector<int> beta = beta_set(lambda);
  int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> moved = beta;
    moved[i] = target;
    const int sub = mn_recursive(from_beta_set(std::move(moved)), rest, memo);
    total += (height % 2 == 0 ? sub : -sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

CharTable::CharTable(int m) : m_(m) {
  if (m < 1 || m > kMaxTableDegree) throw DomainError("character table: m must lie in [1, 10]");
  partitions_ = partitions_of(m);
  const std::size_t count = partitions_.size();
  values_.resize(count * count);
  std::map<Key, int> memo;
  for (std::size_t l = 0; l < count; ++l)
    for (std::size_t c = 0; c < count; ++c)
      values_[l * count + c] = mn_recursive(partitions_[l].parts(), partitions_[c].parts(), memo);
}

std::shared_ptr<const CharTable> CharTable::table(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const CharTable>(m);
  return slot;
}

std::size_t CharTable::index_of(const Partition& p) const {
  if (p.total() != m_) throw DomainError("character table: partition of wrong total");
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
  return static_cast<std::size_t>(it - partitions_.begin());
}

int CharTable::value(const Partition& lambda, const Partition& rho) const {
  return value(index_of(lambda), index_of(rho));
}

int character(const Partition& lambda, const Partition& rho) {
  if (lambda.total() != rho.total())
    throw DomainError("character: lambda and rho are partitions of different totals");
  return CharTable::table(lambda.total())->value(lambda, rho);
}

const std::vector<int>& character_values(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::vector<int>> cache;
  const int m = lambda.total();
  const auto& perms = all_permutations(m);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(lambda);
  if (inserted) {
    auto table = CharTable::table(m);
    const std::size_t row = table->index_of(lambda);
    it->second.reserve(perms.size());
    for (const Permutation& sigma : perms)
      it->second.push_back(table->value(row, table->index_of(sigma.cycle_type())));
  }
  // std::map never relocates nodes, so the reference outlives the lock.
  return it->second;
}

std::int64_t character_sum_over_stabilizer(const Partition& lambda, const MultiIndex& alpha) {
  if (lambda.total() != alpha.m())
    throw DomainError("character_sum_over_stabilizer: |lambda| differs from m");
  const auto& perms = all_permutations(alpha.m());
  const auto& chi = character_values(lambda);
  std::int64_t sum = 0;
  for (std::size_t s = 0; s < perms.size(); ++s)
    if (act(alpha, perms[s]) == alpha) sum += chi[s];
  return sum;
}

std::uint64_t class_size(const Partition& rho) {
  // m! / prod_i (i^{c_i} c_i!)
  std::map<int, int> multiplicity;
  for (int p : rho.parts()) ++multiplicity[p];
  std::uint64_t denom = 1;
  for (auto [len, count] : multiplicity) {
    for (int j = 0; j < count; ++j) denom *= static_cast<std::uint64_t>(len);
    denom *= factorial(count);
  }
  return factorial(rho.total()) / denom;
}

}  // namespace kchi
