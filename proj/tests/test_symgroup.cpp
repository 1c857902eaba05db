#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "kchi/error.hpp"
#include "kchi/symgroup.hpp"

namespace kchi {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// ---- Oracle: Young's rule. The permutation character on tabloids of shape
// mu decomposes as sum_lambda K_{lambda,mu} chi_lambda with the Kostka matrix
// unitriangular, so characters follow by forward substitution.

// Ways to distribute cycles of lengths rho over rows with capacities mu.
long long tabloid_fixed_points(const std::vector<int>& rho, std::vector<int> mu, std::size_t next = 0) {
  if (next == rho.size()) return std::all_of(mu.begin(), mu.end(), [](int c) { return c == 0; }) ? 1 : 0;
  long long total = 0;
  for (int& cap : mu) {
    if (cap < rho[next]) continue;
    cap -= rho[next];
    total += tabloid_fixed_points(rho, mu, next + 1);
    cap += rho[next];
  }
  return total;
}

long long kostka(const Partition& shape, const Partition& content) {
  std::vector<std::vector<int>> tableau;
  for (int row : shape.parts()) tableau.emplace_back(static_cast<std::size_t>(row), 0);
  std::vector<int> remaining = content.parts();
  std::function<long long(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) -> long long {
    if (r == tableau.size()) return 1;
    if (c == tableau[r].size()) return fill(r + 1, 0);
    long long count = 0;
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && tableau[r][c - 1] > v) continue;
      if (r > 0 && tableau[r - 1][c] >= v) continue;
      tableau[r][c] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      count += fill(r, c + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
    tableau[r][c] = 0;
    return count;
  };
  return fill(0, 0);
}

std::map<std::pair<Partition, Partition>, long long> youngs_rule_table(int m) {
  const auto parts = partitions_of(m);  // dominance-compatible order
  std::map<std::pair<Partition, Partition>, long long> chi;
  for (const auto& mu : parts) {
    for (const auto& rho : parts) {
      long long value = tabloid_fixed_points(rho.parts(), mu.parts());
      for (const auto& lambda : parts) {
        if (lambda == mu) break;
        value -= kostka(lambda, mu) * chi.at({lambda, rho});
      }
      chi[{mu, rho}] = value;
    }
  }
  return chi;
}

std::uint64_t hook_length_degree(const Partition& lambda) {
  std::uint64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda.parts()[static_cast<std::size_t>(i)] - j - 1;
      int leg = 0;
      for (int r = i + 1; r < lambda.length() && lambda.parts()[static_cast<std::size_t>(r)] > j; ++r) ++leg;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return factorial(lambda.total()) / hooks;
}

TEST(Character, Examples) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& rho : partitions_of(m)) {
      EXPECT_EQ(character(Partition::row(m), rho), 1);
      EXPECT_EQ(character(Partition::column(m), rho), (m - rho.length()) % 2 == 0 ? 1 : -1);
    }
  EXPECT_EQ(character(P({2, 1}), P({2, 1})), 0);
  EXPECT_EQ(character(P({2, 1}), P({3})), -1);
  EXPECT_EQ(character(P({2, 1}), P({1, 1, 1})), 2);
  EXPECT_THROW(character(P({2, 1}), P({2})), DomainError);
}

TEST(Character, StandardRepresentationOfS3IsFixedPointsMinusOne) {
  const auto& perms = all_permutations(3);
  const auto& values = character_values(P({2, 1}));
  for (std::size_t s = 0; s < perms.size(); ++s) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += perms[s](i) == i;
    EXPECT_EQ(values[s], fixed - 1);
  }
}

TEST(Character, MatchesYoungsRuleOracle) {
  for (int m = 1; m <= 6; ++m) {
    const auto oracle = youngs_rule_table(m);
    for (const auto& [key, value] : oracle) EXPECT_EQ(character(key.first, key.second), value) << m;
  }
}

TEST(Character, DegreesMatchHookLengthFormula) {
  for (int m = 1; m <= 10; ++m)
    for (const auto& lambda : partitions_of(m))
      EXPECT_EQ(static_cast<std::uint64_t>(character(lambda, Partition::column(m))), hook_length_degree(lambda))
          << lambda.to_string();
}

TEST(Character, FirstOrthogonality) {
  for (int m = 1; m <= 6; ++m) {
    const auto parts = partitions_of(m);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        long long sum = 0;
        for (const auto& rho : parts)
          sum += static_cast<long long>(class_size(rho)) * character(a, rho) * character(b, rho);
        EXPECT_EQ(sum, a == b ? static_cast<long long>(factorial(m)) : 0);
      }
  }
}

TEST(Character, ClassSizesSumToGroupOrder) {
  for (int m = 1; m <= 10; ++m) {
    std::uint64_t total = 0;
    for (const auto& rho : partitions_of(m)) total += class_size(rho);
    EXPECT_EQ(total, factorial(m));
  }
}

TEST(CharacterSum, Examples) {
  EXPECT_EQ(character_sum_over_stabilizer(P({1, 1}), MultiIndex({1, 1}, 1)), 0);
  EXPECT_EQ(character_sum_over_stabilizer(P({2}), MultiIndex({1, 1}, 1)), 2);
  EXPECT_EQ(character_sum_over_stabilizer(P({2, 1}), MultiIndex({1, 1, 2}, 2)), 2);
}

TEST(CharTable, SharedAndThreadSafe) {
  std::vector<std::shared_ptr<const CharTable>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i)
    threads.emplace_back([&, i] { seen[i] = CharTable::table(7); });
  for (auto& t : threads) t.join();
  for (const auto& t : seen) EXPECT_EQ(t.get(), seen[0].get());
  EXPECT_EQ(seen[0]->partitions().size(), 15u);
}

}  // namespace
}  // namespace kchi
