#include "kchi/combinat.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <mutex>
#include <numeric>

#include "kchi/error.hpp"

namespace kchi {

namespace {

constexpr int kMaxPartitionDegree = 12;
constexpr int kMaxPermutationDegree = 8;

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw DomainError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  if (parts.empty()) throw DomainError("empty partition");
  return Partition(std::move(parts));
}

Partition Partition::row(int m) { return Partition(std::vector<int>{m}); }

Partition Partition::column(int m) {
  return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int m) {
  if (m < 1 || m > kMaxPartitionDegree)
    throw DomainError("partitions_of: m must lie in [1, 12]");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(m, m, current, out);
  return out;
}

bool majorizes(const Partition& lambda, const Partition& mu) {
  if (lambda.total() != mu.total())
    throw DomainError("majorizes: partitions of different totals");
  int sum_lambda = 0;
  int sum_mu = 0;
  for (int s = 0; s < lambda.total(); ++s) {
    sum_lambda += lambda.part(static_cast<std::size_t>(s));
    sum_mu += mu.part(static_cast<std::size_t>(s));
    if (sum_mu > sum_lambda) return false;
  }
  return true;
}

// --------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (n < 1) throw DomainError("multi-index codomain size must be positive");
  for (int e : entries_)
    if (e < 1 || e > n) throw DomainError("multi-index entry out of range {1..n}");
}

bool MultiIndex::is_increasing() const {
  return std::is_sorted(entries_.begin(), entries_.end());
}

bool MultiIndex::is_strictly_increasing() const {
  return std::adjacent_find(entries_.begin(), entries_.end(), std::greater_equal<>()) ==
         entries_.end();
}

std::size_t MultiIndex::linear_index() const {
  std::size_t index = 0;
  for (int e : entries_) index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e - 1);
  return index;
}

MultiIndex MultiIndex::from_linear_index(std::size_t index, int m, int n) {
  std::vector<int> entries(static_cast<std::size_t>(m));
  for (int j = m - 1; j >= 0; --j) {
    entries[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(n)) + 1;
    index /= static_cast<std::size_t>(n);
  }
  return MultiIndex(std::move(entries), n);
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation images must form a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw DomainError("compose: degree mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Permutation(std::move(out));
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::sign() const {
  const Partition type = cycle_type();
  return (degree() - type.length()) % 2 == 0 ? 1 : -1;
}

const std::vector<Permutation>& all_permutations(int m) {
  if (m < 1 || m > kMaxPermutationDegree)
    throw ResourceError("all_permutations: degree must lie in [1, 8]");
  static std::array<std::vector<Permutation>, kMaxPermutationDegree + 1> cache;
  static std::array<std::once_flag, kMaxPermutationDegree + 1> flags;
  const auto idx = static_cast<std::size_t>(m);
  std::call_once(flags[idx], [&] {
    std::vector<int> images(idx);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> perms;
    perms.reserve(factorial(m));
    do {
      perms.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    cache[idx] = std::move(perms);
  });
  return cache[idx];
}

MultiIndex act(const MultiIndex& alpha, const Permutation& sigma) {
  if (sigma.degree() != alpha.m()) throw DomainError("act: degree mismatch");
  std::vector<int> out(alpha.entries().size());
  for (int i = 0; i < alpha.m(); ++i)
    out[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(sigma(i))];
  return MultiIndex(std::move(out), alpha.n());
}

MultiIndex omega_of(const Partition& pi, int n) {
  if (pi.length() > n) throw DomainError("omega_of: partition longer than n");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(pi.total()));
  for (int i = 0; i < pi.length(); ++i)
    entries.insert(entries.end(), static_cast<std::size_t>(pi.parts()[static_cast<std::size_t>(i)]), i + 1);
  return MultiIndex(std::move(entries), n);
}

Partition multiplicity_partition(const MultiIndex& alpha) {
  std::vector<int> counts(static_cast<std::size_t>(alpha.n()), 0);
  for (int e : alpha.entries()) ++counts[static_cast<std::size_t>(e - 1)];
  std::vector<int> parts;
  for (int c : counts)
    if (c > 0) parts.push_back(c);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<MultiIndex> enumerate(IndexSet mode, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("enumerate: m and n must be positive");
  std::vector<MultiIndex> out;
  if (mode == IndexSet::strict && m > n) return out;
  // Odometer over {1..n}^m with the last position fastest; pruning keeps the
  // result lexicographically sorted for every mode.
  std::vector<int> current(static_cast<std::size_t>(m), 1);
  if (mode == IndexSet::strict) std::iota(current.begin(), current.end(), 1);
  const auto last = static_cast<std::size_t>(m - 1);
  while (true) {
    out.emplace_back(current, n);
    std::size_t pos = last + 1;
    while (pos-- > 0) {
      const int cap = mode == IndexSet::strict ? n - static_cast<int>(last - pos) : n;
      if (current[pos] < cap) break;
    }
    if (pos > last) break;
    ++current[pos];
    for (std::size_t j = pos + 1; j <= last; ++j) {
      switch (mode) {
        case IndexSet::gamma: current[j] = 1; break;
        case IndexSet::increasing: current[j] = current[pos]; break;
        case IndexSet::strict: current[j] = current[j - 1] + 1; break;
      }
    }
  }
  return out;
}

OrbitInfo orbit_and_stabilizer(const MultiIndex& alpha) {
  if (alpha.m() > kMaxPermutationDegree)
    throw ResourceError("orbit_and_stabilizer: m must be at most 8");
  OrbitInfo info;
  info.representative = alpha;
  std::vector<MultiIndex> orbit;
  for (const Permutation& sigma : all_permutations(alpha.m())) {
    MultiIndex image = act(alpha, sigma);
    if (image == alpha) info.stabilizer.push_back(sigma);
    if (image < info.representative) info.representative = image;
    orbit.push_back(std::move(image));
  }
  std::sort(orbit.begin(), orbit.end());
  info.orbit_size = static_cast<std::size_t>(std::unique(orbit.begin(), orbit.end()) - orbit.begin());
  return info;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace kchi
