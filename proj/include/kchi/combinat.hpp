#pragma once

// Partitions, multi-indices and permutations.
//
// Conventions used throughout the library:
//  * multi-index entries are 1-based, alpha = (alpha(1), ..., alpha(m)) with
//    values in {1..n};
//  * permutation images are 0-based internally, sigma.images()[i] = sigma(i);
//  * the right action of S_m on multi-indices is (alpha sigma)(i) = alpha(sigma(i)).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kchi {

/// Weakly decreasing sequence of positive integers. Stored without zero padding.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1" (comma-separated, weakly decreasing).
  static Partition parse(std::string_view text);
  static Partition row(int m);     // (m)
  static Partition column(int m);  // (1,...,1)

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part (0-based); zero past the end, i.e. implicit padding.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All partitions of m, reverse lexicographic order: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(int m);

/// True iff mu precedes lambda in the majorization order.
bool majorizes(const Partition& lambda, const Partition& mu);

/// Element of Gamma_{m,n}. Ordered lexicographically by entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::vector<int> entries, int n);

  const std::vector<int>& entries() const { return entries_; }
  int m() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  bool is_increasing() const;
  bool is_strictly_increasing() const;

  /// Row-major position of e_{alpha(1)} (x) ... (x) e_{alpha(m)} in the tensor basis;
  /// alpha(1) is the most significant digit.
  std::size_t linear_index() const;
  static MultiIndex from_linear_index(std::size_t index, int m, int n);

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_ && a.n_ == b.n_;
  }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::vector<int> entries_;
  int n_ = 0;
};

class Permutation {
 public:
  Permutation() = default;
  /// 0-based images; throws DomainError if not a bijection of {0..m-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);

  const std::vector<int>& images() const { return images_; }
  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Partition cycle_type() const;
  bool is_identity() const;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// All of S_m in lexicographic order of the image sequence (identity first). m <= 10.
const std::vector<Permutation>& all_permutations(int m);

/// alpha sigma, i.e. i -> alpha(sigma(i)).
MultiIndex act(const MultiIndex& alpha, const Permutation& sigma);

/// omega(pi) = (1 x pi_1, 2 x pi_2, ...) in G_{m,n}.
MultiIndex omega_of(const Partition& pi, int n);

/// Preimage sizes of alpha sorted weakly decreasing.
Partition multiplicity_partition(const MultiIndex& alpha);

enum class IndexSet { gamma, increasing, strict };

/// Gamma_{m,n}, G_{m,n} or Q_{m,n} in lexicographic order.
std::vector<MultiIndex> enumerate(IndexSet mode, int m, int n);

struct OrbitInfo {
  MultiIndex representative;           // lexicographically first element of the orbit
  std::vector<Permutation> stabilizer; // G_alpha, in lexicographic order
  std::size_t orbit_size = 0;
};

/// Orbit representative and stabilizer by enumeration of S_m. m <= 8.
OrbitInfo orbit_and_stabilizer(const MultiIndex& alpha);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

}  // namespace kchi
