#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace tvs {

/// Integer partition: weakly decreasing positive parts. Cells are indexed
/// English-style, row i and column j starting at 1.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition transpose() const;
  /// kappa = sum_i lambda_i (lambda_i - 2i + 1); always even.
  int kappa() const;
  bool contains(const Partition& mu) const;

  /// Partition with the parts of both, re-sorted (multiset union).
  Partition merged(const Partition& o) const;
  /// Each part multiplied by k.
  Partition scaled(int k) const;

  std::string to_string() const;

  /// Size first, then reverse-lexicographic, so (2) precedes (1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row;
  int col;
  int hook;
  int content;
};

/// One entry per cell, row-major order.
std::vector<Cell> hooks_and_contents(const Partition& lambda);

/// All partitions of n, in Partition ordering (memoized).
const std::vector<Partition>& partitions_of(int n);
/// All partitions of size <= max_size, each once, ordered by (size, reverse-lex).
std::vector<Partition> enumerate_partitions(int max_size);
/// Position of lambda within partitions_of(lambda.size()).
std::size_t partition_index(const Partition& lambda);

enum class BoxMove { Add, Remove };
std::vector<Partition> box_moves(const Partition& lambda, BoxMove dir);

/// z_lambda = prod_k k^{m_k} m_k!
long long z_lambda(const Partition& lambda);

}  // namespace tvs
