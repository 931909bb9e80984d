#pragma once

#include "motif/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace motif {

inline constexpr int kMaxPartitionElements = 9;

/// Set partition of {0..n-1} in restricted-growth normal form: block_of()[v]
/// is the block of v, block_of()[0] == 0 and each entry is at most one more
/// than the maximum before it.
class Partition {
 public:
  static Partition from_block_labels(std::vector<int> labels);
  static Partition singletons(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  std::span<const int> block_of() const { return block_of_; }
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> block_of_;
  int block_count_ = 0;
};

/// Visits every partition of {0..n-1} once, in lexicographic order of the
/// restricted-growth string. 1 <= n <= 9.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int n);

/// Möbius function of the partition lattice from the bottom element:
/// product over blocks B of (-1)^(|B|-1) (|B|-1)!.
std::int64_t mobius_partition(const Partition& p);

/// Contracts every block of p to one vertex (block i becomes vertex i). Returns
/// nullopt when a block contains an edge of h, i.e. the quotient has a loop and
/// admits no homomorphism into a simple graph.
std::optional<Graph> quotient(const Graph& h, const Partition& p);

}  // namespace motif
