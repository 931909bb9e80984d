#include "motif/partition.hpp"

#include "motif/error.hpp"

#include <algorithm>

namespace motif {

Partition Partition::from_block_labels(std::vector<int> labels) {
  if (labels.empty() || static_cast<int>(labels.size()) > kMaxVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange, "partition of " + std::to_string(labels.size()) + " elements");
  }
  // Relabel blocks in order of first appearance.
  std::vector<int> rename;
  Partition p;
  p.block_of_.reserve(labels.size());
  for (int label : labels) {
    if (label < 0) throw Error(ErrorKind::InvalidParams, "negative block label");
    if (static_cast<std::size_t>(label) >= rename.size()) rename.resize(static_cast<std::size_t>(label) + 1, -1);
    if (rename[label] < 0) rename[label] = p.block_count_++;
    p.block_of_.push_back(rename[label]);
  }
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i;
  return from_block_labels(std::move(labels));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
  for (int v = 0; v < size(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1 || n > kMaxPartitionElements) {
    throw Error(ErrorKind::VertexCountOutOfRange,
                "partitions of 1.." + std::to_string(kMaxPartitionElements) + " elements, got " + std::to_string(n));
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // prefix_max[i] = max(rgs[0..i])
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(Partition::from_block_labels(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::int64_t mobius_partition(const Partition& p) {
  std::int64_t result = 1;
  for (const auto& block : p.blocks()) {
    const auto size = static_cast<std::int64_t>(block.size());
    for (std::int64_t i = 2; i < size; ++i) result *= i;
    if (size % 2 == 0) result = -result;
  }
  return result;
}

std::optional<Graph> quotient(const Graph& h, const Partition& p) {
  if (p.size() != h.order()) {
    throw Error(ErrorKind::InvalidParams, "partition size " + std::to_string(p.size()) +
                                              " differs from graph order " + std::to_string(h.order()));
  }
  const auto block_of = p.block_of();
  Graph out(p.block_count());
  for (auto [u, v] : h.edges()) {
    if (block_of[u] == block_of[v]) return std::nullopt;
    out.add_edge(block_of[u], block_of[v]);
  }
  return out;
}

}  // namespace motif
