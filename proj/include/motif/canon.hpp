#pragma once

#include "motif/graph.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace motif {

/// canonicalize() accepts graphs up to this order.
inline constexpr int kMaxCanonVertices = 9;
/// Orbit tables over all labeled graphs are built up to this order.
inline constexpr int kMaxTableVertices = 7;

/// Total order on isomorphism types: vertex count, then edge count, then the
/// edge bitset read as an unsigned integer (highest edge index most significant).
struct CanonKey {
  int n = 0;
  int m = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

/// Canonical representative of an isomorphism type plus |Aut|.
struct IsoClass {
  Graph canon;
  std::uint64_t aut_count = 0;

  CanonKey key() const { return {canon.order(), canon.size(), canon.edge_bits()}; }

  friend bool operator==(const IsoClass& a, const IsoClass& b) { return a.canon == b.canon; }
  friend auto operator<=>(const IsoClass& a, const IsoClass& b) { return a.key() <=> b.key(); }
};

/// Minimum relabeling of g under the CanonKey order, with the exact number of
/// automorphisms. Only relabelings that put a minimum-degree vertex last and its
/// neighbours first are scanned; every minimiser has that shape.
IsoClass canonicalize(const Graph& g);

/// Key of canonicalize(g); served from the orbit tables when n <= 7.
CanonKey canonical_key(const Graph& g);

/// Partition of all 2^(k choose 2) labeled graphs on k vertices into orbits of Sym_k.
/// Class ids follow the order of the minimal member, which is the representative.
class CanonTable {
 public:
  explicit CanonTable(int k);

  int k() const { return k_; }
  int class_count() const { return static_cast<int>(representatives_.size()); }
  int class_of(std::uint64_t bits) const { return static_cast<int>(class_of_[bits]); }
  std::uint64_t representative(int cls) const { return representatives_[cls]; }
  std::uint64_t aut_count(int cls) const { return aut_counts_[cls]; }
  bool is_representative(std::uint64_t bits) const {
    return representatives_[class_of_[bits]] == bits;
  }

 private:
  int k_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> representatives_;
  std::vector<std::uint64_t> aut_counts_;
};

/// Shared, lazily built table for 1 <= k <= 7. Thread-safe.
const CanonTable& canon_table(int k);

/// All isomorphism types on exactly n vertices (n <= 7), in CanonKey order.
std::vector<IsoClass> all_iso_classes(int n);

}  // namespace motif
