#include "motif/canon.hpp"

#include "motif/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>

namespace motif {

IsoClass canonicalize(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxCanonVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange,
                "canonicalize supports 1.." + std::to_string(kMaxCanonVertices) + " vertices, got " +
                    std::to_string(n));
  }
  const auto edges = g.edges();
  int min_degree = n;
  for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t hits = 0;
  std::array<int, kMaxCanonVertices> pos{};

  for (int last = 0; last < n; ++last) {
    if (g.degree(last) != min_degree) continue;
    std::vector<int> near;
    std::vector<int> far;
    for (int v = 0; v < n; ++v) {
      if (v == last) continue;
      (g.has_edge(last, v) ? near : far).push_back(v);
    }
    pos[last] = n - 1;
    do {
      for (std::size_t i = 0; i < near.size(); ++i) pos[near[i]] = static_cast<int>(i);
      do {
        for (std::size_t i = 0; i < far.size(); ++i) pos[far[i]] = min_degree + static_cast<int>(i);
        std::uint64_t bits = 0;
        for (auto [u, v] : edges) bits |= std::uint64_t{1} << edge_index(pos[u], pos[v]);
        if (bits < best) {
          best = bits;
          hits = 1;
        } else if (bits == best) {
          ++hits;
        }
      } while (std::next_permutation(far.begin(), far.end()));
    } while (std::next_permutation(near.begin(), near.end()));
  }
  return IsoClass{Graph::from_bits(n, best), hits};
}

CanonKey canonical_key(const Graph& g) {
  if (g.order() >= 1 && g.order() <= kMaxTableVertices) {
    const CanonTable& table = canon_table(g.order());
    return {g.order(), g.size(), table.representative(table.class_of(g.edge_bits()))};
  }
  return canonicalize(g).key();
}

CanonTable::CanonTable(int k) : k_(k) {
  if (k < 1 || k > kMaxTableVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange, "orbit tables cover 1.." + std::to_string(kMaxTableVertices));
  }
  const int slots = edge_slots(k);
  const std::uint64_t total = std::uint64_t{1} << slots;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  class_of_.assign(total, kUnset);

  // Image of every edge slot under every vertex permutation.
  std::vector<std::array<std::uint8_t, edge_slots(kMaxTableVertices)>> slot_maps;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::array<std::uint8_t, edge_slots(kMaxTableVertices)> map{};
    for (int i = 0; i < slots; ++i) {
      auto [u, v] = edge_endpoints(i);
      map[i] = static_cast<std::uint8_t>(edge_index(perm[u], perm[v]));
    }
    slot_maps.push_back(map);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::uint64_t x = 0; x < total; ++x) {
    if (class_of_[x] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(representatives_.size());
    std::uint64_t stabilizer = 0;
    for (const auto& map : slot_maps) {
      std::uint64_t y = 0;
      for (std::uint64_t rest = x; rest; rest &= rest - 1) {
        y |= std::uint64_t{1} << map[std::countr_zero(rest)];
      }
      class_of_[y] = cls;
      if (y == x) ++stabilizer;
    }
    representatives_.push_back(x);
    aut_counts_.push_back(stabilizer);
  }
}

const CanonTable& canon_table(int k) {
  if (k < 1 || k > kMaxTableVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange, "orbit tables cover 1.." + std::to_string(kMaxTableVertices));
  }
  static std::array<std::once_flag, kMaxTableVertices + 1> once;
  static std::array<std::unique_ptr<CanonTable>, kMaxTableVertices + 1> tables;
  std::call_once(once[k], [k] { tables[k] = std::make_unique<CanonTable>(k); });
  return *tables[k];
}

std::vector<IsoClass> all_iso_classes(int n) {
  const CanonTable& table = canon_table(n);
  std::vector<IsoClass> out;
  out.reserve(static_cast<std::size_t>(table.class_count()));
  for (int c = 0; c < table.class_count(); ++c) {
    out.push_back({Graph::from_bits(n, table.representative(c)), table.aut_count(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace motif
