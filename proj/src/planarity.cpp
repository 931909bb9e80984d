#include "motif/properties.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <array>

namespace motif {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4 || g.size() <= 8) return true;  // K5 has 10 edges, K3,3 has 9

  // Strip vertices of degree <= 2: deleting a leaf, or replacing a path u-v-w by
  // the edge u-w, preserves planarity in both directions.
  std::array<std::uint64_t, kMaxVertices> adj{};
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::uint64_t alive = g.vertex_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int degree = std::popcount(adj[v]);
      if (degree > 2) continue;
      if (degree == 2) {
        const int a = std::countr_zero(adj[v]);
        const int b = 63 - std::countl_zero(adj[v]);
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
      }
      for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1) adj[std::countr_zero(nb)] &= ~(std::uint64_t{1} << v);
      adj[v] = 0;
      alive &= ~(std::uint64_t{1} << v);
      changed = true;
    }
  }

  const int core = std::popcount(alive);
  int twice_edges = 0;
  for (std::uint64_t rest = alive; rest; rest &= rest - 1) twice_edges += std::popcount(adj[std::countr_zero(rest)]);
  const int edges = twice_edges / 2;
  if (core <= 4 || edges <= 8) return true;
  if (edges > 3 * core - 6) return false;
  if (core == 5) return edges < 10;

  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (std::uint64_t rest = alive; rest; rest &= rest - 1) index[std::countr_zero(rest)] = next++;
  BoostGraph bg(static_cast<std::size_t>(core));
  for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    for (std::uint64_t up = adj[v] & ~((std::uint64_t{2} << v) - 1); up; up &= up - 1) {
      boost::add_edge(static_cast<std::size_t>(index[v]), static_cast<std::size_t>(index[std::countr_zero(up)]), bg);
    }
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace motif
