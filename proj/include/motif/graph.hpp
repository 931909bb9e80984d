#pragma once

#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motif {

/// Hard vertex cap of the bit-matrix representation. Tensor-product query
/// graphs are the only values that get close to it.
inline constexpr int kMaxVertices = 64;

/// EdgeSet covers the edge slots of labeled K_k for k up to this bound
/// (enough for the Z_p action with p <= 31).
inline constexpr int kMaxEdgeSetVertices = 32;

constexpr int edge_slots(int k) { return k * (k - 1) / 2; }

/// Edge {u,v} with u < v lives at bit v(v-1)/2 + u. Argument order is free.
constexpr int edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

std::pair<int, int> edge_endpoints(int index);

/// Subset of the edge slots of the labeled complete graph K_k.
class EdgeSet {
 public:
  static constexpr int kMaxSlots = edge_slots(kMaxEdgeSetVertices);

  EdgeSet() = default;
  explicit EdgeSet(int k);
  /// Only for k <= 11, where all slots fit into one word.
  static EdgeSet from_bits(int k, std::uint64_t bits);

  int k() const { return k_; }
  int slots() const { return edge_slots(k_); }
  bool test(int index) const { return bits_.test(static_cast<std::size_t>(index)); }
  void set(int index, bool value = true);
  int count() const { return static_cast<int>(bits_.count()); }
  std::uint64_t to_bits() const;

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  EdgeSet operator|(const EdgeSet& other) const;
  EdgeSet operator&(const EdgeSet& other) const;

 private:
  int k_ = 0;
  std::bitset<kMaxSlots> bits_;
};

/// Labeled simple graph on vertices 0..n-1 stored as a symmetric bit matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_set(const EdgeSet& edges);
  /// `bits` uses the edge-index convention; n <= 11.
  static Graph from_bits(int n, std::uint64_t bits);

  int order() const { return n_; }
  int size() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  EdgeSet edge_set() const;
  /// Edge bitset as one word; n <= 11.
  std::uint64_t edge_bits() const;
  /// Edges sorted by edge index.
  std::vector<std::pair<int, int>> edges() const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  /// Subgraph induced by the vertex bitmask, renumbered in increasing order.
  Graph induced(std::uint64_t vertices) const;
  Graph complement() const;

  /// Vertex masks of the connected components, ordered by lowest vertex.
  std::vector<std::uint64_t> components() const;
  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

/// Categorical product: (u1,u2) ~ (v1,v2) iff u1 ~ v1 and u2 ~ v2.
/// Vertex (u1,u2) gets label u1 * n2 + u2.
Graph tensor_product(const Graph& g1, const Graph& g2);

/// G(n, density) from a seeded 64-bit Mersenne Twister; each edge slot in
/// edge-index order consumes one draw, so output is portable across platforms.
Graph random_graph(int n, double density, std::uint64_t seed);

/// "K4", "C5", "P3" (path on 3 vertices), "E2" (edgeless).
Graph named_graph(std::string_view name);
bool is_graph_name(std::string_view name);

/// Text format: "n m" then m lines "u v" with u < v, sorted by edge index.
std::string to_text(const Graph& g);
Graph from_text(std::string_view text);
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
/// Reads the text format, or graph6 when the file does not parse as text.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace motif
