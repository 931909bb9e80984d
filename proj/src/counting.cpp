#include "motif/counting.hpp"

#include "motif/canon.hpp"
#include "motif/error.hpp"

#include <array>
#include <vector>

namespace motif {

namespace {

enum class MapKind { Hom, Emb, StrongEmb };

// Pattern vertices in an order where each vertex after the first of its
// component has an earlier neighbour, so candidate sets shrink early.
struct SearchPlan {
  std::vector<int> order;
  std::vector<std::uint64_t> earlier_neighbors;     // bitmask over positions
  std::vector<std::uint64_t> earlier_non_neighbors;  // bitmask over positions
};

SearchPlan plan_search(const Graph& h) {
  const int n = h.order();
  SearchPlan plan;
  std::uint64_t placed = 0;
  std::array<int, kMaxVertices> position{};
  while (static_cast<int>(plan.order.size()) < n) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      int links = std::popcount(h.neighbors(v) & placed);
      if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    std::uint64_t nbrs = 0;
    std::uint64_t non = 0;
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
      if (h.has_edge(best, plan.order[i])) {
        nbrs |= std::uint64_t{1} << i;
      } else {
        non |= std::uint64_t{1} << i;
      }
    }
    position[best] = static_cast<int>(plan.order.size());
    plan.order.push_back(best);
    plan.earlier_neighbors.push_back(nbrs);
    plan.earlier_non_neighbors.push_back(non);
    placed |= std::uint64_t{1} << best;
  }
  return plan;
}

template <MapKind kind>
class MapCounter {
 public:
  MapCounter(const Graph& h, const Graph& g, bool stop_at_first)
      : g_(g), plan_(plan_search(h)), stop_at_first_(stop_at_first) {}

  std::uint64_t run() {
    if (plan_.order.empty()) return 1;
    extend(0, 0);
    return total_;
  }

 private:
  void extend(std::size_t depth, std::uint64_t used) {
    std::uint64_t cand = g_.vertex_mask();
    for (std::uint64_t rest = plan_.earlier_neighbors[depth]; rest; rest &= rest - 1) {
      cand &= g_.neighbors(image_[std::countr_zero(rest)]);
    }
    if constexpr (kind != MapKind::Hom) cand &= ~used;
    if constexpr (kind == MapKind::StrongEmb) {
      for (std::uint64_t rest = plan_.earlier_non_neighbors[depth]; rest; rest &= rest - 1) {
        cand &= ~g_.neighbors(image_[std::countr_zero(rest)]);
      }
    }
    if (depth + 1 == plan_.order.size()) {
      total_ += static_cast<std::uint64_t>(std::popcount(cand));
      return;
    }
    while (cand) {
      int x = std::countr_zero(cand);
      cand &= cand - 1;
      image_[depth] = x;
      extend(depth + 1, used | (std::uint64_t{1} << x));
      if (stop_at_first_ && total_ > 0) return;
    }
  }

  const Graph& g_;
  SearchPlan plan_;
  bool stop_at_first_;
  std::array<int, kMaxVertices> image_{};
  std::uint64_t total_ = 0;
};

void check_pattern(const Graph& h) {
  if (h.order() > kMaxCanonVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange,
                "pattern order " + std::to_string(h.order()) + " exceeds " + std::to_string(kMaxCanonVertices));
  }
}

// Calls body(mask) for every subset of {0..n-1} with exactly r elements.
template <typename Body>
void for_each_subset(int n, int r, Body&& body) {
  if (r > n) return;
  if (r == 0) {
    body(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (true) {
    body(mask);
    // Gosper's hack
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t next = mask + c;
    if (next == 0) return;
    mask = (((next ^ mask) >> 2) / c) | next;
    if (limit != 0 && mask >= limit) return;
  }
}

}  // namespace

std::uint64_t count_hom(const Graph& h, const Graph& g) { return MapCounter<MapKind::Hom>(h, g, false).run(); }

bool hom_exists(const Graph& h, const Graph& g) { return MapCounter<MapKind::Hom>(h, g, true).run() > 0; }

std::uint64_t count_emb(const Graph& h, const Graph& g) {
  if (h.order() > g.order()) return 0;
  return MapCounter<MapKind::Emb>(h, g, false).run();
}

std::uint64_t count_strembe(const Graph& h, const Graph& g) {
  if (h.order() > g.order()) return 0;
  return MapCounter<MapKind::StrongEmb>(h, g, false).run();
}

std::uint64_t count_sub(const Graph& h, const Graph& g) {
  check_pattern(h);
  const CanonKey target = canonical_key(h);
  const int k = h.order();
  std::uint64_t total = 0;
  for_each_subset(g.order(), k, [&](std::uint64_t vertices) {
    const Graph host = g.induced(vertices);
    const auto host_edges = host.edges();
    if (static_cast<int>(host_edges.size()) < target.m) return;
    if (host_edges.size() > 40) throw Error(ErrorKind::VertexCountOutOfRange, "count_sub host piece too dense");
    std::vector<int> slot;
    for (auto [u, v] : host_edges) slot.push_back(edge_index(u, v));
    const std::uint64_t subsets = std::uint64_t{1} << host_edges.size();
    for (std::uint64_t pick = 0; pick < subsets; ++pick) {
      if (std::popcount(pick) != target.m) continue;
      std::uint64_t bits = 0;
      for (std::uint64_t rest = pick; rest; rest &= rest - 1) {
        bits |= std::uint64_t{1} << slot[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (canonical_key(Graph::from_bits(k, bits)) == target) ++total;
    }
  });
  return total;
}

std::uint64_t count_indsub(const Graph& h, const Graph& g) {
  check_pattern(h);
  const CanonKey target = canonical_key(h);
  std::uint64_t total = 0;
  for_each_subset(g.order(), h.order(), [&](std::uint64_t vertices) {
    const Graph piece = g.induced(vertices);
    if (piece.size() == target.m && canonical_key(piece) == target) ++total;
  });
  return total;
}

std::uint64_t count_cliques(const Graph& g, int k) {
  if (k < 1) return 0;
  std::uint64_t total = 0;
  // candidates: vertices adjacent to everything chosen and larger than the last pick
  auto grow = [&](auto&& self, std::uint64_t candidates, int remaining) -> void {
    if (remaining == 0) {
      ++total;
      return;
    }
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, candidates & g.neighbors(v), remaining - 1);
    }
  };
  grow(grow, g.vertex_mask(), k);
  return total;
}

}  // namespace motif
