#pragma once

#include "motif/graph.hpp"

#include <cstdint>

namespace motif {

// Exact brute-force counts. Homomorphism-style counts use a backtracking
// search that extends partial maps vertex by vertex; it visits exactly the maps
// that survive the adjacency constraints, so the totals equal exhaustive counts.

std::uint64_t count_hom(const Graph& h, const Graph& g);
bool hom_exists(const Graph& h, const Graph& g);
/// Injective homomorphisms.
std::uint64_t count_emb(const Graph& h, const Graph& g);
/// Injective maps preserving edges and non-edges.
std::uint64_t count_strembe(const Graph& h, const Graph& g);

/// Subgraphs (vertex set of size |V(h)|, any subset of the induced edges)
/// isomorphic to h. Found by enumerating vertex and edge subsets, not via
/// count_emb. Requires |V(h)| <= 9.
std::uint64_t count_sub(const Graph& h, const Graph& g);
/// Vertex subsets S with g[S] isomorphic to h. Requires |V(h)| <= 9.
std::uint64_t count_indsub(const Graph& h, const Graph& g);

std::uint64_t count_cliques(const Graph& g, int k);

}  // namespace motif
