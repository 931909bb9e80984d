#include "oracles.hpp"

#include "motif/canon.hpp"
#include "motif/counting.hpp"

#include <doctest.h>

using namespace motif;

TEST_CASE("counting examples") {
  const Graph g = cycle_graph(6);
  CHECK(count_hom(Graph(1), g) == 6);
  CHECK(count_hom(complete_graph(2), complete_graph(3)) == 6);
  CHECK(count_hom(complete_graph(3), g) == 0);
  CHECK(count_indsub(complete_graph(2), path_graph(3)) == 2);
  CHECK(count_sub(complete_graph(3), complete_graph(4)) == 4);
  CHECK(count_strembe(complete_graph(3), complete_graph(4)) == 24);
  CHECK(count_cliques(complete_graph(6), 3) == 20);
  CHECK(count_emb(complete_graph(3), complete_graph(2)) == 0);
}

TEST_CASE("counts match exhaustive map enumeration") {
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : all_iso_classes(n)) patterns.push_back(c.canon);
  }
  const auto hosts = oracle::random_graphs(12, 1, 5, 31);
  for (const auto& h : patterns) {
    for (const auto& g : hosts) {
      CHECK(count_hom(h, g) == oracle::hom(h, g));
      CHECK(count_emb(h, g) == oracle::emb(h, g));
      CHECK(count_strembe(h, g) == oracle::strong_emb(h, g));
      CHECK(count_indsub(h, g) == oracle::induced_copies(h, g));
      CHECK(hom_exists(h, g) == (oracle::hom(h, g) > 0));
    }
  }
}

TEST_CASE("embeddings and subgraphs differ by automorphisms") {
  const auto hosts = oracle::random_graphs(20, 3, 7, 32);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : all_iso_classes(n)) {
      for (const auto& g : hosts) {
        CHECK(count_emb(h.canon, g) == count_sub(h.canon, g) * h.aut_count);
        CHECK(count_strembe(h.canon, g) == count_indsub(h.canon, g) * h.aut_count);
      }
    }
  }
}

TEST_CASE("clique counts") {
  for (const auto& g : oracle::random_graphs(20, 1, 9, 33)) {
    for (int k = 1; k <= 5; ++k) CHECK(count_cliques(g, k) == oracle::cliques(g, k));
  }
}
