#include "oracles.hpp"

#include "motif/error.hpp"
#include "motif/graph.hpp"

#include <doctest.h>

using namespace motif;

TEST_CASE("edge index round trip") {
  for (int k = 2; k <= kMaxEdgeSetVertices; ++k) {
    int expected = 0;
    for (int v = 1; v < k; ++v) {
      for (int u = 0; u < v; ++u) {
        CHECK(edge_index(u, v) == expected);
        CHECK(edge_index(v, u) == expected);
        CHECK(edge_endpoints(expected) == std::pair{u, v});
        ++expected;
      }
    }
    CHECK(expected == edge_slots(k));
  }
}

TEST_CASE("edge sets") {
  const auto e = EdgeSet::from_bits(4, 0b101001);
  CHECK(e.count() == 3);
  CHECK(e.to_bits() == 0b101001);
  CHECK(Graph::from_edge_set(e).edge_set() == e);

  EdgeSet wide(31);
  wide.set(edge_index(29, 30));
  CHECK(wide.count() == 1);
  CHECK(wide.edges() == std::vector<std::pair<int, int>>{{29, 30}});
  CHECK_THROWS_AS(wide.to_bits(), Error);
  CHECK((EdgeSet::from_bits(3, 1) | EdgeSet::from_bits(3, 4)).to_bits() == 5);
  CHECK((EdgeSet::from_bits(3, 3) & EdgeSet::from_bits(3, 6)).to_bits() == 2);
}

TEST_CASE("graph construction errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind_of([] { Graph(0); }) == ErrorKind::VertexCountOutOfRange);
  CHECK(kind_of([] { Graph(65); }) == ErrorKind::VertexCountOutOfRange);
  CHECK(kind_of([] { Graph(3).add_edge(1, 1); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { tensor_product(complete_graph(9), complete_graph(8)); }) == ErrorKind::ProductTooLarge);
  CHECK_NOTHROW(Graph(64));
}

TEST_CASE("basic operations") {
  const Graph p = path_graph(4);
  CHECK(p.size() == 3);
  CHECK(p.degree(0) == 1);
  CHECK(p.degree(1) == 2);
  CHECK(p.complement().complement() == p);
  CHECK(p.complement().size() == 3);
  CHECK(p.connected());
  CHECK(p.induced(0b1011).size() == 1);
  CHECK(empty_graph(3).components().size() == 3);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(complete_graph(6).size() == 15);

  const std::vector<int> perm{2, 0, 3, 1};
  const Graph r = p.relabeled(perm);
  for (auto [u, v] : p.edges()) CHECK(r.has_edge(perm[u], perm[v]));
  CHECK(r.size() == p.size());
}

TEST_CASE("named graphs") {
  CHECK(named_graph("K4") == complete_graph(4));
  CHECK(named_graph("C5") == cycle_graph(5));
  CHECK(named_graph("P3") == path_graph(3));
  CHECK(named_graph("E2") == empty_graph(2));
  CHECK(is_graph_name("K12"));
  CHECK_FALSE(is_graph_name("X3"));
  CHECK_FALSE(is_graph_name("K"));
}

TEST_CASE("text format") {
  for (const auto& g : oracle::random_graphs(30, 1, 12, 5)) CHECK(from_text(to_text(g)) == g);
  CHECK(to_text(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK_THROWS_AS(from_text("3 1\n0 3\n"), Error);
  CHECK_THROWS_AS(from_text("3 2\n0 1\n0 1\n"), Error);
  CHECK_THROWS_AS(from_text("3 1\n"), Error);
  CHECK_THROWS_AS(from_text("2 0\n5"), Error);
}

TEST_CASE("graph6") {
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("Dhc") == cycle_graph(5));
  CHECK(from_graph6("Bg") == path_graph(3));
  CHECK(from_graph6("@") == Graph(1));
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  const Graph petersen = from_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  for (const auto& g : oracle::random_graphs(30, 1, 40, 9)) CHECK(from_graph6(to_graph6(g)) == g);
  CHECK_THROWS_AS(from_graph6("C"), Error);
}

TEST_CASE("tensor product is multiplicative for hom counts") {
  CHECK(oracle::hom(complete_graph(3), tensor_product(complete_graph(3), complete_graph(3))) == 36);
  CHECK(oracle::hom(complete_graph(2), tensor_product(complete_graph(2), complete_graph(2))) == 4);
  const Graph g = cycle_graph(5);
  CHECK(tensor_product(g, Graph(1)) == empty_graph(5));

  const auto hosts = oracle::random_graphs(6, 1, 4, 17);
  const auto patterns = oracle::random_graphs(6, 1, 3, 18);
  for (std::size_t i = 0; i + 1 < hosts.size(); ++i) {
    const Graph product = tensor_product(hosts[i], hosts[i + 1]);
    CHECK(product.order() == hosts[i].order() * hosts[i + 1].order());
    for (const auto& h : patterns) {
      CHECK(oracle::hom(h, product) == oracle::hom(h, hosts[i]) * oracle::hom(h, hosts[i + 1]));
    }
  }
}

TEST_CASE("random graphs are seeded") {
  CHECK(random_graph(9, 0.5, 3) == random_graph(9, 0.5, 3));
  CHECK(random_graph(9, 0.0, 3).size() == 0);
  CHECK(random_graph(9, 1.0, 3) == complete_graph(9));
}
