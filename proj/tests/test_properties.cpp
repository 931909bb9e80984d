#include "oracles.hpp"

#include "motif/canon.hpp"
#include "motif/error.hpp"
#include "motif/properties.hpp"

#include <doctest.h>

using namespace motif;

namespace {

int component_count(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  int count = g.order();
  for (auto [u, v] : g.edges()) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

bool colorable_brute(const Graph& g, int colors) {
  bool found = false;
  oracle::for_each_map(g.order(), colors, [&](const std::vector<int>& c) {
    if (found) return;
    for (auto [u, v] : g.edges()) {
      if (c[u] == c[v]) return;
    }
    found = true;
  });
  return found;
}

bool hamiltonian_brute(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.has_edge(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

int edge_connectivity_brute(const Graph& g) {
  const auto edges = g.edges();
  int best = static_cast<int>(edges.size());
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << edges.size()); ++cut) {
    if (std::popcount(cut) >= best) continue;
    Graph h = g;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((cut >> i) & 1U) h.remove_edge(edges[i].first, edges[i].second);
    }
    if (component_count(h) > 1) best = std::popcount(cut);
  }
  return best;
}

bool has_isolated_copy(const Graph& g, const Graph& f) {
  for (auto mask : g.components()) {
    if (oracle::isomorphic(g.induced(mask), f)) return true;
  }
  return false;
}

std::vector<Graph> small_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& c : all_iso_classes(n)) out.push_back(c.canon);
  }
  return out;
}

}  // namespace

TEST_CASE("property examples") {
  CHECK_FALSE(PropertySpec::parse("bipartite")(cycle_graph(5)));
  CHECK(PropertySpec::parse("mod:3:0")(complete_graph(3)));
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(PropertySpec::parse("iso:K2")(g));
  CHECK(edge_connectivity(complete_graph(4)) == 3);
  CHECK(edge_connectivity(cycle_graph(5)) == 2);
  Graph h(7);
  for (int x = 0; x < 7; ++x) {
    h.add_edge(x, (x + 1) % 7);
    h.add_edge(x, (x + 2) % 7);
  }
  CHECK(edge_connectivity(h) == 4);
  CHECK_THROWS_AS(edge_connectivity(Graph(1)), Error);
}

TEST_CASE("predicates against brute force on all small graphs") {
  const Graph c5 = cycle_graph(5);
  for (const auto& g : small_graphs(6)) {
    const int comps = component_count(g);
    CHECK(is_bipartite(g) == colorable_brute(g, 2));
    CHECK(is_forest(g) == (g.size() == g.order() - comps));
    CHECK(g.connected() == (comps == 1));
    CHECK(is_hamiltonian(g) == hamiltonian_brute(g));
    CHECK(is_triangle_free(g) == (oracle::cliques(g, 3) == 0));
    CHECK(PropertySpec::parse("homfree:C5")(g) == (oracle::hom(c5, g) == 0));
    const int chi = chromatic_number(g);
    CHECK(colorable_brute(g, chi));
    if (chi > 1) CHECK_FALSE(colorable_brute(g, chi - 1));
    CHECK(PropertySpec::parse("chromatic-at-most-half")(g) == (chi <= (g.order() + 1) / 2));
    CHECK(PropertySpec::parse("mod:3:1,2")(g) == (g.size() % 3 != 0));
    CHECK(PropertySpec::parse("iso:P3")(g) == has_isolated_copy(g, path_graph(3)));
    CHECK(PropertySpec::parse("not:planar")(g) == !is_planar(g));
    CHECK(PropertySpec::parse("has-edge")(g) == (g.size() > 0));
  }
}

TEST_CASE("edge connectivity against cut enumeration") {
  auto graphs = small_graphs(5);
  for (const auto& g : oracle::random_graphs(20, 6, 7, 51)) graphs.push_back(g);
  for (const auto& g : graphs) {
    if (g.order() < 2) continue;
    const int lambda = edge_connectivity_brute(g);
    CHECK(edge_connectivity(g) == lambda);
    for (int c = 1; c <= 4; ++c) {
      CHECK(is_edge_connected(g, c) == (lambda >= c));
      CHECK(PropertySpec::parse("edgeconn:" + std::to_string(c))(g) == (lambda < c));
    }
  }
  CHECK(PropertySpec::parse("edgeconn:1")(Graph(1)));
}

TEST_CASE("planarity against the minor oracle") {
  for (const auto& g : small_graphs(6)) CHECK(is_planar(g) == oracle::planar_by_minors(g));
  const std::vector<int> planar_classes{1, 2, 4, 11, 33, 142, 822};
  for (int n = 1; n <= 7; ++n) {
    int count = 0;
    for (const auto& c : all_iso_classes(n)) count += is_planar(c.canon);
    CHECK(count == planar_classes[n - 1]);
  }
  CHECK_FALSE(is_planar(from_graph6("IheA@GUAo")));  // Petersen
  CHECK(is_planar(cycle_graph(30)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(oracle::k33()));
}

TEST_CASE("parsing") {
  CHECK(PropertySpec::parse("homfree:K3").name() == "homfree:K3");
  CHECK(PropertySpec::parse("mod:5:3,1").residues() == std::vector<int>{1, 3});
  CHECK(PropertySpec::parse("iso:g6=Bg").name() == "iso:P3");
  CHECK(builtin_property_names().size() == 13);
  for (const auto& name : builtin_property_names()) CHECK(PropertySpec::parse(name).name() == name);

  auto kind_of = [](const char* text) {
    try {
      PropertySpec::parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind_of("nonsense") == ErrorKind::ParseError);
  CHECK(kind_of("mod:4:0") == ErrorKind::InvalidParams);
  CHECK(kind_of("mod:3:0,1,2") == ErrorKind::InvalidParams);
  CHECK(kind_of("mod:3:") == ErrorKind::InvalidParams);
  CHECK(kind_of("iso:E2") == ErrorKind::InvalidParams);
  CHECK(kind_of("edgeconn:0") == ErrorKind::InvalidParams);
  CHECK(kind_of("bipartite:3") == ErrorKind::ParseError);
}

TEST_CASE("membership bitmaps match direct evaluation") {
  for (const auto& name : builtin_property_names()) {
    const auto spec = PropertySpec::parse(name);
    const auto bits = membership_bitmap(spec, 5, 3);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << 10); ++x) {
      REQUIRE(bitmap_test(bits, x) == spec(Graph::from_bits(5, x)));
    }
  }
}

TEST_CASE("monotonicity audit") {
  CHECK(audit_monotone(PropertySpec::parse("bipartite"), 4).monotone);
  CHECK(audit_monotone(PropertySpec::parse("trivially-true"), 5).monotone);
  const auto verdict = audit_monotone(PropertySpec::parse("mod:2:0"), 3);
  CHECK_FALSE(verdict.monotone);
  REQUIRE(verdict.counterexample.has_value());
  CHECK(verdict.counterexample->edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(verdict.removed_edge == edge_index(0, 1));

  for (const auto& name : builtin_property_names()) {
    const auto spec = PropertySpec::parse(name);
    for (int k = 2; k <= 5; ++k) {
      const auto v = audit_monotone(spec, k);
      if (spec.claimed_monotone().value()) {
        CHECK_MESSAGE(v.monotone, name << " at k = " << k);
      }
      if (!v.monotone) {
        Graph a = Graph::from_edge_set(*v.counterexample);
        CHECK(spec(a));
        auto [u, w] = edge_endpoints(*v.removed_edge);
        a.remove_edge(u, w);
        CHECK_FALSE(spec(a));
      }
    }
    if (!spec.claimed_monotone().value()) CHECK_FALSE(audit_monotone(spec, 5).monotone);
  }
  CHECK_THROWS_AS(audit_monotone(PropertySpec::parse("planar"), 8), Error);
}
