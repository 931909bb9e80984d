#include "oracles.hpp"

#include "motif/canon.hpp"
#include "motif/bigint.hpp"

#include <doctest.h>

#include <random>

using namespace motif;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("canonical form examples") {
  const auto k3 = canonicalize(complete_graph(3));
  CHECK(k3.canon == complete_graph(3));
  CHECK(k3.aut_count == 6);

  Graph path(3);
  path.add_edge(1, 0);
  path.add_edge(0, 2);
  CHECK(canonicalize(path).canon == canonicalize(path_graph(3)).canon);
  CHECK(canonicalize(path).aut_count == 2);

  Graph a(4), b(4);
  a.add_edge(0, 1);
  b.add_edge(2, 3);
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(canonicalize(a).aut_count == 4);
}

TEST_CASE("canonical form is a relabeling invariant with exact automorphism counts") {
  std::mt19937_64 rng(11);
  for (const auto& g : oracle::random_graphs(60, 1, 8, 12)) {
    const auto cls = canonicalize(g);
    CHECK(oracle::isomorphic(cls.canon, g));
    CHECK(cls.aut_count == oracle::automorphisms(g));
    const auto relabeled = g.relabeled(shuffled(g.order(), rng));
    CHECK(canonicalize(relabeled).canon == cls.canon);
    CHECK(canonical_key(relabeled) == cls.key());
  }
  for (const auto& g : oracle::random_graphs(5, 9, 9, 13)) {
    CHECK(canonicalize(g.relabeled(shuffled(9, rng))).canon == canonicalize(g).canon);
  }
}

TEST_CASE("isomorphism class counts") {
  const std::vector<int> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto classes = all_iso_classes(n);
    CHECK(static_cast<int>(classes.size()) == expected[n - 1]);
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(canon_table(n).class_count() == expected[n - 1]);
    // orbit-stabilizer over all labeled graphs
    BigInt labeled = 0;
    for (const auto& c : classes) labeled += factorial(n) / c.aut_count;
    CHECK(labeled == BigInt(1) << edge_slots(n));
  }
  for (int n = 1; n <= 5; ++n) CHECK(oracle::iso_types(n).size() == all_iso_classes(n).size());
}

TEST_CASE("orbit tables agree with direct canonicalisation") {
  for (int k = 1; k <= 5; ++k) {
    const auto& table = canon_table(k);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << edge_slots(k)); ++x) {
      const auto cls = canonicalize(Graph::from_bits(k, x));
      REQUIRE(table.representative(table.class_of(x)) == cls.canon.edge_bits());
      REQUIRE(table.aut_count(table.class_of(x)) == cls.aut_count);
    }
  }
  const auto& t7 = canon_table(7);
  for (const auto& g : oracle::random_graphs(40, 7, 7, 21)) {
    const auto cls = canonicalize(g);
    CHECK(t7.representative(t7.class_of(g.edge_bits())) == cls.canon.edge_bits());
    CHECK(t7.aut_count(t7.class_of(g.edge_bits())) == cls.aut_count);
  }
}
