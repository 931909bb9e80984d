#include "oracles.hpp"

#include "motif/canon.hpp"
#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/partition.hpp"

#include <doctest.h>

using namespace motif;

TEST_CASE("partition counts follow the Bell triangle") {
  const auto bell = oracle::bell_numbers(10);
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == bell[n]);
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(std::lexicographical_compare(all[i - 1].block_of().begin(), all[i - 1].block_of().end(),
                                         all[i].block_of().begin(), all[i].block_of().end()));
    }
  }
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(7).size() == 877);
  CHECK_THROWS_AS(enumerate_partitions(10), Error);
}

TEST_CASE("normal form") {
  const auto p = Partition::from_block_labels({5, 2, 5, 7});
  CHECK(std::vector<int>(p.block_of().begin(), p.block_of().end()) == std::vector<int>{0, 1, 0, 2});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
}

TEST_CASE("Möbius values against zeta-matrix inversion") {
  CHECK(mobius_partition(Partition::singletons(3)) == 1);
  CHECK(mobius_partition(Partition::from_block_labels({0, 0, 1})) == -1);
  CHECK(mobius_partition(Partition::from_block_labels({0, 0, 0})) == 2);
  for (int n = 1; n <= 4; ++n) {
    const auto mu = oracle::mobius_by_zeta(n);
    for (const auto& p : enumerate_partitions(n)) {
      const std::vector<int> labels(p.block_of().begin(), p.block_of().end());
      CHECK(mobius_partition(p) == mu.at(labels));
    }
  }
}

TEST_CASE("Möbius sums") {
  for (int n = 2; n <= 8; ++n) {
    std::int64_t sum = 0;
    std::int64_t abs_sum = 0;
    for (const auto& p : enumerate_partitions(n)) {
      sum += mobius_partition(p);
      abs_sum += std::abs(mobius_partition(p));
    }
    CHECK(sum == 0);
    CHECK(abs_sum == static_cast<std::int64_t>(factorial(n)));
  }
}

TEST_CASE("quotients") {
  const Graph p3 = path_graph(3);
  CHECK(quotient(p3, Partition::singletons(3)) == p3);
  CHECK_FALSE(quotient(complete_graph(2), Partition::from_block_labels({0, 0})).has_value());
  CHECK(quotient(Graph(2), Partition::from_block_labels({0, 0})) == Graph(1));
  const auto merged = quotient(p3, Partition::from_block_labels({0, 1, 0}));
  REQUIRE(merged.has_value());
  CHECK(*merged == complete_graph(2));
}

TEST_CASE("embeddings from homomorphisms of quotients") {
  const auto hosts = oracle::random_graphs(10, 1, 5, 41);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : all_iso_classes(n)) {
      for (const auto& g : hosts) {
        std::int64_t total = 0;
        for (const auto& rho : enumerate_partitions(n)) {
          if (auto q = quotient(h.canon, rho)) {
            total += mobius_partition(rho) * static_cast<std::int64_t>(oracle::hom(*q, g));
          }
        }
        CHECK(total == static_cast<std::int64_t>(oracle::emb(h.canon, g)));
      }
    }
  }
}
