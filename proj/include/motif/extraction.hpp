#pragma once

#include "motif/bigint.hpp"
#include "motif/canon.hpp"
#include "motif/graph.hpp"
#include "motif/hom_basis.hpp"
#include "motif/properties.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace motif {

/// Black box G -> Sum_{H in support} a(H) #Hom(H, G) with hidden coefficients.
struct LinearOracle {
  std::vector<IsoClass> support;
  std::function<Rational(const Graph&)> eval;
};

struct QueryRecord {
  int vertices = 0;
  Rational result;
};

struct QueryLedger {
  std::vector<QueryRecord> queries;
  int max_query_vertices = 0;
};

struct ExtractionResult {
  std::vector<Rational> products;  // y_H = a(H) #Hom(H, g), in support order
  QueryLedger ledger;
};

/// Test graphs T_1, T_2, ...: the support graphs, then every isomorphism type
/// with at most max |V(H)| vertices in CanonKey order, skipping repeats.
std::vector<Graph> extraction_test_graphs(const std::vector<IsoClass>& support);

/// Queries the oracle on g x T_j for the T_j that raise the rank of the
/// Hom(H, T_j) matrix and solves for every y_H exactly. SingularSystem when the
/// test graphs run out first.
ExtractionResult extract_all(const LinearOracle& oracle, const Graph& g);

struct HomExtraction {
  Rational product;          // a(target) #Hom(target, g)
  std::optional<Rational> hom;  // #Hom(target, g), when a(target) was supplied
  QueryLedger ledger;
};

HomExtraction extract_hom(const LinearOracle& oracle, const IsoClass& target, const Graph& g,
                          const std::optional<Rational>& coefficient = std::nullopt);

/// Oracle evaluating the basis through homomorphism counts.
LinearOracle basis_oracle(const HomBasis& basis);
/// Oracle counting k-subsets with the property directly; its hidden
/// coefficients are those of the basis.
LinearOracle property_oracle(const PropertySpec& spec, const HomBasis& basis);

struct CliqueCount {
  BigInt cliques;
  Rational clique_coefficient;
  QueryLedger ledger;
};

/// Recovers the number of k-cliques of g from the #IndSub(Phi) oracle alone.
/// k <= 4 and |V(g)| <= 8; VanishingCliqueCoefficient when a(K_k) = 0.
CliqueCount clique_count_via_property_oracle(const PropertySpec& spec, int k, const Graph& g,
                                             int threads = default_thread_count());

}  // namespace motif
