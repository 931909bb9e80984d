#pragma once

#include "motif/bigint.hpp"
#include "motif/canon.hpp"
#include "motif/graph.hpp"
#include "motif/parallel.hpp"
#include "motif/properties.hpp"

#include <string>
#include <vector>

namespace motif {

struct BasisTerm {
  IsoClass graph;
  Rational coeff;
};

/// Sum_{H in Phi_k} #IndSub(H, G) written as Sum_H a(H) #Hom(H, G).
struct HomBasis {
  int k = 0;
  std::string property;
  std::vector<BasisTerm> terms;   // nonzero coefficients, sorted by CanonKey
  std::vector<IsoClass> members;  // Phi_k up to isomorphism, sorted by CanonKey

  /// 0 when key is outside the support.
  Rational coefficient(const CanonKey& key) const;
};

struct BasisOptions {
  int threads = default_thread_count();
  bool allow_k7 = false;
};

/// Induced-subgraph counts -> strong embeddings -> embeddings (inclusion-
/// exclusion over labeled supergraphs) -> homomorphisms (Möbius inversion over
/// vertex partitions), accumulated per isomorphism type with exact rationals.
/// 2 <= k <= 6; k = 7 needs allow_k7.
HomBasis indsub_to_hom_basis(const PropertySpec& spec, int k, const BasisOptions& options = {});

/// a(K_k) from the basis, cross-checked against
/// Sum_{H in Phi_k} (-1)^(#E(K_k) - #E(H)) / #Aut(H).
Rational clique_coefficient(const HomBasis& basis);
Rational clique_coefficient_from_members(const HomBasis& basis);

/// Sum over the support of a(H) #Hom(H, g); NonIntegerResult when fractional.
BigInt evaluate_basis(const HomBasis& basis, const Graph& g);

/// Number of k-vertex subsets S of g with Phi(g[S]).
BigInt count_induced_with_property(const PropertySpec& spec, int k, const Graph& g);

}  // namespace motif
