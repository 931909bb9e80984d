#pragma once

#include "motif/canon.hpp"
#include "motif/graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motif {

enum class PropertyKind {
  Bipartite,
  Forest,
  Disconnected,
  Connected,
  NonHamiltonian,
  Planar,
  TriangleFree,
  HomFree,              // no homomorphism from the pattern F
  NotEdgeConnected,     // edge connectivity below c
  ChromaticAtMostHalf,  // chi(G) <= ceil(n/2)
  Mod,                  // (#E mod q) in Q
  Iso,                  // some connected component isomorphic to F
  TriviallyTrue,
  HasEdge,
  Negation,
};

/// A graph property Phi, parsed from `name[:param[:param]]`:
///
///   bipartite  forest  disconnected  connected  non-hamiltonian  planar
///   triangle-free  chromatic-at-most-half  trivially-true  has-edge
///   homfree:F  iso:F  edgeconn:c  mod:q:a,b,...  not:<spec>
///
/// F is K{n}, C{n}, P{n}, E{n}, g6=<graph6> or a path to a graph file.
class PropertySpec {
 public:
  static PropertySpec parse(std::string_view text);
  static PropertySpec hom_free(const Graph& pattern);
  static PropertySpec isolated_copy(const Graph& pattern);

  PropertyKind kind() const { return kind_; }
  /// Normalised spec string; parse(name()) reproduces the property.
  const std::string& name() const { return name_; }
  /// Known answer for the built-ins; empty for negations.
  std::optional<bool> claimed_monotone() const;

  int modulus() const { return modulus_; }
  std::vector<int> residues() const;
  const Graph& pattern() const { return pattern_; }
  int connectivity_bound() const { return connectivity_; }
  const PropertySpec& negated() const { return *inner_; }

  bool operator()(const Graph& g) const;

 private:
  PropertySpec() = default;

  PropertyKind kind_ = PropertyKind::TriviallyTrue;
  std::string name_;
  int modulus_ = 0;
  std::uint64_t residue_mask_ = 0;
  Graph pattern_;
  CanonKey pattern_key_;
  int connectivity_ = 0;
  std::shared_ptr<const PropertySpec> inner_;
};

/// Short name of a pattern: K/C/P/E{n} when isomorphic to one, else g6=<graph6>.
std::string pattern_label(const Graph& pattern);

inline bool evaluate(const PropertySpec& spec, const Graph& g) { return spec(g); }

/// The thirteen built-ins with the parameters used throughout the test suites.
std::vector<std::string> builtin_property_names();
/// The monotone members of builtin_property_names().
std::vector<std::string> monotone_builtin_names();

bool is_prime(std::int64_t q);

bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);
/// Graphs with fewer than 3 vertices have no Hamilton cycle.
bool is_hamiltonian(const Graph& g);
bool is_planar(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_colorable(const Graph& g, int colors);
int chromatic_number(const Graph& g);

/// Minimum number of edges whose removal disconnects g (0 when disconnected),
/// from unit-capacity max-flows between vertex 0 and every other vertex.
int edge_connectivity(const Graph& g);
/// edge_connectivity(g) >= c, stopping each flow once it reaches c.
/// A single vertex counts as 0-edge-connected.
bool is_edge_connected(const Graph& g, int c);

/// Bit x of word x/64 is set iff Phi holds on the labeled graph with edge bits x.
std::vector<std::uint64_t> membership_bitmap(const PropertySpec& spec, int k, int threads);

inline bool bitmap_test(std::span<const std::uint64_t> members, std::uint64_t x) {
  return (members[x >> 6] >> (x & 63)) & 1U;
}

struct MonotoneVerdict {
  bool monotone = true;
  std::optional<EdgeSet> counterexample;  // A in E^Phi_k ...
  std::optional<int> removed_edge;        // ... with A minus this edge slot outside it
};

/// Scans A in increasing bitset order and edges of A by increasing index,
/// reporting the first A, e with Phi(A) and not Phi(A \ e). k <= 7.
MonotoneVerdict audit_monotone(const PropertySpec& spec, int k, int threads = 1);
MonotoneVerdict audit_monotone(std::span<const std::uint64_t> members, int k);

}  // namespace motif
