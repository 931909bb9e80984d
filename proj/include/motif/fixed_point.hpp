#pragma once

#include "motif/bigint.hpp"
#include "motif/euler.hpp"
#include "motif/graph.hpp"
#include "motif/parallel.hpp"
#include "motif/properties.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motif {

// The shift x -> x + b (mod p) acts on the edges of K_p. For an odd prime p
// its orbits are the Hamilton cycles H_i = { {x, x+i} }, i = 1..(p-1)/2.

inline constexpr int kMaxOrbitPrime = 31;
inline constexpr int kMaxFullSidePrime = 7;

/// Nonempty-or-empty subset P of {1..(p-1)/2}; bit i-1 stands for orbit i.
struct OrbitSet {
  int p = 0;
  std::uint32_t members = 0;

  int size() const { return std::popcount(members); }
  bool contains(int i) const { return (members >> (i - 1)) & 1U; }
  std::vector<int> indices() const;

  friend bool operator==(const OrbitSet&, const OrbitSet&) = default;
};

/// Orders by size, then lexicographically by sorted member list.
bool orbit_set_less(const OrbitSet& a, const OrbitSet& b);

/// Throws NotOddPrime unless p is an odd prime, PrimeOutOfRange above 31.
void check_orbit_prime(int p);
int orbit_count(int p);

EdgeSet orbit_cycle(int p, int i);
/// Union of the orbits in P on vertices 0..p-1.
Graph build_hp(const OrbitSet& orbits);

enum class Congruence { Holds, Violated };
enum class FullSide { Auto, On, Off };

struct FixedPointReport {
  int p = 0;
  std::string property;
  std::vector<OrbitSet> simplices;  // nonempty P with Phi(H_P), sorted
  BigInt chi_hat_fixed;
  std::optional<BigInt> chi_hat_full;
  std::optional<Congruence> congruence;
};

struct FixedPointOptions {
  FullSide full = FullSide::Auto;
  int threads = default_thread_count();
};

/// Enumerates all nonempty orbit sets. The full complex Delta(Phi_p) is added
/// for p <= 7 (Auto) or on request (On; FullSideTooLarge above 7); its reduced
/// Euler characteristic and the mod-p congruence are reported only when Phi
/// passes the monotonicity audit at k = p.
FixedPointReport fixed_point_complex(const PropertySpec& spec, int p, const FixedPointOptions& options = {});

enum class CycleAntiholeCase { OddCycleFalse, AntiHoleTrue };

/// chi_hat of the fixed-point complex for monotone Phi false on odd cycles (1),
/// or true on odd anti-holes and false on K_k for all k > threshold:
/// (-1)^((p-1)/2 + 1), valid only for p > threshold (PrimeTooSmall otherwise).
BigInt closed_form_odd_cycle_antihole(CycleAntiholeCase which, int p, int threshold = 0);

/// Smallest N with Phi(K_k) false for every k > N, for built-ins where it is
/// known: chromatic-at-most-half -> 1. InvalidParams for anything else.
int default_antihole_threshold(const PropertySpec& spec);

/// chi_hat of the fixed-point complex of "not (c+1)-edge-connected":
/// (-1)^floor(c/2) * binom((p-1)/2 - 1, floor(c/2)), for primes p >= c + 3.
BigInt closed_form_edge_connectivity(int c, int p);

/// Exhaustively checks: H_P is (c+1)-edge-connected iff #P > floor(c/2),
/// over every nonempty P.
bool hp_connectivity_threshold_holds(int p, int c);

}  // namespace motif
