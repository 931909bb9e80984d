#pragma once

#include "motif/bigint.hpp"
#include "motif/parallel.hpp"
#include "motif/properties.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motif {

/// Signed count of E^Phi_k = { A subset of E(K_k) : Phi(G(A)) } and, for
/// monotone Phi holding on the edgeless graph, the Euler characteristic of the
/// graph complex Delta(Phi_k) = E^Phi_k minus the empty set.
struct AlternatingSumReport {
  int k = 0;
  std::string property;
  BigInt sum;                                // sum over A in E^Phi_k of (-1)^#A
  std::vector<std::uint64_t> counts_by_size;  // entry i: members with i edges
  bool monotone_checked = false;
  std::optional<BigInt> chi;
  std::optional<BigInt> chi_hat;
};

struct EulerOptions {
  int threads = default_thread_count();
  bool allow_k8 = false;
};

/// Enumerates all 2^(k choose 2) edge subsets. 2 <= k <= 7; k = 8 needs
/// allow_k8. monotone_checked is set when the exhaustive monotonicity audit
/// passes and Phi holds on the edgeless graph; then chi_hat = 1 - chi is
/// checked against sum.
AlternatingSumReport alternating_sum(const PropertySpec& spec, int k, const EulerOptions& options = {});

/// min { 2^(2^t) - 1 : 2^(2^t) >= |V(F)| }.
int parity_period(const Graph& pattern);

struct ParityVerdict {
  int period = 0;
  int k = 0;
  BigInt chi_hat;
  bool odd = false;
};

/// Reduced Euler characteristic of the homfree:F complex at k, which is odd
/// whenever k = 1 mod parity_period(F). Throws KNotCongruent otherwise.
ParityVerdict chi_hat_parity_check(const Graph& pattern, int k, const EulerOptions& options = {});

}  // namespace motif
