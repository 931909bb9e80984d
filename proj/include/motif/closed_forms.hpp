#pragma once

#include "motif/bigint.hpp"
#include "motif/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace motif {

/// s[a] = S_a(m) = Sum_{j = a mod q} (-1)^j binom(m, j).
struct ModState {
  int q = 0;
  std::int64_t m = 0;
  std::vector<BigInt> s;
};

/// Steps S_a(m+1) = S_a(m) - S_{a-1}(m) (indices mod q) forward from any state.
class ModRecursion {
 public:
  /// Starts at m = 0 with s = (1, 0, ..., 0). NotPrime unless q is prime.
  explicit ModRecursion(int q);

  const ModState& state() const { return state_; }
  void step();
  /// Advances to m; InvalidParams when m is behind the current state.
  void advance_to(std::int64_t m);
  BigInt sum(std::span<const int> residues) const;

 private:
  ModState state_;
  std::vector<BigInt> scratch_;
};

ModState mod_s_vector(int q, std::int64_t m);

/// Checks that Q is a nonempty proper subset of {0..q-1} without repeats.
void check_residue_set(int q, std::span<const int> residues);

/// S_Q(m) = Sum_{a in Q} S_a(m).
BigInt mod_s_Q(int q, std::span<const int> residues, std::int64_t m);

/// The first k in {n, n+1, n+2} with S_Q(binom(k, 2)) != 0; empty is the
/// WindowEmpty outcome. `values` holds the three sums in order.
struct WindowResult {
  int n = 0;
  std::optional<int> k;
  std::vector<BigInt> values;
};

WindowResult mod_nonvanish_window(int q, std::span<const int> residues, int n);
/// Windows for n_first..n_last from one forward pass of the recursion.
std::vector<WindowResult> mod_window_sweep(int q, std::span<const int> residues, int n_first, int n_last);

/// (1/q) Sum_b (1 - w^-b)^m Sum_{a in Q} w^(ba) with w = exp(2 pi i / q), in
/// floating point. A cross-check only.
double mod_s_Q_eigen(int q, std::span<const int> residues, std::int64_t m);

/// Alternating sum of iso:F at k for connected F: nonzero exactly when
/// k >= f and k mod f is 0 or 1.
BigInt iso_s_closed_form(const Graph& pattern, int k);

}  // namespace motif
