#include "motif/closed_forms.hpp"

#include "motif/canon.hpp"
#include "motif/error.hpp"
#include "motif/properties.hpp"

#include <complex>
#include <numbers>

namespace motif {

ModRecursion::ModRecursion(int q) {
  if (q < 2 || !is_prime(q)) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not prime");
  state_.q = q;
  state_.s.assign(static_cast<std::size_t>(q), 0);
  state_.s[0] = 1;
  scratch_.resize(static_cast<std::size_t>(q));
}

void ModRecursion::step() {
  const int q = state_.q;
  for (int a = 0; a < q; ++a) scratch_[a] = state_.s[a] - state_.s[(a + q - 1) % q];
  state_.s.swap(scratch_);
  ++state_.m;
}

void ModRecursion::advance_to(std::int64_t m) {
  if (m < state_.m) throw Error(ErrorKind::InvalidParams, "recursion cannot step backwards");
  while (state_.m < m) step();
}

BigInt ModRecursion::sum(std::span<const int> residues) const {
  BigInt total = 0;
  for (int a : residues) total += state_.s[a];
  return total;
}

ModState mod_s_vector(int q, std::int64_t m) {
  if (m < 0) throw Error(ErrorKind::InvalidParams, "m must be nonnegative");
  ModRecursion rec(q);
  rec.advance_to(m);
  return rec.state();
}

void check_residue_set(int q, std::span<const int> residues) {
  if (q < 2 || !is_prime(q)) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not prime");
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  for (int a : residues) {
    if (a < 0 || a >= q || seen[a]) {
      throw Error(ErrorKind::InvalidQ, "Q must list distinct residues in 0.." + std::to_string(q - 1));
    }
    seen[a] = true;
  }
  if (residues.empty() || static_cast<int>(residues.size()) == q) {
    throw Error(ErrorKind::InvalidQ, "Q must be a nonempty proper subset of the residues");
  }
}

BigInt mod_s_Q(int q, std::span<const int> residues, std::int64_t m) {
  check_residue_set(q, residues);
  const auto state = mod_s_vector(q, m);
  BigInt total = 0;
  for (int a : residues) total += state.s[a];
  return total;
}

std::vector<WindowResult> mod_window_sweep(int q, std::span<const int> residues, int n_first, int n_last) {
  check_residue_set(q, residues);
  if (n_first < 1) throw Error(ErrorKind::InvalidParams, "n must be at least 1");
  std::vector<WindowResult> out;
  if (n_last < n_first) return out;
  ModRecursion rec(q);
  std::vector<BigInt> sums;  // sums[i] = S_Q(binom(n_first + i, 2))
  for (int k = n_first; k <= n_last + 2; ++k) {
    rec.advance_to(std::int64_t{k} * (k - 1) / 2);
    sums.push_back(rec.sum(residues));
  }
  for (int n = n_first; n <= n_last; ++n) {
    WindowResult w;
    w.n = n;
    for (int j = 0; j < 3; ++j) {
      const BigInt& v = sums[static_cast<std::size_t>(n - n_first + j)];
      w.values.push_back(v);
      if (!w.k && v != 0) w.k = n + j;
    }
    out.push_back(std::move(w));
  }
  return out;
}

WindowResult mod_nonvanish_window(int q, std::span<const int> residues, int n) {
  return mod_window_sweep(q, residues, n, n).front();
}

double mod_s_Q_eigen(int q, std::span<const int> residues, std::int64_t m) {
  check_residue_set(q, residues);
  using C = std::complex<double>;
  const double turn = 2.0 * std::numbers::pi / q;
  C total = 0;
  for (int b = 0; b < q; ++b) {
    C weight = 0;
    for (int a : residues) weight += std::polar(1.0, turn * b * a);
    if (b == 0) {
      // lambda_0 = 0
      if (m == 0) total += weight;
      continue;
    }
    const C lambda = 1.0 - std::polar(1.0, -turn * b);
    total += std::pow(lambda, static_cast<double>(m)) * weight;
  }
  return total.real() / q;
}

BigInt iso_s_closed_form(const Graph& pattern, int k) {
  if (pattern.order() < 1 || !pattern.connected()) {
    throw Error(ErrorKind::FNotConnected, "iso closed form needs a connected pattern");
  }
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be at least 1");
  const int f = pattern.order();
  if (f == 1) {
    if (k == 1) return 1;
    return k % 2 == 0 ? BigInt(k - 1) : BigInt(-(k - 1));
  }
  const int l0 = k / f;
  const int rest = k - l0 * f;
  if (k < f || rest >= 2) return 0;
  const auto aut = canonicalize(pattern).aut_count;
  const BigInt ff = factorial(f);
  BigInt ways = factorial(k) / (boost::multiprecision::pow(ff, static_cast<unsigned>(l0)) * factorial(l0));
  ways *= boost::multiprecision::pow(BigInt(ff / aut), static_cast<unsigned>(l0));
  const int sign_exp = (l0 + 1) + l0 * pattern.size();
  return sign_exp % 2 == 0 ? ways : BigInt(-ways);
}

}  // namespace motif
