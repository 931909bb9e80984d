#include "motif/fixed_point.hpp"

#include "motif/error.hpp"

#include <algorithm>

namespace motif {

std::vector<int> OrbitSet::indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = members; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

bool orbit_set_less(const OrbitSet& a, const OrbitSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

void check_orbit_prime(int p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (p > kMaxOrbitPrime) {
    throw Error(ErrorKind::PrimeOutOfRange, "p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxOrbitPrime));
  }
}

int orbit_count(int p) {
  check_orbit_prime(p);
  return (p - 1) / 2;
}

EdgeSet orbit_cycle(int p, int i) {
  check_orbit_prime(p);
  if (i < 1 || i > (p - 1) / 2) {
    throw Error(ErrorKind::BadIndex, "orbit index " + std::to_string(i) + " outside 1.." + std::to_string((p - 1) / 2));
  }
  EdgeSet out(p);
  for (int x = 0; x < p; ++x) out.set(edge_index(x, (x + i) % p));
  return out;
}

Graph build_hp(const OrbitSet& orbits) {
  const int p = orbits.p;
  check_orbit_prime(p);
  if (orbits.members == 0) throw Error(ErrorKind::EmptyOrbitSet, "H_P needs a nonempty orbit set");
  if (orbits.members >> ((p - 1) / 2)) throw Error(ErrorKind::BadIndex, "orbit set has indices beyond (p-1)/2");
  Graph g(p);
  for (int i : orbits.indices()) {
    for (int x = 0; x < p; ++x) g.add_edge(x, (x + i) % p);
  }
  return g;
}

FixedPointReport fixed_point_complex(const PropertySpec& spec, int p, const FixedPointOptions& options) {
  check_orbit_prime(p);
  const bool want_full =
      options.full == FullSide::On || (options.full == FullSide::Auto && p <= kMaxFullSidePrime);
  if (want_full && p > kMaxFullSidePrime) {
    throw Error(ErrorKind::FullSideTooLarge, "full complex at p = " + std::to_string(p) + " needs 2^" +
                                                 std::to_string(edge_slots(p)) + " subsets; limit is p = 7");
  }

  const int orbits = (p - 1) / 2;
  const std::uint32_t total = std::uint32_t{1} << orbits;
  std::vector<std::uint8_t> member(total, 0);
  parallel_chunks(total, 64, options.threads, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t mask = std::max<std::uint64_t>(begin, 1); mask < end; ++mask) {
      member[mask] = spec(build_hp({p, static_cast<std::uint32_t>(mask)})) ? 1 : 0;
    }
  });

  FixedPointReport report;
  report.p = p;
  report.property = spec.name();
  report.chi_hat_fixed = 1;  // the empty orbit set
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (!member[mask]) continue;
    OrbitSet simplex{p, mask};
    report.simplices.push_back(simplex);
    if (simplex.size() % 2 == 0) {
      report.chi_hat_fixed += 1;
    } else {
      report.chi_hat_fixed -= 1;
    }
  }
  std::sort(report.simplices.begin(), report.simplices.end(), orbit_set_less);

  if (want_full) {
    EulerOptions euler;
    euler.threads = options.threads;
    const auto full = alternating_sum(spec, p, euler);
    if (full.monotone_checked) {
      report.chi_hat_full = *full.chi_hat;
      const BigInt gap = *report.chi_hat_full - report.chi_hat_fixed;
      report.congruence = gap % p == 0 ? Congruence::Holds : Congruence::Violated;
    }
  }
  return report;
}

BigInt closed_form_odd_cycle_antihole(CycleAntiholeCase which, int p, int threshold) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (which == CycleAntiholeCase::OddCycleFalse) return 1;
  if (p <= threshold) {
    throw Error(ErrorKind::PrimeTooSmall,
                "p = " + std::to_string(p) + " does not exceed the triviality threshold " + std::to_string(threshold));
  }
  return ((p - 1) / 2 + 1) % 2 == 0 ? BigInt(1) : BigInt(-1);
}

int default_antihole_threshold(const PropertySpec& spec) {
  if (spec.kind() == PropertyKind::ChromaticAtMostHalf) return 1;
  throw Error(ErrorKind::InvalidParams, "no known anti-hole threshold for " + spec.name());
}

BigInt closed_form_edge_connectivity(int c, int p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (c < 0) throw Error(ErrorKind::InvalidParams, "c must be nonnegative");
  if (p < c + 3) {
    throw Error(ErrorKind::PrimeTooSmall, "closed form needs p >= c + 3, got p = " + std::to_string(p) +
                                              ", c = " + std::to_string(c));
  }
  const int half = c / 2;
  BigInt value = binomial((p - 1) / 2 - 1, half);
  return half % 2 == 0 ? value : BigInt(-value);
}

bool hp_connectivity_threshold_holds(int p, int c) {
  const int orbits = orbit_count(p);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << orbits); ++mask) {
    const OrbitSet set{p, mask};
    const bool connected = is_edge_connected(build_hp(set), c + 1);
    if (connected != (set.size() > c / 2)) return false;
  }
  return true;
}

}  // namespace motif
