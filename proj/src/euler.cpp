#include "motif/euler.hpp"

#include "motif/error.hpp"

namespace motif {

AlternatingSumReport alternating_sum(const PropertySpec& spec, int k, const EulerOptions& options) {
  if (k < 2) throw Error(ErrorKind::KTooLarge, "alternating_sum needs k >= 2, got " + std::to_string(k));
  if (k > 8 || (k == 8 && !options.allow_k8)) {
    throw Error(ErrorKind::KTooLarge, "k = " + std::to_string(k) + " exceeds 7 (k = 8 needs the explicit opt-in)");
  }
  const int slots = edge_slots(k);
  const auto members = membership_bitmap(spec, k, options.threads);

  AlternatingSumReport report;
  report.k = k;
  report.property = spec.name();
  report.counts_by_size.assign(static_cast<std::size_t>(slots) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t word = 0; word < members.size(); ++word) {
    for (std::uint64_t rest = members[word]; rest; rest &= rest - 1) {
      const std::uint64_t a = word * 64 + static_cast<std::uint64_t>(std::countr_zero(rest));
      if (a < total) ++report.counts_by_size[std::popcount(a)];
    }
  }
  for (int i = 0; i <= slots; ++i) {
    if (i % 2 == 0) {
      report.sum += report.counts_by_size[i];
    } else {
      report.sum -= report.counts_by_size[i];
    }
  }

  const bool holds_on_edgeless = report.counts_by_size[0] == 1;
  if (holds_on_edgeless && audit_monotone(members, k).monotone) {
    report.monotone_checked = true;
    BigInt chi = 0;
    // a face with i+1 edges has dimension i
    for (int i = 0; i + 1 <= slots; ++i) {
      if (i % 2 == 0) {
        chi += report.counts_by_size[i + 1];
      } else {
        chi -= report.counts_by_size[i + 1];
      }
    }
    report.chi = chi;
    report.chi_hat = 1 - chi;
    if (*report.chi_hat != report.sum) {
      throw Error(ErrorKind::InvariantViolation, "reduced Euler characteristic differs from the alternating sum for " +
                                                     spec.name() + " at k = " + std::to_string(k));
    }
  }
  return report;
}

int parity_period(const Graph& pattern) {
  const int f = pattern.order();
  // 2^(2^t) for t = 0, 1, 2, 3, 4 is 2, 4, 16, 256, 65536
  std::int64_t power = 2;
  while (power < f) power *= power;
  return static_cast<int>(power - 1);
}

ParityVerdict chi_hat_parity_check(const Graph& pattern, int k, const EulerOptions& options) {
  ParityVerdict verdict;
  verdict.period = parity_period(pattern);
  verdict.k = k;
  if (k % verdict.period != 1 % verdict.period) {
    throw Error(ErrorKind::KNotCongruent, "k = " + std::to_string(k) + " is not 1 mod " + std::to_string(verdict.period));
  }
  const PropertySpec spec = PropertySpec::hom_free(pattern);
  const auto report = alternating_sum(spec, k, options);
  if (!report.chi_hat) {
    throw Error(ErrorKind::InvariantViolation, "homfree complex failed the monotonicity audit at k = " + std::to_string(k));
  }
  verdict.chi_hat = *report.chi_hat;
  verdict.odd = (verdict.chi_hat % 2) != 0;
  return verdict;
}

}  // namespace motif
