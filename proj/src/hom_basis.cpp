#include "motif/hom_basis.hpp"

#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/partition.hpp"

#include <algorithm>
#include <map>

namespace motif {

namespace {

using Accumulator = std::map<CanonKey, std::int64_t>;

IsoClass iso_class_of_key(const CanonKey& key) {
  const Graph g = Graph::from_bits(key.n, key.bits);
  if (key.n <= kMaxTableVertices) {
    const auto& table = canon_table(key.n);
    return {g, table.aut_count(table.class_of(key.bits))};
  }
  return canonicalize(g);
}

}  // namespace

Rational HomBasis::coefficient(const CanonKey& key) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), key,
                             [](const BasisTerm& t, const CanonKey& k) { return t.graph.key() < k; });
  if (it != terms.end() && it->graph.key() == key) return it->coeff;
  return 0;
}

HomBasis indsub_to_hom_basis(const PropertySpec& spec, int k, const BasisOptions& options) {
  if (k < 2 || k > 7 || (k == 7 && !options.allow_k7)) {
    throw Error(ErrorKind::KTooLarge, "basis needs 2 <= k <= 6 (k = 7 opt-in), got k = " + std::to_string(k));
  }
  const auto& table = canon_table(k);
  const int slots = edge_slots(k);
  const std::uint64_t total = std::uint64_t{1} << slots;
  const auto members = membership_bitmap(spec, k, options.threads);

  HomBasis basis;
  basis.k = k;
  basis.property = spec.name();

  std::vector<int> member_classes;
  for (int cls = 0; cls < table.class_count(); ++cls) {
    if (bitmap_test(members, table.representative(cls))) member_classes.push_back(cls);
  }
  parallel_chunks(total, 256, options.threads, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t x = begin; x < end; ++x) {
      const bool expected = bitmap_test(members, table.representative(table.class_of(x)));
      if (bitmap_test(members, x) != expected) {
        throw Error(ErrorKind::InvariantViolation, basis.property + " is not isomorphism invariant");
      }
    }
  });

  // Emb coefficients scaled by k!: each labeled superset of a member
  // representative carries (k!/#Aut(H)) (-1)^(#E(H') - #E(H)).
  const std::int64_t kfact = static_cast<std::int64_t>(factorial(k));
  const std::uint64_t full = total - 1;
  std::vector<std::vector<std::int64_t>> partial(member_classes.size());
  std::vector<std::int64_t> emb(static_cast<std::size_t>(table.class_count()), 0);
  parallel_chunks(member_classes.size(), member_classes.size(), options.threads,
                  [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                    auto& local = partial[chunk];
                    local.assign(emb.size(), 0);
                    for (std::uint64_t i = begin; i < end; ++i) {
                      const int cls = member_classes[i];
                      const std::uint64_t x = table.representative(cls);
                      const std::int64_t weight = kfact / static_cast<std::int64_t>(table.aut_count(cls));
                      const std::uint64_t free = full & ~x;
                      for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
                        const std::int64_t sign = std::popcount(extra) % 2 == 0 ? 1 : -1;
                        local[table.class_of(x | extra)] += sign * weight;
                        if (extra == 0) break;
                      }
                    }
                  });
  for (const auto& local : partial) {
    for (std::size_t c = 0; c < local.size(); ++c) emb[c] += local[c];
  }

  const auto partitions = enumerate_partitions(k);
  Accumulator hom;
  for (int cls = 0; cls < table.class_count(); ++cls) {
    if (emb[cls] == 0) continue;
    const Graph h = Graph::from_bits(k, table.representative(cls));
    for (const auto& rho : partitions) {
      const auto q = quotient(h, rho);
      if (!q) continue;
      hom[canonical_key(*q)] += emb[cls] * mobius_partition(rho);
    }
  }

  for (const auto& [key, scaled] : hom) {
    if (scaled == 0) continue;
    basis.terms.push_back({iso_class_of_key(key), Rational(scaled, kfact)});
  }
  for (int cls : member_classes) {
    basis.members.push_back({Graph::from_bits(k, table.representative(cls)), table.aut_count(cls)});
  }
  return basis;
}

Rational clique_coefficient_from_members(const HomBasis& basis) {
  const int full = edge_slots(basis.k);
  Rational total = 0;
  for (const auto& h : basis.members) {
    const Rational term(1, h.aut_count);
    if ((full - h.canon.size()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational clique_coefficient(const HomBasis& basis) {
  const Graph clique = complete_graph(basis.k);
  const Rational value = basis.coefficient({basis.k, clique.size(), clique.edge_bits()});
  if (value != clique_coefficient_from_members(basis)) {
    throw Error(ErrorKind::InvariantViolation, "clique coefficient disagrees with the direct member sum");
  }
  return value;
}

BigInt evaluate_basis(const HomBasis& basis, const Graph& g) {
  Rational total = 0;
  for (const auto& term : basis.terms) total += term.coeff * Rational(count_hom(term.graph.canon, g));
  if (!is_integer(total)) {
    throw Error(ErrorKind::NonIntegerResult, "basis evaluated to " + total.str());
  }
  return boost::multiprecision::numerator(total);
}

BigInt count_induced_with_property(const PropertySpec& spec, int k, const Graph& g) {
  const int n = g.order();
  if (k < 1 || k > n) return 0;
  std::uint64_t count = 0;
  std::uint64_t subset = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    if (spec(g.induced(subset))) ++count;
    const std::uint64_t low = subset & -subset;
    const std::uint64_t ripple = subset + low;
    if (ripple == 0) break;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
    if (limit != 0 && subset >= limit) break;
  }
  return count;
}

}  // namespace motif
