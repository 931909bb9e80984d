#include "motif/extraction.hpp"

#include "motif/counting.hpp"
#include "motif/error.hpp"

#include <algorithm>
#include <set>

namespace motif {

namespace {

// Row echelon form kept for rank tests: each stored row has a leading 1 at its pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  bool add_if_independent(std::vector<Rational> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational factor = row[pivots_[r]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) row[c] -= factor * rows_[r][c];
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
    if (lead == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
    const Rational scale = row[pivot];
    for (auto& v : row) v /= scale;
    for (auto& other : rows_) {
      const Rational factor = other[pivot];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) other[c] -= factor * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Gauss-Jordan on a square, nonsingular system.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularSystem, "query system lost rank during elimination");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

int max_support_order(const std::vector<IsoClass>& support) {
  int out = 0;
  for (const auto& h : support) out = std::max(out, h.canon.order());
  return out;
}

}  // namespace

std::vector<Graph> extraction_test_graphs(const std::vector<IsoClass>& support) {
  std::vector<Graph> out;
  std::set<CanonKey> seen;
  for (const auto& h : support) {
    if (seen.insert(h.key()).second) out.push_back(h.canon);
  }
  const int s = std::min(max_support_order(support), kMaxTableVertices);
  for (int n = 1; n <= s; ++n) {
    for (const auto& cls : all_iso_classes(n)) {
      if (seen.insert(cls.key()).second) out.push_back(cls.canon);
    }
  }
  return out;
}

ExtractionResult extract_all(const LinearOracle& oracle, const Graph& g) {
  const std::size_t width = oracle.support.size();
  ExtractionResult result;
  if (width == 0) return result;

  EchelonBasis echelon(width);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const Graph& t : extraction_test_graphs(oracle.support)) {
    std::vector<Rational> row;
    row.reserve(width);
    for (const auto& h : oracle.support) row.emplace_back(count_hom(h.canon, t));
    if (!echelon.add_if_independent(row)) continue;
    const Graph query = tensor_product(g, t);
    const Rational value = oracle.eval(query);
    result.ledger.queries.push_back({query.order(), value});
    result.ledger.max_query_vertices = std::max(result.ledger.max_query_vertices, query.order());
    rows.push_back(std::move(row));
    rhs.push_back(value);
    if (echelon.rank() == width) break;
  }
  if (echelon.rank() < width) {
    throw Error(ErrorKind::SingularSystem, "test graphs exhausted at rank " + std::to_string(echelon.rank()) +
                                               " of " + std::to_string(width));
  }
  result.products = solve_square(std::move(rows), std::move(rhs));
  return result;
}

HomExtraction extract_hom(const LinearOracle& oracle, const IsoClass& target, const Graph& g,
                          const std::optional<Rational>& coefficient) {
  const auto key = target.key();
  auto it = std::find_if(oracle.support.begin(), oracle.support.end(),
                         [&](const IsoClass& h) { return h.key() == key; });
  if (it == oracle.support.end()) throw Error(ErrorKind::TargetNotInSupport, "target graph is not in the support");
  if (coefficient && *coefficient == 0) throw Error(ErrorKind::InvalidParams, "target coefficient must be nonzero");

  auto all = extract_all(oracle, g);
  HomExtraction out;
  out.product = all.products[static_cast<std::size_t>(it - oracle.support.begin())];
  if (coefficient) out.hom = out.product / *coefficient;
  out.ledger = std::move(all.ledger);
  return out;
}

LinearOracle basis_oracle(const HomBasis& basis) {
  LinearOracle oracle;
  for (const auto& term : basis.terms) oracle.support.push_back(term.graph);
  oracle.eval = [basis](const Graph& g) { return Rational(evaluate_basis(basis, g)); };
  return oracle;
}

LinearOracle property_oracle(const PropertySpec& spec, const HomBasis& basis) {
  LinearOracle oracle;
  for (const auto& term : basis.terms) oracle.support.push_back(term.graph);
  oracle.eval = [spec, k = basis.k](const Graph& g) { return Rational(count_induced_with_property(spec, k, g)); };
  return oracle;
}

CliqueCount clique_count_via_property_oracle(const PropertySpec& spec, int k, const Graph& g, int threads) {
  if (k < 2 || k > 4) throw Error(ErrorKind::KTooLarge, "clique recovery needs 2 <= k <= 4");
  if (g.order() > 8) throw Error(ErrorKind::InvalidParams, "clique recovery needs at most 8 host vertices");
  BasisOptions options;
  options.threads = threads;
  const auto basis = indsub_to_hom_basis(spec, k, options);
  CliqueCount out;
  out.clique_coefficient = clique_coefficient(basis);
  if (out.clique_coefficient == 0) {
    throw Error(ErrorKind::VanishingCliqueCoefficient,
                "a(K_" + std::to_string(k) + ") vanishes for " + spec.name() + "; the alternating sum is 0");
  }
  const Graph clique = complete_graph(k);
  auto extracted = extract_hom(property_oracle(spec, basis), {clique, 0}, g, out.clique_coefficient);
  const Rational cliques = *extracted.hom / Rational(factorial(k));
  if (!is_integer(cliques)) throw Error(ErrorKind::NonIntegerResult, "clique count came out as " + cliques.str());
  out.cliques = boost::multiprecision::numerator(cliques);
  out.ledger = std::move(extracted.ledger);
  return out;
}

}  // namespace motif
