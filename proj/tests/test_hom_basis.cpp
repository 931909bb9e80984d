#include "oracles.hpp"

#include "motif/error.hpp"
#include "motif/euler.hpp"
#include "motif/hom_basis.hpp"

#include <doctest.h>

using namespace motif;

namespace {

HomBasis basis_of(const std::string& spec, int k) {
  BasisOptions options;
  options.threads = 2;
  return indsub_to_hom_basis(PropertySpec::parse(spec), k, options);
}

CanonKey key_of(const Graph& g) { return canonicalize(g).key(); }

// k-subsets S with phi(g[S]), without the library's subset walk
std::uint64_t induced_count(const PropertySpec& spec, int k, const Graph& g) {
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (std::popcount(s) == k && spec(g.induced(s))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("basis examples") {
  const auto trivial = basis_of("trivially-true", 2);
  REQUIRE(trivial.terms.size() == 2);
  CHECK(trivial.coefficient(key_of(Graph(2))) == Rational(1, 2));
  CHECK(trivial.coefficient(key_of(Graph(1))) == Rational(-1, 2));
  CHECK(clique_coefficient(trivial) == 0);

  const auto edge = basis_of("has-edge", 2);
  REQUIRE(edge.terms.size() == 1);
  CHECK(edge.terms.front().graph.canon == complete_graph(2));
  CHECK(edge.terms.front().coeff == Rational(1, 2));
  CHECK(clique_coefficient(edge) == Rational(1, 2));

  for (int k = 2; k <= 5; ++k) CHECK(clique_coefficient(basis_of("trivially-true", k)) == 0);
  CHECK(abs(clique_coefficient(basis_of("connected", 3)) * 6) == 2);

  CHECK(evaluate_basis(trivial, complete_graph(3)) == 3);
  CHECK(evaluate_basis(basis_of("connected", 3), complete_graph(4)) == 4);
  const auto spec = PropertySpec::parse("mod:2:1");
  CHECK(evaluate_basis(basis_of("mod:2:1", 3), cycle_graph(5)) == induced_count(spec, 3, cycle_graph(5)));
}

TEST_CASE("basis reproduces induced counts") {
  const auto hosts = oracle::random_graphs(8, 1, 7, 61);
  for (const auto& name : builtin_property_names()) {
    const auto spec = PropertySpec::parse(name);
    for (int k = 2; k <= 3; ++k) {
      const auto basis = basis_of(name, k);
      for (const auto& g : hosts) {
        CHECK_MESSAGE(evaluate_basis(basis, g) == induced_count(spec, k, g), name << " k = " << k);
        CHECK(count_induced_with_property(spec, k, g) == induced_count(spec, k, g));
      }
    }
  }
}

TEST_CASE("clique coefficient against the alternating sum") {
  for (const auto& name : builtin_property_names()) {
    for (int k = 2; k <= 5; ++k) {
      const auto basis = basis_of(name, k);
      const Rational scaled = clique_coefficient(basis) * Rational(factorial(k));
      const auto sum = alternating_sum(PropertySpec::parse(name), k).sum;
      CHECK_MESSAGE(abs(scaled) == Rational(abs(sum)), name << " k = " << k);
    }
  }
}

TEST_CASE("basis shape") {
  for (const auto& name : {"planar", "mod:3:0", "iso:K2", "connected"}) {
    for (int k = 2; k <= 5; ++k) {
      const auto basis = basis_of(name, k);
      std::size_t types = 0;
      for (int n = 1; n <= k; ++n) types += all_iso_classes(n).size();
      CHECK(basis.terms.size() <= types);
      for (std::size_t i = 0; i < basis.terms.size(); ++i) {
        const auto& t = basis.terms[i];
        CHECK(t.graph.canon.order() <= k);
        CHECK(t.coeff != 0);
        CHECK(t.graph.canon == canonicalize(t.graph.canon).canon);
        CHECK(t.graph.aut_count == oracle::automorphisms(t.graph.canon));
        CHECK(factorial(k) % boost::multiprecision::denominator(t.coeff) == 0);
        if (i > 0) CHECK(basis.terms[i - 1].graph.key() < t.graph.key());
      }
    }
  }
}

TEST_CASE("basis errors") {
  CHECK_THROWS_AS(basis_of("planar", 1), Error);
  CHECK_THROWS_AS(basis_of("planar", 7), Error);
  HomBasis bad;
  bad.k = 2;
  bad.terms.push_back({canonicalize(complete_graph(2)), Rational(1, 3)});
  try {
    evaluate_basis(bad, complete_graph(2));
    FAIL("expected NonIntegerResult");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegerResult);
    CHECK(is_internal(e.kind()));
  }
}

TEST_CASE("thread count does not change the basis") {
  BasisOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto spec = PropertySpec::parse("non-hamiltonian");
  const auto a = indsub_to_hom_basis(spec, 5, one);
  const auto b = indsub_to_hom_basis(spec, 5, many);
  REQUIRE(a.terms.size() == b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    CHECK(a.terms[i].graph == b.terms[i].graph);
    CHECK(a.terms[i].coeff == b.terms[i].coeff);
  }
}
