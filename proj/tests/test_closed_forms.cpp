#include "oracles.hpp"

#include "motif/closed_forms.hpp"
#include "motif/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace motif;

namespace {

std::vector<std::vector<int>> proper_subsets(int q) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << q) - 1; ++mask) {
    std::vector<int> set;
    for (int a = 0; a < q; ++a) {
      if ((mask >> a) & 1) set.push_back(a);
    }
    out.push_back(set);
  }
  return out;
}

bool has_isolated_copy(const Graph& g, const Graph& f) {
  for (auto mask : g.components()) {
    if (oracle::isomorphic(g.induced(mask), f)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("recursion examples") {
  CHECK(mod_s_vector(3, 3).s == std::vector<BigInt>{0, -3, 3});
  for (int q : {2, 3, 5, 7}) {
    std::vector<BigInt> start(static_cast<std::size_t>(q), 0);
    start[0] = 1;
    CHECK(mod_s_vector(q, 0).s == start);
  }
  for (int m = 1; m <= 40; ++m) {
    const auto s = mod_s_vector(2, m).s;
    CHECK(s[0] == BigInt(1) << (m - 1));
    CHECK(s[1] == -(BigInt(1) << (m - 1)));
  }
}

TEST_CASE("recursion matches the binomial definition") {
  for (int q : {2, 3, 5, 7}) {
    for (int m = 0; m <= 12; ++m) {
      const auto state = mod_s_vector(q, m);
      BigInt total = 0;
      for (int a = 0; a < q; ++a) {
        CHECK(state.s[a] == oracle::mod_sum_direct(q, a, m));
        total += state.s[a];
      }
      CHECK(total == (m == 0 ? 1 : 0));
    }
  }
  const auto big = mod_s_vector(5, 1500);
  CHECK(big.s[3] == oracle::mod_sum_direct(5, 3, 1500));
}

TEST_CASE("mod sums match subset enumeration") {
  CHECK(mod_s_Q(2, std::vector<int>{0}, 3) == 4);
  CHECK(mod_s_Q(3, std::vector<int>{0}, 3) == 0);
  for (int q : {2, 3, 5}) {
    for (const auto& residues : proper_subsets(q)) {
      for (int k = 2; k <= 5; ++k) {
        const auto brute = oracle::alternating_sum(k, [&](const Graph& g) {
          return std::find(residues.begin(), residues.end(), g.size() % q) != residues.end();
        });
        CHECK(mod_s_Q(q, residues, edge_slots(k)) == brute);
      }
    }
  }
}

TEST_CASE("eigenvalue form") {
  for (int q : {3, 5}) {
    for (const auto& residues : proper_subsets(q)) {
      for (int m = 0; m <= 30; ++m) {
        const double exact = mod_s_Q(q, residues, m).convert_to<double>();
        const double approx = mod_s_Q_eigen(q, residues, m);
        if (exact == 0) {
          CHECK(std::abs(approx) < 1e-6);
        } else {
          CHECK(std::abs(approx - exact) / std::abs(exact) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("nonvanishing window") {
  for (int n = 2; n <= 30; ++n) CHECK(mod_nonvanish_window(2, std::vector<int>{0}, n).k == n);
  const auto w = mod_nonvanish_window(3, std::vector<int>{0}, 5);
  REQUIRE(w.k.has_value());
  CHECK(*w.k >= 5);
  CHECK(*w.k <= 7);
  CHECK(w.values[*w.k - 5] != 0);
  const auto sweep = mod_window_sweep(5, std::vector<int>{2, 4}, 3, 60);
  REQUIRE(sweep.size() == 58);
  for (const auto& entry : sweep) {
    const auto single = mod_nonvanish_window(5, std::vector<int>{2, 4}, entry.n);
    CHECK(single.k == entry.k);
    CHECK(single.values == entry.values);
  }
}

TEST_CASE("closed-form errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind_of([] { mod_s_vector(4, 3); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { mod_s_Q(3, std::vector<int>{}, 3); }) == ErrorKind::InvalidQ);
  CHECK(kind_of([] { mod_s_Q(3, std::vector<int>{0, 1, 2}, 3); }) == ErrorKind::InvalidQ);
  CHECK(kind_of([] { mod_s_Q(3, std::vector<int>{3}, 3); }) == ErrorKind::InvalidQ);
  CHECK(kind_of([] { iso_s_closed_form(Graph(2), 3); }) == ErrorKind::FNotConnected);
}

TEST_CASE("isolated-copy closed form") {
  CHECK(iso_s_closed_form(Graph(1), 5) == -4);
  CHECK(iso_s_closed_form(complete_graph(2), 3) == -3);
  CHECK(iso_s_closed_form(complete_graph(2), 4) == -3);
  for (int k = 2; k <= 12; ++k) CHECK(iso_s_closed_form(Graph(1), k) == (k % 2 == 0 ? k - 1 : -(k - 1)));
  CHECK(iso_s_closed_form(Graph(1), 1) == 1);

  const std::vector<Graph> patterns{Graph(1), complete_graph(2), path_graph(3), complete_graph(3)};
  for (const auto& f : patterns) {
    for (int k = 1; k <= 5; ++k) {
      const auto brute = oracle::alternating_sum(k, [&](const Graph& g) { return has_isolated_copy(g, f); });
      CHECK_MESSAGE(iso_s_closed_form(f, k) == brute, "f = " << f.order() << ", k = " << k);
    }
    const int order = f.order();
    for (int k = 1; k <= 12; ++k) {
      const bool nonzero = k >= order && (k % order == 0 || k % order == 1);
      CHECK((iso_s_closed_form(f, k) != 0) == nonzero);
    }
  }
}
