#include "motif/properties.hpp"

#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace motif {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "expected integer " + std::string(what) + ", got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Graph parse_pattern(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "missing pattern graph");
  if (is_graph_name(text)) return named_graph(text);
  if (text.starts_with("g6=")) return from_graph6(text.substr(3));
  return read_graph_file(std::string(text));
}

}  // namespace

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

PropertySpec PropertySpec::parse(std::string_view text) {
  PropertySpec spec;
  if (text.starts_with("not:")) {
    spec.kind_ = PropertyKind::Negation;
    spec.inner_ = std::make_shared<const PropertySpec>(parse(text.substr(4)));
    spec.name_ = "not:" + spec.inner_->name();
    return spec;
  }

  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  struct Plain {
    std::string_view name;
    PropertyKind kind;
  };
  static constexpr Plain kPlain[] = {
      {"bipartite", PropertyKind::Bipartite},
      {"forest", PropertyKind::Forest},
      {"disconnected", PropertyKind::Disconnected},
      {"connected", PropertyKind::Connected},
      {"non-hamiltonian", PropertyKind::NonHamiltonian},
      {"planar", PropertyKind::Planar},
      {"triangle-free", PropertyKind::TriangleFree},
      {"chromatic-at-most-half", PropertyKind::ChromaticAtMostHalf},
      {"trivially-true", PropertyKind::TriviallyTrue},
      {"has-edge", PropertyKind::HasEdge},
  };
  for (const auto& plain : kPlain) {
    if (head == plain.name) {
      if (colon != std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "property '" + std::string(head) + "' takes no parameters");
      }
      spec.kind_ = plain.kind;
      spec.name_ = std::string(head);
      return spec;
    }
  }

  if (head == "homfree" || head == "iso") {
    spec.kind_ = head == "homfree" ? PropertyKind::HomFree : PropertyKind::Iso;
    spec.pattern_ = parse_pattern(rest);
    if (spec.kind_ == PropertyKind::Iso) {
      if (!spec.pattern_.connected()) {
        throw Error(ErrorKind::InvalidParams, "iso pattern must be connected");
      }
      if (spec.pattern_.order() > kMaxCanonVertices) {
        throw Error(ErrorKind::InvalidParams, "iso pattern larger than " + std::to_string(kMaxCanonVertices) + " vertices");
      }
      spec.pattern_key_ = canonical_key(spec.pattern_);
    }
    spec.name_ = std::string(head) + ":" + pattern_label(spec.pattern_);
    return spec;
  }

  if (head == "edgeconn") {
    spec.kind_ = PropertyKind::NotEdgeConnected;
    spec.connectivity_ = parse_int(rest, "connectivity bound");
    if (spec.connectivity_ < 1) throw Error(ErrorKind::InvalidParams, "edgeconn bound c must be >= 1");
    spec.name_ = "edgeconn:" + std::to_string(spec.connectivity_);
    return spec;
  }

  if (head == "mod") {
    const auto parts = split(rest, ':');
    if (colon == std::string_view::npos || parts.size() != 2) {
      throw Error(ErrorKind::ParseError, "mod expects mod:q:a,b,...");
    }
    spec.kind_ = PropertyKind::Mod;
    spec.modulus_ = parse_int(parts[0], "modulus q");
    if (!is_prime(spec.modulus_)) throw Error(ErrorKind::InvalidParams, "mod modulus q must be prime");
    if (spec.modulus_ > 61) throw Error(ErrorKind::InvalidParams, "mod modulus q must be below 64");
    if (parts[1].empty()) throw Error(ErrorKind::InvalidParams, "residue set Q must not be empty");
    for (auto item : split(parts[1], ',')) {
      const int a = parse_int(item, "residue");
      if (a < 0 || a >= spec.modulus_) throw Error(ErrorKind::InvalidParams, "residue outside 0..q-1");
      spec.residue_mask_ |= std::uint64_t{1} << a;
    }
    const std::uint64_t full = (std::uint64_t{1} << spec.modulus_) - 1;
    if (spec.residue_mask_ == full) throw Error(ErrorKind::InvalidParams, "residue set Q must not be all of 0..q-1");
    std::ostringstream name;
    name << "mod:" << spec.modulus_ << ':';
    bool first = true;
    for (int a : spec.residues()) {
      name << (first ? "" : ",") << a;
      first = false;
    }
    spec.name_ = name.str();
    return spec;
  }

  throw Error(ErrorKind::ParseError, "unknown property '" + std::string(text) + "'");
}

PropertySpec PropertySpec::hom_free(const Graph& pattern) {
  return parse("homfree:" + pattern_label(pattern));
}

PropertySpec PropertySpec::isolated_copy(const Graph& pattern) {
  return parse("iso:" + pattern_label(pattern));
}

std::string pattern_label(const Graph& pattern) {
  const int n = pattern.order();
  if (n <= kMaxCanonVertices) {
    const CanonKey key = canonical_key(pattern);
    std::vector<std::string> names = {"K", "E", "P"};
    if (n >= 3) names.push_back("C");
    for (const auto& prefix : names) {
      const std::string name = prefix + std::to_string(n);
      if (canonical_key(named_graph(name)) == key) return name;
    }
  }
  return "g6=" + to_graph6(pattern);
}

std::vector<int> PropertySpec::residues() const {
  std::vector<int> out;
  for (int a = 0; a < modulus_; ++a) {
    if ((residue_mask_ >> a) & 1U) out.push_back(a);
  }
  return out;
}

std::optional<bool> PropertySpec::claimed_monotone() const {
  switch (kind_) {
    case PropertyKind::Bipartite:
    case PropertyKind::Forest:
    case PropertyKind::Disconnected:
    case PropertyKind::NonHamiltonian:
    case PropertyKind::Planar:
    case PropertyKind::TriangleFree:
    case PropertyKind::HomFree:
    case PropertyKind::NotEdgeConnected:
    case PropertyKind::ChromaticAtMostHalf:
    case PropertyKind::TriviallyTrue:
      return true;
    case PropertyKind::Connected:
    case PropertyKind::Mod:
    case PropertyKind::Iso:
    case PropertyKind::HasEdge:
      return false;
    case PropertyKind::Negation:
      return std::nullopt;
  }
  return std::nullopt;
}

bool PropertySpec::operator()(const Graph& g) const {
  switch (kind_) {
    case PropertyKind::Bipartite: return is_bipartite(g);
    case PropertyKind::Forest: return is_forest(g);
    case PropertyKind::Disconnected: return !g.connected();
    case PropertyKind::Connected: return g.connected();
    case PropertyKind::NonHamiltonian: return !is_hamiltonian(g);
    case PropertyKind::Planar: return is_planar(g);
    case PropertyKind::TriangleFree: return is_triangle_free(g);
    case PropertyKind::HomFree: return !hom_exists(pattern_, g);
    case PropertyKind::NotEdgeConnected: return !is_edge_connected(g, connectivity_);
    case PropertyKind::ChromaticAtMostHalf: return is_colorable(g, (g.order() + 1) / 2);
    case PropertyKind::Mod: return (residue_mask_ >> (g.size() % modulus_)) & 1U;
    case PropertyKind::Iso:
      for (std::uint64_t comp : g.components()) {
        if (std::popcount(comp) == pattern_key_.n && canonical_key(g.induced(comp)) == pattern_key_) return true;
      }
      return false;
    case PropertyKind::TriviallyTrue: return true;
    case PropertyKind::HasEdge: return g.size() > 0;
    case PropertyKind::Negation: return !(*inner_)(g);
  }
  return false;
}

std::vector<std::string> builtin_property_names() {
  return {"bipartite",   "forest",   "disconnected",          "non-hamiltonian", "planar",
          "triangle-free", "homfree:C5", "edgeconn:3", "chromatic-at-most-half", "mod:3:0",
          "iso:K2",      "trivially-true", "has-edge"};
}

std::vector<std::string> monotone_builtin_names() {
  std::vector<std::string> out;
  for (const auto& name : builtin_property_names()) {
    if (PropertySpec::parse(name).claimed_monotone().value_or(false)) out.push_back(name);
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    std::uint64_t layer = unseen & (~unseen + 1);
    bool parity = false;
    std::uint64_t seen = layer;
    while (layer) {
      (parity ? odd : even) |= layer;
      std::uint64_t next = 0;
      for (std::uint64_t rest = layer; rest; rest &= rest - 1) next |= g.neighbors(std::countr_zero(rest));
      next &= ~seen;
      seen |= next;
      layer = next;
      parity = !parity;
    }
    unseen &= ~seen;
  }
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t same = ((even >> v) & 1U) ? even : odd;
    if (g.neighbors(v) & same) return false;
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(g.components().size());
}

bool is_triangle_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    for (std::uint64_t rest = g.neighbors(v) & ~((std::uint64_t{2} << v) - 1); rest; rest &= rest - 1) {
      if (g.neighbors(v) & g.neighbors(std::countr_zero(rest))) return false;
    }
  }
  return true;
}

namespace {

bool hamiltonian_dp(const Graph& g) {
  const int n = g.order();
  // reach[mask] = end vertices of paths from vertex 0 covering exactly mask
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask < reach.size(); mask += 2) {
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      for (auto fresh = static_cast<std::uint32_t>(g.neighbors(v)) & ~mask; fresh; fresh &= fresh - 1) {
        const std::uint32_t w = fresh & (~fresh + 1);
        reach[mask | w] |= w;
      }
    }
  }
  return (reach.back() & static_cast<std::uint32_t>(g.neighbors(0))) != 0;
}

bool hamiltonian_dfs(const Graph& g, int v, std::uint64_t visited, int depth) {
  if (depth == g.order()) return g.has_edge(v, 0);
  for (std::uint64_t rest = g.neighbors(v) & ~visited; rest; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    if (hamiltonian_dfs(g, w, visited | (std::uint64_t{1} << w), depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  if (!g.connected()) return false;
  if (n <= 16) return hamiltonian_dp(g);
  return hamiltonian_dfs(g, 0, 1, 1);
}

namespace {

bool color_search(const Graph& g, const std::vector<int>& order, std::size_t depth,
                  std::vector<std::uint64_t>& classes, int colors) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] & g.neighbors(v)) continue;
    classes[i] |= std::uint64_t{1} << v;
    if (color_search(g, order, depth + 1, classes, colors)) return true;
    classes[i] &= ~(std::uint64_t{1} << v);
  }
  if (static_cast<int>(classes.size()) < colors) {
    classes.push_back(std::uint64_t{1} << v);
    if (color_search(g, order, depth + 1, classes, colors)) return true;
    classes.pop_back();
  }
  return false;
}

}  // namespace

bool is_colorable(const Graph& g, int colors) {
  if (colors >= g.order()) return true;
  if (colors <= 0) return false;
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint64_t> classes;
  return color_search(g, order, 0, classes, colors);
}

int chromatic_number(const Graph& g) {
  int colors = g.size() > 0 ? 2 : 1;
  while (!is_colorable(g, colors)) ++colors;
  return colors;
}

namespace {

// Unit-capacity undirected max-flow from s to t, stopping at `limit`.
int max_flow(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  std::vector<std::int8_t> residual(static_cast<std::size_t>(n * n), 0);
  for (auto [u, v] : g.edges()) {
    residual[u * n + v] = 1;
    residual[v * n + u] = 1;
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  int flow = 0;
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail && parent[t] < 0) {
      const int u = queue[head++];
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && residual[u * n + v] > 0) {
          parent[v] = u;
          queue[tail++] = v;
        }
      }
    }
    if (parent[t] < 0) break;
    for (int v = t; v != s; v = parent[v]) {
      --residual[parent[v] * n + v];
      ++residual[v * n + parent[v]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorKind::TooFewVertices, "edge connectivity needs at least 2 vertices");
  if (!g.connected()) return 0;
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  for (int t = 1; t < g.order(); ++t) best = std::min(best, max_flow(g, 0, t, best));
  return best;
}

bool is_edge_connected(const Graph& g, int c) {
  if (c <= 0) return true;
  if (g.order() < 2) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < c) return false;
  }
  if (!g.connected()) return false;
  for (int t = 1; t < g.order(); ++t) {
    if (max_flow(g, 0, t, c) < c) return false;
  }
  return true;
}

std::vector<std::uint64_t> membership_bitmap(const PropertySpec& spec, int k, int threads) {
  if (k < 1 || k > 8) throw Error(ErrorKind::KTooLarge, "membership bitmaps cover 1 <= k <= 8");
  const std::uint64_t total = std::uint64_t{1} << edge_slots(k);
  std::vector<std::uint64_t> members((total + 63) / 64, 0);
  parallel_chunks(
      total, 256, threads,
      [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t x = begin; x < end; ++x) {
          if (spec(Graph::from_bits(k, x))) members[x >> 6] |= std::uint64_t{1} << (x & 63);
        }
      },
      64);
  return members;
}

MonotoneVerdict audit_monotone(std::span<const std::uint64_t> members, int k) {
  const int slots = edge_slots(k);
  const std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!bitmap_test(members, a)) continue;
    for (std::uint64_t rest = a; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      if (!bitmap_test(members, a ^ (std::uint64_t{1} << e))) {
        return {false, EdgeSet::from_bits(k, a), e};
      }
    }
  }
  return {};
}

MonotoneVerdict audit_monotone(const PropertySpec& spec, int k, int threads) {
  if (k < 1 || k > 7) throw Error(ErrorKind::KTooLarge, "audit_monotone supports 1 <= k <= 7");
  return audit_monotone(membership_bitmap(spec, k, threads), k);
}

}  // namespace motif
