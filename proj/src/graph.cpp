#include "motif/graph.hpp"

#include "motif/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace motif {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange,
                "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::InvalidParams,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

std::pair<int, int> edge_endpoints(int index) {
  int v = 1;
  while (edge_slots(v + 1) <= index) ++v;
  return {index - edge_slots(v), v};
}

EdgeSet::EdgeSet(int k) : k_(k) {
  if (k < 1 || k > kMaxEdgeSetVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange,
                "edge set over K_" + std::to_string(k) + " exceeds K_" +
                    std::to_string(kMaxEdgeSetVertices));
  }
}

EdgeSet EdgeSet::from_bits(int k, std::uint64_t bits) {
  EdgeSet set(k);
  if (set.slots() > 64) {
    throw Error(ErrorKind::VertexCountOutOfRange, "from_bits needs k <= 11");
  }
  if (set.slots() < 64 && (bits >> set.slots()) != 0) {
    throw Error(ErrorKind::InvalidParams, "bits beyond the last edge slot");
  }
  for (int i = 0; i < set.slots(); ++i) {
    if ((bits >> i) & 1U) set.bits_.set(static_cast<std::size_t>(i));
  }
  return set;
}

void EdgeSet::set(int index, bool value) {
  if (index < 0 || index >= slots()) {
    throw Error(ErrorKind::BadIndex, "edge slot " + std::to_string(index));
  }
  bits_.set(static_cast<std::size_t>(index), value);
}

std::uint64_t EdgeSet::to_bits() const {
  if (slots() > 64) throw Error(ErrorKind::VertexCountOutOfRange, "to_bits needs k <= 11");
  std::uint64_t out = 0;
  for (int i = 0; i < slots(); ++i) {
    if (test(i)) out |= bit(i);
  }
  return out;
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < slots(); ++i) {
    if (test(i)) out.push_back(edge_endpoints(i));
  }
  return out;
}

EdgeSet EdgeSet::operator|(const EdgeSet& other) const {
  EdgeSet out = *this;
  out.bits_ |= other.bits_;
  return out;
}

EdgeSet EdgeSet::operator&(const EdgeSet& other) const {
  EdgeSet out = *this;
  out.bits_ &= other.bits_;
  return out;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edge_set(const EdgeSet& edges) {
  Graph g(edges.k());
  for (auto [u, v] : edges.edges()) g.add_edge(u, v);
  return g;
}

Graph Graph::from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  if (edge_slots(n) > 64) throw Error(ErrorKind::VertexCountOutOfRange, "from_bits needs n <= 11");
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      if ((bits >> index) & 1U) {
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
      }
    }
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error(ErrorKind::InvalidParams, "self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

EdgeSet Graph::edge_set() const {
  EdgeSet out(n_);
  for (auto [u, v] : edges()) out.set(edge_index(u, v));
  return out;
}

std::uint64_t Graph::edge_bits() const {
  if (edge_slots(n_) > 64) throw Error(ErrorKind::VertexCountOutOfRange, "edge_bits needs n <= 11");
  std::uint64_t out = 0;
  int index = 0;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      if (has_edge(u, v)) out |= bit(index);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::InvalidParams, "permutation length differs from vertex count");
  }
  Graph out(n_);
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = adj_[v];
    std::uint64_t mapped = 0;
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      mapped |= bit(perm[u]);
    }
    out.adj_[perm[v]] = mapped;
  }
  return out;
}

Graph Graph::induced(std::uint64_t vertices) const {
  vertices &= vertex_mask();
  std::array<int, kMaxVertices> position{};
  int count = 0;
  for (std::uint64_t rest = vertices; rest; rest &= rest - 1) {
    position[std::countr_zero(rest)] = count++;
  }
  Graph out(count);
  for (std::uint64_t rest = vertices; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    std::uint64_t row = adj_[v] & vertices;
    std::uint64_t mapped = 0;
    while (row) {
      mapped |= bit(position[std::countr_zero(row)]);
      row &= row - 1;
    }
    out.adj_[position[v]] = mapped;
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (int v = 0; v < n_; ++v) out.adj_[v] = ~adj_[v] & vertex_mask() & ~bit(v);
  return out;
}

std::vector<std::uint64_t> Graph::components() const {
  std::vector<std::uint64_t> out;
  std::uint64_t unseen = vertex_mask();
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t fresh = adj_[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph tensor_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 * n2 > kMaxVertices) {
    throw Error(ErrorKind::ProductTooLarge, std::to_string(n1) + " x " + std::to_string(n2) +
                                                " vertices exceeds " + std::to_string(kMaxVertices));
  }
  Graph out(n1 * n2);
  for (auto [u1, v1] : g1.edges()) {
    for (auto [u2, v2] : g2.edges()) {
      out.add_edge(u1 * n2 + u2, v1 * n2 + v2);
      out.add_edge(u1 * n2 + v2, v1 * n2 + u2);
    }
  }
  return out;
}

bool is_graph_name(std::string_view name) {
  if (name.size() < 2) return false;
  if (name[0] != 'K' && name[0] != 'C' && name[0] != 'P' && name[0] != 'E') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Graph named_graph(std::string_view name) {
  if (!is_graph_name(name)) throw Error(ErrorKind::ParseError, "unknown graph name '" + std::string(name) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc{} || ptr != name.data() + name.size()) {
    throw Error(ErrorKind::ParseError, "bad graph size in '" + std::string(name) + "'");
  }
  switch (name[0]) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'P': return path_graph(n);
    default: return empty_graph(n);
  }
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw Error(ErrorKind::ParseError, "expected header 'n m'");
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::VertexCountOutOfRange, "vertex count " + std::to_string(n));
  }
  if (m < 0 || m > edge_slots(static_cast<int>(n))) {
    throw Error(ErrorKind::ParseError, "edge count " + std::to_string(m) + " impossible for n = " + std::to_string(n));
  }
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edge lines");
    if (u < 0 || v >= n || u >= v) {
      throw Error(ErrorKind::ParseError,
                  "edge line '" + std::to_string(u) + " " + std::to_string(v) + "' needs 0 <= u < v < n");
    }
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw Error(ErrorKind::ParseError, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorKind::ParseError, "trailing content after edge list");
  return g;
}

Graph from_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(ErrorKind::ParseError, "invalid graph6 character");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw Error(ErrorKind::ParseError, "graph6 order too large");
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::VertexCountOutOfRange, "graph6 order " + std::to_string(n));
  const std::size_t bits_needed = static_cast<std::size_t>(edge_slots(static_cast<int>(n)));
  if ((line.size() - pos) * 6 < bits_needed) throw Error(ErrorKind::ParseError, "graph6 string too short");
  if ((line.size() - pos) != (bits_needed + 5) / 6) throw Error(ErrorKind::ParseError, "graph6 string length mismatch");
  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open graph file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && !std::isdigit(static_cast<unsigned char>(content[first]))) {
    return from_graph6(std::string_view(content).substr(first));
  }
  return from_text(content);
}

Graph random_graph(int n, double density, std::uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < density) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace motif
