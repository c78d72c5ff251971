#include "twodist/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twodist/error.hpp"

namespace twodist {

namespace {

void check_order(int n, int max_n, const char* what) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": graph needs at least one vertex");
  if (n > kHardMaxN || n > max_n) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + ": n = " + std::to_string(n) +
                                          " exceeds the configured maximum " + std::to_string(std::min(max_n, kHardMaxN)));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) {
  check_order(n, kHardMaxN, "Graph");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loops are not allowed");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n, kHardMaxN, "Graph");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~all) throw Error(ErrorKind::InvalidArgument, "adjacency row references a missing vertex");
    if (rows[u] & bit(u)) throw Error(ErrorKind::InvalidArgument, "self-loops are not allowed");
    for (int v = 0; v < n; ++v) {
      if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U)) {
        throw Error(ErrorKind::InvalidArgument, "adjacency is not symmetric");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

std::uint64_t Graph::vertex_mask() const noexcept { return bit(order()) - 1; }

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_complete() const {
  for (int v = 0; v < order(); ++v)
    if (rows_[v] != (vertex_mask() & ~bit(v))) return false;
  return true;
}

MultipartiteSignature::MultipartiteSignature(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidArgument, "signature needs at least one part");
  for (int p : parts_)
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "signature parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

// graph6: one size byte (n + 63), then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, each + 63.
Graph parse_graph6(std::string_view text, int max_n) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "graph6: empty input");
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw Error(ErrorKind::Parse, "graph6: byte out of range 63..126");
  }
  const int first = static_cast<unsigned char>(text[0]) - 63;
  if (first == 63) throw Error(ErrorKind::Parse, "graph6: multi-byte sizes (n > 62) are not supported");
  const int n = first;
  if (n == 0) throw Error(ErrorKind::Parse, "graph6: graph has no vertices");
  if (n > max_n) {
    throw Error(ErrorKind::SizeLimit,
                "graph6: n = " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(max_n));
  }
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes) {
    throw Error(ErrorKind::Parse, "graph6: expected " + std::to_string(1 + nbytes) + " bytes for n = " +
                                      std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  auto bit_at = [&](std::size_t idx) {
    const int byte = static_cast<unsigned char>(text[1 + idx / 6]) - 63;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  for (; k < nbytes * 6; ++k)
    if (bit_at(k)) throw Error(ErrorKind::Parse, "graph6: nonzero padding bits");
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

Graph parse_edge_list(std::string_view text, int max_n) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse, "edge list line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    std::string tok;
    while (fields >> tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("not an integer: '" + tok + "'");
      values.push_back(value);
    }
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 1) fail("first line must hold the vertex count");
      if (values[0] < 1) fail("vertex count must be positive");
      if (values[0] > max_n || values[0] > kHardMaxN) {
        throw Error(ErrorKind::SizeLimit, "edge list: n = " + std::to_string(values[0]) +
                                              " exceeds the configured maximum " + std::to_string(max_n));
      }
      n = static_cast<int>(values[0]);
      continue;
    }
    if (values.size() != 2) fail("expected 'u v'");
    const long u = values[0];
    const long v = values[1];
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw Error(ErrorKind::Parse, "edge list: missing vertex count");
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[v] = g.vertex_mask() & ~g.neighbors(v) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross, int max_n, const char* what) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n, max_n, what);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t low = bit(n1) - 1;
  const std::uint64_t high = (bit(n) - 1) & ~low;
  for (int v = 0; v < n1; ++v) rows[v] = g1.neighbors(v) | (cross ? high : 0);
  for (int v = 0; v < g2.order(); ++v) rows[n1 + v] = (g2.neighbors(v) << n1) | (cross ? low : 0);
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2, int max_n) { return combine(g1, g2, true, max_n, "join"); }

Graph disjoint_union(const Graph& g1, const Graph& g2, int max_n) {
  return combine(g1, g2, false, max_n, "disjoint_union");
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && g.adjacent(vertices[a], vertices[b])) rows[a] |= bit(b);
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  // perm[old] = new
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::InvalidArgument, "relabel: permutation size mismatch");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) rows[perm[u]] |= bit(perm[v]);
  return Graph::from_rows(std::move(rows));
}

Graph complete_multipartite(const MultipartiteSignature& sig, int max_n) {
  return complement(disjoint_cliques(sig, max_n));
}

Graph disjoint_cliques(const MultipartiteSignature& sig, int max_n) {
  check_order(sig.total(), max_n, "disjoint_cliques");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(sig.total()));
  int start = 0;
  for (int part : sig.parts()) {
    const std::uint64_t block = (bit(part) - 1) << start;
    for (int v = start; v < start + part; ++v) rows[v] = block & ~bit(v);
    start += part;
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    const int root = std::countr_zero(unseen);
    std::uint64_t comp = bit(root);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> verts;
    for (std::uint64_t c = comp; c; c &= c - 1) verts.push_back(std::countr_zero(c));
    out.push_back(std::move(verts));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::vector<std::vector<int>> complement_component_vertices(const Graph& g) {
  return connected_components(complement(g));
}

std::vector<Graph> complement_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& verts : complement_component_vertices(g)) out.push_back(induced_subgraph(g, verts));
  return out;
}

bool is_disjoint_clique_union(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    for (int v : comp)
      if (g.degree(v) != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) { return is_disjoint_clique_union(complement(g)); }

namespace {

// Colour refinement: returns an isomorphism-invariant colour per vertex,
// colours numbered 0..k-1 in canonical order.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u = 0; u < n; ++u)
        if (g.adjacent(u, v)) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> cell_of_position;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> placed;  // placed[pos] = vertex
  std::vector<std::uint64_t> block;
  std::vector<std::uint64_t> best_block;
  std::vector<int> best_placed;
  bool have_best = false;
  std::uint64_t updates = 0;
  std::uint64_t used = 0;

  void run(int pos, bool greater) {
    if (pos == n) {
      if (!have_best || greater) {
        best_block = block;
        best_placed = placed;
        have_best = true;
        ++updates;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U || colour[v] != cell_of_position[pos]) continue;
      std::uint64_t b = 0;
      for (int i = 0; i < pos; ++i) b = (b << 1) | (g.adjacent(placed[i], v) ? 1U : 0U);
      bool now_greater = greater;
      if (have_best && !greater) {
        if (b < best_block[pos]) continue;
        if (b > best_block[pos]) now_greater = true;
      }
      placed[pos] = v;
      block[pos] = b;
      used |= bit(v);
      const std::uint64_t before = updates;
      run(pos + 1, now_greater);
      used &= ~bit(v);
      // A new best below shares this prefix, so later siblings compare against it.
      if (updates != before) greater = false;
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  CanonicalSearch search{g, n, {}, refine_colours(g), std::vector<int>(n), std::vector<std::uint64_t>(n), {}, {}};
  search.cell_of_position = search.colour;
  std::sort(search.cell_of_position.begin(), search.cell_of_position.end());
  search.run(0, false);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) perm[search.best_placed[pos]] = pos;
  return relabel(g, perm);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int n) {
  check_order(n, kHardMaxN, "enumerate_graphs");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : level) {
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(m));
      for (std::uint64_t mask = 0; mask < bit(m - 1); ++mask) {
        for (int v = 0; v < m - 1; ++v) rows[v] = g.neighbors(v) | (((mask >> v) & 1U) ? bit(m - 1) : 0);
        rows[m - 1] = mask;
        Graph c = canonical_form(Graph::from_rows(rows));
        seen.try_emplace(to_graph6(c), c);
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  std::stable_sort(level.begin(), level.end(),
                   [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  return level;
}

}  // namespace twodist
