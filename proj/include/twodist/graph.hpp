#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twodist {

// Exact arithmetic cost grows quickly with n; 16 keeps desk-scale runtimes.
inline constexpr int kDefaultMaxN = 16;
// Single-byte graph6 words and 64-bit adjacency rows cap the order.
inline constexpr int kHardMaxN = 62;

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as one bitmask row
/// per vertex. Immutable once constructed.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph from_rows(std::vector<std::uint64_t> rows);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbors(int v) const { return rows_[v]; }
  std::uint64_t vertex_mask() const noexcept;
  int degree(int v) const;
  int edge_count() const;
  std::vector<Edge> edges() const;

  bool is_complete() const;
  bool is_edgeless() const { return edge_count() == 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  std::vector<std::uint64_t> rows_;
};

/// Parts n_1 >= ... >= n_m >= 1 of a complete multipartite graph (or of a
/// disjoint union of cliques, its complement).
class MultipartiteSignature {
 public:
  explicit MultipartiteSignature(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept { return total_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

Graph parse_graph6(std::string_view text, int max_n = kDefaultMaxN);
std::string to_graph6(const Graph& g);

/// First significant line "n", then "u v" per edge (0-based); '#' starts a comment.
Graph parse_edge_list(std::string_view text, int max_n = kDefaultMaxN);

Graph complement(const Graph& g);
/// g1's vertices first, then g2's, plus every cross edge.
Graph join(const Graph& g1, const Graph& g2, int max_n = kDefaultMaxN);
Graph disjoint_union(const Graph& g1, const Graph& g2, int max_n = kDefaultMaxN);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph relabel(const Graph& g, std::span<const int> perm);

Graph complete_multipartite(const MultipartiteSignature& sig, int max_n = kDefaultMaxN);
/// Disjoint union of cliques K_{n_1} + ... + K_{n_m}.
Graph disjoint_cliques(const MultipartiteSignature& sig, int max_n = kDefaultMaxN);

/// Connected components of the graph, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of the components of the complement, ordered by smallest vertex.
std::vector<std::vector<int>> complement_component_vertices(const Graph& g);
/// Induced subgraphs on complement components; these are the join-prime factors.
std::vector<Graph> complement_components(const Graph& g);

bool is_disjoint_clique_union(const Graph& g);
bool is_complete_multipartite(const Graph& g);

/// Canonical relabelling: isomorphic graphs map to identical graphs.
/// Exhaustive within colour-refinement cells; intended for small n.
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// All graphs on n vertices up to isomorphism, in a deterministic order.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace twodist
