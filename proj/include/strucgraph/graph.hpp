#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strucgraph {

using Vertex = int;

// Dense bit rows cost n^2/8 bytes; larger inputs are rejected up front.
inline constexpr int kMaxVertices = 20000;

// Vertex indices into a specific Graph. Operations that take a VertexSet
// require valid, duplicate-free indices; order is significant only where
// documented (induced_subgraph).
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is kept both as sorted neighbor
/// lists (for iteration in ascending order) and as bit rows (for O(1)
/// adjacency tests), so copies are cheap enough for the desk-scale graphs
/// this library targets.
class Graph {
 public:
  Graph() : Graph(0) {}

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InputError on loops, out-of-range endpoints or repeated edges;
  /// the message names the offending edge position.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Neighborhood as a bitmask. Only meaningful when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return rows_[static_cast<std::size_t>(v) * words_]; }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Returns a copy carrying the given vertex labels (size must equal order()).
  Graph with_labels(std::vector<std::string> labels) const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void add_edge_unchecked(Vertex u, Vertex v);

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

// ---- construction and text formats ----------------------------------------

/// Decodes a graph6 string (optionally prefixed by ">>graph6<<").
/// Throws InputError with the offending byte position.
Graph from_graph6(std::string_view text);

/// Encodes in graph6 (column-major upper triangle, 6 bits per byte, zero padded).
std::string to_graph6(const Graph& g);

/// Parses "n m" followed by m lines "u v".
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Accepts either format: a first token that is a decimal number selects the
/// edge-list reader, anything else is read as graph6.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// ---- basic queries ---------------------------------------------------------

/// Throws InputError unless every index is in range and distinct.
void validate_vertex_set(const Graph& g, std::span<const Vertex> s);

struct InducedSubgraph {
  Graph graph;
  // mapping[i] is the host vertex that became vertex i.
  VertexSet mapping;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Induced subgraph on V(g) minus the given vertices (kept in ascending order).
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

struct Components {
  std::vector<VertexSet> components;  // each ascending; ordered by least vertex
  bool is_connected = false;          // exactly one component
};

Components connectivity(const Graph& g);

/// Components of g with some vertices deleted; vertex ids stay those of g.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

bool is_connected(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> x);
bool is_stable(const Graph& g, std::span<const Vertex> x);
bool is_complete_between(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);
bool is_anticomplete_between(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);
/// N(X): vertices outside X with a neighbor in X, ascending.
VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> x);

struct SetQueries {
  bool is_clique = false;
  bool is_stable = false;
  bool is_complete_between = false;
  bool is_anticomplete_between = false;
  VertexSet neighborhood_of_set;
};

/// All set predicates at once. Throws InputError when x and y overlap.
SetQueries set_queries(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

std::ostream& operator<<(std::ostream& os, const Graph& g);

}  // namespace strucgraph
