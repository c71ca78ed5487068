#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call the library's search code; they work on raw adjacency.

#include <cstdint>
#include <optional>
#include <vector>

#include "strucgraph/graph.hpp"

namespace oracle {

using strucgraph::Graph;
using strucgraph::VertexSet;

// Adjacency matrix copy so the oracles do not depend on library queries
// beyond adjacent().
struct Adj {
  explicit Adj(const Graph& g);
  int n;
  std::vector<std::vector<char>> a;
  bool operator()(int u, int v) const { return a[u][v] != 0; }
};

bool clique(const Adj& g, std::uint32_t mask);
bool stable(const Adj& g, std::uint32_t mask);
bool connected(const Adj& g, std::uint32_t mask);
bool dominating(const Adj& g, std::uint32_t mask);

/// Induced containment by trying every ordered choice of host vertices.
bool contains_induced(const Graph& host, const Graph& pattern);
/// Number of induced embeddings (ordered) by the same enumeration.
long count_embeddings(const Graph& host, const Graph& pattern);

/// Some clique K with V \ K stable, over all 2^n subsets.
bool is_split(const Graph& g);
/// Some clique K with V \ K stable and complete to K.
bool is_complete_split(const Graph& g);

int clique_number(const Graph& g);

/// Chromatic number by inclusion-exclusion over independent-set counts
/// (modular arithmetic, two primes). Works up to about 22 vertices.
int chromatic_number(const Graph& g);

/// Smallest connected dominating set inducing a split (complete split)
/// graph, tested with is_split / is_complete_split on the induced subgraph.
std::optional<VertexSet> min_dominating_split(const Graph& g, bool complete);

/// Whether some clique K separates g (more components after removal).
bool has_clique_cutset(const Graph& g);
/// Smallest size of a clique cutset, or -1.
int min_clique_cutset_size(const Graph& g);

/// N(v) is a union of two cliques, by trying every 2-partition.
bool is_bisimplicial(const Graph& g, int v);

/// Number of unlabeled graphs on n vertices (Burnside over S_n).
std::uint64_t count_graphs(int n);
/// Number of connected unlabeled graphs, by the inverse Euler transform.
std::uint64_t count_connected_graphs(int n);

/// Isomorphism by trying all n! bijections (n <= 9).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace oracle
