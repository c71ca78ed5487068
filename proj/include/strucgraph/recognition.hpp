#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strucgraph/graph.hpp"
#include "strucgraph/patterns.hpp"

namespace strucgraph {

struct SplitPartition {
  VertexSet clique;  // ascending
  VertexSet stable;  // ascending
};

/// Checks disjointness, coverage, clique/stable-ness and, when
/// require_complete is set, that stable is complete to clique.
bool is_valid_split_partition(const Graph& g, const SplitPartition& p, bool require_complete = false);

/// A split partition of g, or nullopt when g is not split.
///
/// Starts from the maximum clique returned by clique_number(); if the rest is
/// not stable, tries the single swap that can repair it (the outside vertex
/// covering every outside edge trades places with one clique vertex).
std::optional<SplitPartition> split_partition(const Graph& g);

/// A partition with the stable side complete to the clique side, or nullopt.
/// The clique side is the set of universal vertices.
std::optional<SplitPartition> complete_split_partition(const Graph& g);

/// Assignment of the vertices of g to (possibly empty) clique bags indexed by
/// the vertices of a template graph.
struct BlowupPartition {
  Graph base;
  std::vector<VertexSet> bags;  // bags[i] ascending, one per base vertex
};

/// Empty when p is a valid blowup partition of g, otherwise a description of
/// the first violated condition. With require_cover unset the bags only need
/// to be disjoint (a blowup contained in g rather than equal to it).
std::optional<std::string> blowup_violation(const Graph& g, const BlowupPartition& p,
                                            bool require_cover = true);
inline bool is_valid_blowup(const Graph& g, const BlowupPartition& p) { return !blowup_violation(g, p); }

/// Recognizes blowups of the Petersen graph by quotienting g by the
/// "equal closed neighborhood" relation and embedding the quotient in the
/// Petersen graph (lexicographically least embedding).
std::optional<BlowupPartition> petersen_blowup_partition(const Graph& g);

/// The blowup of base in which vertex i becomes a clique of weights[i]
/// consecutive vertices (bags in base-vertex order).
struct Blowup {
  Graph graph;
  BlowupPartition partition;
};
Blowup build_blowup(const Graph& base, std::span<const int> weights);

/// All 120 automorphisms of the Petersen graph as vertex maps, lexicographic.
const std::vector<Embedding>& petersen_automorphisms();

}  // namespace strucgraph
