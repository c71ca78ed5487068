#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strucgraph/graph.hpp"

namespace strucgraph {

// ---- catalog ----------------------------------------------------------------

/// Looks up a named small graph. Names are case-insensitive ASCII:
///   p2..p7, c3..c7, k1..k5, 2k2, k2uk1, paw, diamond, gem, h1, h2,
///   q1..q5, f1..f3, petersen, and stars written "k1,N" (N >= 1).
/// Throws InputError for unknown names.
Graph catalog_lookup(std::string_view name);

/// Canonical spelling of every fixed catalog entry (stars excluded).
std::vector<std::string> catalog_names();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

// ---- induced embeddings -----------------------------------------------------

/// embedding[i] is the host vertex playing pattern vertex i.
using Embedding = std::vector<Vertex>;

/// True iff the map is injective and preserves adjacency and non-adjacency.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

/// Lexicographically least induced embedding of pattern into host, if any.
std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern);

/// Visits every induced embedding in lexicographic order until the visitor
/// returns false.
void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const Embedding&)>& visit);

std::size_t count_induced_embeddings(const Graph& host, const Graph& pattern);

/// Number of distinct induced copies (embeddings modulo pattern automorphisms).
std::size_t count_induced_copies(const Graph& host, const Graph& pattern);

// ---- forbidden families -----------------------------------------------------

enum class Family { L1, L2, C, D, F, H };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
/// Catalog names of the members, in the order they are tested.
const std::vector<std::string>& family_members(Family f);

struct Witness {
  std::string pattern;
  Embedding embedding;
};

struct Membership {
  bool is_free = true;
  std::optional<Witness> witness;
};

Membership family_membership(const Graph& g, Family f);

/// First listed pattern that embeds in g, if any.
std::optional<Witness> find_any_pattern(const Graph& g, const std::vector<std::string>& names);

inline bool contains_pattern(const Graph& g, std::string_view name) {
  return find_induced_embedding(g, catalog_lookup(name)).has_value();
}

}  // namespace strucgraph
