#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strucgraph/graph.hpp"
#include "strucgraph/patterns.hpp"
#include "strucgraph/recognition.hpp"

namespace strucgraph {

// ---- structure cases --------------------------------------------------------

struct CliqueCutsetCase {
  VertexSet cutset;
};

struct BisimplicialCase {
  Vertex vertex = -1;
  VertexSet clique1;
  VertexSet clique2;  // may be empty
};

struct PetersenBlowupCase {
  BlowupPartition partition;
};

struct PetersenGraphCase {};

struct LowDegreeCase {
  Vertex vertex = -1;
  int degree = 0;
  int bound = 0;  // omega(g), or 2 when g contains an induced C6
};

using StructureCase =
    std::variant<CliqueCutsetCase, BisimplicialCase, PetersenBlowupCase, PetersenGraphCase, LowDegreeCase>;

std::string_view case_name(const StructureCase& c);

/// Empty when the witness carried by c is valid for g.
std::optional<std::string> structure_case_violation(const Graph& g, const StructureCase& c);

// ---- cutsets and bisimplicial vertices ----------------------------------------

/// All minimal separators of g (each ascending), sorted by size then
/// lexicographically.
std::vector<VertexSet> minimal_separators(const Graph& g);

/// Smallest (then lexicographically least) clique cutset of a connected
/// graph; nullopt proves none exists. Throws PreconditionError when g is
/// disconnected.
std::optional<VertexSet> find_clique_cutset(const Graph& g);

/// Whether v's neighborhood is a union of two cliques; the cover comes from a
/// 2-coloring of the complement of G[N(v)].
std::optional<BisimplicialCase> bisimplicial_cover(const Graph& g, Vertex v);

/// Least-index bisimplicial vertex, if any.
std::optional<BisimplicialCase> find_bisimplicial_vertex(const Graph& g);

// ---- C6 machinery -------------------------------------------------------------

/// Greedy max-blowup of C6 seeded by an induced C6 (c6[i] lands in bag i).
/// Throws InputError when c6 is not an induced C6 embedding.
BlowupPartition max_blowup_c6(const Graph& g, const Embedding& c6);

/// Empty when a is a blowup of C6 contained in g that no outside vertex can
/// extend.
std::optional<std::string> max_blowup_violation(const Graph& g, const BlowupPartition& a);

/// Neighborhood partition around a max-blowup A of C6. Indices are 0-based
/// mod 6; z[i] holds Z_i = Z_{i+3} for i in 0..2.
struct C6Partition {
  BlowupPartition a;
  std::array<VertexSet, 6> x;  // neighbors exactly in A_i and A_{i+1}
  std::array<VertexSet, 6> y;  // neighbors exactly in A_i
  std::array<VertexSet, 3> z;  // neighbors exactly in A_i and A_{i+3}
  VertexSet r;                 // no neighbor in A
};

/// Throws PreconditionError naming the first vertex that fits no class.
C6Partition c6_neighborhood_partition(const Graph& g, const BlowupPartition& a);

struct C6Guards {
  bool f1_free = false;
  bool f2_free = false;
};

/// Every violated C6 partition property, each prefixed by its tag
/// ("max", "a" ... "e", "f1", "g"). The F1/F2 conditional properties are
/// only checked when the matching guard is set.
std::vector<std::string> c6_partition_violations(const Graph& g, const C6Partition& p, C6Guards guards);

// ---- C5 machinery -------------------------------------------------------------

struct C5Partition {
  std::array<Vertex, 5> cycle{};
  std::array<VertexSet, 5> x;  // N_C(v) = {a_i, a_{i+1}}
  std::array<VertexSet, 5> y;  // N_C(v) = {a_i}
  VertexSet b;                 // N(C)
  VertexSet r;                 // rest
};

/// Throws InputError for an invalid embedding and PreconditionError for a
/// vertex whose cycle neighborhood fits no class.
C5Partition c5_neighborhood_partition(const Graph& g, const Embedding& c5);

/// Violated facts, tagged "1", "2" or "3".
std::vector<std::string> c5_partition_violations(const Graph& g, const C5Partition& p);

// ---- structure theorems -------------------------------------------------------

/// Case analysis for connected (P7, C7, C4, gem)-free graphs: clique cutset,
/// then bisimplicial vertex, then Petersen blowup. Throws PreconditionError
/// for disconnected or non-free input and TheoremViolation if no case fits.
StructureCase structure_case_gem(const Graph& g);

/// Same search without the precondition scan.
StructureCase classify_gem_free(const Graph& g);

/// Case analysis for connected (P7, C7, C4, diamond)-free graphs: Petersen
/// graph, then clique cutset, then a vertex of degree at most omega (at most
/// 2 when g has an induced C6).
StructureCase structure_case_diamond(const Graph& g);

StructureCase classify_diamond_free(const Graph& g);

}  // namespace strucgraph
