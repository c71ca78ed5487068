#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strucgraph/graph.hpp"
#include "strucgraph/recognition.hpp"

namespace strucgraph {

// ---- exact oracles ----------------------------------------------------------

struct CliqueResult {
  int omega = 0;
  VertexSet witness;  // a maximum clique, ascending
};

/// Maximum clique by branch and bound with greedy-coloring bounds.
CliqueResult clique_number(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  std::vector<int> colors;  // 0-based, proper, uses exactly chi colors
};

inline constexpr int kChromaticExactMaxOrder = 16;

/// Exact chromatic number by DSATUR branch and bound.
/// Throws BudgetExceeded above kChromaticExactMaxOrder vertices.
ChromaticResult chromatic_number_exact(const Graph& g);

// ---- certificates -----------------------------------------------------------

enum class BoundKind {
  TwoOmegaMinusOne,   // 2*omega - 1
  OmegaPlusOne,       // omega + 1
  FiveQuarterOmega,   // ceil(5*omega / 4)
  Exact,              // no clique bound; the count itself is declared
};

std::string_view bound_kind_name(BoundKind k);

/// Bound value for a clique of the given size.
int declared_bound(BoundKind kind, int omega);

struct TraceStep {
  enum class Kind { CutsetMerge, VertexExtension, BlowupBase, PetersenBase, ComponentUnion, ExactBase };
  Kind kind;
  VertexSet vertices;  // host vertices the step concerns (cutset, extended vertex, ...)
  std::string note;    // local justification, e.g. "deg 3 <= 2*omega-2 = 4"
};

std::string_view trace_kind_name(TraceStep::Kind k);

struct ColoringCertificate {
  std::vector<int> colors;
  int color_count = 0;
  VertexSet clique_witness;
  BoundKind bound = BoundKind::Exact;
  std::vector<TraceStep> trace;
};

/// Proper, colors in [0, color_count), witness a clique, and color_count
/// within the bound computed from the witness size. Independent of how the
/// certificate was produced.
bool verify_coloring(const Graph& g, const ColoringCertificate& cert);

// ---- certified algorithms ---------------------------------------------------

struct StableSetCover {
  // Petersen stable sets (ascending vertex lists) with multiplicities.
  std::vector<std::pair<VertexSet, int>> classes;
  int count = 0;
  int omega = 0;  // max over single bags and Petersen edges of the weight sum
};

/// Minimum multiset of Petersen stable sets covering vertex i at least
/// weights[i] times. Throws TheoremViolation if the count exceeds
/// ceil(5*omega/4).
StableSetCover color_petersen_blowup(const std::array<int, 10>& weights);

/// Expands a cover into a proper coloring of the blowup described by p.
std::vector<int> expand_cover(const Graph& g, const BlowupPartition& p, const StableSetCover& cover);

/// Colors a (P7, C7, C4, gem)-free graph with at most 2*omega - 1 colors.
/// Throws PreconditionError (with witness) otherwise.
ColoringCertificate color_gem_free_certified(const Graph& g);

/// Colors a (P7, C7, C4, diamond)-free graph with at most omega + 1 colors.
ColoringCertificate color_diamond_free_certified(const Graph& g);

/// Certificate wrapping chromatic_number_exact.
ColoringCertificate color_exact(const Graph& g);

/// The stored proper 3-coloring of petersen_graph().
const std::array<int, 10>& petersen_three_coloring();

}  // namespace strucgraph
