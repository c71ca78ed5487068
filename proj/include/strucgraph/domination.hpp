#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strucgraph/graph.hpp"
#include "strucgraph/recognition.hpp"

namespace strucgraph {

enum class DominatorKind { Split, CompleteSplit };

DominatorKind parse_dominator_kind(std::string_view name);
std::string_view dominator_kind_name(DominatorKind k);

struct DominationCertificate {
  VertexSet dominator;       // ascending
  DominatorKind kind = DominatorKind::Split;
  SplitPartition partition;  // in host vertex ids
  bool connected = false;
};

/// True iff every vertex outside d has a neighbor in d. Throws InputError
/// for an invalid vertex set.
bool dominating_check(const Graph& g, std::span<const Vertex> d);

/// Empty when the certificate is valid for g, otherwise the failed condition.
std::optional<std::string> certificate_violation(const Graph& g, const DominationCertificate& cert);

inline constexpr int kDominationExactMaxOrder = 16;

/// Minimum-cardinality connected dominating set inducing a split (or complete
/// split) graph; ties go to the lexicographically least set. nullopt proves
/// that none exists. Throws PreconditionError when g is disconnected and
/// BudgetExceeded above kDominationExactMaxOrder vertices.
std::optional<DominationCertificate> find_dominating_split(const Graph& g, DominatorKind kind);

struct ReductionOutcome {
  std::optional<DominationCertificate> certificate;
  bool stalled = false;       // a target pattern survived every move
  int moves = 0;
  VertexSet final_subgraph;   // H after pruning
  std::vector<std::string> log;
};

/// Pattern-elimination reducer: starting from H = V(g), removes induced
/// copies of C4, C5, H1, H2 (split) or C4, paw (complete split) by deleting
/// non-cut pattern vertices without private neighbors or attaching private
/// neighbors as leaves, always lowering the potential
/// (pattern counts..., -leaves). H is then pruned to deletion-minimal and
/// tested. Throws PreconditionError when g is disconnected.
ReductionOutcome proof_guided_reduce_detailed(const Graph& g, DominatorKind kind);

inline std::optional<DominationCertificate> proof_guided_reduce(const Graph& g, DominatorKind kind) {
  return proof_guided_reduce_detailed(g, kind).certificate;
}

/// No single vertex of d can be dropped while keeping G[d] connected and
/// dominating.
bool is_deletion_minimal(const Graph& g, std::span<const Vertex> d);

}  // namespace strucgraph
