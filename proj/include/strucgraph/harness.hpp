#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "strucgraph/graph.hpp"
#include "strucgraph/patterns.hpp"

namespace strucgraph {

// ---- corpora ------------------------------------------------------------------

inline constexpr int kEnumerationMaxOrder = 8;

/// One representative per isomorphism class on exactly n vertices, each in
/// canonical labeling, sorted by canonical code. Throws InputError for n
/// outside 0..kEnumerationMaxOrder.
const std::vector<Graph>& enumerate_small_graphs(int n, bool connected_only);

/// Canonical code for n <= 8: the largest upper-triangle bit string over all
/// relabelings compatible with color refinement. Equal codes iff isomorphic.
std::uint32_t canonical_code(const Graph& g);

/// Each pair {i, j}, i < j in ascending order, is present when the next
/// mt19937_64 draw x satisfies (x >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

struct RandomCorpus {
  std::vector<Graph> graphs;
  long attempts = 0;
};

/// Rejection sampling of connected family-free graphs with n in {9, 10}
/// (alternating) and edge probability drawn per attempt.
RandomCorpus filtered_random_graphs(Family family, int count, std::uint64_t seed);

// ---- campaigns ----------------------------------------------------------------

struct CampaignParams {
  int max_n = 8;              // exhaustive corpus bound
  std::uint64_t seed = 1;     // random corpus seed
  int samples = 1000;         // random corpus size (where applicable)
  int threads = 0;            // 0 = hardware concurrency
  bool timing = false;        // include duration_ms in the report
};

struct Exhibit {
  std::string graph6;
  std::string diagnostic;
  friend auto operator<=>(const Exhibit&, const Exhibit&) = default;
};

struct CorpusInfo {
  int min_n = 0;
  int max_n = 0;
  std::vector<std::string> filters;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string description;
};

struct CampaignReport {
  std::string campaign;
  CorpusInfo corpus;
  long checked = 0;
  long passed = 0;
  long failed = 0;
  std::vector<Exhibit> failures;  // sorted
  std::vector<std::string> notes;  // triage notes (sorted); never failures
  std::optional<long> duration_ms;
};

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json report_to_json(const CampaignReport& r);

const std::vector<std::string>& campaign_names();

/// Runs a named campaign. Throws InputError for an unknown name.
CampaignReport run_campaign(std::string_view name, const CampaignParams& params);

struct GraphCheck {
  std::optional<std::string> failure;  // diagnostic
  std::vector<std::string> notes;
};

/// The per-graph check a campaign applies, so a failure exhibit can be
/// re-run in isolation. Throws InputError for an unknown campaign.
GraphCheck check_graph(std::string_view campaign, const Graph& g);

/// Per-item check of the blowup-color campaign.
GraphCheck check_blowup_weights(const std::array<int, 10>& weights);

/// Chromatic number by plain backtracking over vertices in index order,
/// trying k = lower.. colors. Independent of the branch-and-bound solver and
/// used as the reference in campaigns. Intended for graphs up to ~30 vertices.
int reference_chromatic_number(const Graph& g);

}  // namespace strucgraph
