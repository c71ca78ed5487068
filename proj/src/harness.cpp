#include "strucgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "strucgraph/coloring.hpp"
#include "strucgraph/decomposition.hpp"
#include "strucgraph/domination.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/recognition.hpp"

namespace strucgraph {

// ---- canonical form and enumeration ------------------------------------------------

namespace {

// Color refinement: iterated (color, sorted neighbor colors) signatures,
// ranked so the result depends only on the isomorphism class.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

struct Canonical {
  std::uint32_t code = 0;
  std::vector<Vertex> order;  // order[p] = vertex placed at position p
};

// Bits are laid out column by column (pairs (0,1), (0,2), (1,2), (0,3), ...),
// most significant first, so each placed position fixes a prefix.
Canonical canonicalize(const Graph& g) {
  const int n = g.order();
  if (n > kEnumerationMaxOrder) throw InputError("canonical form limited to 8 vertices");
  const int total = n * (n - 1) / 2;
  const std::vector<int> color = refined_colors(g);
  std::vector<int> cell_of_position;
  {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position = sorted;
  }
  Canonical best;
  bool have_best = false;
  std::vector<Vertex> order(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int p, std::uint32_t prefix, int bits, bool better) -> void {
    if (p == n) {
      if (!have_best || prefix > best.code) {
        best.code = prefix;
        best.order = order;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || color[v] != cell_of_position[p]) continue;
      std::uint32_t next = prefix;
      for (int i = 0; i < p; ++i) next = (next << 1) | (g.adjacent(order[i], v) ? 1u : 0u);
      const int next_bits = bits + p;
      bool next_better = better;
      if (have_best && !better) {
        const std::uint32_t best_prefix = best.code >> (total - next_bits);
        if (next < best_prefix) continue;
        if (next > best_prefix) next_better = true;
      }
      used[v] = 1;
      order[p] = v;
      self(self, p + 1, next, next_bits, next_better);
      used[v] = 0;
    }
  };
  rec(rec, 0, 0, 0, false);
  return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
  std::sort(es.begin(), es.end());
  return Graph(g.order(), es);
}

std::vector<Graph> build_level(const std::vector<Graph>& previous, int n) {
  std::map<std::uint32_t, Graph> seen;
  for (const Graph& base : previous) {
    const std::vector<Edge> base_edges = base.edges();
    for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
      std::vector<Edge> es = base_edges;
      for (int i = 0; i < n - 1; ++i)
        if (nb >> i & 1u) es.emplace_back(i, n - 1);
      const Graph g(n, es);
      const Canonical c = canonicalize(g);
      if (!seen.count(c.code)) seen.emplace(c.code, relabel(g, c.order));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::uint32_t canonical_code(const Graph& g) { return canonicalize(g).code; }

const std::vector<Graph>& enumerate_small_graphs(int n, bool connected_only) {
  if (n < 0 || n > kEnumerationMaxOrder)
    throw InputError("enumeration supports 0.." + std::to_string(kEnumerationMaxOrder) + " vertices, got " +
                     std::to_string(n));
  static std::mutex mutex;
  static std::array<std::optional<std::vector<Graph>>, kEnumerationMaxOrder + 1> all;
  static std::array<std::optional<std::vector<Graph>>, kEnumerationMaxOrder + 1> connected;
  std::lock_guard lock(mutex);
  if (!all[0]) all[0] = std::vector<Graph>{Graph(0)};
  for (int k = 1; k <= n; ++k)
    if (!all[k]) all[k] = build_level(*all[k - 1], k);
  if (!connected_only) return *all[n];
  if (!connected[n]) {
    std::vector<Graph> out;
    for (const Graph& g : *all[n])
      if (is_connected(g)) out.push_back(g);
    connected[n] = std::move(out);
  }
  return *connected[n];
}

// ---- random graphs -------------------------------------------------------------------

namespace {

double unit(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (n < 0) throw InputError("vertex count must be non-negative");
  std::mt19937_64 gen(seed);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(gen) < p) es.emplace_back(i, j);
  return Graph(n, es);
}

RandomCorpus filtered_random_graphs(Family family, int count, std::uint64_t seed) {
  RandomCorpus out;
  std::mt19937_64 master(seed);
  const long cap = 200000L * std::max(count, 1);
  while (static_cast<int>(out.graphs.size()) < count && out.attempts < cap) {
    ++out.attempts;
    const int n = 9 + static_cast<int>(out.graphs.size() % 2);
    const double p = 0.15 + 0.7 * unit(master);
    Graph g = random_graph(n, p, master());
    if (is_connected(g) && family_membership(g, family).is_free) out.graphs.push_back(std::move(g));
  }
  return out;
}

// ---- reference chromatic number -------------------------------------------------------

namespace {

bool colorable(const Graph& g, int k, std::vector<int>& colors, Vertex v, int used) {
  if (v == g.order()) return true;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v)) {
      const auto u = static_cast<std::size_t>(w);
      if (u < static_cast<std::size_t>(v) && colors[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colors[v] = c;
    if (colorable(g, k, colors, v + 1, std::max(used, c + 1))) return true;
  }
  colors[v] = -1;
  return false;
}

}  // namespace

int reference_chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  for (int k = 1;; ++k)
    if (colorable(g, k, colors, 0, 0)) return k;
}

// ---- per-graph checks -------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && find_induced_embedding(a, b).has_value();
}

bool is_petersen(const Graph& g) { return isomorphic(g, petersen_graph()); }

std::optional<std::string> require_class(const Graph& g, Family f) {
  if (!is_connected(g)) return "not connected";
  const Membership m = family_membership(g, f);
  if (!m.is_free)
    return "contains " + m.witness->pattern + " (outside the " + std::string(family_name(f)) + "-free class)";
  return std::nullopt;
}

GraphCheck check_lemma(const Graph& g, bool complete) {
  const Family f = complete ? Family::L2 : Family::L1;
  const auto p = complete ? complete_split_partition(g) : split_partition(g);
  const Membership m = family_membership(g, f);
  if (p && !is_valid_split_partition(g, *p, complete)) return {"returned partition does not validate", {}};
  if (p.has_value() != m.is_free) {
    std::string why = std::string(complete ? "complete-split" : "split") + " recognition says " +
                      (p ? "yes" : "no") + " but " + std::string(family_name(f)) + "-freeness says " +
                      (m.is_free ? "free" : "not free");
    if (m.witness) why += " (witness " + m.witness->pattern + ")";
    return {why, {}};
  }
  return {};
}

// Deletion-minimal connected dominating sets inducing a P5 (notes only).
std::vector<std::string> minimal_dominating_exceptions(const Graph& g) {
  std::vector<std::string> out;
  const int n = g.order();
  if (n > 12) return out;
  const Graph p5 = path_graph(5);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet d;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) d.push_back(v);
    if (!dominating_check(g, d) || !is_connected(induced_subgraph(g, d).graph)) continue;
    if (!is_deletion_minimal(g, d)) continue;
    if (find_induced_embedding(induced_subgraph(g, d).graph, p5))
      out.push_back("deletion-minimal connected dominating set " + set_text(d) + " of " + to_graph6(g) +
                    " induces P5");
  }
  return out;
}

GraphCheck check_domination_forward(const Graph& g, DominatorKind kind) {
  const Family family = kind == DominatorKind::Split ? Family::C : Family::D;
  if (auto why = require_class(g, family)) return {"precondition: " + *why, {}};
  GraphCheck out;
  const auto cert = find_dominating_split(g, kind);
  if (!cert) return {"no dominating induced connected " + std::string(dominator_kind_name(kind)) + " subgraph", {}};
  if (auto why = certificate_violation(g, *cert)) return {"exhaustive certificate invalid: " + *why, {}};

  const ReductionOutcome red = proof_guided_reduce_detailed(g, kind);
  if (red.certificate) {
    if (auto why = certificate_violation(g, *red.certificate))
      return {"proof-guided certificate invalid: " + *why, {}};
    if (!is_deletion_minimal(g, red.certificate->dominator))
      return {"proof-guided dominator " + set_text(red.certificate->dominator) + " is not deletion-minimal", {}};
  } else {
    out.notes.push_back("proof-guided " + std::string(dominator_kind_name(kind)) + " stall on " + to_graph6(g) +
                        ": " + (red.log.empty() ? std::string("no moves") : red.log.back()));
  }

  if (kind == DominatorKind::Split) {
    auto extra = minimal_dominating_exceptions(g);
    out.notes.insert(out.notes.end(), extra.begin(), extra.end());
  }

  const int n = g.order();
  if (n <= 7) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet s;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
      const InducedSubgraph sub = induced_subgraph(g, s);
      if (!is_connected(sub.graph)) continue;
      if (!find_dominating_split(sub.graph, kind))
        return {"connected induced subgraph " + set_text(s) + " (" + to_graph6(sub.graph) +
                    ") has no dominating induced connected " + std::string(dominator_kind_name(kind)) + " subgraph",
                {}};
    }
  }
  return out;
}

GraphCheck check_domination_reverse(const Graph& g, DominatorKind kind) {
  if (!is_connected(g)) return {"precondition: not connected", {}};
  if (auto cert = find_dominating_split(g, kind))
    return {"dominated by " + std::string(dominator_kind_name(kind)) + " subgraph " + set_text(cert->dominator), {}};
  if (auto red = proof_guided_reduce(g, kind))
    return {"proof-guided reducer produced " + set_text(red->dominator) + " where none exists", {}};
  return {};
}

GraphCheck check_thm6(const Graph& g) {
  if (auto why = require_class(g, Family::F)) return {"precondition: " + *why, {}};
  const Graph c6 = cycle_graph(6);
  const C6Guards guards{!contains_pattern(g, "f1"), !contains_pattern(g, "f2")};
  std::optional<std::string> failure;
  bool any = false;
  for_each_induced_embedding(g, c6, [&](const Embedding& e) {
    any = true;
    const BlowupPartition a = max_blowup_c6(g, e);
    if (auto why = max_blowup_violation(g, a)) {
      failure = "C6 " + set_text(e) + ": max-blowup " + *why;
      return false;
    }
    try {
      const C6Partition p = c6_neighborhood_partition(g, a);
      const auto bad = c6_partition_violations(g, p, guards);
      if (!bad.empty()) {
        failure = "C6 " + set_text(e) + ": " + join(bad);
        return false;
      }
    } catch (const PreconditionError& ex) {
      failure = "C6 " + set_text(e) + ": " + ex.what();
      return false;
    }
    return true;
  });
  if (!any) return {"precondition: no induced C6", {}};
  return {failure, {}};
}

GraphCheck check_thm7(const Graph& g) {
  if (auto why = require_class(g, Family::F)) return {"precondition: " + *why, {}};
  const bool has_f1 = contains_pattern(g, "f1");
  const bool has_f2 = contains_pattern(g, "f2");
  if (!has_f1 && !has_f2) return {"precondition: contains neither F1 nor F2", {}};
  const bool bisimplicial = find_bisimplicial_vertex(g).has_value();
  if (has_f1 && !bisimplicial) return {"contains F1 but has no bisimplicial vertex", {}};
  if (has_f2 && !bisimplicial && !find_clique_cutset(g))
    return {"contains F2 but has neither a clique cutset nor a bisimplicial vertex", {}};
  return {};
}

GraphCheck check_thm10(const Graph& g) {
  if (auto why = require_class(g, Family::F)) return {"precondition: " + *why, {}};
  const StructureCase c = structure_case_gem(g);
  if (auto why = structure_case_violation(g, c)) return {std::string(case_name(c)) + " witness invalid: " + *why, {}};
  if (is_petersen(g) && !std::holds_alternative<PetersenBlowupCase>(c))
    return {"Petersen graph classified as " + std::string(case_name(c)), {}};
  if (!contains_pattern(g, "c6") && !find_bisimplicial_vertex(g))
    return {"even-hole-free graph without a bisimplicial vertex", {}};
  return {};
}

GraphCheck check_coloring(const Graph& g, bool gem) {
  if (auto why = require_class(g, gem ? Family::F : Family::H)) return {"precondition: " + *why, {}};
  const ColoringCertificate cert = gem ? color_gem_free_certified(g) : color_diamond_free_certified(g);
  if (!verify_coloring(g, cert)) return {"certificate does not verify", {}};
  const int omega = clique_number(g).omega;
  if (static_cast<int>(cert.clique_witness.size()) != omega) return {"clique witness is not maximum", {}};
  const int limit = gem ? 2 * omega - 1 : omega + 1;
  if (cert.color_count > limit)
    return {std::to_string(cert.color_count) + " colors exceed bound " + std::to_string(limit), {}};
  const int chi = chromatic_number_exact(g).chi;
  if (chi != reference_chromatic_number(g)) return {"exact chromatic solvers disagree", {}};
  if (chi > cert.color_count)
    return {"coloring with " + std::to_string(cert.color_count) + " colors below chi = " + std::to_string(chi), {}};
  if (is_petersen(g) && cert.color_count != 3)
    return {"Petersen colored with " + std::to_string(cert.color_count) + " colors, expected 3", {}};
  return {};
}

std::optional<std::string> thm14_disjunction(const Graph& g) {
  if (find_clique_cutset(g)) return std::nullopt;
  const int omega = clique_number(g).omega;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= omega) return std::nullopt;
  return "neither a clique cutset nor a vertex of degree <= omega = " + std::to_string(omega);
}

GraphCheck check_thm14(const Graph& g) {
  if (auto why = require_class(g, Family::H)) return {"precondition: " + *why, {}};
  if (contains_pattern(g, "c6")) return {"precondition: contains C6", {}};
  std::optional<std::string> failure;
  bool any = false;
  for_each_induced_embedding(g, cycle_graph(5), [&](const Embedding& e) {
    any = true;
    try {
      const auto bad = c5_partition_violations(g, c5_neighborhood_partition(g, e));
      if (!bad.empty()) failure = "C5 " + set_text(e) + ": " + join(bad);
    } catch (const PreconditionError& ex) {
      failure = "C5 " + set_text(e) + ": " + ex.what();
    }
    return !failure;
  });
  if (!any) return {"precondition: no induced C5", {}};
  if (failure) return {failure, {}};
  return {thm14_disjunction(g), {}};
}

GraphCheck check_thm15(const Graph& g) {
  if (auto why = require_class(g, Family::H)) return {"precondition: " + *why, {}};
  const StructureCase c = structure_case_diamond(g);
  if (auto why = structure_case_violation(g, c)) return {std::string(case_name(c)) + " witness invalid: " + *why, {}};
  const bool has_c6 = contains_pattern(g, "c6");
  if (auto* low = std::get_if<LowDegreeCase>(&c); low && has_c6 && low->bound != 2)
    return {"graph with induced C6 got low-degree bound " + std::to_string(low->bound), {}};
  if (is_petersen(g) && !std::holds_alternative<PetersenGraphCase>(c))
    return {"Petersen graph classified as " + std::string(case_name(c)), {}};
  if (!has_c6 && contains_pattern(g, "c5"))
    if (auto why = thm14_disjunction(g)) return {"C5-containing C6-free graph has " + *why, {}};
  return {};
}

GraphCheck check_q(const Graph& g) {
  for (const char* bad : {"p7", "c7"})
    if (contains_pattern(g, bad)) return {std::string("contains ") + bad, {}};
  bool matched = false;
  for (int i = 1; i <= 5; ++i) {
    const std::string name = "q" + std::to_string(i);
    if (!isomorphic(g, catalog_lookup(name))) continue;
    matched = true;
    if (i <= 4)
      if (auto c = find_dominating_split(g, DominatorKind::Split))
        return {name + " is dominated by split subgraph " + set_text(c->dominator), {}};
    if (i == 2 || i == 5)
      if (auto c = find_dominating_split(g, DominatorKind::CompleteSplit))
        return {name + " is dominated by complete split subgraph " + set_text(c->dominator), {}};
  }
  if (!matched) return {"precondition: not isomorphic to any Q graph", {}};
  return {};
}

std::string weights_text(const std::array<int, 10>& w) {
  std::string out = "[";
  for (int i = 0; i < 10; ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "]";
}

}  // namespace

GraphCheck check_blowup_weights(const std::array<int, 10>& weights) {
  const std::string tag = "weights " + weights_text(weights) + ": ";
  const Graph base = petersen_graph();
  const StableSetCover cover = color_petersen_blowup(weights);
  const Blowup b = build_blowup(base, weights);
  const std::vector<int> colors = expand_cover(b.graph, b.partition, cover);
  for (auto [u, v] : b.graph.edges())
    if (colors[u] == colors[v]) return {tag + "expanded cover is not a proper coloring", {}};
  for (int c : colors)
    if (c < 0 || c >= cover.count) return {tag + "expanded cover uses a color outside the cover", {}};
  const int limit = declared_bound(BoundKind::FiveQuarterOmega, cover.omega);
  if (cover.count > limit)
    return {tag + std::to_string(cover.count) + " classes exceed ceil(5*omega/4) = " + std::to_string(limit), {}};
  if (cover.omega != clique_number(b.graph).omega) return {tag + "weighted omega differs from blowup clique number", {}};
  const int chi = reference_chromatic_number(b.graph);
  if (cover.count != chi)
    return {tag + "cover uses " + std::to_string(cover.count) + " classes, brute-force minimum is " +
                std::to_string(chi),
            {}};
  const bool all_ones = std::all_of(weights.begin(), weights.end(), [](int x) { return x == 1; });
  const bool all_twos = std::all_of(weights.begin(), weights.end(), [](int x) { return x == 2; });
  if (all_ones && cover.count != 3) return {tag + "all-ones weights need 3 classes", {}};
  if (all_twos && cover.count != 5) return {tag + "all-twos weights need 5 classes", {}};
  return {};
}

namespace {

GraphCheck check_blowup_graph(const Graph& g) {
  const auto p = petersen_blowup_partition(g);
  if (!p) return {"precondition: not a Petersen blowup", {}};
  std::array<int, 10> w{};
  for (int i = 0; i < 10; ++i) w[i] = static_cast<int>(p->bags[i].size());
  return check_blowup_weights(w);
}

// ---- campaign registry ------------------------------------------------------------------

using Checker = std::function<GraphCheck(const Graph&)>;

struct CampaignSpec {
  std::string name;
  Checker check;
};

const std::vector<CampaignSpec>& specs() {
  static const std::vector<CampaignSpec> kSpecs = {
      {"lemma1", [](const Graph& g) { return check_lemma(g, false); }},
      {"lemma2", [](const Graph& g) { return check_lemma(g, true); }},
      {"thm3", [](const Graph& g) { return check_domination_forward(g, DominatorKind::Split); }},
      {"thm3-reverse", [](const Graph& g) { return check_domination_reverse(g, DominatorKind::Split); }},
      {"thm4", [](const Graph& g) { return check_domination_forward(g, DominatorKind::CompleteSplit); }},
      {"thm4-reverse", [](const Graph& g) { return check_domination_reverse(g, DominatorKind::CompleteSplit); }},
      {"thm6", check_thm6},
      {"thm7", check_thm7},
      {"thm10", check_thm10},
      {"thm12", [](const Graph& g) { return check_coloring(g, true); }},
      {"thm14", check_thm14},
      {"thm15", check_thm15},
      {"thm16", [](const Graph& g) { return check_coloring(g, false); }},
      {"blowup-color", check_blowup_graph},
      {"q-validation", check_q},
  };
  return kSpecs;
}

const CampaignSpec& spec_for(std::string_view name) {
  for (const auto& s : specs())
    if (s.name == name) return s;
  throw InputError("unknown campaign '" + std::string(name) + "'");
}

GraphCheck guarded(const std::function<GraphCheck()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return {std::string("exception: ") + e.what(), {}};
  }
}

struct Item {
  Graph graph;
  std::function<GraphCheck()> check;
};

std::vector<Graph> exhaustive(int max_n, const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : enumerate_small_graphs(n, true))
      if (keep(g)) out.push_back(g);
  return out;
}

bool free_of(const Graph& g, Family f) { return family_membership(g, f).is_free; }

std::vector<Graph> named(std::initializer_list<const char*> names) {
  std::vector<Graph> out;
  for (const char* n : names) out.push_back(catalog_lookup(n));
  return out;
}

// Single-vertex extensions of F1 and F2 that stay connected and F-free.
std::vector<Graph> thm7_extensions() {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const char* base_name : {"f1", "f2"}) {
    const Graph base = catalog_lookup(base_name);
    const int n = base.order();
    const std::vector<Edge> base_edges = base.edges();
    for (std::uint32_t nb = 0; nb < (1u << n); ++nb) {
      std::vector<Edge> es = base_edges;
      for (int i = 0; i < n; ++i)
        if (nb >> i & 1u) es.emplace_back(i, n);
      Graph g(n + 1, es);
      if (!is_connected(g) || !free_of(g, Family::F)) continue;
      if (seen.insert(to_graph6(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

// One representative per automorphism orbit of {0,1,2}^10.
std::vector<std::array<int, 10>> weight_orbits() {
  const auto& autos = petersen_automorphisms();
  std::vector<std::array<int, 10>> out;
  std::array<int, 10> w{};
  for (int code = 0; code < 59049; ++code) {
    int c = code;
    for (int i = 9; i >= 0; --i) {
      w[i] = c % 3;
      c /= 3;
    }
    bool least = true;
    for (const Embedding& a : autos) {
      std::array<int, 10> image{};
      for (int i = 0; i < 10; ++i) image[a[i]] = w[i];
      if (image < w) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(w);
  }
  return out;
}

void add_graphs(std::vector<Item>& items, const std::vector<Graph>& graphs, const Checker& check) {
  for (const Graph& g : graphs) items.push_back({g, [check, g] { return check(g); }});
}

std::vector<GraphCheck> run_items(const std::vector<Item>& items, int threads) {
  std::vector<GraphCheck> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) results[i] = guarded(items[i].check);
  };
  int count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  count = std::clamp(count, 1, 64);
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return kNames;
}

GraphCheck check_graph(std::string_view campaign, const Graph& g) {
  const CampaignSpec& spec = spec_for(campaign);
  return guarded([&] { return spec.check(g); });
}

CampaignReport run_campaign(std::string_view name, const CampaignParams& params) {
  const CampaignSpec& spec = spec_for(name);
  if (params.max_n < 1 || params.max_n > kEnumerationMaxOrder)
    throw InputError("--max-n must lie in 1.." + std::to_string(kEnumerationMaxOrder));
  if (params.samples < 0) throw InputError("--samples must be non-negative");
  const auto start = std::chrono::steady_clock::now();

  CampaignReport r;
  r.campaign = spec.name;
  CorpusInfo& c = r.corpus;
  c.min_n = 1;
  c.max_n = params.max_n;
  std::vector<Item> items;
  const int max_n = params.max_n;

  auto add_random = [&](Family f) {
    const RandomCorpus rc = filtered_random_graphs(f, params.samples, params.seed);
    add_graphs(items, rc.graphs, spec.check);
    c.seed = params.seed;
    c.samples = static_cast<int>(rc.graphs.size());
    c.max_n = std::max(c.max_n, rc.graphs.empty() ? 0 : 10);
    c.description += "; " + std::to_string(rc.graphs.size()) + " random connected " + std::string(family_name(f)) +
                     "-free graphs with n in {9,10} from " + std::to_string(rc.attempts) + " attempts";
    if (static_cast<int>(rc.graphs.size()) < params.samples)
      r.notes.push_back("random corpus short: " + std::to_string(rc.graphs.size()) + " of " +
                        std::to_string(params.samples));
  };

  if (name == "lemma1" || name == "lemma2") {
    c.filters = {"connected"};
    c.description = "all connected graphs up to isomorphism";
    add_graphs(items, exhaustive(max_n, [](const Graph&) { return true; }), spec.check);
  } else if (name == "thm3" || name == "thm4") {
    const Family f = name == "thm3" ? Family::C : Family::D;
    c.filters = {"connected", std::string(family_name(f)) + "-free"};
    c.description = "all connected " + std::string(family_name(f)) +
                    "-free graphs up to isomorphism; connected induced subgraphs checked for n <= 7";
    add_graphs(items, exhaustive(max_n, [f](const Graph& g) { return free_of(g, f); }), spec.check);
  } else if (name == "thm3-reverse" || name == "thm4-reverse") {
    const bool split = name == "thm3-reverse";
    c.filters = {"fixed"};
    c.description = split ? "P7, C7, Q1, Q2, Q3, Q4" : "P6, C6, Q2, Q5";
    add_graphs(items, split ? named({"p7", "c7", "q1", "q2", "q3", "q4"}) : named({"p6", "c6", "q2", "q5"}),
               spec.check);
    c.min_n = 6;
    c.max_n = 10;
  } else if (name == "thm6") {
    c.filters = {"connected", "F-free", "contains C6"};
    c.description = "all connected F-free graphs with an induced C6; every C6 embedding seeds a max-blowup";
    add_graphs(items, exhaustive(max_n, [](const Graph& g) { return free_of(g, Family::F) && contains_pattern(g, "c6"); }),
               spec.check);
  } else if (name == "thm7") {
    c.filters = {"connected", "F-free", "contains F1 or F2"};
    c.description = "F1, F2 and their connected F-free single-vertex extensions, plus exhaustive graphs";
    std::vector<Graph> graphs = exhaustive(max_n, [](const Graph& g) {
      return free_of(g, Family::F) && (contains_pattern(g, "f1") || contains_pattern(g, "f2"));
    });
    const auto ext = thm7_extensions();
    graphs.insert(graphs.end(), ext.begin(), ext.end());
    add_graphs(items, graphs, spec.check);
    c.max_n = std::max(max_n, 9);
  } else if (name == "thm10" || name == "thm12") {
    c.filters = {"connected", "F-free"};
    c.description = "all connected F-free graphs up to isomorphism; Petersen graph";
    auto graphs = exhaustive(max_n, [](const Graph& g) { return free_of(g, Family::F); });
    graphs.push_back(petersen_graph());
    add_graphs(items, graphs, spec.check);
    add_random(Family::F);
    c.max_n = std::max(c.max_n, 10);
  } else if (name == "thm14") {
    c.filters = {"connected", "H-free", "C6-free", "contains C5"};
    c.description = "all connected H-free C6-free graphs with an induced C5";
    add_graphs(items, exhaustive(max_n, [](const Graph& g) {
                 return free_of(g, Family::H) && !contains_pattern(g, "c6") && contains_pattern(g, "c5");
               }),
               spec.check);
  } else if (name == "thm15" || name == "thm16") {
    c.filters = {"connected", "H-free"};
    c.description = "all connected H-free graphs up to isomorphism; Petersen graph";
    auto graphs = exhaustive(max_n, [](const Graph& g) { return free_of(g, Family::H); });
    graphs.push_back(petersen_graph());
    add_graphs(items, graphs, spec.check);
    add_random(Family::H);
    c.max_n = std::max(c.max_n, 10);
  } else if (name == "blowup-color") {
    c.filters = {"weights in {0,1,2}", "one per automorphism orbit"};
    c.description = "Petersen blowups for every weight vector up to automorphism";
    c.min_n = 0;
    c.max_n = 20;
    for (const auto& w : weight_orbits()) {
      const Graph g = build_blowup(petersen_graph(), w).graph;
      items.push_back({g, [w] { return check_blowup_weights(w); }});
    }
  } else if (name == "q-validation") {
    c.filters = {"fixed"};
    c.description = "Q1, Q2, Q3, Q4, Q5";
    add_graphs(items, named({"q1", "q2", "q3", "q4", "q5"}), spec.check);
    c.min_n = 6;
    c.max_n = 10;
  }
  if (!c.description.empty() && c.description.starts_with("; ")) c.description.erase(0, 2);

  const std::vector<GraphCheck> results = run_items(items, params.threads);
  r.checked = static_cast<long>(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].failure) {
      ++r.failed;
      r.failures.push_back({to_graph6(items[i].graph), *results[i].failure});
    } else {
      ++r.passed;
    }
    r.notes.insert(r.notes.end(), results[i].notes.begin(), results[i].notes.end());
  }
  std::sort(r.failures.begin(), r.failures.end());
  std::sort(r.notes.begin(), r.notes.end());
  r.notes.erase(std::unique(r.notes.begin(), r.notes.end()), r.notes.end());
  if (params.timing)
    r.duration_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

nlohmann::ordered_json report_to_json(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["campaign"] = r.campaign;
  j["corpus"] = {{"min_n", r.corpus.min_n},   {"max_n", r.corpus.max_n},     {"filters", r.corpus.filters},
                 {"seed", r.corpus.seed},     {"samples", r.corpus.samples}, {"description", r.corpus.description}};
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"graph6", f.graph6}, {"diagnostic", f.diagnostic}});
  j["notes"] = r.notes;
  if (r.duration_ms) j["duration_ms"] = *r.duration_ms;
  return j;
}

}  // namespace strucgraph
