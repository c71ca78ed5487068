#include "strucgraph/coloring.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "strucgraph/decomposition.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/patterns.hpp"

namespace strucgraph {

// ---- clique number ------------------------------------------------------------

namespace {

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run() {
    VertexSet order(static_cast<std::size_t>(g_.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    expand(order);
    std::sort(best_.begin(), best_.end());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  // Greedy sequential coloring of the candidates; returns them reordered by
  // color with bounds[i] = number of colors used up to position i.
  void color_sort(const VertexSet& cand, VertexSet& sorted, std::vector<int>& bounds) const {
    std::vector<VertexSet> classes;
    for (Vertex v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (Vertex u : classes[c])
          if (g_.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    sorted.clear();
    bounds.clear();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex v : classes[c]) {
        sorted.push_back(v);
        bounds.push_back(static_cast<int>(c) + 1);
      }
  }

  void expand(VertexSet cand) {
    VertexSet sorted;
    std::vector<int> bounds;
    color_sort(cand, sorted, bounds);
    for (int i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
      if (current_.size() + static_cast<std::size_t>(bounds[i]) <= best_.size()) return;
      const Vertex v = sorted[i];
      current_.push_back(v);
      VertexSet next;
      for (int j = 0; j < i; ++j)
        if (g_.adjacent(v, sorted[j])) next.push_back(sorted[j]);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  VertexSet current_;
  VertexSet best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g) { return MaxCliqueSearch(g).run(); }

// ---- chromatic number ---------------------------------------------------------

namespace {

class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g) : g_(g), n_(g.order()), colors_(static_cast<std::size_t>(n_), -1) {}

  ChromaticResult run() {
    lower_ = clique_number(g_).omega;
    // Initial incumbent: plain DSATUR greedy.
    best_count_ = n_ + 1;
    greedy();
    std::fill(colors_.begin(), colors_.end(), -1);
    if (best_count_ > lower_) branch(0, 0);
    return {best_count_, best_};
  }

 private:
  std::uint32_t neighbor_colors(Vertex v) const {
    std::uint32_t used = 0;
    for (Vertex w : g_.neighbors(v))
      if (colors_[w] >= 0) used |= 1u << colors_[w];
    return used;
  }

  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors_[v] >= 0) continue;
      const int sat = std::popcount(neighbor_colors(v));
      int deg = 0;
      for (Vertex w : g_.neighbors(v))
        if (colors_[w] < 0) ++deg;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void greedy() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = pick();
      const std::uint32_t taken = neighbor_colors(v);
      const int c = std::countr_one(taken);
      colors_[v] = c;
      used = std::max(used, c + 1);
    }
    best_count_ = used;
    best_ = colors_;
  }

  void branch(int colored, int used) {
    if (best_count_ == lower_) return;
    if (colored == n_) {
      if (used < best_count_) {
        best_count_ = used;
        best_ = colors_;
      }
      return;
    }
    const Vertex v = pick();
    const std::uint32_t taken = neighbor_colors(v);
    const int limit = std::min(used + 1, best_count_ - 1);
    for (int c = 0; c < limit; ++c) {
      if (taken >> c & 1u) continue;
      colors_[v] = c;
      branch(colored + 1, std::max(used, c + 1));
      colors_[v] = -1;
      if (best_count_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  std::vector<int> best_;
  int best_count_ = 0;
  int lower_ = 0;
};

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g) {
  if (g.order() > kChromaticExactMaxOrder)
    throw BudgetExceeded("exact chromatic number limited to " + std::to_string(kChromaticExactMaxOrder) +
                         " vertices, got " + std::to_string(g.order()));
  if (g.order() == 0) return {0, {}};
  return DsaturSearch(g).run();
}

// ---- certificates -------------------------------------------------------------

std::string_view bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::TwoOmegaMinusOne: return "2*omega-1";
    case BoundKind::OmegaPlusOne: return "omega+1";
    case BoundKind::FiveQuarterOmega: return "ceil(5*omega/4)";
    case BoundKind::Exact: return "exact";
  }
  return "?";
}

int declared_bound(BoundKind kind, int omega) {
  switch (kind) {
    case BoundKind::TwoOmegaMinusOne: return std::max(0, 2 * omega - 1);
    case BoundKind::OmegaPlusOne: return omega + 1;
    case BoundKind::FiveQuarterOmega: return (5 * omega + 3) / 4;
    case BoundKind::Exact: return INT_MAX;
  }
  return INT_MAX;
}

std::string_view trace_kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::CutsetMerge: return "cutset-merge";
    case TraceStep::Kind::VertexExtension: return "vertex-extension";
    case TraceStep::Kind::BlowupBase: return "blowup-base";
    case TraceStep::Kind::PetersenBase: return "petersen-base";
    case TraceStep::Kind::ComponentUnion: return "component-union";
    case TraceStep::Kind::ExactBase: return "exact-base";
  }
  return "?";
}

bool verify_coloring(const Graph& g, const ColoringCertificate& cert) {
  if (static_cast<int>(cert.colors.size()) != g.order()) return false;
  if (cert.color_count < 0) return false;
  for (int c : cert.colors)
    if (c < 0 || c >= cert.color_count) return false;
  for (auto [u, v] : g.edges())
    if (cert.colors[u] == cert.colors[v]) return false;
  try {
    validate_vertex_set(g, cert.clique_witness);
  } catch (const InputError&) {
    return false;
  }
  if (!is_clique(g, cert.clique_witness)) return false;
  return cert.color_count <= declared_bound(cert.bound, static_cast<int>(cert.clique_witness.size()));
}

// ---- Petersen blowups -----------------------------------------------------------

const std::array<int, 10>& petersen_three_coloring() {
  static const std::array<int, 10> kColoring = [] {
    const std::array<int, 10> table{0, 1, 0, 1, 2, 1, 0, 2, 2, 1};
    for (auto [u, v] : petersen_graph().edges())
      if (table[u] == table[v]) throw std::logic_error("stored Petersen 3-coloring is improper");
    return table;
  }();
  return kColoring;
}

namespace {

struct PetersenStableSets {
  std::vector<std::uint32_t> maximal;         // bitmasks over the 10 vertices
  std::array<std::vector<int>, 10> containing;  // indices into maximal, per vertex
};

const PetersenStableSets& petersen_stable_sets() {
  static const PetersenStableSets kSets = [] {
    const Graph p = petersen_graph();
    for (Vertex a = 0; a < 10; ++a)
      for (Vertex b : p.neighbors(a))
        for (Vertex c : p.neighbors(b))
          if (c != a && p.adjacent(a, c)) throw std::logic_error("Petersen table has a triangle");
    std::vector<std::uint32_t> stable;
    for (std::uint32_t s = 1; s < (1u << 10); ++s) {
      bool ok = true;
      for (Vertex v = 0; v < 10 && ok; ++v)
        if (s >> v & 1u) ok = (p.neighbor_mask(v) & s) == 0;
      if (ok) stable.push_back(s);
    }
    PetersenStableSets out;
    for (std::uint32_t s : stable) {
      bool maximal = true;
      for (Vertex v = 0; v < 10 && maximal; ++v)
        if (!(s >> v & 1u) && (p.neighbor_mask(v) & s) == 0) maximal = false;
      if (maximal) out.maximal.push_back(s);
    }
    for (std::size_t i = 0; i < out.maximal.size(); ++i)
      for (Vertex v = 0; v < 10; ++v)
        if (out.maximal[i] >> v & 1u) out.containing[v].push_back(static_cast<int>(i));
    return out;
  }();
  return kSets;
}

using Weights = std::array<int, 10>;

int weight_clique(const Weights& w) {
  static const std::vector<Edge> kEdges = petersen_graph().edges();
  int omega = *std::max_element(w.begin(), w.end());
  for (auto [u, v] : kEdges) omega = std::max(omega, w[u] + w[v]);
  return omega;
}

int cover_lower_bound(const Weights& w) {
  const int total = std::accumulate(w.begin(), w.end(), 0);
  return std::max(weight_clique(w), (total + 3) / 4);  // every stable set has at most 4 vertices
}

std::uint64_t encode(const Weights& w) {
  std::uint64_t key = 0;
  for (int x : w) key = (key << 6) | static_cast<std::uint64_t>(x);
  return key;
}

class CoverSearch {
 public:
  // Whether w can be covered by at most k stable sets; on success the chosen
  // set indices are appended to picks.
  bool feasible(const Weights& w, int k, std::vector<int>& picks) {
    int first = -1;
    for (int v = 0; v < 10; ++v)
      if (w[v] > 0) {
        first = v;
        break;
      }
    if (first < 0) return true;
    if (k <= 0 || cover_lower_bound(w) > k) return false;
    const std::uint64_t key = encode(w);
    if (auto it = infeasible_.find(key); it != infeasible_.end() && it->second >= k) return false;
    const auto& sets = petersen_stable_sets();
    for (int idx : sets.containing[first]) {
      Weights next = w;
      for (int v = 0; v < 10; ++v)
        if (sets.maximal[idx] >> v & 1u) next[v] = std::max(0, next[v] - 1);
      picks.push_back(idx);
      if (feasible(next, k - 1, picks)) return true;
      picks.pop_back();
    }
    int& known = infeasible_[key];
    known = std::max(known, k);
    return false;
  }

 private:
  std::unordered_map<std::uint64_t, int> infeasible_;
};

VertexSet mask_vertices(std::uint32_t mask) {
  VertexSet out;
  for (Vertex v = 0; v < 10; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

}  // namespace

StableSetCover color_petersen_blowup(const std::array<int, 10>& weights) {
  for (int x : weights)
    if (x < 0 || x > 63) throw InputError("Petersen blowup weights must lie in 0..63");
  const auto& sets = petersen_stable_sets();
  StableSetCover out;
  out.omega = weight_clique(weights);

  CoverSearch search;
  std::vector<int> picks;
  int k = cover_lower_bound(weights);
  while (!search.feasible(weights, k, picks)) {
    picks.clear();
    ++k;
  }
  std::sort(picks.begin(), picks.end());
  for (std::size_t i = 0; i < picks.size();) {
    std::size_t j = i;
    while (j < picks.size() && picks[j] == picks[i]) ++j;
    out.classes.emplace_back(mask_vertices(sets.maximal[picks[i]]), static_cast<int>(j - i));
    i = j;
  }
  out.count = static_cast<int>(picks.size());
  const int bound = declared_bound(BoundKind::FiveQuarterOmega, out.omega);
  if (out.count > bound)
    throw TheoremViolation("Petersen blowup needs " + std::to_string(out.count) + " colors, above ceil(5*omega/4) = " +
                           std::to_string(bound));
  return out;
}

std::vector<int> expand_cover(const Graph& g, const BlowupPartition& p, const StableSetCover& cover) {
  if (p.bags.size() != 10) throw InputError("expand_cover expects ten Petersen bags");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  std::array<std::size_t, 10> next{};
  int color = 0;
  for (const auto& [set, mult] : cover.classes)
    for (int copy = 0; copy < mult; ++copy, ++color)
      for (Vertex i : set)
        if (next[i] < p.bags[i].size()) colors[p.bags[i][next[i]++]] = color;
  for (int i = 0; i < 10; ++i)
    if (next[i] != p.bags[i].size()) throw TheoremViolation("stable-set cover misses bag " + std::to_string(i));
  return colors;
}

// ---- certified recursive colorings ---------------------------------------------------

namespace {

enum class Mode { Gem, Diamond };

int color_count_of(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Relabels colors by first appearance so they occupy 0..k-1.
void compact(std::vector<int>& colors) {
  std::unordered_map<int, int> relabel;
  for (int& c : colors) {
    auto [it, inserted] = relabel.emplace(c, static_cast<int>(relabel.size()));
    c = it->second;
  }
}

class CertifiedColorer {
 public:
  CertifiedColorer(Mode mode, std::vector<TraceStep>& trace) : mode_(mode), trace_(trace) {}

  // Colors h; to_host maps h's vertices to the caller's top-level ids.
  std::vector<int> color(const Graph& h, const VertexSet& to_host) {
    if (h.order() == 0) return {};
    const Components comps = connectivity(h);
    if (!comps.is_connected) {
      std::vector<int> colors(static_cast<std::size_t>(h.order()), -1);
      for (const VertexSet& comp : comps.components) {
        const auto sub = induced_subgraph(h, comp);
        const auto part = color(sub.graph, map(to_host, comp));
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = part[i];
      }
      trace_.push_back({TraceStep::Kind::ComponentUnion, {},
                        std::to_string(comps.components.size()) + " components, " +
                            std::to_string(color_count_of(colors)) + " colors"});
      return colors;
    }

    const StructureCase c = mode_ == Mode::Gem ? classify_gem_free(h) : classify_diamond_free(h);
    if (auto why = structure_case_violation(h, c)) throw TheoremViolation("invalid structure witness: " + *why);

    if (auto* k = std::get_if<CliqueCutsetCase>(&c)) return merge_cutset(h, to_host, k->cutset);
    if (auto* b = std::get_if<BisimplicialCase>(&c)) return extend(h, to_host, b->vertex);
    if (auto* low = std::get_if<LowDegreeCase>(&c)) return extend(h, to_host, low->vertex);
    if (auto* pb = std::get_if<PetersenBlowupCase>(&c)) {
      std::array<int, 10> w{};
      for (int i = 0; i < 10; ++i) w[i] = static_cast<int>(pb->partition.bags[i].size());
      const StableSetCover cover = color_petersen_blowup(w);
      std::vector<int> colors = expand_cover(h, pb->partition, cover);
      compact(colors);
      trace_.push_back({TraceStep::Kind::BlowupBase, to_host,
                        std::to_string(cover.count) + " colors <= ceil(5*" + std::to_string(cover.omega) + "/4)"});
      return colors;
    }
    // Petersen graph itself.
    const Embedding iso = *find_induced_embedding(h, petersen_graph());
    std::vector<int> colors(10);
    for (int i = 0; i < 10; ++i) colors[iso[i]] = petersen_three_coloring()[i];
    trace_.push_back({TraceStep::Kind::PetersenBase, to_host, "stored 3-coloring"});
    return colors;
  }

 private:
  static VertexSet map(const VertexSet& to_host, const VertexSet& local) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_host[v]);
    return out;
  }

  std::vector<int> merge_cutset(const Graph& h, const VertexSet& to_host, const VertexSet& cutset) {
    const auto parts = components_without(h, cutset);
    VertexSet side_a = cutset;
    side_a.insert(side_a.end(), parts[0].begin(), parts[0].end());
    VertexSet side_b = cutset;
    for (std::size_t i = 1; i < parts.size(); ++i) side_b.insert(side_b.end(), parts[i].begin(), parts[i].end());
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());

    const auto sub_a = induced_subgraph(h, side_a);
    const auto sub_b = induced_subgraph(h, side_b);
    const std::vector<int> col_a = color(sub_a.graph, map(to_host, side_a));
    const std::vector<int> col_b = color(sub_b.graph, map(to_host, side_b));
    const int count_a = color_count_of(col_a);
    const int count_b = color_count_of(col_b);

    std::vector<int> colors(static_cast<std::size_t>(h.order()), -1);
    for (std::size_t i = 0; i < side_a.size(); ++i) colors[side_a[i]] = col_a[i];

    // Rename side B so it agrees with side A on the cutset; K is a clique so
    // this is a bijection on the cutset colors.
    std::vector<int> rename(static_cast<std::size_t>(count_b), -1);
    std::vector<char> taken(static_cast<std::size_t>(std::max(count_a, count_b)), 0);
    for (std::size_t i = 0; i < side_b.size(); ++i)
      if (std::binary_search(cutset.begin(), cutset.end(), side_b[i])) {
        rename[col_b[i]] = colors[side_b[i]];
        taken[colors[side_b[i]]] = 1;
      }
    int next_free = 0;
    for (int c = 0; c < count_b; ++c) {
      if (rename[c] != -1) continue;
      while (taken[next_free]) ++next_free;
      rename[c] = next_free;
      taken[next_free] = 1;
    }
    for (std::size_t i = 0; i < side_b.size(); ++i) colors[side_b[i]] = rename[col_b[i]];

    const int merged = color_count_of(colors);
    if (merged > std::max(count_a, count_b)) throw TheoremViolation("cutset merge increased the color count");
    trace_.push_back({TraceStep::Kind::CutsetMerge, map(to_host, cutset),
                      "max(" + std::to_string(count_a) + ", " + std::to_string(count_b) + ") = " +
                          std::to_string(merged) + " colors"});
    return colors;
  }

  std::vector<int> extend(const Graph& h, const VertexSet& to_host, Vertex v) {
    const auto rest = remove_vertices(h, VertexSet{v});
    const std::vector<int> sub = color(rest.graph, map(to_host, rest.mapping));
    std::vector<int> colors(static_cast<std::size_t>(h.order()), -1);
    for (std::size_t i = 0; i < rest.mapping.size(); ++i) colors[rest.mapping[i]] = sub[i];
    std::vector<char> used(static_cast<std::size_t>(h.order()) + 1, 0);
    for (Vertex w : h.neighbors(v)) used[colors[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    colors[v] = c;

    const int omega = clique_number(h).omega;
    const int limit = mode_ == Mode::Gem ? 2 * omega - 1 : omega + 1;
    if (c >= limit)
      throw TheoremViolation("extension color " + std::to_string(c) + " not below " + std::to_string(limit));
    const std::string bound_text = mode_ == Mode::Gem ? "2*omega-2 = " + std::to_string(2 * omega - 2)
                                                      : "omega = " + std::to_string(omega);
    trace_.push_back({TraceStep::Kind::VertexExtension, {to_host[v]},
                      "deg " + std::to_string(h.degree(v)) + " <= " + bound_text + ", color " + std::to_string(c)});
    return colors;
  }

  Mode mode_;
  std::vector<TraceStep>& trace_;
};

ColoringCertificate certified(const Graph& g, Mode mode) {
  const Family family = mode == Mode::Gem ? Family::F : Family::H;
  const Membership m = family_membership(g, family);
  if (!m.is_free)
    throw PreconditionError("input contains an induced " + m.witness->pattern, m.witness->pattern);

  ColoringCertificate cert;
  cert.bound = mode == Mode::Gem ? BoundKind::TwoOmegaMinusOne : BoundKind::OmegaPlusOne;
  VertexSet identity(static_cast<std::size_t>(g.order()));
  std::iota(identity.begin(), identity.end(), 0);
  CertifiedColorer colorer(mode, cert.trace);
  cert.colors = colorer.color(g, identity);
  compact(cert.colors);
  cert.color_count = color_count_of(cert.colors);
  cert.clique_witness = clique_number(g).witness;
  if (!verify_coloring(g, cert))
    throw TheoremViolation("certified coloring failed verification (" + std::to_string(cert.color_count) +
                           " colors, bound " + std::string(bound_kind_name(cert.bound)) + ")");
  return cert;
}

}  // namespace

ColoringCertificate color_gem_free_certified(const Graph& g) { return certified(g, Mode::Gem); }

ColoringCertificate color_diamond_free_certified(const Graph& g) { return certified(g, Mode::Diamond); }

ColoringCertificate color_exact(const Graph& g) {
  const ChromaticResult r = chromatic_number_exact(g);
  ColoringCertificate cert;
  cert.colors = r.colors;
  cert.color_count = r.chi;
  cert.clique_witness = clique_number(g).witness;
  cert.bound = BoundKind::Exact;
  VertexSet all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  cert.trace.push_back({TraceStep::Kind::ExactBase, all, "DSATUR branch and bound, chi = " + std::to_string(r.chi)});
  return cert;
}

}  // namespace strucgraph
