#include "strucgraph/domination.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>

#include "strucgraph/errors.hpp"
#include "strucgraph/patterns.hpp"

namespace strucgraph {

DominatorKind parse_dominator_kind(std::string_view name) {
  if (name == "split") return DominatorKind::Split;
  if (name == "complete-split" || name == "complete_split") return DominatorKind::CompleteSplit;
  throw InputError("unknown dominator kind '" + std::string(name) + "' (expected split or complete-split)");
}

std::string_view dominator_kind_name(DominatorKind k) {
  return k == DominatorKind::Split ? "split" : "complete-split";
}

bool dominating_check(const Graph& g, std::span<const Vertex> d) {
  validate_vertex_set(g, d);
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : d) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

bool induces_connected(const Graph& g, std::span<const Vertex> d) {
  if (d.empty()) return false;
  return is_connected(induced_subgraph(g, d).graph);
}

std::optional<SplitPartition> partition_for(const Graph& g, const VertexSet& d, DominatorKind kind) {
  const InducedSubgraph sub = induced_subgraph(g, d);
  auto p = kind == DominatorKind::Split ? split_partition(sub.graph) : complete_split_partition(sub.graph);
  if (!p) return std::nullopt;
  SplitPartition out;
  for (Vertex v : p->clique) out.clique.push_back(sub.mapping[v]);
  for (Vertex v : p->stable) out.stable.push_back(sub.mapping[v]);
  std::sort(out.clique.begin(), out.clique.end());
  std::sort(out.stable.begin(), out.stable.end());
  return out;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("input graph is not connected");
}

}  // namespace

std::optional<std::string> certificate_violation(const Graph& g, const DominationCertificate& cert) {
  try {
    validate_vertex_set(g, cert.dominator);
  } catch (const InputError& e) {
    return std::string("dominator: ") + e.what();
  }
  if (!std::is_sorted(cert.dominator.begin(), cert.dominator.end())) return "dominator not ascending";
  if (!dominating_check(g, cert.dominator)) return "dominator does not dominate";
  if (!cert.connected || !induces_connected(g, cert.dominator)) return "dominator does not induce a connected graph";
  VertexSet parts = cert.partition.clique;
  parts.insert(parts.end(), cert.partition.stable.begin(), cert.partition.stable.end());
  std::sort(parts.begin(), parts.end());
  if (parts != cert.dominator) return "partition does not cover the dominator exactly";
  const bool complete = cert.kind == DominatorKind::CompleteSplit;
  if (!is_clique(g, cert.partition.clique)) return "partition clique side is not a clique";
  if (!is_stable(g, cert.partition.stable)) return "partition stable side is not stable";
  if (complete && !is_complete_between(g, cert.partition.clique, cert.partition.stable))
    return "stable side not complete to clique side";
  return std::nullopt;
}

// ---- exhaustive search ---------------------------------------------------------

namespace {

using Mask = std::uint32_t;

class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, DominatorKind kind) : g_(g), n_(g.order()), kind_(kind) {
    closed_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) closed_[v] = static_cast<Mask>(g.neighbor_mask(v)) | (Mask{1} << v);
    all_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::optional<VertexSet> run() {
    for (int k = 1; k <= n_; ++k) {
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        Mask s = 0;
        for (int i : idx) s |= Mask{1} << i;
        if (accepts(s)) {
          VertexSet out(idx.begin(), idx.end());
          return out;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n_ - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

 private:
  Mask inner(Vertex v, Mask s) const { return static_cast<Mask>(g_.neighbor_mask(v)) & s; }

  bool accepts(Mask s) const {
    Mask dom = 0;
    for (Mask t = s; t; t &= t - 1) dom |= closed_[std::countr_zero(t)];
    if (dom != all_) return false;
    // Connectivity of G[s].
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask t = frontier; t; t &= t - 1) next |= inner(std::countr_zero(t), s);
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != s) return false;
    return kind_ == DominatorKind::Split ? is_split(s) : is_complete_split(s);
  }

  // Degree-sequence characterization: with degrees d1 >= ... >= dk and
  // m = max{i : d_i >= i - 1}, the graph is split iff
  // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
  bool is_split(Mask s) const {
    std::vector<int> deg;
    for (Mask t = s; t; t &= t - 1) deg.push_back(std::popcount(inner(std::countr_zero(t), s)));
    std::sort(deg.rbegin(), deg.rend());
    int m = 0;
    for (int i = 0; i < static_cast<int>(deg.size()); ++i)
      if (deg[i] >= i) m = i + 1;
    int left = 0;
    int right = m * (m - 1);
    for (int i = 0; i < static_cast<int>(deg.size()); ++i) (i < m ? left : right) += deg[i];
    return left == right;
  }

  bool is_complete_split(Mask s) const {
    const int k = std::popcount(s);
    Mask rest = 0;
    for (Mask t = s; t; t &= t - 1) {
      const Vertex v = std::countr_zero(t);
      if (std::popcount(inner(v, s)) != k - 1) rest |= Mask{1} << v;
    }
    for (Mask t = rest; t; t &= t - 1)
      if (inner(std::countr_zero(t), rest)) return false;
    return true;
  }

  const Graph& g_;
  int n_;
  DominatorKind kind_;
  std::vector<Mask> closed_;
  Mask all_ = 0;
};

}  // namespace

std::optional<DominationCertificate> find_dominating_split(const Graph& g, DominatorKind kind) {
  if (g.order() > kDominationExactMaxOrder)
    throw BudgetExceeded("exhaustive domination search limited to " + std::to_string(kDominationExactMaxOrder) +
                         " vertices, got " + std::to_string(g.order()));
  require_connected(g);
  const auto d = SubsetSearch(g, kind).run();
  if (!d) return std::nullopt;
  auto partition = partition_for(g, *d, kind);
  if (!partition) throw std::logic_error("degree test accepted a set the recognizer rejects");
  return DominationCertificate{*d, kind, std::move(*partition), true};
}

// ---- deletion minimality -------------------------------------------------------

namespace {

bool connected_dominating(const Graph& g, const VertexSet& d) {
  return !d.empty() && dominating_check(g, d) && induces_connected(g, d);
}

VertexSet without(const VertexSet& d, Vertex v) {
  VertexSet out;
  out.reserve(d.size());
  for (Vertex u : d)
    if (u != v) out.push_back(u);
  return out;
}

}  // namespace

bool is_deletion_minimal(const Graph& g, std::span<const Vertex> d) {
  const VertexSet set(d.begin(), d.end());
  for (Vertex v : set)
    if (set.size() > 1 && connected_dominating(g, without(set, v))) return false;
  return true;
}

// ---- proof-guided reduction ---------------------------------------------------------

namespace {

class Reducer {
 public:
  Reducer(const Graph& g, DominatorKind kind, ReductionOutcome& out) : g_(g), kind_(kind), out_(out) {
    const std::vector<std::string> names = kind == DominatorKind::Split
                                               ? std::vector<std::string>{"c4", "c5", "h1", "h2"}
                                               : std::vector<std::string>{"c4", "paw"};
    for (const auto& name : names) patterns_.push_back({name, catalog_lookup(name)});
  }

  void run() {
    h_.resize(static_cast<std::size_t>(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) h_[v] = v;
    std::vector<long> potential = potential_of(h_);
    // The potential strictly decreases and takes finitely many values, so the
    // loop ends; the cap only guards against logic errors.
    const int cap = 8 * g_.order() * g_.order() + 16;
    while (out_.moves < cap) {
      auto target = first_pattern(h_);
      if (!target) break;
      const auto& [name, copy] = *target;
      if (!improve(copy, potential)) {
        out_.stalled = true;
        out_.log.push_back("stalled on induced " + name + " at " + describe(copy));
        break;
      }
      ++out_.moves;
    }
    prune();
    out_.final_subgraph = h_;
    if (auto p = partition_for(g_, h_, kind_)) {
      out_.certificate = DominationCertificate{h_, kind_, std::move(*p), true};
    } else {
      out_.log.push_back("pruned subgraph " + describe(h_) + " is not " + std::string(dominator_kind_name(kind_)));
    }
  }

 private:
  static std::string describe(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  }

  std::optional<std::pair<std::string, VertexSet>> first_pattern(const VertexSet& h) const {
    const InducedSubgraph sub = induced_subgraph(g_, h);
    for (const auto& [name, pattern] : patterns_)
      if (auto e = find_induced_embedding(sub.graph, pattern)) {
        VertexSet copy;
        for (Vertex v : *e) copy.push_back(sub.mapping[v]);
        return std::make_pair(name, copy);
      }
    return std::nullopt;
  }

  std::vector<long> potential_of(const VertexSet& h) const {
    const InducedSubgraph sub = induced_subgraph(g_, h);
    std::vector<long> out;
    for (const auto& [name, pattern] : patterns_)
      out.push_back(static_cast<long>(count_induced_copies(sub.graph, pattern)));
    long leaves = 0;
    for (Vertex v = 0; v < sub.graph.order(); ++v)
      if (sub.graph.degree(v) == 1) ++leaves;
    out.push_back(-leaves);
    return out;
  }

  bool try_accept(VertexSet candidate, std::vector<long>& potential, const std::string& what) {
    if (!connected_dominating(g_, candidate)) return false;
    std::vector<long> next = potential_of(candidate);
    if (!(next < potential)) return false;
    h_ = std::move(candidate);
    potential = std::move(next);
    out_.log.push_back(what);
    return true;
  }

  // One improving move aimed at the pattern copy; falls back to any deletion
  // in H that lowers the potential.
  bool improve(const VertexSet& copy, std::vector<long>& potential) {
    VertexSet targets = copy;
    std::sort(targets.begin(), targets.end());
    for (Vertex x : targets)
      if (try_accept(without(h_, x), potential, "delete " + std::to_string(x))) return true;
    for (Vertex x : targets)
      for (Vertex y : g_.neighbors(x)) {
        if (std::binary_search(h_.begin(), h_.end(), y)) continue;
        // y must be a private neighbor of x with respect to H.
        bool is_private = true;
        for (Vertex w : g_.neighbors(y))
          if (w != x && std::binary_search(h_.begin(), h_.end(), w)) {
            is_private = false;
            break;
          }
        if (!is_private) continue;
        VertexSet grown = h_;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), y), y);
        if (try_accept(std::move(grown), potential, "attach " + std::to_string(y) + " to " + std::to_string(x)))
          return true;
      }
    for (Vertex x : VertexSet(h_))
      if (!std::binary_search(targets.begin(), targets.end(), x) &&
          try_accept(without(h_, x), potential, "delete " + std::to_string(x)))
        return true;
    return false;
  }

  void prune() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : VertexSet(h_)) {
        if (h_.size() <= 1) break;
        VertexSet smaller = without(h_, v);
        if (connected_dominating(g_, smaller)) {
          h_ = std::move(smaller);
          out_.log.push_back("prune " + std::to_string(v));
          changed = true;
        }
      }
    }
  }

  const Graph& g_;
  DominatorKind kind_;
  ReductionOutcome& out_;
  std::vector<std::pair<std::string, Graph>> patterns_;
  VertexSet h_;
};

}  // namespace

ReductionOutcome proof_guided_reduce_detailed(const Graph& g, DominatorKind kind) {
  require_connected(g);
  ReductionOutcome out;
  Reducer(g, kind, out).run();
  return out;
}

}  // namespace strucgraph
