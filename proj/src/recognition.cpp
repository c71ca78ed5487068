#include "strucgraph/recognition.hpp"

#include <algorithm>

#include "strucgraph/coloring.hpp"
#include "strucgraph/errors.hpp"

namespace strucgraph {

bool is_valid_split_partition(const Graph& g, const SplitPartition& p, bool require_complete) {
  if (p.clique.size() + p.stable.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet* side : {&p.clique, &p.stable})
    for (Vertex v : *side) {
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = 1;
    }
  if (!is_clique(g, p.clique) || !is_stable(g, p.stable)) return false;
  return !require_complete || is_complete_between(g, p.clique, p.stable);
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  VertexSet clique = clique_number(g).witness;
  std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
  for (Vertex v : clique) in_clique[v] = 1;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_clique[v]) rest.push_back(v);
  if (is_stable(g, rest)) return SplitPartition{clique, rest};

  std::vector<Edge> outside;
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (g.adjacent(rest[i], rest[j])) outside.emplace_back(rest[i], rest[j]);

  for (Vertex x : rest) {
    const bool covers = std::all_of(outside.begin(), outside.end(),
                                    [x](const Edge& e) { return e.first == x || e.second == x; });
    if (!covers) continue;
    for (Vertex y : clique) {
      SplitPartition candidate;
      for (Vertex v : clique)
        if (v != y) candidate.clique.push_back(v);
      candidate.clique.push_back(x);
      for (Vertex v : rest)
        if (v != x) candidate.stable.push_back(v);
      candidate.stable.push_back(y);
      std::sort(candidate.clique.begin(), candidate.clique.end());
      std::sort(candidate.stable.begin(), candidate.stable.end());
      if (is_clique(g, candidate.clique) && is_stable(g, candidate.stable)) return candidate;
    }
  }
  return std::nullopt;
}

std::optional<SplitPartition> complete_split_partition(const Graph& g) {
  SplitPartition p;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1)
      p.clique.push_back(v);
    else
      p.stable.push_back(v);
  }
  if (!is_stable(g, p.stable)) return std::nullopt;
  return p;
}

std::optional<std::string> blowup_violation(const Graph& g, const BlowupPartition& p,
                                            bool require_cover) {
  const int k = p.base.order();
  if (static_cast<int>(p.bags.size()) != k) return "bag count differs from template order";
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i)
    for (Vertex v : p.bags[i]) {
      if (v < 0 || v >= g.order()) return "bag " + std::to_string(i) + " has out-of-range vertex";
      if (owner[v] != -1) return "vertex " + std::to_string(v) + " in two bags";
      owner[v] = i;
    }
  for (Vertex v = 0; v < g.order() && require_cover; ++v)
    if (owner[v] == -1) return "vertex " + std::to_string(v) + " in no bag";
  for (int i = 0; i < k; ++i) {
    if (!is_clique(g, p.bags[i])) return "bag " + std::to_string(i) + " is not a clique";
    for (int j = i + 1; j < k; ++j) {
      if (p.base.adjacent(i, j) ? !is_complete_between(g, p.bags[i], p.bags[j])
                                : !is_anticomplete_between(g, p.bags[i], p.bags[j]))
        return "bags " + std::to_string(i) + " and " + std::to_string(j) + " break the template adjacency";
    }
  }
  return std::nullopt;
}

std::optional<BlowupPartition> petersen_blowup_partition(const Graph& g) {
  const Graph petersen = petersen_graph();
  const int n = g.order();

  // Classes of the closed-neighborhood relation, ordered by least vertex.
  auto same_closed_neighborhood = [&](Vertex u, Vertex v) {
    if (!g.adjacent(u, v)) return false;
    for (Vertex w = 0; w < n; ++w)
      if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) return false;
    return true;
  };
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> classes;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] != -1) continue;
    cls[v] = static_cast<int>(classes.size());
    classes.push_back({v});
    for (Vertex u = v + 1; u < n; ++u)
      if (cls[u] == -1 && same_closed_neighborhood(v, u)) {
        cls[u] = cls[v];
        classes.back().push_back(u);
      }
    if (classes.size() > 10) return std::nullopt;
  }
  for (const auto& c : classes)
    if (!is_clique(g, c)) return std::nullopt;

  const int q = static_cast<int>(classes.size());
  std::vector<Edge> quotient_edges;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (g.adjacent(classes[a].front(), classes[b].front())) quotient_edges.emplace_back(a, b);
  const Graph quotient(q, quotient_edges);

  auto embedding = find_induced_embedding(petersen, quotient);
  if (!embedding) return std::nullopt;

  BlowupPartition p{petersen, std::vector<VertexSet>(10)};
  for (int a = 0; a < q; ++a) p.bags[(*embedding)[a]] = classes[a];
  if (auto why = blowup_violation(g, p)) throw TheoremViolation("Petersen blowup pull-back invalid: " + *why);
  return p;
}

Blowup build_blowup(const Graph& base, std::span<const int> weights) {
  if (static_cast<int>(weights.size()) != base.order()) throw InputError("one weight per template vertex required");
  BlowupPartition p{base, std::vector<VertexSet>(static_cast<std::size_t>(base.order()))};
  int next = 0;
  for (int i = 0; i < base.order(); ++i) {
    if (weights[i] < 0) throw InputError("negative blowup weight");
    for (int c = 0; c < weights[i]; ++c) p.bags[i].push_back(next++);
  }
  std::vector<Edge> es;
  for (int i = 0; i < base.order(); ++i) {
    for (std::size_t a = 0; a < p.bags[i].size(); ++a)
      for (std::size_t b = a + 1; b < p.bags[i].size(); ++b) es.emplace_back(p.bags[i][a], p.bags[i][b]);
    for (int j = i + 1; j < base.order(); ++j)
      if (base.adjacent(i, j))
        for (Vertex u : p.bags[i])
          for (Vertex v : p.bags[j]) es.emplace_back(u, v);
  }
  return {Graph(next, es), std::move(p)};
}

const std::vector<Embedding>& petersen_automorphisms() {
  static const std::vector<Embedding> kAutomorphisms = [] {
    std::vector<Embedding> out;
    const Graph p = petersen_graph();
    for_each_induced_embedding(p, p, [&](const Embedding& e) {
      out.push_back(e);
      return true;
    });
    return out;
  }();
  return kAutomorphisms;
}

}  // namespace strucgraph
