#include "strucgraph/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "strucgraph/coloring.hpp"
#include "strucgraph/errors.hpp"

namespace strucgraph {

namespace {

int mod(int i, int m) { return ((i % m) + m) % m; }

VertexSet unite(std::initializer_list<const VertexSet*> parts) {
  VertexSet out;
  for (const VertexSet* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string graph_text(const Graph& g) { return to_graph6(g); }

}  // namespace

// ---- structure cases --------------------------------------------------------

std::string_view case_name(const StructureCase& c) {
  struct Visitor {
    std::string_view operator()(const CliqueCutsetCase&) const { return "clique-cutset"; }
    std::string_view operator()(const BisimplicialCase&) const { return "bisimplicial"; }
    std::string_view operator()(const PetersenBlowupCase&) const { return "petersen-blowup"; }
    std::string_view operator()(const PetersenGraphCase&) const { return "petersen-graph"; }
    std::string_view operator()(const LowDegreeCase&) const { return "low-degree-vertex"; }
  };
  return std::visit(Visitor{}, c);
}

std::optional<std::string> structure_case_violation(const Graph& g, const StructureCase& c) {
  if (auto* k = std::get_if<CliqueCutsetCase>(&c)) {
    try {
      validate_vertex_set(g, k->cutset);
    } catch (const InputError& e) {
      return std::string("cutset: ") + e.what();
    }
    if (!is_clique(g, k->cutset)) return "cutset is not a clique";
    const auto before = connectivity(g).components.size();
    const auto after = components_without(g, k->cutset).size();
    if (after <= before) return "removing the cutset does not add components";
    return std::nullopt;
  }
  if (auto* b = std::get_if<BisimplicialCase>(&c)) {
    if (b->vertex < 0 || b->vertex >= g.order()) return "bisimplicial vertex out of range";
    if (!is_clique(g, b->clique1) || !is_clique(g, b->clique2)) return "cover part is not a clique";
    std::set<Vertex> cover(b->clique1.begin(), b->clique1.end());
    cover.insert(b->clique2.begin(), b->clique2.end());
    const auto& nb = g.neighbors(b->vertex);
    if (!std::equal(cover.begin(), cover.end(), nb.begin(), nb.end()))
      return "cliques do not cover exactly the neighborhood";
    return std::nullopt;
  }
  if (auto* p = std::get_if<PetersenBlowupCase>(&c)) {
    if (!(p->partition.base == petersen_graph())) return "blowup template is not the Petersen graph";
    return blowup_violation(g, p->partition);
  }
  if (std::holds_alternative<PetersenGraphCase>(c)) {
    const Graph pet = petersen_graph();
    if (g.order() != 10 || g.size() != 15 || !find_induced_embedding(g, pet)) return "graph is not the Petersen graph";
    return std::nullopt;
  }
  const auto& low = std::get<LowDegreeCase>(c);
  if (low.vertex < 0 || low.vertex >= g.order()) return "low-degree vertex out of range";
  if (g.degree(low.vertex) != low.degree) return "recorded degree is wrong";
  if (low.degree > low.bound) return "degree exceeds the carried bound";
  return std::nullopt;
}

// ---- cutsets ------------------------------------------------------------------

std::vector<VertexSet> minimal_separators(const Graph& g) {
  std::set<VertexSet> found;
  std::deque<VertexSet> pending;
  auto close_components = [&](const VertexSet& removed) {
    for (const VertexSet& comp : components_without(g, removed)) {
      VertexSet sep = neighborhood_of_set(g, comp);
      if (!sep.empty() && found.insert(sep).second) pending.push_back(std::move(sep));
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.push_back(v);
    close_components(closed);
  }
  while (!pending.empty()) {
    const VertexSet s = std::move(pending.front());
    pending.pop_front();
    for (Vertex x : s) {
      VertexSet removed = s;
      removed.insert(removed.end(), g.neighbors(x).begin(), g.neighbors(x).end());
      std::sort(removed.begin(), removed.end());
      removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
      close_components(removed);
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  return out;
}

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("clique cutset search needs a connected graph");
  for (const VertexSet& s : minimal_separators(g))
    if (is_clique(g, s)) return s;
  return std::nullopt;
}

std::optional<BisimplicialCase> bisimplicial_cover(const Graph& g, Vertex v) {
  const VertexSet& nb = g.neighbors(v);
  const std::size_t k = nb.size();
  std::vector<int> side(k, -1);
  for (std::size_t s = 0; s < k; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || g.adjacent(nb[i], nb[j])) continue;  // complement edges only
        if (side[j] == -1) {
          side[j] = 1 - side[i];
          queue.push_back(j);
        } else if (side[j] == side[i]) {
          return std::nullopt;
        }
      }
    }
  }
  BisimplicialCase out{v, {}, {}};
  for (std::size_t i = 0; i < k; ++i) (side[i] == 0 ? out.clique1 : out.clique2).push_back(nb[i]);
  return out;
}

std::optional<BisimplicialCase> find_bisimplicial_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (auto b = bisimplicial_cover(g, v)) return b;
  return std::nullopt;
}

// ---- C6 machinery -----------------------------------------------------------------

BlowupPartition max_blowup_c6(const Graph& g, const Embedding& c6) {
  const Graph cycle = cycle_graph(6);
  if (!is_induced_embedding(g, cycle, c6)) throw InputError("max_blowup_c6: not an induced C6 embedding");
  BlowupPartition a{cycle, std::vector<VertexSet>(6)};
  std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < 6; ++i) {
    a.bags[i].push_back(c6[i]);
    in_a[c6[i]] = 1;
  }
  auto fits = [&](Vertex x, int i) {
    for (int d = 0; d < 6; ++d) {
      const bool want = d == 0 || d == 1 || d == 5;
      for (Vertex u : a.bags[mod(i + d, 6)])
        if (u != x && g.adjacent(x, u) != want) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (in_a[x]) continue;
      for (int i = 0; i < 6; ++i)
        if (fits(x, i)) {
          a.bags[i].insert(std::lower_bound(a.bags[i].begin(), a.bags[i].end(), x), x);
          in_a[x] = 1;
          changed = true;
          break;
        }
    }
  }
  return a;
}

std::optional<std::string> max_blowup_violation(const Graph& g, const BlowupPartition& a) {
  if (!(a.base == cycle_graph(6))) return "template is not C6";
  if (auto why = blowup_violation(g, a, /*require_cover=*/false)) return why;
  std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
  for (const auto& bag : a.bags)
    for (Vertex v : bag) in_a[v] = 1;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_a[x]) continue;
    for (int i = 0; i < 6; ++i) {
      bool fits = true;
      for (int d = 0; d < 6 && fits; ++d) {
        const bool want = d == 0 || d == 1 || d == 5;
        fits = want ? is_complete_between(g, VertexSet{x}, a.bags[mod(i + d, 6)])
                    : is_anticomplete_between(g, VertexSet{x}, a.bags[mod(i + d, 6)]);
      }
      if (fits) return "vertex " + std::to_string(x) + " extends bag " + std::to_string(i);
    }
  }
  return std::nullopt;
}

C6Partition c6_neighborhood_partition(const Graph& g, const BlowupPartition& a) {
  if (auto why = blowup_violation(g, a, false))
    throw InputError("c6_neighborhood_partition: not a blowup of C6: " + *why);
  C6Partition p;
  p.a = a;
  std::vector<int> bag_of(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < 6; ++i)
    for (Vertex v : a.bags[i]) bag_of[v] = i;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (bag_of[x] != -1) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(x))
      if (bag_of[w] != -1) hits |= 1 << bag_of[w];
    std::vector<int> l;
    for (int i = 0; i < 6; ++i)
      if (hits >> i & 1) l.push_back(i);
    if (l.empty()) {
      p.r.push_back(x);
    } else if (l.size() == 1) {
      p.y[l[0]].push_back(x);
    } else if (l.size() == 2 && l[1] == l[0] + 1) {
      p.x[l[0]].push_back(x);
    } else if (l.size() == 2 && l[0] == 0 && l[1] == 5) {
      p.x[5].push_back(x);
    } else if (l.size() == 2 && l[1] == l[0] + 3) {
      p.z[l[0]].push_back(x);
    } else {
      std::string bags;
      for (int i : l) bags += (bags.empty() ? "" : ",") + std::to_string(i);
      throw PreconditionError("unclassifiable vertex " + std::to_string(x) + " with neighbors in bags {" + bags +
                              "} (input not F-free or blowup not maximal)");
    }
  }
  return p;
}

std::vector<std::string> c6_partition_violations(const Graph& g, const C6Partition& p, C6Guards guards) {
  std::vector<std::string> out;
  auto fail = [&](std::string tag, int i, const std::string& what) {
    out.push_back("(" + tag + ") i=" + std::to_string(i) + ": " + what);
  };
  const auto& A = p.a.bags;
  const auto& X = p.x;
  const auto& Y = p.y;
  auto Z = [&](int i) -> const VertexSet& { return p.z[mod(i, 3)]; };
  auto Xm = [&](int i) -> const VertexSet& { return X[mod(i, 6)]; };
  auto Ym = [&](int i) -> const VertexSet& { return Y[mod(i, 6)]; };
  auto Am = [&](int i) -> const VertexSet& { return A[mod(i, 6)]; };
  auto union_except = [&](const std::array<VertexSet, 6>& fam, std::initializer_list<int> skip) {
    VertexSet out_set;
    for (int j = 0; j < 6; ++j) {
      bool skipped = false;
      for (int s : skip) skipped = skipped || mod(s, 6) == j;
      if (!skipped) out_set.insert(out_set.end(), fam[j].begin(), fam[j].end());
    }
    return out_set;
  };

  if (auto why = max_blowup_violation(g, p.a)) out.push_back("(max) " + *why);

  // (a)
  const VertexSet all_a = unite({&A[0], &A[1], &A[2], &A[3], &A[4], &A[5]});
  VertexSet b;
  for (int i = 0; i < 6; ++i) b.insert(b.end(), X[i].begin(), X[i].end());
  for (int i = 0; i < 6; ++i) b.insert(b.end(), Y[i].begin(), Y[i].end());
  for (int i = 0; i < 3; ++i) b.insert(b.end(), p.z[i].begin(), p.z[i].end());
  std::sort(b.begin(), b.end());
  if (b != neighborhood_of_set(g, all_a)) fail("a", 0, "B != N(A)");
  VertexSet every = unite({&all_a, &b, &p.r});
  if (static_cast<int>(every.size()) != g.order() ||
      std::adjacent_find(every.begin(), every.end()) != every.end())
    fail("a", 0, "A, B, R do not partition V");

  for (int i = 0; i < 6; ++i) {
    // (b)
    if (!is_complete_between(g, X[i], unite({&Am(i), &Am(i + 1)}))) fail("b", i, "X_i not complete to A_i u A_i+1");

    // (c)
    {
      VertexSet other = union_except(X, {i, i + 3});
      VertexSet ys = union_except(Y, {i + 3, i + 4});
      other.insert(other.end(), ys.begin(), ys.end());
      other.insert(other.end(), Z(i + 2).begin(), Z(i + 2).end());
      other.insert(other.end(), p.r.begin(), p.r.end());
      if (!is_anticomplete_between(g, X[i], other)) fail("c", i, "edge from X_i to a forbidden class");
    }
    {
      VertexSet other = union_except(Y, {i, i + 3});
      for (int j = 0; j < 3; ++j)
        if (j != mod(i, 3)) other.insert(other.end(), p.z[j].begin(), p.z[j].end());
      other.insert(other.end(), p.r.begin(), p.r.end());
      if (!is_anticomplete_between(g, Y[i], other)) fail("c", i, "edge from Y_i to a forbidden class");
    }
    {
      VertexSet other;
      for (int j = 0; j < 3; ++j)
        if (j != mod(i, 3)) other.insert(other.end(), p.z[j].begin(), p.z[j].end());
      if (!is_anticomplete_between(g, Z(i), other)) fail("c", i, "edge between different Z classes");
    }

    // (d)
    if (!X[i].empty() && !(Xm(i + 1).empty() && Xm(i - 1).empty())) fail("d", i, "X_i and X_i+1 u X_i-1 both nonempty");
    if (!X[i].empty() && !(Ym(i + 2).empty() && Ym(i - 1).empty())) fail("d", i, "X_i and Y_i+2 u Y_i-1 both nonempty");
    if (!Y[i].empty() && !(Ym(i + 2).empty() && Ym(i - 2).empty())) fail("d", i, "Y_i and Y_i+2 u Y_i-2 both nonempty");

    // (e)
    {
      const VertexSet far = unite({&Xm(i + 3), &Ym(i + 3), &Ym(i + 4)});
      if (!is_anticomplete_between(g, X[i], far)) {
        if (!Z(i + 2).empty()) fail("e", i, "Z_i+2 u Z_i+5 nonempty");
        const bool left = neighborhood_of_set(g, Am(i - 1)) == unite({&Am(i), &Am(i - 2)});
        const bool right = neighborhood_of_set(g, Am(i + 2)) == unite({&Am(i + 1), &Am(i + 3)});
        if (!left && !right) fail("e", i, "neither N(A_i-1) = A_i u A_i-2 nor N(A_i+2) = A_i+1 u A_i+3");
      }
    }

    // (f1), (g)
    if (guards.f1_free && !is_anticomplete_between(g, Y[i], Ym(i + 3))) fail("f1", i, "edge between Y_i and Y_i+3");
    if (guards.f2_free && !is_anticomplete_between(g, X[i], unite({&Z(i), &Z(i + 1)})))
      fail("g", i, "edge between X_i and Z_i u Z_i+1");
  }
  return out;
}

// ---- C5 machinery -----------------------------------------------------------------

C5Partition c5_neighborhood_partition(const Graph& g, const Embedding& c5) {
  if (!is_induced_embedding(g, cycle_graph(5), c5)) throw InputError("c5_neighborhood_partition: not an induced C5");
  C5Partition p;
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < 5; ++i) {
    p.cycle[i] = c5[i];
    pos[c5[i]] = i;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (pos[v] != -1) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(v))
      if (pos[w] != -1) hits |= 1 << pos[w];
    if (hits == 0) {
      p.r.push_back(v);
      continue;
    }
    p.b.push_back(v);
    bool placed = false;
    for (int i = 0; i < 5 && !placed; ++i) {
      if (hits == (1 << i)) {
        p.y[i].push_back(v);
        placed = true;
      } else if (hits == ((1 << i) | (1 << mod(i + 1, 5)))) {
        p.x[i].push_back(v);
        placed = true;
      }
    }
    if (!placed)
      throw PreconditionError("unclassifiable vertex " + std::to_string(v) +
                              " (cycle neighborhood fits no class; input not H-free or not C6-free)");
  }
  return p;
}

std::vector<std::string> c5_partition_violations(const Graph& g, const C5Partition& p) {
  std::vector<std::string> out;
  auto fail = [&](const char* tag, int i, const std::string& what) {
    out.push_back(std::string("(") + tag + ") i=" + std::to_string(i) + ": " + what);
  };
  VertexSet cycle(p.cycle.begin(), p.cycle.end());
  VertexSet xy;
  for (int i = 0; i < 5; ++i) {
    xy.insert(xy.end(), p.x[i].begin(), p.x[i].end());
    xy.insert(xy.end(), p.y[i].begin(), p.y[i].end());
  }
  std::sort(xy.begin(), xy.end());
  if (xy != neighborhood_of_set(g, cycle) || xy != p.b) fail("1", 0, "B != X u Y");

  for (int i = 0; i < 5; ++i) {
    VertexSet block = p.x[i];
    block.push_back(p.cycle[i]);
    block.push_back(p.cycle[mod(i + 1, 5)]);
    if (!is_clique(g, block)) fail("2", i, "G[X_i u {a_i, a_i+1}] not complete");

    VertexSet others;
    for (int j = 0; j < 5; ++j) {
      if (j != i) others.insert(others.end(), p.x[j].begin(), p.x[j].end());
      if (j != mod(i + 3, 5)) others.insert(others.end(), p.y[j].begin(), p.y[j].end());
    }
    if (!is_anticomplete_between(g, p.x[i], others)) fail("3", i, "edge from X_i into B \\ (X_i u Y_i+3)");
    VertexSet ys;
    for (int j = 0; j < 5; ++j)
      if (j != i) ys.insert(ys.end(), p.y[j].begin(), p.y[j].end());
    if (!is_anticomplete_between(g, p.y[i], ys)) fail("3", i, "edge from Y_i into Y \\ Y_i");
  }
  return out;
}

// ---- structure theorems -----------------------------------------------------------

namespace {

void require_connected_and_free(const Graph& g, Family f) {
  if (!is_connected(g)) throw PreconditionError("input graph is not connected");
  const Membership m = family_membership(g, f);
  if (!m.is_free)
    throw PreconditionError("input contains an induced " + m.witness->pattern + " at " + set_text(m.witness->embedding),
                            m.witness->pattern);
}

}  // namespace

StructureCase classify_gem_free(const Graph& g) {
  if (auto k = find_clique_cutset(g)) return CliqueCutsetCase{*k};
  if (auto b = find_bisimplicial_vertex(g)) return *b;
  if (auto p = petersen_blowup_partition(g)) return PetersenBlowupCase{*p};
  throw TheoremViolation("no clique cutset, bisimplicial vertex or Petersen blowup in " + graph_text(g));
}

StructureCase structure_case_gem(const Graph& g) {
  require_connected_and_free(g, Family::F);
  StructureCase c = classify_gem_free(g);
  if (auto why = structure_case_violation(g, c)) throw TheoremViolation("invalid structure witness: " + *why);
  return c;
}

StructureCase classify_diamond_free(const Graph& g) {
  if (g.order() == 10 && g.size() == 15 && find_induced_embedding(g, petersen_graph())) return PetersenGraphCase{};
  if (auto k = find_clique_cutset(g)) return CliqueCutsetCase{*k};
  const bool has_c6 = find_induced_embedding(g, cycle_graph(6)).has_value();
  const int bound = has_c6 ? 2 : clique_number(g).omega;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= bound) return LowDegreeCase{v, g.degree(v), bound};
  throw TheoremViolation(std::string("no Petersen match, clique cutset or vertex of degree <= ") +
                         (has_c6 ? "2 (graph has an induced C6)" : "omega") + " in " + graph_text(g));
}

StructureCase structure_case_diamond(const Graph& g) {
  require_connected_and_free(g, Family::H);
  StructureCase c = classify_diamond_free(g);
  if (auto why = structure_case_violation(g, c)) throw TheoremViolation("invalid structure witness: " + *why);
  return c;
}

}  // namespace strucgraph
