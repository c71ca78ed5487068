#include "strucgraph/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>

#include "strucgraph/errors.hpp"

namespace strucgraph {

namespace {

struct PatternTable {
  int order;
  std::vector<Edge> edges;
};

// Fixed adjacency tables. C6-based graphs use v1..v6 = 0..5 with v_i ~ v_{i+1};
// paw uses a,b,c,d = 0..3 (edges ab, bc, ca, ad) and e = 4 for H1/H2.
const std::map<std::string, PatternTable>& tables() {
  static const std::map<std::string, PatternTable> kTables = [] {
    std::map<std::string, PatternTable> t;
    auto path = [](int n) {
      PatternTable p{n, {}};
      for (int i = 0; i + 1 < n; ++i) p.edges.emplace_back(i, i + 1);
      return p;
    };
    auto cycle = [&](int n) {
      PatternTable p = path(n);
      p.edges.emplace_back(0, n - 1);
      return p;
    };
    auto complete = [](int n) {
      PatternTable p{n, {}};
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.edges.emplace_back(i, j);
      return p;
    };
    for (int n = 2; n <= 7; ++n) t["p" + std::to_string(n)] = path(n);
    for (int n = 3; n <= 7; ++n) t["c" + std::to_string(n)] = cycle(n);
    for (int n = 1; n <= 5; ++n) t["k" + std::to_string(n)] = complete(n);

    t["2k2"] = {4, {{0, 1}, {2, 3}}};
    t["k2uk1"] = {3, {{0, 1}}};
    t["paw"] = {4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}};
    t["diamond"] = {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    t["gem"] = {5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}};
    t["h1"] = {5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}}};
    t["h2"] = {5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}};

    // Q1: C5 with a leaf on every cycle vertex.
    t["q1"] = {10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}};
    // Q2: C4 with a leaf on every cycle vertex.
    t["q2"] = {8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
    // Q3: H1 with leaves on its non-cut vertices b, c, e.
    t["q3"] = {8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {2, 6}, {4, 7}}};
    // Q4: H2 with leaves on its non-cut vertices b, c, d, e.
    t["q4"] = {9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4},
                   {1, 5}, {2, 6}, {3, 7}, {4, 8}}};
    // Q5: paw with leaves on its non-cut vertices b, c, d.
    t["q5"] = {7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}};

    PatternTable c6 = cycle(6);
    auto extend = [&](std::vector<Edge> extra) {
      PatternTable p{8, c6.edges};
      p.edges.insert(p.edges.end(), extra.begin(), extra.end());
      return p;
    };
    // F1: y1 = 6, y4 = 7.
    t["f1"] = extend({{0, 6}, {6, 7}, {3, 7}});
    // F2: x1 = 6, z1 = 7.
    t["f2"] = extend({{0, 6}, {1, 6}, {6, 7}, {0, 7}, {3, 7}});
    // F3: z1 = 6, r = 7.
    t["f3"] = extend({{0, 6}, {3, 6}, {6, 7}});

    PatternTable pet{10, {}};
    for (int i = 0; i < 5; ++i) {
      pet.edges.emplace_back(i, (i + 1) % 5);
      pet.edges.emplace_back(i, i + 5);
      pet.edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    t["petersen"] = pet;
    return t;
  }();
  return kTables;
}

const std::map<std::string, Graph>& graphs() {
  static const std::map<std::string, Graph> kGraphs = [] {
    std::map<std::string, Graph> out;
    for (const auto& [name, table] : tables()) out.emplace(name, Graph(table.order, table.edges));
    return out;
  }();
  return kGraphs;
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == ' ' || c == '_' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (out == "k2+k1" || out == "k2∪k1") out = "k2uk1";
  return out;
}

// Backtracking over pattern vertices in index order with host candidates in
// ascending order, so embeddings are produced lexicographically.
template <typename Visit>
void embed_search(const Graph& host, const Graph& pattern, Visit&& visit) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return;
  Embedding emb(static_cast<std::size_t>(k), -1);
  if (k == 0) {
    visit(emb);
    return;
  }

  if (n <= 64) {
    std::vector<std::uint64_t> degree_ok(static_cast<std::size_t>(k), 0);
    for (int p = 0; p < k; ++p)
      for (Vertex v = 0; v < n; ++v)
        if (host.degree(v) >= pattern.degree(p)) degree_ok[p] |= std::uint64_t{1} << v;
    bool stop = false;
    auto rec = [&](auto&& self, int depth, std::uint64_t used) -> void {
      std::uint64_t cand = degree_ok[depth] & ~used;
      for (int j = 0; j < depth && cand; ++j) {
        const std::uint64_t nb = host.neighbor_mask(emb[j]);
        cand &= pattern.adjacent(j, depth) ? nb : ~nb;
      }
      while (cand && !stop) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        emb[depth] = v;
        if (depth + 1 == k) {
          if (!visit(emb)) stop = true;
        } else {
          self(self, depth + 1, used | (std::uint64_t{1} << v));
        }
      }
    };
    rec(rec, 0, 0);
    return;
  }

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int depth) -> void {
    for (Vertex v = 0; v < n && !stop; ++v) {
      if (used[v] || host.degree(v) < pattern.degree(depth)) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) ok = pattern.adjacent(j, depth) == host.adjacent(emb[j], v);
      if (!ok) continue;
      emb[depth] = v;
      if (depth + 1 == k) {
        if (!visit(emb)) stop = true;
      } else {
        used[v] = 1;
        self(self, depth + 1);
        used[v] = 0;
      }
    }
  };
  rec(rec, 0);
}

}  // namespace

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star needs a non-negative leaf count");
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

Graph petersen_graph() { return graphs().at("petersen"); }

Graph catalog_lookup(std::string_view name) {
  const std::string key = normalize(name);
  if (auto it = graphs().find(key); it != graphs().end()) return it->second;
  for (std::string_view prefix : {"k1,", "star"}) {
    if (key.starts_with(prefix) && key.size() > prefix.size()) {
      int leaves = 0;
      const char* first = key.data() + prefix.size();
      const char* last = key.data() + key.size();
      auto [ptr, ec] = std::from_chars(first, last, leaves);
      if (ec == std::errc{} && ptr == last && leaves >= 1 && leaves <= 1000) return star_graph(leaves);
    }
  }
  throw InputError("unknown pattern name '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : tables()) out.push_back(name);
  return out;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding) {
  if (static_cast<int>(embedding.size()) != pattern.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(host.order()), 0);
  for (Vertex v : embedding) {
    if (v < 0 || v >= host.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < pattern.order(); ++i)
    for (int j = i + 1; j < pattern.order(); ++j)
      if (pattern.adjacent(i, j) != host.adjacent(embedding[i], embedding[j])) return false;
  return true;
}

std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern) {
  std::optional<Embedding> found;
  embed_search(host, pattern, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const Embedding&)>& visit) {
  embed_search(host, pattern, visit);
}

std::size_t count_induced_embeddings(const Graph& host, const Graph& pattern) {
  std::size_t count = 0;
  embed_search(host, pattern, [&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

std::size_t count_induced_copies(const Graph& host, const Graph& pattern) {
  const std::size_t automorphisms = count_induced_embeddings(pattern, pattern);
  return count_induced_embeddings(host, pattern) / automorphisms;
}

Family parse_family(std::string_view name) {
  const std::string key = normalize(name);
  if (key == "l1") return Family::L1;
  if (key == "l2") return Family::L2;
  if (key == "c") return Family::C;
  if (key == "d") return Family::D;
  if (key == "f") return Family::F;
  if (key == "h") return Family::H;
  throw InputError("unknown family '" + std::string(name) + "' (expected L1, L2, C, D, F or H)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F: return "F";
    case Family::H: return "H";
  }
  return "?";
}

const std::vector<std::string>& family_members(Family f) {
  static const std::vector<std::string> kL1{"p5", "c5", "c4", "h1", "h2"};
  static const std::vector<std::string> kL2{"p4", "c4", "paw"};
  static const std::vector<std::string> kC{"p7", "c7", "q1", "q2", "q3", "q4"};
  static const std::vector<std::string> kD{"p6", "c6", "q2", "q5"};
  static const std::vector<std::string> kF{"p7", "c7", "c4", "gem"};
  static const std::vector<std::string> kH{"p7", "c7", "c4", "diamond"};
  switch (f) {
    case Family::L1: return kL1;
    case Family::L2: return kL2;
    case Family::C: return kC;
    case Family::D: return kD;
    case Family::F: return kF;
    case Family::H: return kH;
  }
  return kL1;
}

std::optional<Witness> find_any_pattern(const Graph& g, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const std::string key = normalize(name);
    std::optional<Embedding> e;
    if (auto it = graphs().find(key); it != graphs().end())
      e = find_induced_embedding(g, it->second);
    else
      e = find_induced_embedding(g, catalog_lookup(name));
    if (e) return Witness{key, *e};
  }
  return std::nullopt;
}

Membership family_membership(const Graph& g, Family f) {
  Membership m;
  m.witness = find_any_pattern(g, family_members(f));
  m.is_free = !m.witness.has_value();
  return m;
}

}  // namespace strucgraph
