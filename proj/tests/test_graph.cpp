#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/graph.hpp"
#include "strucgraph/harness.hpp"
#include "strucgraph/patterns.hpp"

using namespace strucgraph;

namespace {

// Straight transcription of the format: header, then bit x(i,j) for
// j = 1..n-1, i = 0..j-1, six bits per byte, most significant first.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

void check_invariants(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.adjacent(v, v));
    for (Vertex w : g.neighbors(v)) {
      CHECK(w >= 0);
      CHECK(w < g.order());
      CHECK(g.adjacent(w, v));
    }
  }
}

}  // namespace

TEST_CASE("edge list construction") {
  const Graph k2(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));

  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  check_invariants(c5);
}

TEST_CASE("construction rejects loops, range errors and repeats with positions") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{-1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  try {
    Graph(4, {{0, 1}, {2, 2}});
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(Graph(-1), InputError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
}

TEST_CASE("graph6 known strings") {
  const Graph k2 = from_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  // Path 0-1-2: bits 1,0,1 -> 101000 = 40 -> 'g'.
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6(">>graph6<<A_") == Graph(2, {{0, 1}}));
}

TEST_CASE("graph6 agrees with the reference encoder") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(gen() % 70);
    const Graph g = random_graph(n, 0.3, gen());
    const std::string text = to_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(from_graph6(text) == g);
  }
  for (const auto& name : catalog_names()) {
    const Graph g = catalog_lookup(name);
    CHECK(to_graph6(g) == reference_graph6(g));
  }
}

TEST_CASE("graph6 round trip on every graph with at most 7 vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_small_graphs(n, false)) {
      REQUIRE(from_graph6(to_graph6(g)) == g);
      check_invariants(g);
    }
}

TEST_CASE("graph6 errors carry positions") {
  CHECK_THROWS_AS(from_graph6(""), InputError);
  CHECK_THROWS_AS(from_graph6("B"), InputError);      // truncated body
  CHECK_THROWS_AS(from_graph6("A_?"), InputError);    // trailing byte
  CHECK_THROWS_AS(from_graph6("A "), InputError);     // byte below 63
  CHECK_THROWS_AS(from_graph6("A`"), InputError);     // padding bit set
  try {
    from_graph6("C~x");
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("graph6") != std::string::npos);
  }
  try {
    from_graph6("A`");
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
}

TEST_CASE("edge-list text format") {
  const Graph g = from_edge_list("4 3\n0 1\n1 2\n# comment\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(from_edge_list(to_edge_list(petersen_graph())) == petersen_graph());
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(from_edge_list("3 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 x\n"), InputError);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 1\n1 2\n"), InputError);
  try {
    from_edge_list("3 2\n0 1\n2 2\n");
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph("A_\n") == Graph(2, {{0, 1}}));
  CHECK(parse_graph("2 1\n0 1\n") == Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(parse_graph("A_\nA_\n"), InputError);
}

TEST_CASE("induced subgraphs") {
  const Graph k4 = complete_graph(4);
  const VertexSet three{0, 2, 3};
  const auto sub = induced_subgraph(k4, three);
  CHECK(sub.graph == complete_graph(3));
  CHECK(sub.mapping == three);

  const Graph c6 = cycle_graph(6);
  CHECK(induced_subgraph(c6, VertexSet{0, 1, 2, 3}).graph == path_graph(4));

  const Graph outer = induced_subgraph(petersen_graph(), VertexSet{0, 1, 2, 3, 4}).graph;
  CHECK(outer == cycle_graph(5));

  // Order of the set is significant.
  const auto rev = induced_subgraph(path_graph(3), VertexSet{2, 0, 1});
  CHECK(rev.graph.adjacent(0, 2));
  CHECK(rev.graph.adjacent(1, 2));
  CHECK_FALSE(rev.graph.adjacent(0, 1));

  CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{0, 0}), InputError);
  CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{4}), InputError);
}

TEST_CASE("connectivity") {
  const Graph two_k2 = catalog_lookup("2k2");
  const Components c = connectivity(two_k2);
  CHECK(c.components.size() == 2);
  CHECK_FALSE(c.is_connected);

  CHECK(connectivity(cycle_graph(7)).components.size() == 1);
  CHECK(connectivity(cycle_graph(7)).is_connected);

  const Graph p6 = remove_vertices(cycle_graph(7), VertexSet{6}).graph;
  CHECK(p6 == path_graph(6));
  CHECK(components_without(p6, VertexSet{2}).size() == 2);

  const Components empty = connectivity(Graph(0));
  CHECK(empty.components.empty());
  CHECK_FALSE(empty.is_connected);
}

TEST_CASE("components are anticomplete and exhaustive") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(12, 0.12, gen());
    const Components c = connectivity(g);
    std::vector<int> seen(12, 0);
    for (const auto& comp : c.components) {
      for (Vertex v : comp) ++seen[v];
      CHECK(is_connected(induced_subgraph(g, comp).graph));
      for (const auto& other : c.components)
        if (&other != &comp) CHECK(is_anticomplete_between(g, comp, other));
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("set queries") {
  const Graph k3 = complete_graph(3);
  CHECK(set_queries(k3, VertexSet{0, 1, 2}, VertexSet{}).is_clique);

  const Graph c4 = cycle_graph(4);
  const SetQueries q = set_queries(c4, VertexSet{0, 2}, VertexSet{1, 3});
  CHECK(q.is_complete_between);
  CHECK(q.is_stable);
  CHECK_FALSE(q.is_anticomplete_between);
  CHECK(q.neighborhood_of_set == VertexSet{1, 3});

  const Graph c5 = cycle_graph(5);
  CHECK(set_queries(c5, VertexSet{0}, VertexSet{2}).is_anticomplete_between);

  CHECK_THROWS_AS(set_queries(c5, VertexSet{0, 1}, VertexSet{1}), InputError);
}

TEST_CASE("set queries match brute force") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(8, 0.5, gen());
    const oracle::Adj a(g);
    const std::uint32_t xm = static_cast<std::uint32_t>(gen() % 256);
    const std::uint32_t ym = static_cast<std::uint32_t>(gen() % 256) & ~xm;
    VertexSet x, y;
    for (int v = 0; v < 8; ++v) {
      if (xm >> v & 1) x.push_back(v);
      if (ym >> v & 1) y.push_back(v);
    }
    const SetQueries q = set_queries(g, x, y);
    CHECK(q.is_clique == oracle::clique(a, xm));
    CHECK(q.is_stable == oracle::stable(a, xm));
    bool complete = true, anticomplete = true;
    for (Vertex u : x)
      for (Vertex v : y) {
        complete = complete && a(u, v);
        anticomplete = anticomplete && !a(u, v);
      }
    CHECK(q.is_complete_between == complete);
    CHECK(q.is_anticomplete_between == anticomplete);
    VertexSet nb;
    for (int v = 0; v < 8; ++v) {
      if (xm >> v & 1) continue;
      for (Vertex u : x)
        if (a(u, v)) {
          nb.push_back(v);
          break;
        }
    }
    CHECK(q.neighborhood_of_set == nb);
  }
}

TEST_CASE("complement and labels") {
  CHECK(cycle_graph(5).complement() == cycle_graph(5).complement());
  CHECK(oracle::isomorphic(cycle_graph(5).complement(), cycle_graph(5)));
  CHECK(path_graph(4).complement().size() == 3);
  const Graph l = path_graph(2).with_labels({"a", "b"});
  CHECK(l.labels().size() == 2);
  CHECK_THROWS_AS(path_graph(2).with_labels({"a"}), InputError);
}
