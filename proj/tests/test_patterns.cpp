#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/harness.hpp"
#include "strucgraph/patterns.hpp"

using namespace strucgraph;

namespace {

enum { a, b, c, d, e };
// C6 vertices v1..v6 and the extra vertices of F1..F3.
enum { v1, v2, v3, v4, v5, v6, s7, s8 };

Graph c6_plus(std::vector<Edge> extra) {
  std::vector<Edge> es{{v1, v2}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v6}, {v1, v6}};
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(8, es);
}

}  // namespace

TEST_CASE("catalog orders and sizes") {
  struct Row {
    const char* name;
    int n;
    int m;
  };
  const Row rows[] = {
      {"p2", 2, 1},  {"p7", 7, 6},     {"c3", 3, 3},      {"c7", 7, 7},  {"k1", 1, 0},  {"k5", 5, 10},
      {"2k2", 4, 2}, {"k2uk1", 3, 1},  {"paw", 4, 4},     {"diamond", 4, 5}, {"gem", 5, 7}, {"h1", 5, 5},
      {"h2", 5, 6},  {"q1", 10, 10},   {"q2", 8, 8},      {"q3", 8, 8},  {"q4", 9, 10}, {"q5", 7, 7},
      {"f1", 8, 9},  {"f2", 8, 11},    {"f3", 8, 9},      {"petersen", 10, 15},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const Graph g = catalog_lookup(r.name);
    CHECK(g.order() == r.n);
    CHECK(g.size() == r.m);
  }
  const Graph p = catalog_lookup("Petersen");
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
}

TEST_CASE("catalog matches independently typed tables") {
  const Graph paw(4, {{a, b}, {b, c}, {c, a}, {a, d}});
  const Graph h1(5, {{a, b}, {b, c}, {c, a}, {a, d}, {d, e}});
  const Graph h2(5, {{a, b}, {b, c}, {c, a}, {a, d}, {d, e}, {a, e}});
  CHECK(catalog_lookup("paw") == paw);
  CHECK(catalog_lookup("h1") == h1);
  CHECK(catalog_lookup("h2") == h2);
  CHECK(catalog_lookup("f1") == c6_plus({{s7, v1}, {s7, s8}, {s8, v4}}));
  CHECK(catalog_lookup("f2") == c6_plus({{s7, v1}, {s7, v2}, {s7, s8}, {s8, v1}, {s8, v4}}));
  CHECK(catalog_lookup("f3") == c6_plus({{s7, v1}, {s7, v4}, {s8, s7}}));

  // gem: P4 plus a vertex adjacent to all of it; diamond: K4 minus an edge.
  CHECK(oracle::isomorphic(catalog_lookup("gem"), Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}})));
  CHECK(oracle::isomorphic(catalog_lookup("diamond"), Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}})));

  // Q graphs: the base with one leaf on each listed vertex.
  auto with_leaves = [](const Graph& base, std::vector<int> at) {
    std::vector<Edge> es = base.edges();
    int next = base.order();
    for (int v : at) es.emplace_back(v, next++);
    return Graph(next, es);
  };
  CHECK(oracle::isomorphic(catalog_lookup("q1"), with_leaves(cycle_graph(5), {0, 1, 2, 3, 4})));
  CHECK(oracle::isomorphic(catalog_lookup("q2"), with_leaves(cycle_graph(4), {0, 1, 2, 3})));
  CHECK(oracle::isomorphic(catalog_lookup("q3"), with_leaves(h1, {b, c, e})));
  CHECK(oracle::isomorphic(catalog_lookup("q4"), with_leaves(h2, {b, c, d, e})));
  CHECK(oracle::isomorphic(catalog_lookup("q5"), with_leaves(paw, {b, c, d})));

  // Petersen labeling: outer cycle, spokes, inner pentagram.
  const Graph pet = petersen_graph();
  for (int i = 0; i < 5; ++i) {
    CHECK(pet.adjacent(i, (i + 1) % 5));
    CHECK(pet.adjacent(i, i + 5));
    CHECK(pet.adjacent(i + 5, (i + 2) % 5 + 5));
  }
}

TEST_CASE("catalog lookup is case-insensitive and knows stars") {
  CHECK(catalog_lookup("GEM") == catalog_lookup("gem"));
  CHECK(catalog_lookup("K1,4") == star_graph(4));
  CHECK(catalog_lookup("star3") == star_graph(3));
  CHECK_THROWS_AS(catalog_lookup("nonsense"), InputError);
  CHECK_THROWS_AS(catalog_lookup("k1,0"), InputError);
  CHECK_THROWS_AS(cycle_graph(2), InputError);
}

TEST_CASE("embedding examples") {
  const Graph dia = catalog_lookup("diamond");
  const auto id = find_induced_embedding(dia, dia);
  REQUIRE(id);
  CHECK(*id == Embedding{0, 1, 2, 3});

  CHECK_FALSE(find_induced_embedding(petersen_graph(), cycle_graph(4)));

  std::vector<Edge> wheel = cycle_graph(5).edges();
  for (int i = 0; i < 5; ++i) wheel.emplace_back(i, 5);
  const Graph w5(6, wheel);
  const auto gem = find_induced_embedding(w5, catalog_lookup("gem"));
  REQUIRE(gem);
  CHECK(is_induced_embedding(w5, catalog_lookup("gem"), *gem));
  CHECK((*gem)[4] == 5);  // the hub plays the dominating vertex
}

TEST_CASE("embedding search agrees with the brute-force oracle") {
  const std::vector<std::string> names{"p4", "c4", "p5", "c5", "paw", "diamond", "gem", "h1", "h2", "2k2", "k2uk1", "p6", "c6"};
  std::vector<Graph> hosts;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_small_graphs(n, false)) hosts.push_back(g);
  std::mt19937_64 gen(5);
  for (int i = 0; i < 150; ++i) hosts.push_back(random_graph(8, 0.2 + 0.6 * (i % 7) / 7.0, gen()));
  for (const auto& name : names) {
    const Graph pat = catalog_lookup(name);
    for (const Graph& h : hosts) {
      const auto e = find_induced_embedding(h, pat);
      const long count = oracle::count_embeddings(h, pat);
      REQUIRE_MESSAGE(e.has_value() == (count > 0), name << " in " << to_graph6(h));
      if (e) CHECK(is_induced_embedding(h, pat, *e));
      CHECK(count_induced_embeddings(h, pat) == static_cast<std::size_t>(count));
    }
  }
}

TEST_CASE("returned embedding is the lexicographically least") {
  std::mt19937_64 gen(9);
  for (int i = 0; i < 100; ++i) {
    const Graph h = random_graph(8, 0.5, gen());
    const Graph pat = catalog_lookup("p4");
    std::optional<Embedding> first;
    for_each_induced_embedding(h, pat, [&](const Embedding& emb) {
      if (!first || emb < *first) first = emb;
      return true;
    });
    CHECK(find_induced_embedding(h, pat) == first);
  }
}

TEST_CASE("copies are embeddings divided by automorphisms") {
  CHECK(count_induced_copies(cycle_graph(4), cycle_graph(4)) == 1);
  CHECK(count_induced_embeddings(cycle_graph(4), cycle_graph(4)) == 8);
  CHECK(count_induced_copies(complete_graph(5), complete_graph(3)) == 10);
  CHECK(count_induced_copies(petersen_graph(), cycle_graph(5)) == 12);
  CHECK(count_induced_copies(catalog_lookup("q2"), cycle_graph(4)) == 1);
}

TEST_CASE("family membership examples") {
  const Membership p7 = family_membership(path_graph(7), Family::C);
  CHECK_FALSE(p7.is_free);
  REQUIRE(p7.witness);
  CHECK(p7.witness->pattern == "p7");
  CHECK(is_induced_embedding(path_graph(7), path_graph(7), p7.witness->embedding));

  CHECK(family_membership(petersen_graph(), Family::F).is_free);
  CHECK(family_membership(cycle_graph(6), Family::H).is_free);
  CHECK(family_name(parse_family("h")) == "H");
  CHECK_THROWS_AS(parse_family("Z"), InputError);
}

TEST_CASE("family membership agrees with the oracle on small graphs") {
  for (Family f : {Family::L1, Family::L2, Family::C, Family::D, Family::F, Family::H}) {
    for (int n = 1; n <= 7; ++n)
      for (const Graph& g : enumerate_small_graphs(n, true)) {
        bool free = true;
        for (const auto& name : family_members(f))
          if (oracle::contains_induced(g, catalog_lookup(name))) free = false;
        const Membership m = family_membership(g, f);
        REQUIRE(m.is_free == free);
        if (m.witness) {
          CHECK(is_induced_embedding(g, catalog_lookup(m.witness->pattern), m.witness->embedding));
        }
      }
  }
}
