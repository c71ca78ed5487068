#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/harness.hpp"
#include "strucgraph/patterns.hpp"
#include "strucgraph/recognition.hpp"

using namespace strucgraph;

TEST_CASE("split partition examples") {
  for (int n = 1; n <= 6; ++n) {
    const auto p = split_partition(complete_graph(n));
    REQUIRE(p);
    CHECK(p->clique.size() == static_cast<std::size_t>(n));
    CHECK(p->stable.empty());
  }
  CHECK_FALSE(split_partition(cycle_graph(4)));
  CHECK_FALSE(split_partition(cycle_graph(5)));
  CHECK_FALSE(split_partition(catalog_lookup("2k2")));

  const auto paw = split_partition(catalog_lookup("paw"));
  REQUIRE(paw);
  CHECK(paw->clique == VertexSet{0, 1, 2});
  CHECK(paw->stable == VertexSet{3});

  const auto empty = split_partition(Graph(0));
  REQUIRE(empty);
  CHECK(empty->clique.empty());
}

TEST_CASE("split partition when a maximum clique is not the split clique") {
  // P4 has three maximum cliques; only the middle edge leaves a stable rest.
  const auto p = split_partition(path_graph(4));
  REQUIRE(p);
  CHECK(p->clique == VertexSet{1, 2});
  CHECK(p->stable == VertexSet{0, 3});
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
  const auto q = split_partition(g);
  REQUIRE(q);
  CHECK(is_valid_split_partition(g, *q));
}

TEST_CASE("complete split examples") {
  const auto star = complete_split_partition(star_graph(4));
  REQUIRE(star);
  CHECK(star->clique == VertexSet{0});
  CHECK(star->stable == VertexSet{1, 2, 3, 4});
  CHECK_FALSE(complete_split_partition(catalog_lookup("paw")));
  const auto k1 = complete_split_partition(complete_graph(1));
  REQUIRE(k1);
  CHECK(k1->clique == VertexSet{0});
  CHECK(k1->stable.empty());
  CHECK_FALSE(complete_split_partition(path_graph(4)));
}

TEST_CASE("split recognition agrees with brute force on all graphs up to 7 vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_small_graphs(n, false)) {
      const auto p = split_partition(g);
      REQUIRE_MESSAGE(p.has_value() == oracle::is_split(g), to_graph6(g));
      if (p) CHECK(is_valid_split_partition(g, *p));
      const auto q = complete_split_partition(g);
      REQUIRE_MESSAGE(q.has_value() == oracle::is_complete_split(g), to_graph6(g));
      if (q) CHECK(is_valid_split_partition(g, *q, true));
    }
}

TEST_CASE("split partition validator rejects bad partitions") {
  const Graph paw = catalog_lookup("paw");
  CHECK_FALSE(is_valid_split_partition(paw, {{1, 2}, {0, 3}}));
  CHECK_FALSE(is_valid_split_partition(paw, {{0, 1, 2}, {}}));
  CHECK_FALSE(is_valid_split_partition(paw, {{0, 1, 2}, {3, 3}}));
  CHECK(is_valid_split_partition(paw, {{0, 1, 2}, {3}}));
  CHECK_FALSE(is_valid_split_partition(paw, {{0, 1, 2}, {3}}, true));
}

TEST_CASE("Petersen blowup examples") {
  const auto id = petersen_blowup_partition(petersen_graph());
  REQUIRE(id);
  for (int i = 0; i < 10; ++i) CHECK(id->bags[i] == VertexSet{i});

  CHECK_FALSE(petersen_blowup_partition(cycle_graph(4)));

  const auto c6 = petersen_blowup_partition(cycle_graph(6));
  REQUIRE(c6);
  int singles = 0, empties = 0;
  for (const auto& bag : c6->bags) (bag.empty() ? empties : singles) += 1;
  CHECK(singles == 6);
  CHECK(empties == 4);
  CHECK(is_valid_blowup(cycle_graph(6), *c6));

  const auto none = petersen_blowup_partition(Graph(0));
  REQUIRE(none);
  for (const auto& bag : none->bags) CHECK(bag.empty());

  const auto k3 = petersen_blowup_partition(complete_graph(3));
  REQUIRE(k3);
  CHECK(std::count_if(k3->bags.begin(), k3->bags.end(), [](const VertexSet& b) { return b.size() == 3; }) == 1);
  CHECK_FALSE(petersen_blowup_partition(catalog_lookup("gem")));
}

TEST_CASE("blowup validator catches each failure") {
  const Graph pet = petersen_graph();
  BlowupPartition p{pet, {}};
  for (int i = 0; i < 10; ++i) p.bags.push_back({i});
  CHECK_FALSE(blowup_violation(pet, p));
  auto swapped = p;
  std::swap(swapped.bags[0], swapped.bags[5 + 2]);
  CHECK(blowup_violation(pet, swapped));
  auto missing = p;
  missing.bags[3].clear();
  CHECK(blowup_violation(pet, missing));
  CHECK_FALSE(blowup_violation(pet, missing, false));
  auto twice = p;
  twice.bags[3].push_back(0);
  CHECK(blowup_violation(pet, twice));
}

TEST_CASE("Petersen automorphism group") {
  const auto& autos = petersen_automorphisms();
  CHECK(autos.size() == 120);
  CHECK(std::is_sorted(autos.begin(), autos.end()));
  for (const auto& a : autos) CHECK(is_induced_embedding(petersen_graph(), petersen_graph(), a));
}

namespace {

// Two adjacent nonzero bags whose other neighbors are all empty collapse to
// one closed-neighborhood class, so the recognized bags need not mirror w.
bool has_mergeable_pair(const std::array<int, 10>& w) {
  const Graph pet = petersen_graph();
  for (auto [u, v] : pet.edges()) {
    if (!w[u] || !w[v]) continue;
    bool alone = true;
    for (Vertex x : pet.neighbors(u))
      if (x != v && w[x]) alone = false;
    for (Vertex x : pet.neighbors(v))
      if (x != u && w[x]) alone = false;
    if (alone) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("blowup round trip on seeded random weights") {
  std::mt19937_64 gen(2024);
  const auto& autos = petersen_automorphisms();
  int full_support = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::array<int, 10> w{};
    for (int& x : w) x = static_cast<int>(gen() % 5);
    const Blowup b = build_blowup(petersen_graph(), w);
    REQUIRE(is_valid_blowup(b.graph, b.partition));
    const auto p = petersen_blowup_partition(b.graph);
    REQUIRE(p);
    CHECK(is_valid_blowup(b.graph, *p));
    std::array<int, 10> got{};
    for (int i = 0; i < 10; ++i) got[i] = static_cast<int>(p->bags[i].size());

    // Rebuilding from the recognized sizes gives the same graph up to the
    // bag relabeling, so the multiset of bag sizes is preserved unless bags merged.
    if (!has_mergeable_pair(w)) {
      std::array<int, 10> sw = w, sg = got;
      std::sort(sw.begin(), sw.end());
      std::sort(sg.begin(), sg.end());
      CHECK(sw == sg);
    }
    // With every bag nonempty the quotient is Petersen itself and the sizes
    // are an automorphic image of w.
    if (std::all_of(w.begin(), w.end(), [](int x) { return x > 0; })) {
      ++full_support;
      bool matched = false;
      for (const auto& a : autos) {
        bool ok = true;
        for (int i = 0; i < 10 && ok; ++i) ok = got[a[i]] == w[i];
        matched = matched || ok;
      }
      CHECK(matched);
    }
  }
  CHECK(full_support > 0);
}

TEST_CASE("build_blowup input checks") {
  const std::vector<int> short_w{1, 2};
  CHECK_THROWS_AS(build_blowup(petersen_graph(), short_w), InputError);
  const std::vector<int> neg{1, 1, 1, 1, 1, 1, 1, 1, 1, -1};
  CHECK_THROWS_AS(build_blowup(petersen_graph(), neg), InputError);
}
