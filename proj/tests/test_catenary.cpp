#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "facinv/catenary.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace facinv;

namespace {

/// Spanning and acyclic: |E| = |V| - 1 and the edges connect all vertices.
bool is_spanning_tree(const WeightedTree& t) {
  if (t.vertices.empty()) return t.edges.empty();
  if (t.edges.size() + 1 != t.vertices.size()) return false;
  std::map<FactVector, std::size_t> index;
  for (const auto& v : t.vertices) index.emplace(v, index.size());
  std::vector<std::size_t> parent(t.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : t.edges) {
    auto a = index.find(e.first), b = index.find(e.second);
    if (a == index.end() || b == index.end()) return false;
    const auto ra = find(a->second), rb = find(b->second);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

}  // namespace

TEST_CASE("catenary degrees in <11,36,39>") {
  auto s = numerical_semigroup({11, 36, 39});
  CHECK(catenary_naive(s, ElementVector{450}) == 16);
  CHECK(catenary_naive(s, ElementVector{351}) == 16);
  CHECK(catenary_dynamic(s, ElementVector{450}) == 16);
  CHECK(catenary_dynamic(s, ElementVector{351}) == 16);
  CatenaryEngine engine(s);
  CHECK(engine.catenary(ElementVector{450}) == 16);
  CHECK(engine.catenary(ElementVector{351}) == 16);
  CHECK(catenary_naive(s, ElementVector{0}) == 0);
  CHECK(catenary_naive(s, ElementVector{11}) == 0);
  CHECK_THROWS_AS(catenary_naive(s, ElementVector{12}), NotInSemigroup);
  CHECK_THROWS_AS(catenary_dynamic(s, ElementVector{12}), NotInSemigroup);
  CHECK_THROWS_AS(engine.mwst(ElementVector{12}), NotInSemigroup);
}

TEST_CASE("edges are canonical") {
  auto e = WeightedEdge::between(FactVector{0, 0, 9}, FactVector{9, 7, 0});
  CHECK(e.weight == 16);
  CHECK(e.first == FactVector{0, 0, 9});
  CHECK(e.second == FactVector{9, 7, 0});
  auto f = e.shifted(1);
  CHECK(f.first == FactVector{0, 1, 9});
  CHECK(f.weight == dist(f.first, f.second));
  CHECK(WeightedEdge::between(FactVector{1, 0}, FactVector{0, 1}) <
        WeightedEdge::between(FactVector{2, 0}, FactVector{0, 2}));
}

TEST_CASE("Kruskal's bottleneck does not depend on how ties are ordered") {
  auto s = numerical_semigroup({7, 10, 12, 15});
  std::mt19937_64 rng(17);
  for (Int g : {60, 84, 97, 120}) {
    const auto facts = factorizations(s, ElementVector{g}).facts;
    std::vector<WeightedEdge> edges;
    for (std::size_t a = 0; a < facts.size(); ++a) {
      for (std::size_t b = a + 1; b < facts.size(); ++b) {
        edges.push_back(WeightedEdge::between(facts[a], facts[b]));
      }
    }
    std::sort(edges.begin(), edges.end());
    const auto tree = kruskal(edges);
    const Int bottleneck = tree.empty() ? 0 : tree.back().weight;
    CHECK(bottleneck == oracle::catenary(facts));
    for (int round = 0; round < 5; ++round) {
      // Shuffle inside each weight class; kruskal only needs weight order
      // for the bottleneck to be right.
      auto shuffled = edges;
      auto begin = shuffled.begin();
      while (begin != shuffled.end()) {
        auto end = std::find_if(begin, shuffled.end(),
                                [&](const WeightedEdge& e) { return e.weight != begin->weight; });
        std::shuffle(begin, end, rng);
        begin = end;
      }
      const auto t = kruskal(shuffled);
      CHECK((t.empty() ? 0 : t.back().weight) == bottleneck);
      CHECK(t.size() + 1 == facts.size());
    }
  }
}

TEST_CASE("memoized trees are valid and isometric under covers") {
  for (const auto& s : {numerical_semigroup({11, 36, 39}), new_affine_semigroup({{2, 0}, {1, 1}, {0, 3}, {1, 4}}),
                        new_affine_semigroup({{3, 0}, {0, 2}, {1, 1}, {2, 3}})}) {
    CatenaryEngine engine(s);
    std::vector<ElementVector> elements;
    if (s.dimension() == 1) {
      for (Int g = 0; g <= 200; g += 3) elements.push_back(ElementVector{g});
    } else {
      for (Int x = 0; x <= 9; ++x)
        for (Int y = 0; y <= 9; ++y) elements.push_back(ElementVector{x, y});
    }
    for (const auto& g : elements) {
      const auto facts = factorizations(s, g);
      if (facts.empty()) continue;
      const auto& tree = engine.mwst(g);
      CHECK(is_spanning_tree(tree));
      CHECK(tree.vertices == facts.facts);
      if (facts.size() >= 2) {
        std::set<FactVector> ends;
        for (const auto& e : tree.edges) {
          ends.insert(e.first);
          ends.insert(e.second);
        }
        CHECK(std::vector<FactVector>(ends.begin(), ends.end()) == facts.facts);
      }
      CHECK(tree.max_weight() == catenary_naive(s, g));
      if (facts.size() <= 60) CHECK(tree.max_weight() == oracle::catenary(facts.facts));
      for (const auto& e : tree.edges) {
        CHECK(e.weight == dist(e.first, e.second));
        for (std::size_t i = 0; i < s.atom_count(); ++i) CHECK(e.shifted(i).weight == e.weight);
      }
      for (const auto& e : engine.graver_edges(g)) {
        CHECK(s.evaluate(e.first) == g);
        CHECK_FALSE(supports_intersect(e.first, e.second));
      }
    }
  }
}

TEST_CASE("catenary_dynamic agrees with catenary_naive on random semigroups") {
  const auto o = properties::catenary_methods_agree(properties::catenary_test_semigroups(4, 5), 200);
  CHECK_MESSAGE(o.ok, o.detail);
}

TEST_CASE("catenary_dynamic agrees with catenary_naive on affine semigroups") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 5; ++round) {
    auto s = properties::random_affine(rng, 2, 3 + round % 2, 5);
    for (Int x = 0; x <= 12; ++x) {
      for (Int y = 0; y <= 12; ++y) {
        const ElementVector g{x, y};
        if (!contains(s, g)) continue;
        CHECK_MESSAGE(catenary_dynamic(s, g) == catenary_naive(s, g), properties::describe(s));
      }
    }
  }
}

TEST_CASE("catenary_range") {
  auto s = numerical_semigroup({3, 5});
  const auto r = catenary_range(s, 16);
  const std::vector<std::pair<Int, Int>> expected{{0, 0},  {3, 0},  {5, 0},  {6, 0},
                                                  {8, 0},  {9, 0},  {10, 0}, {11, 0},
                                                  {12, 0}, {13, 0}, {14, 0}, {15, 5},
                                                  {16, 0}};
  CHECK(r == expected);
  CHECK_THROWS_AS(catenary_range(new_affine_semigroup({{1, 0}, {0, 1}}), 5), UnsupportedDimension);
  CHECK_THROWS_AS(catenary_range(s, -1), InvalidArgument);
}
