#include "doctest.h"
#include "facinv/hilbert.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace facinv;

namespace {

std::vector<std::vector<Int>> coords(const std::vector<FactVector>& vs) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

}  // namespace

TEST_CASE("Hilbert basis of x + y = 2z") {
  auto h = hilbert_basis(DiophantineSystem::homogeneous({{1, 1, -2}}));
  CHECK(coords(h) == std::vector<std::vector<Int>>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}});
}

TEST_CASE("Hilbert basis of a congruence") {
  // x + 2y ≡ 0 (mod 3)
  auto h = hilbert_basis(DiophantineSystem::congruences({{{1, 2}}, {3}}));
  CHECK(coords(h) == std::vector<std::vector<Int>>{{0, 3}, {1, 1}, {3, 0}});
}

TEST_CASE("Hilbert basis with an inequality") {
  // x - 2y ≥ 0: generated by (1,0) and (2,1).
  auto h = hilbert_basis(DiophantineSystem::homogeneous({{1, -2}}, RowRelation::GreaterEqual));
  CHECK(coords(h) == std::vector<std::vector<Int>>{{1, 0}, {2, 1}});
}

TEST_CASE("a pointed cone with only the zero solution") {
  CHECK(hilbert_basis(DiophantineSystem::homogeneous({{1, 2, 3}})).empty());
}

TEST_CASE("minimal solutions of inhomogeneous systems") {
  auto m = minimal_solutions(DiophantineSystem::inhomogeneous({{3, 4, 5}}, RowRelation::GreaterEqual, {8}));
  for (const auto& z : m) {
    CHECK(3 * z[0] + 4 * z[1] + 5 * z[2] >= 8);
  }
  std::set<std::vector<Int>> expected = oracle::minimal_geq({{3, 4, 5}}, {8});
  auto got = coords(m);
  CHECK(std::set<std::vector<Int>>(got.begin(), got.end()) == expected);

  CHECK(minimal_solutions(DiophantineSystem::inhomogeneous({{2, 4}}, RowRelation::Equal, {3})).empty());
  CHECK(coords(minimal_solutions(DiophantineSystem::inhomogeneous({{1, -1}}, RowRelation::Equal, {2}))) ==
        std::vector<std::vector<Int>>{{2, 0}});
}

TEST_CASE("Graver basis of <3,4,5> against the box enumeration") {
  auto s = numerical_semigroup({3, 4, 5});
  auto g = graver_basis(s);
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> got;
  for (const auto& p : g) {
    CHECK(p.first > p.second);
    CHECK_FALSE(supports_intersect(p.first, p.second));
    CHECK(s.evaluate(p.first) == s.evaluate(p.second));
    got.emplace(p.first.coords(), p.second.coords());
  }
  CHECK(got.size() == g.size());
  CHECK(got == oracle::graver(s.atoms(), 6));
  CHECK(got.count({{0, 5, 0}, {0, 0, 4}}) == 1);
  CHECK(g.size() == 7);
}

TEST_CASE("Graver bases of affine semigroups against the box enumeration") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 8; ++round) {
    auto s = properties::random_affine(rng, 2, 3 + round % 2, 4);
    auto g = graver_basis(s);
    std::set<std::pair<std::vector<Int>, std::vector<Int>>> got;
    Int box = 1;
    for (const auto& p : g) {
      got.emplace(p.first.coords(), p.second.coords());
      for (Int x : p.first) box = std::max(box, x);
      for (Int x : p.second) box = std::max(box, x);
    }
    if (s.atom_count() > 4 || box > 8) continue;
    CHECK_MESSAGE(got == oracle::graver(s.atoms(), box + 1), properties::describe(s));
  }
}

TEST_CASE("minimal factorizations in a principal ideal") {
  auto s = numerical_semigroup({3, 4, 5});
  auto m = minimal_factorizations_in_ideal(s, ElementVector{8});
  std::set<std::vector<Int>> got;
  for (const auto& z : m) {
    CHECK(contains(s, s.evaluate(z) - ElementVector{8}));
    got.insert(z.coords());
  }
  // Candidates: every minimal z with φ(z) - 8 ∈ S, by enumeration.
  std::vector<std::vector<Int>> in_ideal;
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6; ++b)
      for (Int c = 0; c <= 6; ++c) {
        const Int v = 3 * a + 4 * b + 5 * c;
        if (v >= 8 && contains(s, ElementVector{v - 8})) in_ideal.push_back({a, b, c});
      }
  CHECK(got == oracle::minimal(in_ideal));
  CHECK(minimal_factorizations_in_ideal(s, ElementVector{0}) == std::vector<FactVector>{{0, 0, 0}});
}

TEST_CASE("semigroups from equations are full") {
  auto s = semigroup_from_equations({{{1, 1, -1, -1}}, {0}});
  CHECK(s.is_full());
  CHECK(s.atoms() == std::vector<ElementVector>{{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}});
  CHECK_THROWS_AS(semigroup_from_equations({{{1, 1}}, {0}}), InvalidArgument);
}

TEST_CASE("budgets abort the completion") {
  Budget b(5);
  CHECK_THROWS_AS(graver_basis(numerical_semigroup({17, 33, 53, 71}), &b), ResourceLimitExceeded);
}

TEST_CASE("Hilbert bases and minimal solutions match brute force on random systems") {
  const auto o = properties::hilbert_against_window(40, 2024, 1e6);
  CHECK_MESSAGE(o.ok, o.detail);
  CHECK(o.cases == 40);
}
