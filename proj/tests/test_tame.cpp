#include "doctest.h"
#include "facinv/hilbert.hpp"
#include "facinv/presentation.hpp"
#include "facinv/tame.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace facinv;

TEST_CASE("group elements in lexicographic order") {
  CHECK(nonzero_group_elements({2, 3}) ==
        std::vector<GroupElement>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(nonzero_group_elements({2, 2, 2}).size() == 7);
  CHECK_THROWS_AS(nonzero_group_elements({}), InvalidArgument);
  CHECK_THROWS_AS(nonzero_group_elements({1}), InvalidArgument);
}

TEST_CASE("block monoids") {
  auto b = block_monoid({3}, std::nullopt);
  CHECK(b.is_full());
  CHECK(b.atoms() == std::vector<ElementVector>{{0, 3}, {1, 1}, {3, 0}});
  auto sub = block_monoid({4}, std::vector<GroupElement>{{1}, {2}});
  CHECK(sub.atoms() == std::vector<ElementVector>{{0, 2}, {2, 1}, {4, 0}});
  CHECK_THROWS_AS(block_monoid({4}, std::vector<GroupElement>{{0}}), InvalidArgument);
  CHECK_THROWS_AS(block_monoid({4}, std::vector<GroupElement>{{4}}), InvalidArgument);
  CHECK_THROWS_AS(block_monoid({4}, std::vector<GroupElement>{{1}, {1}}), InvalidArgument);
  CHECK_THROWS_AS(block_monoid({4}, std::vector<GroupElement>{}), InvalidArgument);
}

TEST_CASE("block monoid atoms are the minimal zero-sum sequences") {
  for (const auto& moduli : std::vector<std::vector<Int>>{{2, 2}, {5}, {2, 3}}) {
    auto b = block_monoid(moduli, std::nullopt);
    const auto eq = *b.equations();
    // Every atom has at most D(G) terms; search a window one larger.
    Int bound = 1;
    for (Int m : moduli) bound *= m;
    const auto sols =
        oracle::solutions_in_window(DiophantineSystem::congruences(eq), bound, bound + 1);
    std::set<std::vector<Int>> atoms;
    for (const auto& a : b.atoms()) atoms.insert(a.coords());
    CHECK(atoms == oracle::irreducibles(sols));
  }
}

TEST_CASE("tame degrees of small block monoids") {
  CHECK(tame_full(block_monoid({2}, std::nullopt)) == 0);
  CHECK(tame_full(block_monoid({3}, std::nullopt)) == 3);
  CHECK(tame_full(semigroup_from_equations({{{1, 1, -1, -1}}, {0}})) == 2);
  CHECK_THROWS_AS(tame_full(numerical_semigroup({3, 5})), RequiresFullSemigroup);
  CHECK_THROWS_AS(tame_i_full(block_monoid({3}, std::nullopt), 7), InvalidArgument);
}

TEST_CASE("tame_i_full matches the definition on tiny full semigroups") {
  const auto o = properties::tame_against_definition(properties::tiny_full_systems());
  CHECK_MESSAGE(o.ok, o.detail);
  CHECK(o.cases == 10);
}

TEST_CASE("free semigroups have tame degree zero") {
  CHECK(tame_full(semigroup_from_equations({{{1, -1, 0}}, {0}})) == 0);
  for (const auto& sys : properties::tiny_full_systems()) {
    auto s = semigroup_from_equations(sys);
    const Int t = tame_full(s);
    CHECK(t >= 0);
    // Free exactly when the presentation is empty.
    CHECK((t == 0) == minimal_presentation(s).relations.empty());
  }
}

TEST_CASE("minimal elements of principal ideals") {
  auto s = block_monoid({3}, std::nullopt);
  for (std::size_t i = 0; i < s.atom_count(); ++i) {
    std::set<std::vector<Int>> got;
    for (const auto& z : minimals_principal_ideal(s, s.atom(i))) got.insert(z.coords());
    CHECK(got == oracle::minimal_geq(s.matrix(), s.atom(i).coords()));
    CHECK(got.count(FactVector::unit(s.atom_count(), i).coords()) == 1);
  }
}

TEST_CASE("tame degree of a set of factorizations") {
  CHECK(tame_degree_of_factorizations({}) == 0);
  CHECK(tame_degree_of_factorizations({FactVector{1, 2}}) == 0);
  // (3,0,0) and (0,1,1) in <3,4,5> at 9: each misses atoms the other uses.
  CHECK(tame_degree_of_factorizations({FactVector{0, 1, 1}, FactVector{3, 0, 0}}) == 3);
  auto s = numerical_semigroup({3, 4, 5});
  for (Int g = 0; g <= 40; ++g) {
    const ElementVector e{g};
    const auto facts = factorizations(s, e).facts;
    Int expected = 0;
    for (std::size_t i = 0; i < 3; ++i) expected = std::max(expected, oracle::tame_at(facts, i));
    CHECK(element_tame_degree(s, e) == expected);
  }
}
