#include "doctest.h"
#include "facinv/delta.hpp"
#include "facinv/grobner.hpp"
#include "facinv/hilbert.hpp"
#include "facinv/presentation.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace facinv;

TEST_CASE("delta sets of small numerical semigroups") {
  struct Case {
    std::vector<Int> gens;
    std::vector<Int> delta;
  };
  const std::vector<Case> cases{
      {{3, 4, 5}, {1}},
      {{17, 33, 53, 71}, {2, 4, 6}},
      {{11, 36, 39}, {1, 2, 3, 5, 7, 9, 11, 13, 15}},
      {{11, 23, 27, 31, 43}, {4}},
      {{2, 3}, {1}},
      {{6, 9, 20}, {1, 2, 3, 4}},
  };
  for (const auto& c : cases) {
    auto s = numerical_semigroup(c.gens);
    CHECK_MESSAGE(delta_set_hilbert(s) == c.delta, properties::describe(s));
    CHECK_MESSAGE(delta_set_grobner(s) == c.delta, properties::describe(s));
  }
}

TEST_CASE("half-factorial semigroups have empty delta sets") {
  for (const auto& s : {new_affine_semigroup({{2, 0}, {1, 1}, {0, 2}}),
                        new_affine_semigroup({{1, 0}, {1, 1}, {1, 2}, {1, 5}}),
                        numerical_semigroup({1})}) {
    CHECK(delta_set_hilbert(s).empty());
    CHECK(delta_set_grobner(s).empty());
  }
}

TEST_CASE("homogenization puts (1,0) first") {
  auto h = homogenize(numerical_semigroup({3, 4, 5}));
  CHECK(h.atoms() == std::vector<ElementVector>{{1, 0}, {1, 3}, {1, 4}, {1, 5}});
  auto h2 = homogenize(new_affine_semigroup({{0, 2}, {1, 0}}));
  CHECK(h2.atoms() == std::vector<ElementVector>{{1, 0, 0}, {1, 0, 2}, {1, 1, 0}});
}

TEST_CASE("both delta algorithms agree on random semigroups") {
  const auto o = properties::delta_methods_agree(properties::delta_test_semigroups(12, 6, 77));
  CHECK_MESSAGE(o.ok, o.detail);
}

TEST_CASE("element deltas lie inside the delta set") {
  auto semigroups = properties::delta_test_semigroups(8, 0, 78);
  const auto o = properties::delta_union_inside(semigroups, 150);
  CHECK_MESSAGE(o.ok, o.detail);
  auto affine = properties::delta_test_semigroups(0, 4, 79);
  const auto o2 = properties::delta_union_inside(affine, 14);
  CHECK_MESSAGE(o2.ok, o2.detail);
}

TEST_CASE("element deltas match the box enumeration") {
  auto s = numerical_semigroup({17, 33, 53, 71});
  for (Int x = 0; x <= 300; ++x) {
    const auto facts = oracle::factorizations(s.atoms(), ElementVector{x});
    const auto expected = oracle::delta(facts);
    const auto got = delta_of_element(s, ElementVector{x});
    CHECK(std::set<Int>(got.begin(), got.end()) == expected);
  }
}

TEST_CASE("the length-bounded chain is monotone") {
  // Rebuild the chain I_0 ⊂ I_m ⊂ I_2m ⊂ ⋯ from the slack Hilbert basis and
  // check that after absorbing slack j every generator of slack ≤ j reduces
  // to zero.
  for (const auto& gens : std::vector<std::vector<Int>>{{17, 33, 53, 71}, {11, 36, 39}, {5, 7, 9}}) {
    auto s = numerical_semigroup(gens);
    const std::size_t k = s.atom_count();
    IntMatrix a(2, std::vector<Int>(2 * k + 1, 0));
    for (std::size_t j = 0; j < k; ++j) {
      a[0][j] = s.atom(j)[0];
      a[0][k + j] = -s.atom(j)[0];
      a[1][j] = 1;
      a[1][k + j] = -1;
    }
    a[1][2 * k] = -1;
    const auto order = TermOrder::grlex(k);
    std::map<Int, std::vector<Binomial>> by_slack;
    for (const auto& x : hilbert_basis(DiophantineSystem::homogeneous(a))) {
      std::vector<Int> z(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<Int> w(x.begin() + static_cast<std::ptrdiff_t>(k), x.end() - 1);
      CHECK(x[2 * k] == FactVector(z).total() - FactVector(w).total());
      auto b = Binomial::make(FactVector(z), FactVector(w), order, CommonFactors::Keep);
      if (!b.is_zero()) by_slack[x[2 * k]].push_back(b);
    }
    const auto delta = delta_set_hilbert(s);
    const BuchbergerOptions options{CommonFactors::Keep, {}, nullptr};
    BinomialIdealBasis g{{}, order, false};
    std::set<Int> grew;
    for (const auto& [j, fs] : by_slack) {
      if (j > delta.back()) break;
      const bool grows = std::any_of(fs.begin(), fs.end(), [&](const Binomial& f) {
        return !normal_form(f, g, CommonFactors::Keep).is_zero();
      });
      if (grows && j > 0) grew.insert(j);
      g = extend_groebner_basis(g, fs, options);
      for (const auto& [i, earlier] : by_slack) {
        if (i > j) break;
        for (const auto& f : earlier) CHECK(normal_form(f, g, CommonFactors::Keep).is_zero());
      }
    }
    // Every slack at which the chain grows is a delta value.
    for (Int j : grew) CHECK(std::find(delta.begin(), delta.end(), j) != delta.end());
  }
}

TEST_CASE("t-free members of the lex basis do not contribute") {
  auto s = numerical_semigroup({11, 36, 39});
  auto h = homogenize(s);
  const auto order = TermOrder::lex(h.atom_count());
  const auto pres = minimal_presentation(h);
  const auto gb = reduce_basis(buchberger(presentation_binomials(pres, order), order));
  std::set<Int> t_exponents;
  bool has_t_free = false;
  for (const auto& b : gb.binomials) {
    CHECK(b.minus()[0] == 0);
    if (b.plus()[0] > 0) {
      t_exponents.insert(b.plus()[0]);
    } else {
      has_t_free = true;
    }
  }
  CHECK(has_t_free);
  const auto delta = delta_set_grobner(s);
  CHECK(std::set<Int>(delta.begin(), delta.end()) == t_exponents);
}

TEST_CASE("budgets abort both algorithms") {
  auto s = numerical_semigroup({17, 33, 53, 71});
  Budget a(20), b(20);
  CHECK_THROWS_AS(delta_set_hilbert(s, &a), ResourceLimitExceeded);
  CHECK_THROWS_AS(delta_set_grobner(s, &b), ResourceLimitExceeded);
}
