#include "facinv/delta.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "facinv/grobner.hpp"
#include "facinv/hilbert.hpp"
#include "facinv/presentation.hpp"

namespace facinv {

AffineSemigroup homogenize(const AffineSemigroup& s) {
  std::vector<ElementVector> gens;
  gens.reserve(s.atom_count() + 1);
  std::vector<Int> zero(s.dimension() + 1, 0);
  zero[0] = 1;
  gens.emplace_back(zero);
  for (const auto& a : s.atoms()) {
    std::vector<Int> v{1};
    v.insert(v.end(), a.begin(), a.end());
    gens.emplace_back(std::move(v));
  }
  // Every generator has first coordinate 1, so none is a sum of others and
  // the lexicographic sort keeps (1,0) first and the α order after it.
  return new_affine_semigroup(std::move(gens));
}

std::vector<Int> delta_set_hilbert(const AffineSemigroup& s, Budget* budget) {
  const Presentation pres = minimal_presentation(s, budget);
  const auto bounds = delta_bounds(s, pres);
  if (!bounds) return {};
  const Int m = bounds->min;

  std::set<Int> found;
  for (const auto& b : betti_elements(s, pres)) {
    for (Int x : delta_of_element(s, b)) found.insert(x);
  }
  found.insert(m);
  const Int top = *found.rbegin();

  const std::size_t k = s.atom_count();
  IntMatrix a = s.matrix();
  IntMatrix slack;
  for (const auto& row : a) {
    std::vector<Int> r(2 * k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
      r[j] = row[j];
      r[k + j] = -row[j];
    }
    slack.push_back(std::move(r));
  }
  std::vector<Int> lengths(2 * k + 1, 1);
  for (std::size_t j = 0; j < k; ++j) lengths[k + j] = -1;
  lengths[2 * k] = -1;
  slack.push_back(std::move(lengths));

  const TermOrder order = TermOrder::grlex(k);
  std::map<Int, std::vector<Binomial>> by_slack;
  for (const auto& x : hilbert_basis(DiophantineSystem::homogeneous(std::move(slack)), budget)) {
    const Int i = x[2 * k];
    if (i % m != 0 || i > top) continue;
    std::vector<Int> z(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Int> w(x.begin() + static_cast<std::ptrdiff_t>(k), x.end() - 1);
    Binomial b = Binomial::make(FactVector(std::move(z)), FactVector(std::move(w)), order,
                                CommonFactors::Keep);
    if (!b.is_zero()) by_slack[i].push_back(std::move(b));
  }

  const BuchbergerOptions options{CommonFactors::Keep, atom_weights(s), budget};
  std::vector<Binomial> seed = by_slack[0];
  seed.insert(seed.end(), by_slack[m].begin(), by_slack[m].end());
  BinomialIdealBasis g = buchberger(std::move(seed), order, options);
  for (Int j = 2 * m; j <= top - m; j += m) {
    const auto& gens = by_slack[j];
    const bool grows = std::any_of(gens.begin(), gens.end(), [&](const Binomial& f) {
      return !normal_form(f, g, CommonFactors::Keep).is_zero();
    });
    if (!grows) continue;
    found.insert(j);
    g = extend_groebner_basis(g, gens, options);
  }
  return {found.begin(), found.end()};
}

std::vector<Int> delta_set_grobner(const AffineSemigroup& s, Budget* budget) {
  const AffineSemigroup h = homogenize(s);
  const Presentation pres = minimal_presentation(h, budget);
  const TermOrder order = TermOrder::lex(h.atom_count());  // variable 0 is t
  const auto gb = buchberger(presentation_binomials(pres, order), order,
                             BuchbergerOptions{CommonFactors::Cancel, atom_weights(h), budget});
  std::set<Int> out;
  for (const auto& b : reduce_basis(gb).binomials) {
    if (b.plus()[0] > 0) out.insert(b.plus()[0]);
  }
  return {out.begin(), out.end()};
}

}  // namespace facinv
