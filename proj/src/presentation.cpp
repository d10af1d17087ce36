#include "facinv/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace facinv {

namespace {

/// γ − a, or nullopt when a ≰ γ.
std::optional<ElementVector> minus(const ElementVector& g, const ElementVector& a) {
  if (!leq(a, g)) return std::nullopt;
  return g - a;
}

/// Atom classes of γ: connected components of the graph on the atoms
/// dividing γ, with i ~ j whenever γ − α_i − α_j ∈ S. Two factorizations
/// share an atom exactly when their supports lie in one component, so the
/// components are in bijection with the classes of Z(γ).
std::vector<std::vector<bool>> atom_classes(const AffineSemigroup& s, const ElementVector& g,
                                            MembershipCache& member) {
  const std::size_t k = s.atom_count();
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < k; ++i) {
    auto r = minus(g, s.atom(i));
    if (r && member.contains(*r)) present.push_back(i);
  }
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < present.size(); ++a) {
    const ElementVector ga = g - s.atom(present[a]);
    for (std::size_t b = a + 1; b < present.size(); ++b) {
      const std::size_t i = present[a], j = present[b];
      if (find(i) == find(j)) continue;
      auto r = minus(ga, s.atom(j));
      if (r && member.contains(*r)) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<bool>> classes;
  std::vector<std::size_t> root_of;
  for (std::size_t i : present) {
    const std::size_t r = find(i);
    auto it = std::find(root_of.begin(), root_of.end(), r);
    if (it == root_of.end()) {
      root_of.push_back(r);
      classes.emplace_back(k, false);
      classes.back()[i] = true;
    } else {
      classes[static_cast<std::size_t>(it - root_of.begin())][i] = true;
    }
  }
  return classes;
}

}  // namespace

std::size_t factorization_classes(const AffineSemigroup& s, const ElementVector& g) {
  s.require_element_dimension(g);
  if (g.is_zero()) return 1;
  MembershipCache member(s);
  return atom_classes(s, g, member).size();
}

Presentation minimal_presentation_from_candidates(const AffineSemigroup& s,
                                                  std::vector<ElementVector> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  Presentation p;
  MembershipCache member(s);
  for (const auto& g : candidates) {
    s.require_element_dimension(g);
    if (g.is_zero()) continue;
    const auto classes = atom_classes(s, g, member);
    if (classes.size() < 2) continue;
    std::vector<FactVector> reps;
    for (const auto& mask : classes) reps.push_back(*least_factorization(s, g, mask));
    std::sort(reps.begin(), reps.end());
    for (std::size_t c = 1; c < reps.size(); ++c) {
      p.relations.push_back(FactorPair::oriented(reps.front(), reps[c]));
    }
  }
  std::sort(p.relations.begin(), p.relations.end(), [&](const FactorPair& a, const FactorPair& b) {
    const ElementVector ga = s.evaluate(a.first), gb = s.evaluate(b.first);
    if (ga != gb) return ga < gb;
    return a < b;
  });
  return p;
}

Presentation minimal_presentation(const AffineSemigroup& s, Budget* budget) {
  const auto ideal = toric_ideal(s, budget);
  std::vector<ElementVector> candidates;
  for (const auto& b : ideal.binomials) candidates.push_back(s.evaluate(b.plus()));
  return minimal_presentation_from_candidates(s, std::move(candidates));
}

std::vector<ElementVector> betti_elements(const AffineSemigroup& s, const Presentation& p) {
  std::vector<ElementVector> out;
  for (const auto& r : p.relations) out.push_back(s.evaluate(r.first));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementVector> betti_elements(const AffineSemigroup& s, Budget* budget) {
  return betti_elements(s, minimal_presentation(s, budget));
}

std::vector<Binomial> presentation_binomials(const Presentation& p, const TermOrder& order) {
  std::vector<Binomial> out;
  out.reserve(p.relations.size());
  for (const auto& r : p.relations) out.push_back(Binomial::make(r.first, r.second, order));
  return out;
}

std::optional<DeltaBounds> delta_bounds(const AffineSemigroup& s, const Presentation& p) {
  Int g = 0;
  for (const auto& r : p.relations) g = gcd(g, r.first.total() - r.second.total());
  if (g == 0) return std::nullopt;
  DeltaBounds b{g, 0};
  for (const auto& e : betti_elements(s, p)) {
    const auto d = delta_of_element(s, e);
    if (!d.empty()) b.max = std::max(b.max, d.back());
  }
  return b;
}

std::optional<DeltaBounds> delta_bounds(const AffineSemigroup& s, Budget* budget) {
  return delta_bounds(s, minimal_presentation(s, budget));
}

}  // namespace facinv
