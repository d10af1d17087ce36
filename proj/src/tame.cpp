#include "facinv/tame.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "facinv/hilbert.hpp"

namespace facinv {

std::vector<GroupElement> nonzero_group_elements(const std::vector<Int>& moduli) {
  if (moduli.empty()) throw InvalidArgument("a group needs at least one cyclic factor");
  Int order = 1;
  for (Int m : moduli) {
    if (m < 2) throw InvalidArgument("cyclic factors need modulus at least 2");
    order = checked_mul(order, m);
  }
  std::vector<GroupElement> out;
  GroupElement x(moduli.size(), 0);
  for (Int n = 1; n < order; ++n) {
    // Odometer increment, last coordinate fastest.
    for (std::size_t r = moduli.size(); r-- > 0;) {
      if (++x[r] < moduli[r]) break;
      x[r] = 0;
    }
    out.push_back(x);
  }
  return out;
}

AffineSemigroup block_monoid(const std::vector<Int>& moduli,
                             const std::optional<std::vector<GroupElement>>& subset,
                             Budget* budget) {
  std::vector<GroupElement> h = nonzero_group_elements(moduli);
  if (subset) {
    std::set<GroupElement> seen;
    for (const auto& g : *subset) {
      if (g.size() != moduli.size()) throw InvalidArgument("group element has the wrong length");
      for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r] < 0 || g[r] >= moduli[r]) {
          throw InvalidArgument("group element coordinate out of range");
        }
      }
      if (std::all_of(g.begin(), g.end(), [](Int x) { return x == 0; })) {
        throw InvalidArgument("the subset must not contain 0");
      }
      if (!seen.insert(g).second) throw InvalidArgument("the subset contains duplicates");
    }
    if (subset->empty()) throw InvalidArgument("the subset is empty");
    h = *subset;
  }
  CongruenceSystem sys;
  sys.moduli = moduli;
  sys.matrix.assign(moduli.size(), std::vector<Int>(h.size()));
  for (std::size_t j = 0; j < h.size(); ++j) {
    for (std::size_t r = 0; r < moduli.size(); ++r) sys.matrix[r][j] = h[j][r];
  }
  return semigroup_from_equations(std::move(sys), budget);
}

namespace {

void require_full(const AffineSemigroup& s) {
  if (!s.is_full()) {
    throw RequiresFullSemigroup("this computation needs a semigroup given by equations");
  }
}

}  // namespace

std::vector<FactVector> minimals_principal_ideal(const AffineSemigroup& s, const ElementVector& g,
                                                 Budget* budget) {
  require_full(s);
  s.require_element_dimension(g);
  if (g.is_zero()) return {FactVector(s.atom_count())};
  return minimal_solutions(
      DiophantineSystem::inhomogeneous(s.matrix(), RowRelation::GreaterEqual, g.coords()), budget);
}

Int tame_i_full(const AffineSemigroup& s, std::size_t i, Budget* budget) {
  require_full(s);
  if (i >= s.atom_count()) throw InvalidArgument("atom index out of range");
  Int result = 0;
  for (const auto& z : minimals_principal_ideal(s, s.atom(i), budget)) {
    if (z[i] != 0) continue;
    const auto g = s.evaluate(z);
    std::optional<Int> shortest;
    for (const auto& w : factorizations(s, g)) {
      charge(budget);
      if (w[i] == 0) continue;
      // Full semigroups: such w never shares an atom with z, so
      // dist(z, w) = max(|z|, |w|).
      if (supports_intersect(z, w)) {
        throw std::logic_error("factorizations " + to_string(z) + " and " + to_string(w) +
                               " share an atom");
      }
      const Int len = w.total();
      if (!shortest || len < *shortest) shortest = len;
    }
    if (!shortest) throw std::logic_error("no factorization of " + to_string(g) + " uses the atom");
    result = std::max({result, z.total(), *shortest});
  }
  return result;
}

Int tame_full(const AffineSemigroup& s, const std::optional<std::vector<std::size_t>>& atoms,
              Budget* budget) {
  require_full(s);
  std::vector<std::size_t> which;
  if (atoms) {
    which = *atoms;
  } else {
    for (std::size_t i = 0; i < s.atom_count(); ++i) which.push_back(i);
  }
  Int result = 0;
  for (std::size_t i : which) result = std::max(result, tame_i_full(s, i, budget));
  return result;
}

Int tame_degree_of_factorizations(const std::vector<FactVector>& facts) {
  if (facts.size() <= 1) return 0;
  const std::size_t k = facts.front().size();
  Int result = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<const FactVector*> using_i;
    for (const auto& z : facts) {
      if (z[i] > 0) using_i.push_back(&z);
    }
    if (using_i.empty()) continue;
    for (const auto& z : facts) {
      if (z[i] > 0) continue;
      Int nearest = -1;
      for (const FactVector* w : using_i) {
        const Int d = dist(z, *w);
        if (nearest < 0 || d < nearest) nearest = d;
      }
      result = std::max(result, nearest);
    }
  }
  return result;
}

Int element_tame_degree(const AffineSemigroup& s, const ElementVector& g) {
  return tame_degree_of_factorizations(factorizations(s, g).facts);
}

}  // namespace facinv
