#pragma once

#include <compare>
#include <unordered_map>
#include <utility>
#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"
#include "facinv/hilbert.hpp"

namespace facinv {

/// Edge of the factorization graph, lex-smaller endpoint first. Edges sort
/// by (weight, first, second).
struct WeightedEdge {
  Int weight = 0;
  FactVector first;
  FactVector second;

  static WeightedEdge between(FactVector a, FactVector b);
  /// Both endpoints with coordinate i increased by one; same weight.
  [[nodiscard]] WeightedEdge shifted(std::size_t i) const;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

struct WeightedTree {
  std::vector<FactVector> vertices;  // sorted
  std::vector<WeightedEdge> edges;   // sorted

  /// Largest edge weight, 0 without edges.
  [[nodiscard]] Int max_weight() const noexcept {
    return edges.empty() ? 0 : edges.back().weight;
  }
};

/// c(γ) from Kruskal's algorithm on the complete graph over Z(γ).
/// Throws NotInSemigroup when γ ∉ S.
[[nodiscard]] Int catenary_naive(const AffineSemigroup& s, const ElementVector& g);

/// Kruskal over an edge list sorted by (weight, first, second). Returns the
/// accepted edges; they span every endpoint when the graph is connected.
[[nodiscard]] std::vector<WeightedEdge> kruskal(const std::vector<WeightedEdge>& sorted_edges);

/// Memoized minimum-weight spanning trees. The tree of γ is assembled from
/// the trees of the γ − α_i shifted by e_i plus the Graver pairs over γ,
/// and Kruskal picks a minimum spanning tree of that union.
///
/// Not thread-safe; use one instance per thread.
class CatenaryEngine {
 public:
  explicit CatenaryEngine(const AffineSemigroup& s, Budget* budget = nullptr);

  /// Throws NotInSemigroup when γ ∉ S.
  const WeightedTree& mwst(const ElementVector& g);
  Int catenary(const ElementVector& g) { return mwst(g).max_weight(); }

  [[nodiscard]] const GraverBasis& graver() const noexcept { return graver_; }
  /// Graver edges whose endpoints factor γ, sorted.
  [[nodiscard]] const std::vector<WeightedEdge>& graver_edges(const ElementVector& g) const;

 private:
  bool member(const ElementVector& g);
  void build(const ElementVector& g);

  const AffineSemigroup& s_;
  Budget* budget_;
  GraverBasis graver_;
  std::unordered_map<ElementVector, std::vector<WeightedEdge>, NatVectorHash> graver_by_value_;
  std::unordered_map<ElementVector, WeightedTree, NatVectorHash> memo_;
  std::unordered_map<ElementVector, bool, NatVectorHash> membership_;
};

/// c(γ) through CatenaryEngine; numerical semigroups use the ascending sweep.
[[nodiscard]] Int catenary_dynamic(const AffineSemigroup& s, const ElementVector& g,
                                   Budget* budget = nullptr);

/// (γ, c(γ)) for every γ ∈ S with γ ≤ bound, ascending. Numerical
/// semigroups only: the sweep keeps the trees of the last max(α) values in
/// a ring buffer and never enumerates a factorization set.
[[nodiscard]] std::vector<std::pair<Int, Int>> catenary_range(const AffineSemigroup& s, Int bound,
                                                              Budget* budget = nullptr);

}  // namespace facinv
