#pragma once

#include <optional>
#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"
#include "facinv/grobner.hpp"

namespace facinv {

/// Relations (z, w) with φ(z) = φ(w), each stored larger side first, sorted
/// by φ-value and then by pair.
struct Presentation {
  std::vector<FactorPair> relations;
};

/// A minimal presentation. Candidate Betti elements are the φ-values of the
/// toric ideal generators; each candidate γ contributes one relation per
/// extra class of factorizations, joining the lex-least factorization of
/// the class holding the overall lex-least one to the lex-least
/// factorization of every other class.
[[nodiscard]] Presentation minimal_presentation(const AffineSemigroup& s, Budget* budget = nullptr);

/// Same construction from an explicit candidate list, which must contain
/// every Betti element (for instance the φ-values of a Graver basis).
[[nodiscard]] Presentation minimal_presentation_from_candidates(
    const AffineSemigroup& s, std::vector<ElementVector> candidates);

/// Number of classes of Z(γ) under the relation "shares an atom"
/// (transitively closed). Zero when γ ∉ S. Uses membership tests only.
[[nodiscard]] std::size_t factorization_classes(const AffineSemigroup& s, const ElementVector& g);

/// Sorted, distinct φ-values of the relations.
[[nodiscard]] std::vector<ElementVector> betti_elements(const AffineSemigroup& s,
                                                        const Presentation& p);
[[nodiscard]] std::vector<ElementVector> betti_elements(const AffineSemigroup& s,
                                                        Budget* budget = nullptr);

/// y^z − y^w for each relation, oriented by `order`.
[[nodiscard]] std::vector<Binomial> presentation_binomials(const Presentation& p,
                                                           const TermOrder& order);

struct DeltaBounds {
  Int min = 0;  // gcd of the nonzero length differences of the relations
  Int max = 0;  // largest max Δ(b) over Betti elements b with Δ(b) ≠ ∅
  friend bool operator==(const DeltaBounds&, const DeltaBounds&) = default;
};

/// Bounds min Δ(S) and max Δ(S); nullopt when S is half-factorial.
[[nodiscard]] std::optional<DeltaBounds> delta_bounds(const AffineSemigroup& s,
                                                      const Presentation& p);
[[nodiscard]] std::optional<DeltaBounds> delta_bounds(const AffineSemigroup& s,
                                                      Budget* budget = nullptr);

}  // namespace facinv
