#pragma once

#include <cstddef>
#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"

namespace facinv {

enum class RowRelation { Equal, GreaterEqual };

/// Linear system over N^n: row i reads  matrix[i]·x  (= or ≥)  rhs[i], or,
/// when moduli[i] > 0,  matrix[i]·x ≡ rhs[i]  (mod moduli[i]).
struct DiophantineSystem {
  IntMatrix matrix;
  std::vector<RowRelation> relations;  // one per row
  std::vector<Int> rhs;                // one per row
  std::vector<Int> moduli;             // empty, or one per row (0 = no congruence)

  static DiophantineSystem homogeneous(IntMatrix matrix, RowRelation relation = RowRelation::Equal);
  static DiophantineSystem inhomogeneous(IntMatrix matrix, RowRelation relation, std::vector<Int> rhs);
  static DiophantineSystem congruences(const CongruenceSystem& system);

  [[nodiscard]] std::size_t rows() const noexcept { return matrix.size(); }
  [[nodiscard]] std::size_t columns() const noexcept {
    return matrix.empty() ? 0 : matrix.front().size();
  }
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] Int modulus(std::size_t row) const { return moduli.empty() ? 0 : moduli[row]; }

  /// Throws InvalidArgument when dimensions are inconsistent or a row mixes
  /// ≥ with a modulus.
  void validate() const;

  [[nodiscard]] bool satisfied_by(const std::vector<Int>& x) const;
};

/// Hilbert basis of a homogeneous system: the irreducible elements of its
/// solution monoid, sorted. Empty if 0 is the only solution.
[[nodiscard]] std::vector<FactVector> hilbert_basis(const DiophantineSystem& sys,
                                                    Budget* budget = nullptr);

/// ≤-minimal solutions of an inhomogeneous system. Infeasible systems give
/// an empty set.
[[nodiscard]] std::vector<FactVector> minimal_solutions(const DiophantineSystem& sys,
                                                        Budget* budget = nullptr);

/// Primitive pairs (z, w) with φ(z) = φ(w) and disjoint supports, one
/// orientation each (larger side first), sorted.
using GraverBasis = std::vector<FactorPair>;

[[nodiscard]] GraverBasis graver_basis(const AffineSemigroup& s, Budget* budget = nullptr);

/// Minimals≤ Z(g + S), computed through (A | −A)(x; y) = g and projection to x.
/// Valid for every affine semigroup.
[[nodiscard]] std::vector<FactVector> minimal_factorizations_in_ideal(const AffineSemigroup& s,
                                                                      const ElementVector& g,
                                                                      Budget* budget = nullptr);

/// The full semigroup {x ∈ N^n : Bx ≡ 0}, with its atoms computed as the
/// Hilbert basis of the congruence system.
[[nodiscard]] AffineSemigroup semigroup_from_equations(CongruenceSystem system,
                                                       Budget* budget = nullptr);

}  // namespace facinv
