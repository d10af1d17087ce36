#pragma once

#include <optional>
#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"

namespace facinv {

/// Element of Z_{m_1} × ⋯ × Z_{m_r}, coordinates in [0, m_i).
using GroupElement = std::vector<Int>;

/// Nonzero elements of the group in lexicographic order.
[[nodiscard]] std::vector<GroupElement> nonzero_group_elements(const std::vector<Int>& moduli);

/// The block monoid B(H) = {x ∈ N^|H| : Σ x_j h_j = 0}, H defaulting to all
/// nonzero elements. Column j of the congruence system is h_j. Atoms come
/// from the Hilbert basis of the system, so the result is full.
[[nodiscard]] AffineSemigroup block_monoid(const std::vector<Int>& moduli,
                                           const std::optional<std::vector<GroupElement>>& subset,
                                           Budget* budget = nullptr);

/// Minimals≤ Z(γ + S), which for full S are the minimal x with Ax ≥ γ.
/// Throws RequiresFullSemigroup when S carries no equations.
[[nodiscard]] std::vector<FactVector> minimals_principal_ideal(const AffineSemigroup& s,
                                                               const ElementVector& g,
                                                               Budget* budget = nullptr);

/// t_i(S) for a full semigroup (atom index i is 0-based).
[[nodiscard]] Int tame_i_full(const AffineSemigroup& s, std::size_t i, Budget* budget = nullptr);

/// t(S) = max_i t_i(S), optionally only over the given atom indices.
[[nodiscard]] Int tame_full(const AffineSemigroup& s,
                            const std::optional<std::vector<std::size_t>>& atoms = std::nullopt,
                            Budget* budget = nullptr);

/// Tame degree of a set of factorizations of one element: for every atom i
/// used by some member, the largest distance from a member to the nearest
/// member using i.
[[nodiscard]] Int tame_degree_of_factorizations(const std::vector<FactVector>& facts);

/// tame_degree_of_factorizations(Z(γ)).
[[nodiscard]] Int element_tame_degree(const AffineSemigroup& s, const ElementVector& g);

}  // namespace facinv
