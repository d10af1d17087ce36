#pragma once

#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"

namespace facinv {

/// ⟨(1,0), (1,α₁), …, (1,α_k)⟩ ⊂ N^{d+1}. Atom 0 is (1,0) and atom i is
/// (1,α_i), so factorizations (t, z) carry the length defect in t.
[[nodiscard]] AffineSemigroup homogenize(const AffineSemigroup& s);

/// Δ(S) through the chain of length-bounded ideals I_0 ⊂ I_m ⊂ I_2m ⊂ ⋯,
/// with generators read off the Hilbert basis of
///   A z − A w = 0,  |z| − |w| − s = 0.
/// Sorted; empty for half-factorial S.
[[nodiscard]] std::vector<Int> delta_set_hilbert(const AffineSemigroup& s, Budget* budget = nullptr);

/// Δ(S) as the set of t-exponents j ≥ 1 in the reduced lex Gröbner basis
/// (t greatest) of the toric ideal of the homogenized semigroup. Sorted.
[[nodiscard]] std::vector<Int> delta_set_grobner(const AffineSemigroup& s, Budget* budget = nullptr);

}  // namespace facinv
