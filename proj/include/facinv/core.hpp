#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "facinv/vector.hpp"

namespace facinv {

using IntMatrix = std::vector<std::vector<Int>>;

/// Row system B x ≡ 0, one modulus per row. A modulus of 0 means the row is
/// an equality over Z.
struct CongruenceSystem {
  IntMatrix matrix;
  std::vector<Int> moduli;

  [[nodiscard]] std::size_t rows() const noexcept { return matrix.size(); }
  [[nodiscard]] std::size_t columns() const noexcept {
    return matrix.empty() ? 0 : matrix.front().size();
  }
  void validate() const;
  [[nodiscard]] bool satisfied_by(const ElementVector& x) const;
};

/// Ordered pair of factorizations of the same element. Stored with the
/// lexicographically larger side first.
struct FactorPair {
  FactVector first;
  FactVector second;

  static FactorPair oriented(FactVector a, FactVector b);
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
  friend auto operator<=>(const FactorPair&, const FactorPair&) = default;
};

/// Affine semigroup given by its minimal generators (atoms), sorted
/// lexicographically. Semigroups built from a congruence system carry it and
/// are full.
class AffineSemigroup {
 public:
  /// Reduces `gens` to the minimal generating set of the semigroup they span.
  static AffineSemigroup from_generators(std::vector<ElementVector> gens);

  /// `atoms` must be the Hilbert basis of `equations`; only the congruences
  /// are checked here.
  static AffineSemigroup from_atoms_with_equations(std::vector<ElementVector> atoms,
                                                   CongruenceSystem equations);

  [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
  [[nodiscard]] std::size_t atom_count() const noexcept { return atoms_.size(); }
  [[nodiscard]] const std::vector<ElementVector>& atoms() const noexcept { return atoms_; }
  [[nodiscard]] const ElementVector& atom(std::size_t i) const { return atoms_.at(i); }
  [[nodiscard]] const std::optional<CongruenceSystem>& equations() const noexcept {
    return equations_;
  }
  [[nodiscard]] bool is_full() const noexcept { return equations_.has_value(); }

  /// The map z ↦ z₁α₁ + ⋯ + z_kα_k.
  [[nodiscard]] ElementVector evaluate(const FactVector& z) const;

  /// d × k matrix whose columns are the atoms.
  [[nodiscard]] IntMatrix matrix() const;

  void require_element_dimension(const ElementVector& v) const;
  void require_factorization_dimension(const FactVector& z) const;

 private:
  AffineSemigroup(std::size_t dim, std::vector<ElementVector> atoms,
                  std::optional<CongruenceSystem> equations)
      : dim_(dim), atoms_(std::move(atoms)), equations_(std::move(equations)) {}

  std::size_t dim_ = 0;
  std::vector<ElementVector> atoms_;
  std::optional<CongruenceSystem> equations_;
};

/// Same as AffineSemigroup::from_generators.
[[nodiscard]] AffineSemigroup new_affine_semigroup(std::vector<ElementVector> gens);

/// Numerical semigroup ⟨g₁, …, g_k⟩ ⊂ N.
[[nodiscard]] AffineSemigroup numerical_semigroup(const std::vector<Int>& gens);

struct FactorizationSet {
  ElementVector element;
  std::vector<FactVector> facts;  // sorted lexicographically

  [[nodiscard]] std::size_t size() const noexcept { return facts.size(); }
  [[nodiscard]] bool empty() const noexcept { return facts.empty(); }
  [[nodiscard]] auto begin() const noexcept { return facts.begin(); }
  [[nodiscard]] auto end() const noexcept { return facts.end(); }
};

[[nodiscard]] bool contains(const AffineSemigroup& s, const ElementVector& g);

/// Repeated membership queries against one semigroup. Remainders already
/// known to be unreachable are remembered between queries. Keeps a
/// reference to `s`; not thread-safe.
class MembershipCache {
 public:
  explicit MembershipCache(const AffineSemigroup& s);
  ~MembershipCache();
  MembershipCache(const MembershipCache&) = delete;
  MembershipCache& operator=(const MembershipCache&) = delete;

  [[nodiscard]] bool contains(const ElementVector& g);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

[[nodiscard]] FactorizationSet factorizations(const AffineSemigroup& s, const ElementVector& g);

/// Factorizations restricted to the atoms flagged in `allowed`.
[[nodiscard]] std::vector<FactVector> factorizations_using(const AffineSemigroup& s,
                                                           const ElementVector& g,
                                                           const std::vector<bool>& allowed);

/// Lexicographically least factorization over the allowed atoms, if any.
[[nodiscard]] std::optional<FactVector> least_factorization(const AffineSemigroup& s,
                                                            const ElementVector& g,
                                                            const std::vector<bool>& allowed);

/// Sorted distinct factorization lengths; empty iff g is not in s.
[[nodiscard]] std::vector<Int> length_set(const AffineSemigroup& s, const ElementVector& g);

/// Successive differences of the length set, sorted and distinct.
[[nodiscard]] std::vector<Int> delta_of_element(const AffineSemigroup& s, const ElementVector& g);

/// Successive differences of a sorted list of lengths.
[[nodiscard]] std::vector<Int> successive_differences(const std::vector<Int>& sorted_lengths);

/// max(|z - gcd(z,w)|, |w - gcd(z,w)|).
[[nodiscard]] Int dist(const FactVector& z, const FactVector& w);

}  // namespace facinv
