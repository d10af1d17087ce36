#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "facinv/budget.hpp"
#include "facinv/core.hpp"

namespace facinv {

/// Monomial order on exponent vectors of a fixed length.
///
/// LEX compares coordinates in `priority` order. GRLEX compares total degree
/// first, then LEX. BLOCK_ELIM compares the eliminated block first (degree,
/// then lex inside the block) and only then the remaining variables (degree,
/// then lex), so any monomial containing a block variable beats every
/// block-free monomial.
class TermOrder {
 public:
  enum class Kind { Lex, Grlex, BlockElim };

  static TermOrder lex(std::size_t n);
  static TermOrder lex(std::vector<std::size_t> priority);
  static TermOrder grlex(std::size_t n);
  static TermOrder block_elim(std::size_t n, const std::vector<std::size_t>& block);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t variables() const noexcept { return priority_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  [[nodiscard]] const std::vector<bool>& block() const noexcept { return in_block_; }

  [[nodiscard]] std::strong_ordering compare(const Int* a, const Int* b) const noexcept;
  [[nodiscard]] std::strong_ordering compare(const FactVector& a, const FactVector& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<std::size_t> priority, std::vector<bool> in_block);

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::vector<bool> in_block_;
  std::vector<std::size_t> block_vars_;  // block variables in priority order
  std::vector<std::size_t> rest_vars_;
};

/// How S-polynomials and reductions treat a common monomial factor
/// y^c of both terms. Dividing it out is only sound for ideals I with
/// (I : y^∞) = I, such as toric ideals; the length-bounded ideals of the
/// delta chain are not of this kind and need Keep.
enum class CommonFactors { Cancel, Keep };

/// y^plus − y^minus with plus ≻ minus, or ZERO.
class Binomial {
 public:
  Binomial() = default;  // ZERO

  /// Orients the pair by `order`; equal terms give ZERO. With Cancel the
  /// common factor gcd(a, b) is removed first.
  static Binomial make(FactVector a, FactVector b, const TermOrder& order,
                       CommonFactors common = CommonFactors::Cancel);

  [[nodiscard]] bool is_zero() const noexcept { return plus_.size() == 0; }
  [[nodiscard]] const FactVector& plus() const noexcept { return plus_; }
  [[nodiscard]] const FactVector& minus() const noexcept { return minus_; }

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  FactVector plus_;
  FactVector minus_;
};

[[nodiscard]] std::string to_string(const Binomial& b);

struct BinomialIdealBasis {
  std::vector<Binomial> binomials;
  TermOrder order = TermOrder::grlex(0);
  bool reduced = false;
};

struct BuchbergerOptions {
  CommonFactors common = CommonFactors::Cancel;
  /// Positive variable weights used to pick the next S-pair (smallest
  /// weighted degree of the lcm first). Empty means all ones.
  std::vector<Int> weights;
  Budget* budget = nullptr;
};

/// Remainder of f under binomial division by G: each term is rewritten by
/// members whose leading exponent divides it until neither term is
/// divisible. ZERO iff f ∈ ⟨G⟩ when G is a Gröbner basis.
[[nodiscard]] Binomial normal_form(const Binomial& f, const BinomialIdealBasis& g,
                                   CommonFactors common = CommonFactors::Cancel);

/// Gröbner basis of ⟨gens⟩. Generators must be oriented by `order`.
[[nodiscard]] BinomialIdealBasis buchberger(std::vector<Binomial> gens, const TermOrder& order,
                                            const BuchbergerOptions& options = {});

/// Gröbner basis of ⟨G⟩ + ⟨more⟩ given that G is already a Gröbner basis;
/// pairs inside G are not revisited.
[[nodiscard]] BinomialIdealBasis extend_groebner_basis(const BinomialIdealBasis& g,
                                                       std::vector<Binomial> more,
                                                       const BuchbergerOptions& options = {});

/// The reduced Gröbner basis of the ideal generated by the Gröbner basis G,
/// sorted by leading term under G's order.
[[nodiscard]] BinomialIdealBasis reduce_basis(const BinomialIdealBasis& g);

/// Generators of the toric ideal I_S = ker(y_i ↦ t^{α_i}), obtained by
/// eliminating t from ⟨y_i − t^{α_i}⟩. The result is a Gröbner basis for
/// GRLEX on the y variables.
[[nodiscard]] BinomialIdealBasis toric_ideal(const AffineSemigroup& s, Budget* budget = nullptr);

/// Atom weights |α_i|, under which every binomial of I_S is homogeneous.
[[nodiscard]] std::vector<Int> atom_weights(const AffineSemigroup& s);

}  // namespace facinv
