#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "facinv/error.hpp"

namespace facinv {

using Int = std::int64_t;

[[nodiscard]] inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

[[nodiscard]] inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Tuple of nonnegative integers. The tag keeps semigroup elements (in N^d)
/// and factorizations (in N^k) from being mixed up.
template <typename Tag>
class NatVector {
 public:
  using value_type = Int;
  using const_iterator = std::vector<Int>::const_iterator;

  NatVector() = default;
  explicit NatVector(std::size_t n) : c_(n, 0) {}
  NatVector(std::initializer_list<Int> init) : c_(init) { validate(); }
  explicit NatVector(std::vector<Int> coords) : c_(std::move(coords)) { validate(); }

  static NatVector unit(std::size_t n, std::size_t i) {
    NatVector v(n);
    v.c_[i] = 1;
    return v;
  }

  [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
  [[nodiscard]] Int operator[](std::size_t i) const noexcept { return c_[i]; }
  [[nodiscard]] const std::vector<Int>& coords() const noexcept { return c_; }
  [[nodiscard]] const_iterator begin() const noexcept { return c_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return c_.end(); }

  /// Coordinate sum |v|.
  [[nodiscard]] Int total() const {
    Int s = 0;
    for (Int x : c_) s = checked_add(s, x);
    return s;
  }

  [[nodiscard]] bool is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
  }

  /// Copy with coordinate i increased by one.
  [[nodiscard]] NatVector incremented(std::size_t i) const {
    NatVector v = *this;
    v.c_[i] = checked_add(v.c_[i], 1);
    return v;
  }

  NatVector& operator+=(const NatVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
  }

  friend NatVector operator+(NatVector a, const NatVector& b) { return a += b; }

  /// a - b; requires b <= a coordinate-wise.
  friend NatVector operator-(const NatVector& a, const NatVector& b) {
    a.require_same_size(b);
    NatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b.c_[i] > a.c_[i]) throw InvalidArgument("vector difference leaves N^n");
      r.c_[i] = a.c_[i] - b.c_[i];
    }
    return r;
  }

  friend bool operator==(const NatVector&, const NatVector&) = default;
  friend auto operator<=>(const NatVector& a, const NatVector& b) { return a.c_ <=> b.c_; }

  void require_same_size(const NatVector& o) const {
    if (o.size() != size()) throw InvalidArgument("dimension mismatch");
  }

 private:
  void validate() const {
    for (Int x : c_) {
      if (x < 0) throw InvalidArgument("negative coordinate in a vector over N");
    }
  }

  std::vector<Int> c_;
};

struct ElementTag;
struct FactTag;

/// Point of an affine semigroup, in N^d.
using ElementVector = NatVector<ElementTag>;
/// Factorization (atom multiplicities), in N^k.
using FactVector = NatVector<FactTag>;

/// Component-wise partial order: a <= b.
template <typename Tag>
[[nodiscard]] bool leq(const NatVector<Tag>& a, const NatVector<Tag>& b) {
  a.require_same_size(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Coordinate-wise minimum, written gcd(z, w) for factorizations.
template <typename Tag>
[[nodiscard]] NatVector<Tag> meet(const NatVector<Tag>& a, const NatVector<Tag>& b) {
  a.require_same_size(b);
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return NatVector<Tag>(std::move(r));
}

template <typename Tag>
[[nodiscard]] bool supports_intersect(const NatVector<Tag>& a, const NatVector<Tag>& b) {
  a.require_same_size(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return true;
  }
  return false;
}

/// "(1,0,2)".
template <typename Tag>
[[nodiscard]] std::string to_string(const NatVector<Tag>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

struct NatVectorHash {
  template <typename Tag>
  std::size_t operator()(const NatVector<Tag>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Keeps the elements of `vs` that are minimal under the component-wise
/// order, dropping duplicates. Output is sorted lexicographically.
template <typename Tag>
[[nodiscard]] std::vector<NatVector<Tag>> minimal_elements(std::vector<NatVector<Tag>> vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) {
    Int ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<NatVector<Tag>> kept;
  for (auto& v : vs) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const auto& k) { return leq(k, v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace facinv
