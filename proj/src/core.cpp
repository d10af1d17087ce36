#include "facinv/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace facinv {

void CongruenceSystem::validate() const {
  if (matrix.empty()) throw InvalidArgument("congruence system has no rows");
  if (moduli.size() != matrix.size()) {
    throw InvalidArgument("congruence system needs one modulus per row");
  }
  const std::size_t n = columns();
  if (n == 0) throw InvalidArgument("congruence system has no columns");
  for (const auto& row : matrix) {
    if (row.size() != n) throw InvalidArgument("congruence rows have different lengths");
  }
  for (Int m : moduli) {
    if (m < 0) throw InvalidArgument("moduli must be nonnegative");
  }
}

bool CongruenceSystem::satisfied_by(const ElementVector& x) const {
  if (x.size() != columns()) throw InvalidArgument("dimension mismatch");
  for (std::size_t r = 0; r < rows(); ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) s = checked_add(s, checked_mul(matrix[r][c], x[c]));
    if (moduli[r] == 0 ? s != 0 : s % moduli[r] != 0) return false;
  }
  return true;
}

FactorPair FactorPair::oriented(FactVector a, FactVector b) {
  if (a < b) std::swap(a, b);
  return FactorPair{std::move(a), std::move(b)};
}

namespace {

/// Depth-first search over atom multiplicities. Coordinates are explored in
/// atom order with increasing multiplicity, so solutions come out in
/// lexicographic order.
class FactorizationSearch {
 public:
  FactorizationSearch(const AffineSemigroup& s, const std::vector<bool>* allowed)
      : s_(s), k_(s.atom_count()), d_(s.dimension()) {
    for (std::size_t j = 0; j < k_; ++j) {
      if (allowed == nullptr || (*allowed)[j]) atoms_.push_back(j);
    }
    const std::size_t m = atoms_.size();
    cover_.assign((m + 1) * d_, false);
    gcd_.assign((m + 1) * d_, 0);
    steepest_.assign((m + 1) * d_ * d_, kUnbounded);
    for (std::size_t p = m; p-- > 0;) {
      const auto& a = s_.atom(atoms_[p]);
      for (std::size_t i = 0; i < d_; ++i) {
        cover_[p * d_ + i] = cover_[(p + 1) * d_ + i] || a[i] > 0;
        gcd_[p * d_ + i] = gcd(gcd_[(p + 1) * d_ + i], a[i]);
      }
      for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t r = 0; r < d_; ++r) {
          if (i == r) continue;
          const std::size_t at = (p * d_ + i) * d_ + r;
          std::size_t best = p + 1 == m ? kNone : steepest_[((p + 1) * d_ + i) * d_ + r];
          if (best == kUnbounded) {
            steepest_[at] = kUnbounded;
            continue;
          }
          if (a[i] > 0 && a[r] == 0) {
            steepest_[at] = kUnbounded;
            continue;
          }
          if (a[i] > 0) {
            const auto& b = best == kNone ? a : s_.atom(atoms_[best]);
            // a_i / a_r > b_i / b_r
            if (best == kNone || static_cast<__int128>(a[i]) * b[r] > static_cast<__int128>(b[i]) * a[r]) {
              best = p;
            }
          }
          steepest_[at] = best;
        }
      }
    }
  }

  /// Calls visit(z) for each factorization; stops early when visit returns false.
  template <typename Visit>
  void run(const ElementVector& target, Visit&& visit) {
    rem_ = target.coords();
    current_.assign(k_, 0);
    stop_ = false;
    descend(0, visit);
  }

 private:
  bool feasible(std::size_t p) const {
    for (std::size_t i = 0; i < d_; ++i) {
      if (rem_[i] == 0) continue;
      if (!cover_[p * d_ + i]) return false;
      if (rem_[i] % gcd_[p * d_ + i] != 0) return false;
    }
    // rem_ must lie in the cone of the remaining atoms: rem_i / rem_r is at
    // most the largest a_i / a_r among them.
    for (std::size_t i = 0; i < d_; ++i) {
      if (rem_[i] == 0) continue;
      for (std::size_t r = 0; r < d_; ++r) {
        if (r == i) continue;
        const std::size_t best = steepest_[(p * d_ + i) * d_ + r];
        if (best == kUnbounded) continue;
        if (best == kNone) return false;
        const auto& b = s_.atom(atoms_[best]);
        if (static_cast<__int128>(rem_[i]) * b[r] > static_cast<__int128>(rem_[r]) * b[i]) return false;
      }
    }
    return true;
  }

  /// True when the subtree below (p, rem_) holds a factorization. Subtrees
  /// without one are remembered: that only depends on p and rem_.
  template <typename Visit>
  bool descend(std::size_t p, Visit& visit) {
    if (stop_) return true;
    if (std::all_of(rem_.begin(), rem_.end(), [](Int x) { return x == 0; })) {
      if (!visit(FactVector(current_))) stop_ = true;
      return true;
    }
    if (p == atoms_.size() || !feasible(p)) return false;
    const std::size_t j = atoms_[p];
    const auto& a = s_.atom(j);
    Int ub = -1;
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i] > 0) {
        Int q = rem_[i] / a[i];
        ub = ub < 0 ? q : std::min(ub, q);
      }
    }
    if (p + 1 == atoms_.size()) {
      // Last atom: the remainder must be an exact multiple.
      for (std::size_t i = 0; i < d_; ++i) {
        if (rem_[i] != ub * a[i]) return false;
      }
      current_[j] = ub;
      std::fill(rem_.begin(), rem_.end(), 0);
      if (!visit(FactVector(current_))) stop_ = true;
      for (std::size_t i = 0; i < d_; ++i) rem_[i] = ub * a[i];
      current_[j] = 0;
      return true;
    }
    key_.assign(1, static_cast<Int>(p));
    key_.insert(key_.end(), rem_.begin(), rem_.end());
    if (dead_.count(key_) != 0) return false;
    bool found = false;
    Int used = 0;
    for (Int c = 0; c <= ub && !stop_; ++c) {
      current_[j] = c;
      if (descend(p + 1, visit)) found = true;
      for (std::size_t i = 0; i < d_; ++i) rem_[i] -= a[i];
      ++used;
    }
    for (std::size_t i = 0; i < d_; ++i) rem_[i] += used * a[i];
    current_[j] = 0;
    if (!found && dead_.size() < kMaxDead) {
      key_.assign(1, static_cast<Int>(p));
      key_.insert(key_.end(), rem_.begin(), rem_.end());
      dead_.insert(key_);
    }
    return found;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };
  static constexpr std::size_t kMaxDead = std::size_t{1} << 21;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-2);

  const AffineSemigroup& s_;
  std::size_t k_;
  std::size_t d_;
  std::vector<std::size_t> atoms_;
  std::vector<bool> cover_;  // cover_[p*d+i]: some atom at position >= p has coordinate i > 0
  std::vector<Int> gcd_;     // gcd of coordinate i over atoms at position >= p
  // steepest_[(p*d+i)*d+r]: position >= p maximizing a_i / a_r among atoms
  // with a_i > 0; kUnbounded when one of them has a_r = 0, kNone when no
  // atom has a_i > 0.
  std::vector<std::size_t> steepest_;
  std::vector<Int> rem_;
  std::vector<Int> current_;
  std::vector<Int> key_;
  std::unordered_set<std::vector<Int>, KeyHash> dead_;
  bool stop_ = false;
};

}  // namespace

AffineSemigroup AffineSemigroup::from_generators(std::vector<ElementVector> gens) {
  if (gens.empty()) throw InvalidArgument("a semigroup needs at least one generator");
  const std::size_t d = gens.front().size();
  if (d == 0) throw InvalidArgument("generators must have positive dimension");
  for (const auto& g : gens) {
    if (g.size() != d) throw InvalidArgument("generators have different dimensions");
    if (g.is_zero()) throw InvalidArgument("the zero vector cannot be a generator");
  }
  // A generator can only be a sum of generators of strictly smaller total,
  // so one pass in order of total decides minimality.
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    Int ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ElementVector> kept;
  for (auto& g : gens) {
    if (!kept.empty()) {
      AffineSemigroup partial(d, kept, std::nullopt);
      if (contains(partial, g)) continue;
    }
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return AffineSemigroup(d, std::move(kept), std::nullopt);
}

AffineSemigroup AffineSemigroup::from_atoms_with_equations(std::vector<ElementVector> atoms,
                                                           CongruenceSystem equations) {
  equations.validate();
  const std::size_t d = equations.columns();
  if (atoms.empty()) throw InvalidArgument("the congruence system has only the zero solution");
  for (const auto& a : atoms) {
    if (a.size() != d) throw InvalidArgument("atom dimension does not match the equations");
    if (a.is_zero()) throw InvalidArgument("the zero vector cannot be an atom");
    if (!equations.satisfied_by(a)) throw InvalidArgument("atom violates the equations");
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return AffineSemigroup(d, std::move(atoms), std::move(equations));
}

ElementVector AffineSemigroup::evaluate(const FactVector& z) const {
  require_factorization_dimension(z);
  std::vector<Int> r(dim_, 0);
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (z[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      r[i] = checked_add(r[i], checked_mul(z[j], atoms_[j][i]));
    }
  }
  return ElementVector(std::move(r));
}

IntMatrix AffineSemigroup::matrix() const {
  IntMatrix a(dim_, std::vector<Int>(atoms_.size()));
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    for (std::size_t i = 0; i < dim_; ++i) a[i][j] = atoms_[j][i];
  }
  return a;
}

void AffineSemigroup::require_element_dimension(const ElementVector& v) const {
  if (v.size() != dim_) {
    throw InvalidArgument("element has dimension " + std::to_string(v.size()) +
                          ", semigroup has dimension " + std::to_string(dim_));
  }
}

void AffineSemigroup::require_factorization_dimension(const FactVector& z) const {
  if (z.size() != atoms_.size()) {
    throw InvalidArgument("factorization has length " + std::to_string(z.size()) + ", expected " +
                          std::to_string(atoms_.size()));
  }
}

AffineSemigroup new_affine_semigroup(std::vector<ElementVector> gens) {
  return AffineSemigroup::from_generators(std::move(gens));
}

AffineSemigroup numerical_semigroup(const std::vector<Int>& gens) {
  std::vector<ElementVector> v;
  v.reserve(gens.size());
  for (Int g : gens) v.push_back(ElementVector{g});
  return AffineSemigroup::from_generators(std::move(v));
}

bool contains(const AffineSemigroup& s, const ElementVector& g) {
  s.require_element_dimension(g);
  bool found = false;
  FactorizationSearch search(s, nullptr);
  search.run(g, [&](const FactVector&) {
    found = true;
    return false;
  });
  return found;
}

struct MembershipCache::Impl {
  const AffineSemigroup& s;
  FactorizationSearch search;
};

MembershipCache::MembershipCache(const AffineSemigroup& s)
    : impl_(std::make_unique<Impl>(Impl{s, FactorizationSearch(s, nullptr)})) {}

MembershipCache::~MembershipCache() = default;

bool MembershipCache::contains(const ElementVector& g) {
  impl_->s.require_element_dimension(g);
  bool found = false;
  impl_->search.run(g, [&](const FactVector&) {
    found = true;
    return false;
  });
  return found;
}

FactorizationSet factorizations(const AffineSemigroup& s, const ElementVector& g) {
  s.require_element_dimension(g);
  FactorizationSet out{g, {}};
  FactorizationSearch search(s, nullptr);
  search.run(g, [&](const FactVector& z) {
    out.facts.push_back(z);
    return true;
  });
  return out;
}

std::vector<FactVector> factorizations_using(const AffineSemigroup& s, const ElementVector& g,
                                             const std::vector<bool>& allowed) {
  s.require_element_dimension(g);
  if (allowed.size() != s.atom_count()) throw InvalidArgument("atom mask has the wrong length");
  std::vector<FactVector> out;
  FactorizationSearch search(s, &allowed);
  search.run(g, [&](const FactVector& z) {
    out.push_back(z);
    return true;
  });
  return out;
}

std::optional<FactVector> least_factorization(const AffineSemigroup& s, const ElementVector& g,
                                              const std::vector<bool>& allowed) {
  s.require_element_dimension(g);
  if (allowed.size() != s.atom_count()) throw InvalidArgument("atom mask has the wrong length");
  std::optional<FactVector> out;
  FactorizationSearch search(s, &allowed);
  search.run(g, [&](const FactVector& z) {
    out = z;
    return false;
  });
  return out;
}

std::vector<Int> length_set(const AffineSemigroup& s, const ElementVector& g) {
  std::set<Int> lengths;
  for (const auto& z : factorizations(s, g)) lengths.insert(z.total());
  return {lengths.begin(), lengths.end()};
}

std::vector<Int> successive_differences(const std::vector<Int>& sorted_lengths) {
  std::set<Int> deltas;
  for (std::size_t i = 1; i < sorted_lengths.size(); ++i) {
    deltas.insert(sorted_lengths[i] - sorted_lengths[i - 1]);
  }
  return {deltas.begin(), deltas.end()};
}

std::vector<Int> delta_of_element(const AffineSemigroup& s, const ElementVector& g) {
  return successive_differences(length_set(s, g));
}

Int dist(const FactVector& z, const FactVector& w) {
  z.require_same_size(w);
  Int a = 0, b = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Int m = std::min(z[i], w[i]);
    a = checked_add(a, z[i] - m);
    b = checked_add(b, w[i] - m);
  }
  return std::max(a, b);
}

}  // namespace facinv
