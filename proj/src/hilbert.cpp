#include "facinv/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>

namespace facinv {

DiophantineSystem DiophantineSystem::homogeneous(IntMatrix matrix, RowRelation relation) {
  DiophantineSystem s;
  s.relations.assign(matrix.size(), relation);
  s.rhs.assign(matrix.size(), 0);
  s.matrix = std::move(matrix);
  return s;
}

DiophantineSystem DiophantineSystem::inhomogeneous(IntMatrix matrix, RowRelation relation,
                                                   std::vector<Int> rhs) {
  DiophantineSystem s;
  s.relations.assign(matrix.size(), relation);
  s.rhs = std::move(rhs);
  s.matrix = std::move(matrix);
  return s;
}

DiophantineSystem DiophantineSystem::congruences(const CongruenceSystem& system) {
  system.validate();
  DiophantineSystem s = homogeneous(system.matrix, RowRelation::Equal);
  s.moduli = system.moduli;
  return s;
}

bool DiophantineSystem::is_homogeneous() const {
  return std::all_of(rhs.begin(), rhs.end(), [](Int b) { return b == 0; });
}

void DiophantineSystem::validate() const {
  if (matrix.empty()) throw InvalidArgument("system has no rows");
  const std::size_t n = columns();
  if (n == 0) throw InvalidArgument("system has no columns");
  for (const auto& row : matrix) {
    if (row.size() != n) throw InvalidArgument("system rows have different lengths");
  }
  if (relations.size() != rows()) throw InvalidArgument("need one relation per row");
  if (rhs.size() != rows()) throw InvalidArgument("need one right-hand side per row");
  if (!moduli.empty()) {
    if (moduli.size() != rows()) throw InvalidArgument("need one modulus per row");
    for (std::size_t r = 0; r < rows(); ++r) {
      if (moduli[r] < 0) throw InvalidArgument("moduli must be nonnegative");
      if (moduli[r] > 0 && relations[r] == RowRelation::GreaterEqual) {
        throw InvalidArgument("a row cannot be both an inequality and a congruence");
      }
    }
  }
}

bool DiophantineSystem::satisfied_by(const std::vector<Int>& x) const {
  if (x.size() != columns()) throw InvalidArgument("dimension mismatch");
  for (std::size_t r = 0; r < rows(); ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) s = checked_add(s, checked_mul(matrix[r][c], x[c]));
    const Int m = modulus(r);
    if (m > 0) {
      if (((s - rhs[r]) % m) != 0) return false;
    } else if (relations[r] == RowRelation::Equal ? s != rhs[r] : s < rhs[r]) {
      return false;
    }
  }
  return true;
}

namespace {

struct LinearForm {
  std::vector<Int> coeffs;
  bool equality = true;
};

/// Pottier's dual algorithm: starting from the unit vectors of N^n, cut the
/// cone by one linear form at a time. For each form λ the Hilbert bases of
/// C ∩ {λ ≥ 0} and C ∩ {λ ≤ 0} are completed together from sums p + q with
/// λ(p) > 0 > λ(q), processed in order of total degree so that every
/// reducer of a candidate is already known when the candidate is examined.
///
/// Each element is a row [coordinates | values of all forms]. With a
/// truncation coordinate, candidates whose value there exceeds 1 are
/// dropped; this is exact for the part of the basis at level ≤ 1.
class DualCompletion {
 public:
  DualCompletion(std::size_t nvars, std::vector<LinearForm> forms,
                 std::optional<std::size_t> truncation, Budget* budget)
      : n_(nvars),
        forms_(std::move(forms)),
        r_(forms_.size()),
        stride_(n_ + r_),
        truncation_(truncation),
        budget_(budget) {}

  std::vector<std::vector<Int>> run() {
    std::vector<Int> pool;
    pool.reserve(n_ * stride_);
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<Int> row(stride_, 0);
      row[j] = 1;
      for (std::size_t f = 0; f < r_; ++f) row[n_ + f] = forms_[f].coeffs[j];
      pool.insert(pool.end(), row.begin(), row.end());
    }
    for (std::size_t t = 0; t < r_; ++t) {
      pool = cut(pool, t);
      if (forms_[t].equality == false) geq_done_.push_back(t);
    }
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < pool.size() / stride_; ++i) {
      out.emplace_back(pool.begin() + i * stride_, pool.begin() + i * stride_ + n_);
    }
    return out;
  }

 private:
  struct Level {
    std::vector<std::vector<std::size_t>> pos, neg, zero;  // indexed by degree
    void ensure(std::size_t deg) {
      if (pos.size() <= deg) {
        pos.resize(deg + 1);
        neg.resize(deg + 1);
        zero.resize(deg + 1);
      }
    }
  };

  struct RowHash {
    std::size_t n;
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };
  struct RowEq {
    std::size_t n;
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const noexcept {
      return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin());
    }
  };

  const Int* row(std::size_t i) const { return data_.data() + i * stride_; }

  std::size_t degree_of(const Int* x) const {
    Int d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += x[j];
    return static_cast<std::size_t>(d);
  }

  std::uint64_t mask_of(const Int* x) const {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] != 0) m |= std::uint64_t{1} << (j % 64);
    }
    return m;
  }

  std::size_t push(const Int* x) {
    const std::size_t id = masks_.size();
    data_.insert(data_.end(), x, x + stride_);
    masks_.push_back(mask_of(x));
    return id;
  }

  /// True if h ≤ z in the cone order restricted to the processed forms.
  bool below(std::size_t h, const Int* z, std::uint64_t zmask) const {
    if ((masks_[h] & ~zmask) != 0) return false;
    const Int* x = row(h);
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] > z[j]) return false;
    }
    for (std::size_t f : geq_done_) {
      if (x[n_ + f] > z[n_ + f]) return false;
    }
    return true;
  }

  bool reducible(const Int* z, std::size_t deg, std::size_t t, const Level& lv) const {
    const Int v = z[n_ + t];
    const std::uint64_t zmask = mask_of(z);
    const std::size_t top = std::min(deg, lv.zero.size());
    for (std::size_t d = 1; d < top; ++d) {
      for (std::size_t h : lv.zero[d]) {
        if (below(h, z, zmask)) return true;
      }
      if (v > 0) {
        for (std::size_t h : lv.pos[d]) {
          if (row(h)[n_ + t] <= v && below(h, z, zmask)) return true;
        }
      } else if (v < 0) {
        for (std::size_t h : lv.neg[d]) {
          if (row(h)[n_ + t] >= v && below(h, z, zmask)) return true;
        }
      }
    }
    return false;
  }

  std::vector<Int> cut(const std::vector<Int>& input, std::size_t t) {
    data_.clear();
    masks_.clear();
    Level lv;
    std::size_t maxp = 0, maxn = 0;
    const std::size_t count = input.size() / stride_;
    for (std::size_t i = 0; i < count; ++i) {
      const Int* x = input.data() + i * stride_;
      const std::size_t id = push(x);
      const std::size_t deg = degree_of(x);
      lv.ensure(deg);
      const Int v = x[n_ + t];
      if (v > 0) {
        lv.pos[deg].push_back(id);
        maxp = std::max(maxp, deg);
      } else if (v < 0) {
        lv.neg[deg].push_back(id);
        maxn = std::max(maxn, deg);
      } else {
        lv.zero[deg].push_back(id);
      }
    }

    std::vector<Int> z(stride_);
    for (std::size_t deg = 2; maxp > 0 && maxn > 0 && deg <= maxp + maxn; ++deg) {
      std::unordered_set<std::vector<Int>, RowHash, RowEq> staged(16, RowHash{n_}, RowEq{n_});
      const std::size_t lo = deg > maxn ? deg - maxn : 1;
      const std::size_t hi = std::min(deg - 1, maxp);
      for (std::size_t dp = lo; dp <= hi; ++dp) {
        const std::size_t dq = deg - dp;
        if (dq >= lv.neg.size()) continue;
        for (std::size_t p : lv.pos[dp]) {
          for (std::size_t q : lv.neg[dq]) {
            charge(budget_);
            const Int* a = row(p);
            const Int* b = row(q);
            for (std::size_t c = 0; c < stride_; ++c) z[c] = checked_add(a[c], b[c]);
            if (truncation_ && z[*truncation_] > 1) continue;
            if (staged.count(z) != 0) continue;
            if (reducible(z.data(), deg, t, lv)) continue;
            staged.insert(z);
          }
        }
      }
      if (staged.empty()) continue;
      lv.ensure(deg);
      for (const auto& x : staged) {
        const std::size_t id = push(x.data());
        const Int v = x[n_ + t];
        if (v > 0) {
          lv.pos[deg].push_back(id);
          maxp = std::max(maxp, deg);
        } else if (v < 0) {
          lv.neg[deg].push_back(id);
          maxn = std::max(maxn, deg);
        } else {
          lv.zero[deg].push_back(id);
        }
      }
      // Deterministic order inside a degree.
      auto by_row = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + stride_, row(b), row(b) + stride_);
      };
      std::sort(lv.pos[deg].begin(), lv.pos[deg].end(), by_row);
      std::sort(lv.neg[deg].begin(), lv.neg[deg].end(), by_row);
      std::sort(lv.zero[deg].begin(), lv.zero[deg].end(), by_row);
    }

    std::vector<Int> out;
    const bool keep_pos = !forms_[t].equality;
    for (std::size_t d = 0; d < lv.zero.size(); ++d) {
      for (std::size_t h : lv.zero[d]) out.insert(out.end(), row(h), row(h) + stride_);
      if (keep_pos) {
        for (std::size_t h : lv.pos[d]) out.insert(out.end(), row(h), row(h) + stride_);
      }
    }
    return out;
  }

  std::size_t n_;
  std::vector<LinearForm> forms_;
  std::size_t r_;
  std::size_t stride_;
  std::optional<std::size_t> truncation_;
  Budget* budget_;
  std::vector<std::size_t> geq_done_;
  std::vector<Int> data_;
  std::vector<std::uint64_t> masks_;
};

/// Translates a system into linear forms over lifted coordinates
/// [x | one multiplier per congruence row | homogenizing u]. Congruence rows
/// are reduced into [0, m) so that the multiplier can stay nonnegative.
struct LiftedSystem {
  std::size_t original = 0;
  std::size_t total = 0;
  std::optional<std::size_t> homogenizer;
  std::vector<LinearForm> forms;
};

LiftedSystem lift(const DiophantineSystem& sys, bool with_homogenizer) {
  sys.validate();
  LiftedSystem out;
  out.original = sys.columns();
  std::size_t aux = 0;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    if (sys.modulus(r) > 0) ++aux;
  }
  out.total = out.original + aux + (with_homogenizer ? 1 : 0);
  if (with_homogenizer) out.homogenizer = out.total - 1;
  std::size_t next_aux = out.original;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    LinearForm f;
    f.coeffs.assign(out.total, 0);
    const Int m = sys.modulus(r);
    for (std::size_t c = 0; c < out.original; ++c) {
      f.coeffs[c] = m > 0 ? ((sys.matrix[r][c] % m) + m) % m : sys.matrix[r][c];
    }
    Int b = sys.rhs[r];
    if (m > 0) {
      b = ((b % m) + m) % m;
      f.coeffs[next_aux++] = -m;
    }
    if (with_homogenizer) {
      f.coeffs[*out.homogenizer] = checked_sub(0, b);
    }
    f.equality = sys.relations[r] == RowRelation::Equal;
    out.forms.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<FactVector> hilbert_basis(const DiophantineSystem& sys, Budget* budget) {
  if (!sys.is_homogeneous()) throw InvalidArgument("hilbert_basis needs a homogeneous system");
  LiftedSystem lifted = lift(sys, false);
  DualCompletion completion(lifted.total, lifted.forms, std::nullopt, budget);
  const auto rows = completion.run();

  // Projection drops the congruence multipliers; the projected set
  // generates the solution monoid, so its irreducible members are the basis.
  std::vector<std::vector<Int>> projected;
  for (const auto& r : rows) {
    std::vector<Int> x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lifted.original));
    if (std::any_of(x.begin(), x.end(), [](Int v) { return v != 0; })) projected.push_back(std::move(x));
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  if (lifted.total == lifted.original) {
    std::vector<FactVector> out;
    for (auto& x : projected) out.emplace_back(std::move(x));
    return out;
  }
  std::vector<FactVector> out;
  std::vector<Int> diff(lifted.original);
  for (const auto& x : projected) {
    bool irreducible = true;
    for (const auto& y : projected) {
      if (&y == &x) continue;
      bool le = true;
      for (std::size_t c = 0; c < x.size() && le; ++c) {
        le = y[c] <= x[c];
        diff[c] = x[c] - y[c];
      }
      if (le && sys.satisfied_by(diff)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) out.emplace_back(x);
  }
  return out;
}

std::vector<FactVector> minimal_solutions(const DiophantineSystem& sys, Budget* budget) {
  if (sys.is_homogeneous()) {
    throw InvalidArgument("minimal_solutions needs a nonzero right-hand side");
  }
  LiftedSystem lifted = lift(sys, true);
  DualCompletion completion(lifted.total, lifted.forms, lifted.homogenizer, budget);
  const auto rows = completion.run();
  std::vector<FactVector> candidates;
  for (const auto& r : rows) {
    if (r[*lifted.homogenizer] != 1) continue;
    candidates.emplace_back(
        std::vector<Int>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lifted.original)));
  }
  return minimal_elements(std::move(candidates));
}

GraverBasis graver_basis(const AffineSemigroup& s, Budget* budget) {
  const std::size_t k = s.atom_count();
  IntMatrix doubled = s.matrix();
  for (auto& row : doubled) {
    const std::size_t base = row.size();
    row.resize(2 * base);
    for (std::size_t j = 0; j < base; ++j) row[base + j] = -row[j];
  }
  const auto basis = hilbert_basis(DiophantineSystem::homogeneous(std::move(doubled)), budget);
  std::vector<FactorPair> pairs;
  for (const auto& v : basis) {
    std::vector<Int> z(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Int> w(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    bool disjoint = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (z[j] > 0 && w[j] > 0) disjoint = false;
    }
    if (!disjoint) continue;
    pairs.push_back(FactorPair::oriented(FactVector(std::move(z)), FactVector(std::move(w))));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<FactVector> minimal_factorizations_in_ideal(const AffineSemigroup& s,
                                                        const ElementVector& g, Budget* budget) {
  s.require_element_dimension(g);
  const std::size_t k = s.atom_count();
  IntMatrix doubled = s.matrix();
  for (auto& row : doubled) {
    row.resize(2 * k);
    for (std::size_t j = 0; j < k; ++j) row[k + j] = -row[j];
  }
  if (g.is_zero()) {
    // Z(0 + S) is all of N^k; its only minimal element is 0.
    return {FactVector(k)};
  }
  const auto sols = minimal_solutions(
      DiophantineSystem::inhomogeneous(std::move(doubled), RowRelation::Equal, g.coords()), budget);
  std::vector<FactVector> projected;
  for (const auto& v : sols) {
    projected.emplace_back(std::vector<Int>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  return minimal_elements(std::move(projected));
}

AffineSemigroup semigroup_from_equations(CongruenceSystem system, Budget* budget) {
  system.validate();
  const auto basis = hilbert_basis(DiophantineSystem::congruences(system), budget);
  std::vector<ElementVector> atoms;
  atoms.reserve(basis.size());
  for (const auto& v : basis) atoms.emplace_back(v.coords());
  return AffineSemigroup::from_atoms_with_equations(std::move(atoms), std::move(system));
}

}  // namespace facinv
