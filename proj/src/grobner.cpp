#include "facinv/grobner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace facinv {

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> priority, std::vector<bool> in_block)
    : kind_(kind), priority_(std::move(priority)), in_block_(std::move(in_block)) {
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t v : priority_) {
    if (v >= priority_.size() || seen[v]) {
      throw InvalidArgument("variable priority must be a permutation");
    }
    seen[v] = true;
  }
  if (in_block_.empty()) in_block_.assign(priority_.size(), false);
  for (std::size_t v : priority_) (in_block_[v] ? block_vars_ : rest_vars_).push_back(v);
}

TermOrder TermOrder::lex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(Kind::Lex, std::move(p), {});
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  return TermOrder(Kind::Lex, std::move(priority), {});
}

TermOrder TermOrder::grlex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(Kind::Grlex, std::move(p), {});
}

TermOrder TermOrder::block_elim(std::size_t n, const std::vector<std::size_t>& block) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> in_block(n, false);
  for (std::size_t v : block) {
    if (v >= n) throw InvalidArgument("block variable out of range");
    in_block[v] = true;
  }
  return TermOrder(Kind::BlockElim, std::move(p), std::move(in_block));
}

namespace {

std::strong_ordering compare_graded(const std::vector<std::size_t>& vars, const Int* a,
                                    const Int* b) {
  Int da = 0, db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da <=> db;
  for (std::size_t v : vars) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrder::compare(const Int* a, const Int* b) const noexcept {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t v : priority_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      return std::strong_ordering::equal;
    case Kind::Grlex:
      return compare_graded(priority_, a, b);
    case Kind::BlockElim: {
      auto c = compare_graded(block_vars_, a, b);
      if (c != 0) return c;
      return compare_graded(rest_vars_, a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const FactVector& a, const FactVector& b) const {
  if (a.size() != variables() || b.size() != variables()) {
    throw InvalidArgument("exponent vector length does not match the term order");
  }
  return compare(a.coords().data(), b.coords().data());
}

Binomial Binomial::make(FactVector a, FactVector b, const TermOrder& order, CommonFactors common) {
  a.require_same_size(b);
  if (common == CommonFactors::Cancel) {
    FactVector c = meet(a, b);
    if (!c.is_zero()) {
      a = a - c;
      b = b - c;
    }
  }
  const auto cmp = order.compare(a, b);
  Binomial out;
  if (cmp == 0) return out;
  if (cmp < 0) std::swap(a, b);
  out.plus_ = std::move(a);
  out.minus_ = std::move(b);
  return out;
}

std::string to_string(const Binomial& b) {
  if (b.is_zero()) return "0";
  return "y^" + to_string(b.plus()) + " - y^" + to_string(b.minus());
}

std::vector<Int> atom_weights(const AffineSemigroup& s) {
  std::vector<Int> w;
  w.reserve(s.atom_count());
  for (const auto& a : s.atoms()) w.push_back(a.total());
  return w;
}

namespace {

using Exp = std::vector<Int>;

std::uint64_t support_mask(const Exp& e) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] != 0) m |= std::uint64_t{1} << (j % 64);
  }
  return m;
}

/// Completion state. Members are kept forever; a member whose leading term
/// is divisible by a later member's leading term stops being used as a
/// reducer and takes part in no new pairs, which does not change any normal
/// form.
class Completion {
 public:
  Completion(const TermOrder& order, CommonFactors common, std::vector<Int> weights,
             Budget* budget)
      : order_(order), common_(common), weights_(std::move(weights)), budget_(budget) {
    if (weights_.empty()) weights_.assign(order_.variables(), 1);
    if (weights_.size() != order_.variables()) {
      throw InvalidArgument("need one weight per variable");
    }
    if (std::any_of(weights_.begin(), weights_.end(), [](Int w) { return w <= 0; })) {
      throw InvalidArgument("weights must be positive");
    }
  }

  /// Adopts a member without scheduling pairs (it is already part of a
  /// Gröbner basis with the other adopted members).
  void adopt(const Binomial& g) {
    if (g.is_zero()) return;
    add_member(g.plus().coords(), g.minus().coords(), false);
  }

  void add_generator(const Binomial& g) {
    if (g.is_zero()) return;
    Exp a = g.plus().coords(), b = g.minus().coords();
    if (a.size() != order_.variables()) throw InvalidArgument("binomial has the wrong length");
    if (!normalize(a, b)) return;
    add_member(std::move(a), std::move(b), true);
  }

  void complete() {
    while (!queue_.empty()) {
      const QueueEntry top = queue_.top();
      queue_.pop();
      Pair& p = pairs_[top.pair];
      if (!p.alive) continue;
      p.alive = false;
      --alive_pairs_;
      charge(budget_);
      const Member& f = members_[p.i];
      const Member& g = members_[p.j];
      const std::size_t n = f.lead.size();
      Exp u(n), v(n);
      for (std::size_t c = 0; c < n; ++c) {
        u[c] = checked_add(p.lcm[c] - f.lead[c], f.trail[c]);
        v[c] = checked_add(p.lcm[c] - g.lead[c], g.trail[c]);
      }
      if (normalize(u, v)) add_member(std::move(u), std::move(v), true);
    }
    pairs_.clear();
  }

  /// Full normal form of both terms; false when they coincide.
  bool normalize(Exp& a, Exp& b) {
    if (common_ == CommonFactors::Cancel) cancel(a, b);
    reduce_term(a);
    reduce_term(b);
    if (common_ == CommonFactors::Cancel) cancel(a, b);
    const auto c = order_.compare(a.data(), b.data());
    if (c == 0) return false;
    if (c < 0) std::swap(a, b);
    return true;
  }

  void reduce(Exp& u) { reduce_term(u); }

  std::vector<Binomial> members() const {
    std::vector<Binomial> out;
    for (const auto& m : members_) {
      out.push_back(Binomial::make(FactVector(m.lead), FactVector(m.trail), order_,
                                   CommonFactors::Keep));
    }
    return out;
  }

 private:
  struct Member {
    Exp lead, trail;
    std::uint64_t mask;
    bool reducer;
  };
  struct Pair {
    std::size_t i, j;
    Exp lcm;
    std::uint64_t mask;
    bool alive;
  };
  struct QueueEntry {
    Int degree;
    std::uint64_t seq;
    std::size_t pair;
    bool operator>(const QueueEntry& o) const {
      return degree != o.degree ? degree > o.degree : seq > o.seq;
    }
  };

  static void cancel(Exp& a, Exp& b) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      const Int m = std::min(a[c], b[c]);
      a[c] -= m;
      b[c] -= m;
    }
  }

  bool divides(const Member& g, const Exp& u, std::uint64_t umask) const {
    if ((g.mask & ~umask) != 0) return false;
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (g.lead[c] > u[c]) return false;
    }
    return true;
  }

  /// Rewrites u to its normal form with respect to the current reducers.
  void reduce_term(Exp& u) {
    std::uint64_t umask = support_mask(u);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t idx : reducers_) {
        const Member& g = members_[idx];
        if (!divides(g, u, umask)) continue;
        charge(budget_);
        for (std::size_t c = 0; c < u.size(); ++c) u[c] = checked_add(u[c] - g.lead[c], g.trail[c]);
        umask = support_mask(u);
        changed = true;
        break;
      }
    }
  }

  static Exp lcm_of(const Exp& a, const Exp& b) {
    Exp l(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) l[c] = std::max(a[c], b[c]);
    return l;
  }

  static bool divides_exp(const Exp& a, const Exp& b) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (a[c] > b[c]) return false;
    }
    return true;
  }

  /// Gebauer-Möller update: pairs of the new member with the reducers,
  /// minus those whose lcm is a proper multiple of another new lcm, one per
  /// class of equal lcms, and none from a class containing a coprime pair.
  /// Pending pairs whose lcm the new lead divides strictly on both sides are
  /// dropped.
  void schedule_pairs(std::size_t id) {
    const Member& h = members_[id];
    struct Candidate {
      std::size_t j;
      Exp lcm;
      Int degree;
      std::uint64_t mask;
      bool coprime;
    };
    std::vector<Candidate> cands;
    cands.reserve(reducers_.size());
    for (std::size_t j : reducers_) {
      const Member& f = members_[j];
      bool coprime = true;
      if ((f.mask & h.mask) != 0) {
        for (std::size_t c = 0; c < h.lead.size() && coprime; ++c) {
          if (f.lead[c] > 0 && h.lead[c] > 0) coprime = false;
        }
      }
      Exp l = lcm_of(f.lead, h.lead);
      Int degree = 0;
      for (std::size_t v = 0; v < l.size(); ++v) {
        degree = checked_add(degree, checked_mul(weights_[v], l[v]));
      }
      cands.push_back({j, std::move(l), degree, f.mask | h.mask, coprime});
    }
    // A divisor of an lcm has no larger weighted degree, and divisibility is
    // transitive, so each candidate only needs checking against the
    // candidates kept before it. Coprime candidates go first among equals so
    // that they absorb their whole class.
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.coprime > b.coprime;
    });
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const bool covered = std::any_of(kept.begin(), kept.end(), [&](std::size_t b) {
        return (cands[b].mask & ~cands[a].mask) == 0 && divides_exp(cands[b].lcm, cands[a].lcm);
      });
      if (!covered) kept.push_back(a);
    }
    for (auto& p : pairs_) {
      if (!p.alive || (h.mask & ~p.mask) != 0 || !divides_exp(h.lead, p.lcm)) continue;
      if (lcm_of(members_[p.i].lead, h.lead) != p.lcm && lcm_of(members_[p.j].lead, h.lead) != p.lcm) {
        p.alive = false;
        --alive_pairs_;
      }
    }
    if (alive_pairs_ * 2 < pairs_.size()) compact_pairs();
    for (std::size_t a : kept) {
      auto& c = cands[a];
      if (c.coprime) continue;
      queue_.push(QueueEntry{c.degree, seq_++, pairs_.size()});
      pairs_.push_back(Pair{c.j, id, std::move(c.lcm), c.mask, true});
      ++alive_pairs_;
    }
  }

  void compact_pairs() {
    std::vector<std::size_t> remap(pairs_.size(), 0);
    std::vector<Pair> kept;
    kept.reserve(alive_pairs_);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (!pairs_[p].alive) continue;
      remap[p] = kept.size();
      kept.push_back(std::move(pairs_[p]));
    }
    decltype(queue_) queue;
    while (!queue_.empty()) {
      QueueEntry e = queue_.top();
      queue_.pop();
      if (!pairs_[e.pair].alive) continue;
      e.pair = remap[e.pair];
      queue.push(e);
    }
    pairs_ = std::move(kept);
    queue_ = std::move(queue);
  }

  void add_member(Exp lead, Exp trail, bool schedule) {
    const std::uint64_t mask = support_mask(lead);
    const std::size_t id = members_.size();
    members_.push_back(Member{std::move(lead), std::move(trail), mask, true});
    if (schedule) schedule_pairs(id);
    // Reducers whose leading term the new one divides are no longer needed;
    // their pending pairs stay queued.
    const Member& m = members_[id];
    std::erase_if(reducers_, [&](std::size_t idx) {
      return divides(m, members_[idx].lead, members_[idx].mask);
    });
    reducers_.push_back(id);
  }

  const TermOrder& order_;
  CommonFactors common_;
  std::vector<Int> weights_;
  Budget* budget_;
  std::vector<Member> members_;
  std::vector<std::size_t> reducers_;
  std::vector<Pair> pairs_;
  std::size_t alive_pairs_ = 0;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;
  std::uint64_t seq_ = 0;
};

void check_oriented(const Binomial& g, const TermOrder& order) {
  if (g.is_zero()) return;
  if (g.plus().size() != order.variables()) throw InvalidArgument("binomial has the wrong length");
  if (order.compare(g.plus(), g.minus()) <= 0) {
    throw InvalidArgument("binomial is not oriented by the term order");
  }
}

}  // namespace

Binomial normal_form(const Binomial& f, const BinomialIdealBasis& g, CommonFactors common) {
  if (f.is_zero()) return f;
  Completion c(g.order, common, {}, nullptr);
  for (const auto& b : g.binomials) c.adopt(b);
  Exp a = f.plus().coords(), b = f.minus().coords();
  if (a.size() != g.order.variables()) throw InvalidArgument("binomial has the wrong length");
  if (!c.normalize(a, b)) return Binomial{};
  return Binomial::make(FactVector(std::move(a)), FactVector(std::move(b)), g.order,
                        CommonFactors::Keep);
}

BinomialIdealBasis buchberger(std::vector<Binomial> gens, const TermOrder& order,
                              const BuchbergerOptions& options) {
  return extend_groebner_basis(BinomialIdealBasis{{}, order, false}, std::move(gens), options);
}

BinomialIdealBasis extend_groebner_basis(const BinomialIdealBasis& g, std::vector<Binomial> more,
                                         const BuchbergerOptions& options) {
  Completion c(g.order, options.common, options.weights, options.budget);
  for (const auto& b : g.binomials) {
    check_oriented(b, g.order);
    c.adopt(b);
  }
  for (const auto& b : more) {
    check_oriented(b, g.order);
    c.add_generator(b);
    c.complete();
  }
  return BinomialIdealBasis{c.members(), g.order, false};
}

BinomialIdealBasis reduce_basis(const BinomialIdealBasis& g) {
  const TermOrder& order = g.order;
  auto by_lead = [&](const Binomial& x, const Binomial& y) {
    auto c = order.compare(x.plus(), y.plus());
    if (c != 0) return c < 0;
    return order.compare(x.minus(), y.minus()) < 0;
  };
  std::vector<Binomial> sorted;
  for (const auto& b : g.binomials) {
    if (!b.is_zero()) sorted.push_back(b);
  }
  std::sort(sorted.begin(), sorted.end(), by_lead);
  std::vector<Binomial> minimal;
  for (const auto& b : sorted) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Binomial& h) { return leq(h.plus(), b.plus()); });
    if (!redundant) minimal.push_back(b);
  }
  // Tail reduction against the minimal leads; leading terms stay put.
  Completion c(order, CommonFactors::Keep, {}, nullptr);
  for (const auto& b : minimal) c.adopt(b);
  BinomialIdealBasis out{{}, order, true};
  for (const auto& b : minimal) {
    Exp trail = b.minus().coords();
    c.reduce(trail);
    out.binomials.push_back(
        Binomial::make(b.plus(), FactVector(std::move(trail)), order, CommonFactors::Keep));
  }
  std::sort(out.binomials.begin(), out.binomials.end(), by_lead);
  return out;
}

BinomialIdealBasis toric_ideal(const AffineSemigroup& s, Budget* budget) {
  const std::size_t k = s.atom_count();
  const std::size_t d = s.dimension();
  std::vector<std::size_t> block(d);
  std::iota(block.begin(), block.end(), k);
  const TermOrder order = TermOrder::block_elim(k + d, block);
  std::vector<Int> weights = atom_weights(s);
  weights.resize(k + d, 1);
  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> y(k + d, 0), t(k + d, 0);
    y[i] = 1;
    for (std::size_t r = 0; r < d; ++r) t[k + r] = s.atom(i)[r];
    gens.push_back(Binomial::make(FactVector(std::move(y)), FactVector(std::move(t)), order));
  }
  const auto g = buchberger(std::move(gens), order,
                            BuchbergerOptions{CommonFactors::Cancel, std::move(weights), budget});
  const TermOrder y_order = TermOrder::grlex(k);
  BinomialIdealBasis out{{}, y_order, false};
  for (const auto& b : g.binomials) {
    bool t_free = true;
    for (std::size_t r = 0; r < d; ++r) {
      if (b.plus()[k + r] != 0 || b.minus()[k + r] != 0) t_free = false;
    }
    if (!t_free) continue;
    std::vector<Int> a(b.plus().begin(), b.plus().begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Int> c(b.minus().begin(), b.minus().begin() + static_cast<std::ptrdiff_t>(k));
    out.binomials.push_back(Binomial::make(FactVector(std::move(a)), FactVector(std::move(c)), y_order));
  }
  return reduce_basis(out);
}

}  // namespace facinv
