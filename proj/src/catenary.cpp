#include "facinv/catenary.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace facinv {

WeightedEdge WeightedEdge::between(FactVector a, FactVector b) {
  if (b < a) std::swap(a, b);
  const Int w = dist(a, b);
  return WeightedEdge{w, std::move(a), std::move(b)};
}

WeightedEdge WeightedEdge::shifted(std::size_t i) const {
  return WeightedEdge{weight, first.incremented(i), second.incremented(i)};
}

std::vector<WeightedEdge> kruskal(const std::vector<WeightedEdge>& sorted_edges) {
  std::unordered_map<FactVector, std::size_t, NatVectorHash> id;
  auto vertex = [&](const FactVector& v) {
    auto [it, inserted] = id.try_emplace(v, id.size());
    return it->second;
  };
  std::vector<std::size_t> parent, size;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  ends.reserve(sorted_edges.size());
  for (const auto& e : sorted_edges) ends.emplace_back(vertex(e.first), vertex(e.second));
  parent.resize(id.size());
  size.assign(id.size(), 1);
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<WeightedEdge> tree;
  for (std::size_t e = 0; e < sorted_edges.size() && tree.size() + 1 < id.size(); ++e) {
    std::size_t a = find(ends[e].first), b = find(ends[e].second);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    tree.push_back(sorted_edges[e]);
  }
  return tree;
}

Int catenary_naive(const AffineSemigroup& s, const ElementVector& g) {
  const auto facts = factorizations(s, g);
  if (facts.empty()) throw NotInSemigroup(to_string(g) + " is not in the semigroup");
  std::vector<WeightedEdge> edges;
  for (std::size_t a = 0; a < facts.size(); ++a) {
    for (std::size_t b = a + 1; b < facts.size(); ++b) {
      edges.push_back(WeightedEdge::between(facts.facts[a], facts.facts[b]));
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto tree = kruskal(edges);
  return tree.empty() ? 0 : tree.back().weight;
}

namespace {

/// Merges sorted edge lists into one sorted list without duplicates.
std::vector<WeightedEdge> merge_sorted(std::vector<std::vector<WeightedEdge>>& sources,
                                       Budget* budget) {
  using Cursor = std::pair<std::size_t, std::size_t>;  // source, position
  auto later = [&](const Cursor& a, const Cursor& b) {
    return sources[b.first][b.second] < sources[a.first][a.second];
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  std::size_t total = 0;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    total += sources[s].size();
    if (!sources[s].empty()) heap.emplace(s, 0);
  }
  charge(budget, total);
  std::vector<WeightedEdge> out;
  out.reserve(total);
  while (!heap.empty()) {
    auto [s, p] = heap.top();
    heap.pop();
    if (out.empty() || !(out.back() == sources[s][p])) out.push_back(std::move(sources[s][p]));
    if (p + 1 < sources[s].size()) heap.emplace(s, p + 1);
  }
  return out;
}

std::vector<WeightedEdge> shifted_edges(const std::vector<WeightedEdge>& edges, std::size_t i) {
  std::vector<WeightedEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.shifted(i));
  return out;
}

std::size_t endpoint_count(const std::vector<WeightedEdge>& edges) {
  std::unordered_set<FactVector, NatVectorHash> seen;
  for (const auto& e : edges) {
    seen.insert(e.first);
    seen.insert(e.second);
  }
  return seen.size();
}

std::vector<WeightedEdge> graver_edge_list(const GraverBasis& graver) {
  std::vector<WeightedEdge> out;
  for (const auto& p : graver) out.push_back(WeightedEdge::between(p.first, p.second));
  return out;
}

/// Ascending sweep over 0..bound for numerical semigroups. Calls
/// visit(γ, c(γ)) for each semigroup element.
void sweep(const AffineSemigroup& s, Int bound, Budget* budget,
           const std::function<void(Int, Int)>& visit) {
  if (s.dimension() != 1) {
    throw UnsupportedDimension("the ascending sweep needs a numerical semigroup (d = 1)");
  }
  if (bound < 0) throw InvalidArgument("bound must be nonnegative");
  const std::size_t k = s.atom_count();
  std::vector<Int> atoms(k);
  for (std::size_t i = 0; i < k; ++i) atoms[i] = s.atom(i)[0];
  const Int cap = *std::max_element(atoms.begin(), atoms.end());

  std::unordered_map<Int, std::vector<WeightedEdge>> graver_at;
  for (auto& e : graver_edge_list(graver_basis(s, budget))) {
    const Int v = s.evaluate(e.first)[0];
    if (v <= bound) graver_at[v].push_back(std::move(e));
  }
  for (auto& [v, edges] : graver_at) std::sort(edges.begin(), edges.end());

  struct Slot {
    bool member = false;
    std::vector<WeightedEdge> edges;
  };
  std::vector<Slot> ring(static_cast<std::size_t>(cap));
  auto slot = [&](Int g) -> Slot& { return ring[static_cast<std::size_t>(g % cap)]; };

  for (Int g = 0; g <= bound; ++g) {
    if (g == 0) {
      slot(0) = Slot{true, {}};
      visit(0, 0);
      continue;
    }
    bool member = false;
    std::vector<std::vector<WeightedEdge>> sources;
    for (std::size_t i = 0; i < k; ++i) {
      if (atoms[i] > g) continue;
      const Slot& child = slot(g - atoms[i]);
      if (!child.member) continue;
      member = true;
      if (!child.edges.empty()) sources.push_back(shifted_edges(child.edges, i));
    }
    if (!member) {
      slot(g) = Slot{};
      continue;
    }
    if (auto it = graver_at.find(g); it != graver_at.end()) sources.push_back(it->second);
    std::vector<WeightedEdge> merged = merge_sorted(sources, budget);
    std::vector<WeightedEdge> tree = kruskal(merged);
    if (!merged.empty() && tree.size() + 1 != endpoint_count(merged)) {
      throw std::logic_error("factorization graph of " + std::to_string(g) + " is disconnected");
    }
    const Int c = tree.empty() ? 0 : tree.back().weight;
    slot(g) = Slot{true, std::move(tree)};
    visit(g, c);
  }
}

}  // namespace

CatenaryEngine::CatenaryEngine(const AffineSemigroup& s, Budget* budget)
    : s_(s), budget_(budget), graver_(graver_basis(s, budget)) {
  for (auto& e : graver_edge_list(graver_)) graver_by_value_[s_.evaluate(e.first)].push_back(std::move(e));
  for (auto& [v, edges] : graver_by_value_) std::sort(edges.begin(), edges.end());
}

const std::vector<WeightedEdge>& CatenaryEngine::graver_edges(const ElementVector& g) const {
  static const std::vector<WeightedEdge> none;
  auto it = graver_by_value_.find(g);
  return it == graver_by_value_.end() ? none : it->second;
}

bool CatenaryEngine::member(const ElementVector& g) {
  auto it = membership_.find(g);
  if (it != membership_.end()) return it->second;
  const bool in = contains(s_, g);
  membership_.emplace(g, in);
  return in;
}

const WeightedTree& CatenaryEngine::mwst(const ElementVector& g) {
  s_.require_element_dimension(g);
  if (auto it = memo_.find(g); it != memo_.end()) return it->second;
  if (!member(g)) throw NotInSemigroup(to_string(g) + " is not in the semigroup");

  // Collect the missing descendants γ − α_i − ⋯ and build them bottom-up.
  std::vector<ElementVector> pending{g};
  std::unordered_set<ElementVector, NatVectorHash> seen{g};
  for (std::size_t p = 0; p < pending.size(); ++p) {
    const ElementVector x = pending[p];
    for (const auto& a : s_.atoms()) {
      if (!leq(a, x)) continue;
      ElementVector y = x - a;
      if (memo_.count(y) != 0 || seen.count(y) != 0 || !member(y)) continue;
      seen.insert(y);
      pending.push_back(std::move(y));
    }
  }
  std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
    const Int ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  });
  for (const auto& x : pending) build(x);
  return memo_.at(g);
}

void CatenaryEngine::build(const ElementVector& g) {
  WeightedTree tree;
  if (g.is_zero()) {
    tree.vertices.push_back(FactVector(s_.atom_count()));
    memo_.emplace(g, std::move(tree));
    return;
  }
  std::vector<std::vector<WeightedEdge>> sources;
  std::vector<FactVector> vertices;
  for (std::size_t i = 0; i < s_.atom_count(); ++i) {
    if (!leq(s_.atom(i), g)) continue;
    auto it = memo_.find(g - s_.atom(i));
    if (it == memo_.end()) continue;
    for (const auto& v : it->second.vertices) vertices.push_back(v.incremented(i));
    if (!it->second.edges.empty()) sources.push_back(shifted_edges(it->second.edges, i));
  }
  const auto& extra = graver_edges(g);
  if (!extra.empty()) sources.push_back(extra);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  const auto merged = merge_sorted(sources, budget_);
  tree.edges = kruskal(merged);
  if (vertices.size() >= 2 && tree.edges.size() + 1 != vertices.size()) {
    throw std::logic_error("factorization graph of " + to_string(g) + " is disconnected");
  }
  tree.vertices = std::move(vertices);
  memo_.emplace(g, std::move(tree));
}

Int catenary_dynamic(const AffineSemigroup& s, const ElementVector& g, Budget* budget) {
  s.require_element_dimension(g);
  if (s.dimension() == 1) {
    std::optional<Int> result;
    sweep(s, g[0], budget, [&](Int x, Int c) {
      if (x == g[0]) result = c;
    });
    if (!result) throw NotInSemigroup(to_string(g) + " is not in the semigroup");
    return *result;
  }
  CatenaryEngine engine(s, budget);
  return engine.catenary(g);
}

std::vector<std::pair<Int, Int>> catenary_range(const AffineSemigroup& s, Int bound, Budget* budget) {
  std::vector<std::pair<Int, Int>> out;
  sweep(s, bound, budget, [&](Int x, Int c) { out.emplace_back(x, c); });
  return out;
}

}  // namespace facinv
