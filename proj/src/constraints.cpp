#include "bicrit/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace bicrit {

KnapsackConstraint::KnapsackConstraint(std::vector<Real> prices, Real budget, bool allow_oversized_prices)
    : prices_(std::move(prices)), budget_(budget), allow_oversized_(allow_oversized_prices) {
  if ((int)prices_.size() > kMaxSetElements) throw std::out_of_range("KnapsackConstraint: too many elements");
  if (!(budget_ >= 0)) throw std::invalid_argument("KnapsackConstraint: negative budget");
  for (Real p : prices_) {
    if (!(p >= 0)) throw std::invalid_argument("KnapsackConstraint: negative price");
    if (!allow_oversized_ && p > budget_ + 1e-12)
      throw std::invalid_argument("KnapsackConstraint: element price exceeds budget");
    total_ += p;
  }
}

Real KnapsackConstraint::cost(const ElementSet& s) const {
  if (s.universe_size() != n()) throw std::invalid_argument("KnapsackConstraint: ground set mismatch");
  Real acc = 0;
  for (int u : s.elements()) acc += prices_[u];
  return acc;
}

Real KnapsackConstraint::cost(const DenseVector& x) const {
  if (x.n() != n()) throw std::invalid_argument("KnapsackConstraint: ground set mismatch");
  Real acc = 0;
  for (int u = 0; u < n(); ++u) acc += prices_[u] * x[u];
  return acc;
}

Real density(const KnapsackConstraint& k) {
  if (k.total_price() <= 0) throw std::invalid_argument("density: zero total price");
  return k.budget() / k.total_price();
}

Real rho(Real c, Real eps) {
  if (!(c > 0 && c < 1)) throw std::invalid_argument("rho: c must lie in (0,1)");
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("rho: eps must lie in (0,1]");
  if (c <= 0.5) return (1.0 - std::pow(eps, c)) / c;
  return (1.0 - 2.0 * (1.0 - c) * std::sqrt(eps) - eps * (2.0 * c - 1.0)) / c;
}

Real nu(Real beta) {
  if (beta < 0) throw std::invalid_argument("nu: beta must be non-negative");
  if (beta >= 2.0 * std::log(2.0)) return 0.5;
  const Real e = std::exp(-beta / 2.0);
  return 2.0 * e * (1.0 - e);
}

// ---- Matroid ---------------------------------------------------------------

namespace {

bool graphic_acyclic(int n_vertices, const std::vector<std::pair<int, int>>& edges, const ElementSet& s) {
  std::vector<int> parent(n_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : s.elements()) {
    int a = find(edges[e].first), b = find(edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

Matroid Matroid::uniform(int n, int rank) {
  if (n < 0 || n > kMaxSetElements) throw std::out_of_range("Matroid::uniform: bad ground set size");
  if (rank < 0) throw std::invalid_argument("Matroid::uniform: negative rank");
  auto st = std::make_shared<State>();
  st->kind = Kind::Uniform;
  st->n = n;
  st->uniform_rank = std::min(rank, n);
  st->rank_hint = st->uniform_rank;
  int r = st->uniform_rank;
  st->indep = [r](const ElementSet& s) { return s.size() <= r; };
  Matroid m;
  m.state_ = std::move(st);
  return m;
}

Matroid Matroid::partition(std::vector<int> part_of, std::vector<int> limits) {
  const int n = (int)part_of.size();
  if (n > kMaxSetElements) throw std::out_of_range("Matroid::partition: too many elements");
  for (int p : part_of)
    if (p < 0 || p >= (int)limits.size()) throw std::invalid_argument("Matroid::partition: bad part index");
  for (int l : limits)
    if (l < 0) throw std::invalid_argument("Matroid::partition: negative limit");
  auto st = std::make_shared<State>();
  st->kind = Kind::Partition;
  st->n = n;
  st->part_of = std::move(part_of);
  st->limits = std::move(limits);
  auto parts = st->part_of;
  auto lims = st->limits;
  st->indep = [parts, lims](const ElementSet& s) {
    std::vector<int> cnt(lims.size(), 0);
    for (int u : s.elements())
      if (++cnt[parts[u]] > lims[parts[u]]) return false;
    return true;
  };
  Matroid m;
  m.state_ = std::move(st);
  return m;
}

Matroid Matroid::graphic(int n_vertices, std::vector<std::pair<int, int>> edges) {
  const int n = (int)edges.size();
  if (n > kMaxSetElements) throw std::out_of_range("Matroid::graphic: too many edges");
  for (auto& [a, b] : edges)
    if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices)
      throw std::invalid_argument("Matroid::graphic: bad endpoint");
  auto st = std::make_shared<State>();
  st->kind = Kind::Graphic;
  st->n = n;
  st->graphic_vertices = n_vertices;
  st->edges = std::move(edges);
  auto es = st->edges;
  st->indep = [n_vertices, es](const ElementSet& s) { return graphic_acyclic(n_vertices, es, s); };
  Matroid m;
  m.state_ = std::move(st);
  return m;
}

Matroid Matroid::from_oracle(int n, std::function<bool(const ElementSet&)> independent,
                             std::optional<int> rank_hint) {
  if (n < 0 || n > kMaxSetElements) throw std::out_of_range("Matroid::from_oracle: bad ground set size");
  if (!independent) throw std::invalid_argument("Matroid::from_oracle: missing oracle");
  auto st = std::make_shared<State>();
  st->kind = Kind::Oracle;
  st->n = n;
  st->indep = std::move(independent);
  st->rank_hint = rank_hint;
  Matroid m;
  m.state_ = std::move(st);
  return m;
}

bool Matroid::independent(const ElementSet& s) const {
  const State& st = state();
  if (s.universe_size() != st.n) throw std::invalid_argument("Matroid: ground set mismatch");
  return st.indep(s);
}

int Matroid::rank_of(const ElementSet& s) const {
  ElementSet t(n());
  for (int u : s.elements())
    if (independent(t.with(u))) t.add(u);
  return t.size();
}

int Matroid::rank() const {
  const State& st = state();
  if (!st.full_rank) st.full_rank = rank_of(ElementSet::full(st.n));
  return *st.full_rank;
}

int Matroid::uniform_rank() const {
  if (kind() != Kind::Uniform) throw std::logic_error("Matroid: not a uniform matroid");
  return state().uniform_rank;
}

const std::vector<int>& Matroid::partition_part_of() const {
  if (kind() != Kind::Partition) throw std::logic_error("Matroid: not a partition matroid");
  return state().part_of;
}

const std::vector<int>& Matroid::partition_limits() const {
  if (kind() != Kind::Partition) throw std::logic_error("Matroid: not a partition matroid");
  return state().limits;
}

// ---- Matroid partition (Edmonds augmentation) ------------------------------

namespace {

// Attempts to place x into one of the parts (each independent in m), using
// shortest augmenting paths in the exchange digraph. Mutates parts on success.
bool partition_augment(const Matroid& m, std::vector<ElementSet>& parts, int x) {
  const int n = m.n();
  const int k = (int)parts.size();
  // BFS over displaced elements.
  std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
  std::vector<int> part_of(n, -1);
  for (int i = 0; i < k; ++i)
    for (int u : parts[i].elements()) part_of[u] = i;
  std::deque<int> queue{x};
  parent[x] = -1;
  int sink = -1, sink_part = -1;
  while (!queue.empty() && sink < 0) {
    int y = queue.front();
    queue.pop_front();
    for (int i = 0; i < k && sink < 0; ++i) {
      if (parts[i].contains(y)) continue;
      if (m.independent(parts[i].with(y))) {
        sink = y;
        sink_part = i;
        break;
      }
      for (int z : parts[i].elements()) {
        if (parent[z] != -2) continue;
        if (m.independent(parts[i].with(y).without(z))) {
          parent[z] = y;
          queue.push_back(z);
        }
      }
    }
  }
  if (sink < 0) return false;
  // Path sink <- ... <- x via parent pointers. The sink enters sink_part; each
  // other path element leaves its part, replaced there by its predecessor.
  std::vector<int> path;
  for (int v = sink; v != -1; v = parent[v]) path.push_back(v);
  parts[sink_part].add(sink);
  for (size_t j = 0; j + 1 < path.size(); ++j) {
    int displaced = path[j];
    int replacement = path[j + 1];
    int pi = part_of[displaced];
    parts[pi].remove(displaced);
    parts[pi].add(replacement);
  }
  for (const ElementSet& p : parts)
    if (!m.independent(p)) throw std::logic_error("matroid partition: augmentation produced dependent part");
  return true;
}

bool partition_into(const Matroid& m, int k, const ElementSet& s, std::vector<ElementSet>* out = nullptr) {
  std::vector<ElementSet> parts(k, ElementSet(m.n()));
  for (int u : s.elements())
    if (!partition_augment(m, parts, u)) return false;
  if (out) *out = parts;
  return true;
}

}  // namespace

bool matroid_union_independent(const Matroid& m, int k, const ElementSet& s) {
  if (k < 1) throw std::invalid_argument("matroid_union_independent: k must be >= 1");
  if (s.universe_size() != m.n()) throw std::invalid_argument("matroid_union_independent: ground set mismatch");
  switch (m.kind()) {
    case Matroid::Kind::Uniform:
      return s.size() <= (long long)k * m.uniform_rank();
    case Matroid::Kind::Partition: {
      const auto& part_of = m.partition_part_of();
      const auto& limits = m.partition_limits();
      std::vector<long long> cnt(limits.size(), 0);
      for (int u : s.elements())
        if (++cnt[part_of[u]] > (long long)k * limits[part_of[u]]) return false;
      return true;
    }
    default:
      return partition_into(m, k, s);
  }
}

MatroidUnion::MatroidUnion(Matroid m, int k) : m_(std::move(m)), k_(k) {
  if (k < 1) throw std::invalid_argument("MatroidUnion: k must be >= 1");
  rank_cache_ = std::make_shared<std::unordered_map<uint64_t, int>>();
}

bool MatroidUnion::independent(const ElementSet& s) const { return rank(s) == s.size(); }

int MatroidUnion::rank(const ElementSet& s) const {
  auto it = rank_cache_->find(s.bits());
  if (it != rank_cache_->end()) return it->second;
  int r;
  switch (m_.kind()) {
    case Matroid::Kind::Uniform:
      r = (int)std::min<long long>(s.size(), (long long)k_ * m_.uniform_rank());
      break;
    case Matroid::Kind::Partition: {
      const auto& part_of = m_.partition_part_of();
      const auto& limits = m_.partition_limits();
      std::vector<long long> cnt(limits.size(), 0);
      for (int u : s.elements()) ++cnt[part_of[u]];
      long long acc = 0;
      for (size_t j = 0; j < limits.size(); ++j) acc += std::min(cnt[j], (long long)k_ * limits[j]);
      r = (int)acc;
      break;
    }
    default: {
      // Greedy over the union matroid: keep elements whose insertion succeeds.
      std::vector<ElementSet> parts(k_, ElementSet(m_.n()));
      int placed = 0;
      for (int u : s.elements())
        if (partition_augment(m_, parts, u)) ++placed;
      r = placed;
      break;
    }
  }
  rank_cache_->emplace(s.bits(), r);
  return r;
}

// ---- SolvableRegion --------------------------------------------------------

namespace {

// Indices sorted by weight descending, index ascending.
std::vector<int> sorted_by_weight(const DenseVector& w) {
  std::vector<int> idx(w.n());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] > w[b]; });
  return idx;
}

DenseVector capped_knapsack_greedy(const DenseVector& w, const std::vector<Real>& p, Real budget) {
  DenseVector x(w.n(), 0.0);
  Real remaining = budget;
  // Free elements first, then by value density.
  std::vector<int> idx;
  for (int u = 0; u < w.n(); ++u) {
    if (w[u] <= 0) continue;
    if (p[u] <= 0)
      x[u] = 1.0;
    else
      idx.push_back(u);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] / p[a] > w[b] / p[b]; });
  for (int u : idx) {
    if (remaining <= 0) break;
    Real take = std::min(1.0, remaining / p[u]);
    x[u] = take;
    remaining -= take * p[u];
  }
  return x;
}

}  // namespace

SolvableRegion SolvableRegion::box(int n) {
  auto st = std::make_shared<State>();
  st->kind = Kind::Box;
  st->n = n;
  st->down_closed = true;
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

SolvableRegion SolvableRegion::cardinality_polytope(int n, Real budget) {
  if (budget < 0) throw std::invalid_argument("cardinality_polytope: negative budget");
  auto st = std::make_shared<State>();
  st->kind = Kind::CardinalityPolytope;
  st->n = n;
  st->down_closed = true;
  st->card_budget = budget;
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

SolvableRegion SolvableRegion::knapsack_polytope(KnapsackConstraint k) {
  auto st = std::make_shared<State>();
  st->kind = Kind::KnapsackPolytope;
  st->n = k.n();
  st->down_closed = true;
  st->knapsack = std::move(k);
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

SolvableRegion SolvableRegion::matroid_polytope(Matroid m) {
  auto st = std::make_shared<State>();
  st->kind = Kind::MatroidPolytope;
  st->n = m.n();
  st->down_closed = true;
  st->matroid = std::move(m);
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

SolvableRegion SolvableRegion::partition_bases(std::vector<int> part_of, std::vector<int> counts) {
  const int n = (int)part_of.size();
  std::vector<int> sizes(counts.size(), 0);
  for (int p : part_of) {
    if (p < 0 || p >= (int)counts.size()) throw std::invalid_argument("partition_bases: bad part index");
    ++sizes[p];
  }
  for (size_t j = 0; j < counts.size(); ++j)
    if (counts[j] < 0 || counts[j] > sizes[j]) throw std::invalid_argument("partition_bases: bad count");
  auto st = std::make_shared<State>();
  st->kind = Kind::PartitionBases;
  st->n = n;
  st->down_closed = false;
  st->part_of = std::move(part_of);
  st->counts = std::move(counts);
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

SolvableRegion SolvableRegion::custom(int n, std::function<DenseVector(const DenseVector&)> lp_oracle,
                                      bool down_closed,
                                      std::function<bool(const DenseVector&, Real)> membership) {
  if (!lp_oracle) throw std::invalid_argument("SolvableRegion::custom: missing lp oracle");
  auto st = std::make_shared<State>();
  st->kind = Kind::Custom;
  st->n = n;
  st->down_closed = down_closed;
  st->lp = std::move(lp_oracle);
  st->membership = std::move(membership);
  SolvableRegion r;
  r.state_ = std::move(st);
  return r;
}

DenseVector SolvableRegion::lp_maximize(const DenseVector& w) const {
  const State& st = state();
  if (w.n() != st.n) throw std::invalid_argument("lp_maximize: dimension mismatch");
  for (Real c : w.coords())
    if (!std::isfinite(c)) throw std::invalid_argument("lp_maximize: non-finite weight");
  switch (st.kind) {
    case Kind::Box: {
      DenseVector x(st.n, 0.0);
      for (int u = 0; u < st.n; ++u) x[u] = w[u] > 0 ? 1.0 : 0.0;
      return x;
    }
    case Kind::CardinalityPolytope: {
      DenseVector x(st.n, 0.0);
      Real remaining = st.card_budget;
      for (int u : sorted_by_weight(w)) {
        if (w[u] <= 0 || remaining <= 0) break;
        Real take = std::min(1.0, remaining);
        x[u] = take;
        remaining -= take;
      }
      return x;
    }
    case Kind::KnapsackPolytope:
      return capped_knapsack_greedy(w, st.knapsack->prices(), st.knapsack->budget());
    case Kind::MatroidPolytope: {
      ElementSet s(st.n);
      for (int u : sorted_by_weight(w)) {
        if (w[u] <= 0) break;
        if (st.matroid->independent(s.with(u))) s.add(u);
      }
      return DenseVector::indicator(s);
    }
    case Kind::PartitionBases: {
      DenseVector x(st.n, 0.0);
      for (size_t j = 0; j < st.counts.size(); ++j) {
        std::vector<int> members;
        for (int u = 0; u < st.n; ++u)
          if (st.part_of[u] == (int)j) members.push_back(u);
        std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return w[a] > w[b]; });
        for (int t = 0; t < st.counts[j]; ++t) x[members[t]] = 1.0;
      }
      return x;
    }
    case Kind::Custom: {
      DenseVector x = st.lp(w);
      if (x.n() != st.n || !x.in_unit_box(kTol)) throw std::runtime_error("lp_maximize: oracle output invalid");
      if (st.membership && !st.membership(x, 1e-6))
        throw std::runtime_error("lp_maximize: oracle output fails membership");
      return x;
    }
  }
  throw std::logic_error("lp_maximize: unreachable");
}

DenseVector SolvableRegion::lp_maximize_scaled(const DenseVector& w, int ell) const {
  const State& st = state();
  if (ell < 1) throw std::invalid_argument("lp_maximize_scaled: ell must be >= 1");
  if (w.n() != st.n) throw std::invalid_argument("lp_maximize_scaled: dimension mismatch");
  if (!st.down_closed) throw std::invalid_argument("lp_maximize_scaled: region must be down-closed");
  switch (st.kind) {
    case Kind::Box: {
      DenseVector x(st.n, 0.0);
      for (int u = 0; u < st.n; ++u) x[u] = w[u] > 0 ? 1.0 : 0.0;
      return x;
    }
    case Kind::CardinalityPolytope: {
      DenseVector x(st.n, 0.0);
      Real remaining = st.card_budget * ell;
      for (int u : sorted_by_weight(w)) {
        if (w[u] <= 0 || remaining <= 0) break;
        Real take = std::min(1.0, remaining);
        x[u] = take;
        remaining -= take;
      }
      return x;
    }
    case Kind::KnapsackPolytope:
      return capped_knapsack_greedy(w, st.knapsack->prices(), st.knapsack->budget() * ell);
    case Kind::MatroidPolytope: {
      ElementSet s(st.n);
      for (int u : sorted_by_weight(w)) {
        if (w[u] <= 0) break;
        if (matroid_union_independent(*st.matroid, ell, s.with(u))) s.add(u);
      }
      return DenseVector::indicator(s);
    }
    default:
      throw std::invalid_argument("lp_maximize_scaled: unsupported region kind");
  }
}

bool SolvableRegion::member(const DenseVector& x, Real tol) const {
  const State& st = state();
  if (x.n() != st.n) throw std::invalid_argument("member: dimension mismatch");
  if (!x.in_unit_box(tol)) return false;
  switch (st.kind) {
    case Kind::Box:
      return true;
    case Kind::CardinalityPolytope: {
      Real sum = 0;
      for (Real c : x.coords()) sum += c;
      return sum <= st.card_budget + tol * std::max<Real>(1.0, st.n);
    }
    case Kind::KnapsackPolytope:
      return st.knapsack->cost(x) <= st.knapsack->budget() + tol * std::max<Real>(1.0, st.knapsack->budget());
    case Kind::MatroidPolytope: {
      const Matroid& m = *st.matroid;
      if (m.kind() == Matroid::Kind::Uniform) {
        Real sum = 0;
        for (Real c : x.coords()) sum += c;
        return sum <= m.uniform_rank() + tol * std::max(1, st.n);
      }
      if (m.kind() == Matroid::Kind::Partition) {
        const auto& part_of = m.partition_part_of();
        const auto& limits = m.partition_limits();
        std::vector<Real> mass(limits.size(), 0.0);
        for (int u = 0; u < st.n; ++u) mass[part_of[u]] += x[u];
        for (size_t j = 0; j < limits.size(); ++j)
          if (mass[j] > limits[j] + tol * std::max(1, st.n)) return false;
        return true;
      }
      // General matroids: check x(S) <= rank(S) on all subsets of the support.
      ElementSet supp = x.support(tol);
      if (supp.size() > 22) throw std::runtime_error("member: support too large for matroid polytope check");
      auto elems = supp.elements();
      const uint64_t count = uint64_t{1} << elems.size();
      for (uint64_t mask = 1; mask < count; ++mask) {
        ElementSet s(st.n);
        Real sum = 0;
        for (size_t b = 0; b < elems.size(); ++b)
          if ((mask >> b) & 1) {
            s.add(elems[b]);
            sum += x[elems[b]];
          }
        if (sum > m.rank_of(s) + tol * std::max(1, st.n)) return false;
      }
      return true;
    }
    case Kind::PartitionBases: {
      std::vector<Real> mass(st.counts.size(), 0.0);
      for (int u = 0; u < st.n; ++u) mass[st.part_of[u]] += x[u];
      for (size_t j = 0; j < st.counts.size(); ++j)
        if (std::fabs(mass[j] - st.counts[j]) > tol * std::max(1, st.n)) return false;
      return true;
    }
    case Kind::Custom:
      if (!st.membership) throw CertificateUnavailable("member: region has no membership check");
      return st.membership(x, tol);
  }
  throw std::logic_error("member: unreachable");
}

const KnapsackConstraint& SolvableRegion::knapsack() const {
  if (kind() != Kind::KnapsackPolytope) throw std::logic_error("SolvableRegion: not a knapsack polytope");
  return *state().knapsack;
}

const Matroid& SolvableRegion::matroid() const {
  if (kind() != Kind::MatroidPolytope) throw std::logic_error("SolvableRegion: not a matroid polytope");
  return *state().matroid;
}

Real SolvableRegion::cardinality_budget() const {
  if (kind() != Kind::CardinalityPolytope) throw std::logic_error("SolvableRegion: not a cardinality polytope");
  return state().card_budget;
}

// ---- Constraint helpers ----------------------------------------------------

int constraint_ground_size(const Constraint& c) {
  return std::visit(
      [](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CardinalityConstraint>)
          return -1;  // cardinality constraints are ground-set agnostic
        else
          return k.n();
      },
      c);
}

bool feasible(const ElementSet& s, const Constraint& c, Real tol) {
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CardinalityConstraint>)
          return s.size() <= k.budget;
        else if constexpr (std::is_same_v<T, KnapsackConstraint>)
          return k.cost(s) <= k.budget() + tol * std::max<Real>(1.0, k.budget());
        else if constexpr (std::is_same_v<T, Matroid>)
          return k.independent(s);
        else
          return k.member(DenseVector::indicator(s), tol);
      },
      c);
}

SolvableRegion relaxation(const Constraint& c) {
  return std::visit(
      [](const auto& k) -> SolvableRegion {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CardinalityConstraint>)
          throw std::invalid_argument("relaxation: cardinality constraint needs a ground set; use knapsack form");
        else if constexpr (std::is_same_v<T, KnapsackConstraint>)
          return SolvableRegion::knapsack_polytope(k);
        else if constexpr (std::is_same_v<T, Matroid>)
          return SolvableRegion::matroid_polytope(k);
        else
          return k;
      },
      c);
}

SolvableRegion relaxation(const Constraint& c, int n) {
  if (std::holds_alternative<CardinalityConstraint>(c))
    return SolvableRegion::cardinality_polytope(n, std::get<CardinalityConstraint>(c).budget);
  return relaxation(c);
}

namespace {

Real fractional_ratio(const DenseVector& x, const SolvableRegion& region) {
  const Real tol = 1e-6;
  bool all_zero = true;
  for (Real c : x.coords())
    if (std::fabs(c) > 1e-15) all_zero = false;
  if (all_zero) return 0.0;

  if (region.kind() == SolvableRegion::Kind::PartitionBases) {
    // Equality constraints admit at most one scale.
    throw CertificateUnavailable("infeasibility_ratio: non-down-closed region has no scale certificate");
  }
  if (!region.down_closed())
    throw CertificateUnavailable("infeasibility_ratio: non-down-closed region");

  auto scaled_member = [&](Real t) {
    DenseVector y(x.n());
    for (int u = 0; u < x.n(); ++u) y[u] = std::min(1.0, std::max(0.0, x[u] / t));
    // x/t must itself lie in the unit box, so reject t below the sup norm.
    if (inf_norm(x) > t * (1.0 + 1e-12) + 1e-15) return false;
    return region.member(y, tol);
  };

  Real hi = 1.0;
  int guard = 0;
  while (!scaled_member(hi)) {
    hi *= 2.0;
    if (++guard > 80) throw std::runtime_error("infeasibility_ratio: unbounded");
  }
  Real lo = 0.0;
  while (hi - lo > tol) {
    Real mid = 0.5 * (lo + hi);
    if (mid <= 0 || !scaled_member(mid))
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace

Real infeasibility_ratio(const ElementSet& s, const Constraint& c) {
  return std::visit(
      [&](const auto& k) -> Real {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CardinalityConstraint>) {
          if (k.budget == 0) {
            if (s.empty()) return 0.0;
            throw std::runtime_error("infeasibility_ratio: zero budget");
          }
          return (Real)s.size() / k.budget;
        } else if constexpr (std::is_same_v<T, KnapsackConstraint>) {
          Real cost = k.cost(s);
          if (k.budget() == 0) {
            if (cost <= 0) return 0.0;
            throw std::runtime_error("infeasibility_ratio: zero budget");
          }
          return cost / k.budget();
        } else if constexpr (std::is_same_v<T, Matroid>) {
          if (s.empty()) return 0.0;
          for (int u : s.elements())
            if (!k.independent(ElementSet::singleton(k.n(), u)))
              throw std::runtime_error("infeasibility_ratio: solution contains a loop element");
          int lo = 1, hi = s.size();
          if (matroid_union_independent(k, 1, s)) return 1.0;
          while (lo + 1 < hi) {
            int mid = (lo + hi) / 2;
            if (matroid_union_independent(k, mid, s))
              hi = mid;
            else
              lo = mid;
          }
          return (Real)hi;
        } else {
          return fractional_ratio(DenseVector::indicator(s), k);
        }
      },
      c);
}

Real infeasibility_ratio(const DenseVector& x, const Constraint& c) {
  if (std::holds_alternative<CardinalityConstraint>(c))
    return fractional_ratio(
        x, SolvableRegion::cardinality_polytope(x.n(), std::get<CardinalityConstraint>(c).budget));
  return fractional_ratio(x, relaxation(c));
}

// ---- Dummy-element augmentation --------------------------------------------

Instance augment_with_dummies(const Instance& instance, int count) {
  if (count < 0) throw std::invalid_argument("augment_with_dummies: negative count");
  if (count == 0) return instance;
  const int n0 = instance.f.n();
  const int n1 = n0 + count;
  if (n1 > kMaxSetElements) throw std::out_of_range("augment_with_dummies: ground set too large");

  SetFunctionOracle base = instance.f;
  const uint64_t orig_mask = ElementSet::full(n0).bits();
  SetFunctionOracle f(
      n1,
      [base, n0, orig_mask](const ElementSet& s) { return base.value(ElementSet(n0, s.bits() & orig_mask)); },
      base.is_monotone(), false /* symmetry does not survive augmentation */, base.name() + "+dummies");

  Constraint constraint = std::visit(
      [&](const auto& k) -> Constraint {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CardinalityConstraint>) {
          return k;
        } else if constexpr (std::is_same_v<T, KnapsackConstraint>) {
          std::vector<Real> p = k.prices();
          p.resize(n1, k.budget());  // dummy price = B
          return KnapsackConstraint(std::move(p), k.budget(), k.oversized_allowed());
        } else if constexpr (std::is_same_v<T, Matroid>) {
          Matroid inner = k;
          const int rank = inner.rank();
          auto indep = [inner, n0, orig_mask, rank](const ElementSet& s) {
            if (s.size() > rank) return false;
            return inner.independent(ElementSet(n0, s.bits() & orig_mask));
          };
          return Matroid::from_oracle(n1, indep, rank);
        } else {
          throw std::invalid_argument("augment_with_dummies: region constraints not supported");
        }
      },
      instance.constraint);

  return Instance{std::move(f), std::move(constraint), instance.dummy_count + count};
}

ElementSet strip_dummies(const ElementSet& s, int original_n) {
  if (original_n < 0 || original_n > s.universe_size())
    throw std::invalid_argument("strip_dummies: bad original size");
  return ElementSet(original_n, s.bits() & ElementSet::full(original_n).bits());
}

}  // namespace bicrit
