#include "bicrit/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bicrit {

namespace {

constexpr Real kSnap = 1e-12;
constexpr Real kSlackTol = 1e-9;

void snap(DenseVector& x) {
  for (int u = 0; u < x.n(); ++u) {
    if (x[u] < kSnap) x[u] = 0.0;
    if (x[u] > 1.0 - kSnap) x[u] = 1.0;
  }
}

bool fractional(Real v) { return v > 0.0 && v < 1.0; }

int integral_count(const DenseVector& x) {
  int c = 0;
  for (int u = 0; u < x.n(); ++u)
    if (!fractional(x[u])) ++c;
  return c;
}

void note_iteration(PipageTrace* trace, const DenseVector& x) {
  if (!trace) return;
  ++trace->iterations;
  trace->integral_counts.push_back(integral_count(x));
}

}  // namespace

ElementSet pipage_knapsack(const DenseVector& x_in, const KnapsackConstraint& k, uint64_t seed,
                           PipageTrace* trace) {
  if (x_in.n() != k.n()) throw std::invalid_argument("pipage_knapsack: dimension mismatch");
  if (!x_in.in_unit_box(kTol)) throw std::invalid_argument("pipage_knapsack: point outside [0,1]^N");
  const int n = x_in.n();
  DenseVector x = clamp01(x_in);
  snap(x);
  auto rng = make_rng(seed, 0x9196);
  std::uniform_real_distribution<Real> unif(0.0, 1.0);

  // Phase 1: zero-price entries round independently.
  for (int u = 0; u < n; ++u)
    if (k.price(u) == 0 && fractional(x[u])) {
      x[u] = unif(rng) < x[u] ? 1.0 : 0.0;
      note_iteration(trace, x);
    }

  // Phase 2: paired moves keep <p, x> constant and integralize one entry.
  int guard = 4 * n + 8;
  while (true) {
    int u = -1, v = -1;
    for (int w = 0; w < n && v < 0; ++w)
      if (fractional(x[w])) (u < 0 ? u : v) = w;
    if (v < 0) break;
    if (--guard < 0) throw std::logic_error("pipage_knapsack: no progress");
    const Real pu = k.price(u), pv = k.price(v);
    const Real su = std::min(1.0 - x[u], pv * x[v] / pu);
    const Real sv = std::min(1.0 - x[v], pu * x[u] / pv);
    if (unif(rng) < pv * sv / (pv * sv + pu * su)) {
      x[u] += su;
      x[v] -= pu * su / pv;
    } else {
      x[v] += sv;
      x[u] -= pv * sv / pu;
    }
    snap(x);
    note_iteration(trace, x);
  }

  // Phase 3: at most one fractional entry remains.
  for (int u = 0; u < n; ++u)
    if (fractional(x[u])) {
      x[u] = unif(rng) < x[u] ? 1.0 : 0.0;
      note_iteration(trace, x);
    }
  ElementSet s(n);
  for (int u = 0; u < n; ++u)
    if (x[u] == 1.0) s.add(u);
  return s;
}

namespace {

// Minimum rank slack rank'(S) - x(S) over sets S with `inside` in S and
// `outside` not in S, S ranging over subsets of the positive support. Returns
// the minimizing set of smallest cardinality through `argmin`.
Real min_slack(const DenseVector& x, const MatroidUnion& mu, int inside, int outside,
               ElementSet* argmin) {
  const int n = x.n();
  std::vector<int> pool;
  for (int u = 0; u < n; ++u)
    if (u != outside && u != inside && x[u] > 0.0) pool.push_back(u);
  if (pool.size() > 20) throw std::invalid_argument("pipage_matroid: support too large");
  Real best = std::numeric_limits<Real>::infinity();
  int best_size = n + 1;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pool.size()); ++mask) {
    ElementSet s(n);
    s.add(inside);
    Real mass = x[inside];
    for (size_t b = 0; b < pool.size(); ++b)
      if ((mask >> b) & 1) {
        s.add(pool[b]);
        mass += x[pool[b]];
      }
    const Real slack = mu.rank(s) - mass;
    if (slack < best - 1e-15 || (slack <= best + 1e-15 && s.size() < best_size)) {
      best = slack;
      best_size = s.size();
      if (argmin) *argmin = s;
    }
  }
  return best;
}

}  // namespace

ElementSet pipage_matroid(const DenseVector& x, Real beta, const Matroid& m, uint64_t seed,
                          PipageTrace* trace) {
  if (!(beta > 0)) throw std::invalid_argument("pipage_matroid: beta must be positive");
  MatroidUnion mu(m, (int)std::ceil(beta - 1e-12));
  return pipage_matroid(x, mu, seed, trace);
}

ElementSet pipage_matroid(const DenseVector& x_in, const MatroidUnion& mu, uint64_t seed,
                          PipageTrace* trace) {
  const int n = mu.n();
  if (x_in.n() != n) throw std::invalid_argument("pipage_matroid: dimension mismatch");
  if (!x_in.in_unit_box(kTol)) throw std::invalid_argument("pipage_matroid: point outside [0,1]^N");
  DenseVector x = clamp01(x_in);
  snap(x);

  // Precondition: x in the union-matroid polytope (checked on the support).
  {
    std::vector<int> supp;
    for (int u = 0; u < n; ++u)
      if (x[u] > 0) supp.push_back(u);
    if (supp.size() > 20) throw std::invalid_argument("pipage_matroid: support too large");
    for (uint64_t mask = 1; mask < (uint64_t{1} << supp.size()); ++mask) {
      ElementSet s(n);
      Real mass = 0;
      for (size_t b = 0; b < supp.size(); ++b)
        if ((mask >> b) & 1) {
          s.add(supp[b]);
          mass += x[supp[b]];
        }
      if (mass > mu.rank(s) + 1e-7)
        throw std::invalid_argument("pipage_matroid: x/beta outside the matroid polytope");
    }
  }

  auto rng = make_rng(seed, 0x9197);
  std::uniform_real_distribution<Real> unif(0.0, 1.0);
  ElementSet restrict_set = ElementSet::full(n);
  int guard = 100 * n * n + 100;
  while (true) {
    if (--guard < 0) throw std::logic_error("pipage_matroid: no progress");
    std::vector<int> frac;
    for (int u : restrict_set.elements())
      if (fractional(x[u])) frac.push_back(u);
    if (frac.size() < 2 && restrict_set != ElementSet::full(n)) {
      restrict_set = ElementSet::full(n);
      continue;
    }
    if (frac.empty()) break;
    if (frac.size() == 1) {
      // A lone fractional coordinate faces no tight set (tight mass would be
      // fractional); both endpoints stay in the polytope.
      const int u = frac[0];
      x[u] = unif(rng) < x[u] ? 1.0 : 0.0;
      note_iteration(trace, x);
      continue;
    }
    const int u = frac[0], v = frac[1];
    ElementSet tight_plus(n), tight_minus(n);
    const Real slack_plus = min_slack(x, mu, u, v, &tight_plus);
    const Real slack_minus = min_slack(x, mu, v, u, &tight_minus);
    const Real delta_plus = std::min({1.0 - x[u], x[v], slack_plus});
    const Real delta_minus = std::min({1.0 - x[v], x[u], slack_minus});
    if (delta_plus <= kSlackTol && delta_minus <= kSlackTol) {
      // Both directions blocked by tight sets; recurse into one of them.
      restrict_set = slack_plus <= kSlackTol ? tight_plus : tight_minus;
      if (trace) ++trace->boundary_moves;
      continue;
    }
    if (delta_plus <= kSlackTol || delta_minus <= kSlackTol) {
      // One direction blocked: an expectation-preserving move is impossible
      // for this pair, so work inside the blocking tight set.
      restrict_set = delta_plus <= kSlackTol ? tight_plus : tight_minus;
      if (trace) ++trace->boundary_moves;
      continue;
    }
    const int before = integral_count(x);
    const bool go_plus = unif(rng) < delta_minus / (delta_plus + delta_minus);
    if (go_plus) {
      x[u] += delta_plus;
      x[v] -= delta_plus;
    } else {
      x[v] += delta_minus;
      x[u] -= delta_minus;
    }
    snap(x);
    if (integral_count(x) > before) {
      restrict_set = ElementSet::full(n);
      note_iteration(trace, x);
    } else {
      // The move stopped on a rank constraint; continue inside that tight set.
      ElementSet blocked(n);
      min_slack(x, mu, go_plus ? u : v, go_plus ? v : u, &blocked);
      restrict_set = blocked;
      if (trace) ++trace->boundary_moves;
    }
  }
  ElementSet s(n);
  for (int u = 0; u < n; ++u)
    if (x[u] == 1.0) s.add(u);
  return s;
}

}  // namespace bicrit
