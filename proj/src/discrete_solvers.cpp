#include "bicrit/discrete_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bicrit {

namespace {

constexpr Real kCeilGuard = 1e-9;

int ceil_guarded(Real x) { return (int)std::ceil(x - kCeilGuard); }

void record_pick(GreedyTrace* trace, int u, Real marg, Real cost_after) {
  if (trace) trace->picks.push_back({u, marg, cost_after});
}

// Core density greedy over a candidate pool (restriction to N \ A happens by
// passing a smaller pool). Returns the grown set, including the initial
// zero-cost sweep and the early-termination branch.
ElementSet density_greedy_core(const SetFunctionOracle& g, const KnapsackConstraint& k, Real eps,
                               const ElementSet& pool, GreedyTrace* trace) {
  const Real threshold = k.budget() * std::log(1.0 / eps);
  Real pool_cost = 0;
  for (int u : pool.elements()) pool_cost += k.price(u);
  if (pool_cost <= threshold) return pool;  // early termination: take everything

  ElementSet s(g.n());
  Real cost = 0;
  for (int u : pool.elements())
    if (k.price(u) == 0) s.add(u);
  while (cost < threshold) {
    int best = -1;
    Real best_density = 0, best_marginal = 0;
    const Real base = g.value(s);
    for (int u : pool.minus(s).elements()) {
      const Real marg = g.value(s.with(u)) - base;
      const Real dens = marg / k.price(u);  // zero-price elements are already in s
      if (best < 0 || dens > best_density) {
        best = u;
        best_density = dens;
        best_marginal = marg;
      }
    }
    if (best < 0) break;  // pool exhausted (cannot happen when pool_cost > threshold)
    s.add(best);
    cost += k.price(best);
    record_pick(trace, best, best_marginal, cost);
  }
  return s;
}

// One run of the classic matroid greedy restricted to `pool`, extending the
// fixed base set `context` (marginals are taken w.r.t. context cup T).
ElementSet matroid_greedy_round(const SetFunctionOracle& g, const Matroid& m, const ElementSet& context,
                                const ElementSet& pool, GreedyTrace* trace) {
  ElementSet t(g.n());
  while (true) {
    const Real base = g.value(context.unite(t));
    int best = -1;
    Real best_marginal = 0;
    for (int u : pool.minus(t).elements()) {
      if (!m.independent(t.with(u))) continue;
      const Real marg = g.value(context.unite(t).with(u)) - base;
      if (best < 0 || marg > best_marginal) {
        best = u;
        best_marginal = marg;
      }
    }
    if (best < 0) break;
    t.add(best);
    record_pick(trace, best, best_marginal, (Real)t.size());
  }
  return t;
}

struct Extension {
  ElementSet d;           // subset of the pool
  Real value = 0;         // f(base cup d)
  Real target = std::numeric_limits<Real>::quiet_NaN();  // 1/4 f(base) + 1/2 max, when certified
};

// Best-effort maximization of h(D) = g(base cup D) over subsets D of pool:
// exhaustive when allowed (certifying the selection inequality), otherwise
// randomized double greedy restricted to the pool.
Extension extend_over_pool(const SetFunctionOracle& g, const ElementSet& base, const ElementSet& pool,
                           DoubleGreedyMode mode, uint64_t seed, uint64_t round_tag) {
  const auto elems = pool.elements();
  bool exhaustive = mode == DoubleGreedyMode::Exhaustive ||
                    (mode == DoubleGreedyMode::Auto && elems.size() <= 20);
  if (exhaustive) {
    Extension out;
    out.d = ElementSet(g.n());
    Real best = g.value(base);
    Real empty_value = best;
    ElementSet best_d(g.n());
    for (uint64_t mask = 1; mask < (uint64_t{1} << elems.size()); ++mask) {
      ElementSet d(g.n());
      for (size_t b = 0; b < elems.size(); ++b)
        if ((mask >> b) & 1) d.add(elems[b]);
      Real v = g.value(base.unite(d));
      if (v > best) {
        best = v;
        best_d = d;
      }
    }
    out.d = best_d;
    out.value = best;
    out.target = 0.25 * empty_value + 0.5 * best;
    return out;
  }
  // Randomized double greedy over the pool order.
  auto rng = make_rng(seed, 0xd6, round_tag);
  std::uniform_real_distribution<Real> unif(0.0, 1.0);
  ElementSet x(g.n()), y = pool;
  for (int u : elems) {
    const Real a = g.value(base.unite(x.with(u))) - g.value(base.unite(x));
    const Real b = g.value(base.unite(y.without(u))) - g.value(base.unite(y));
    const Real ap = std::max(a, 0.0), bp = std::max(b, 0.0);
    const Real p = (ap + bp <= 0) ? 1.0 : ap / (ap + bp);
    if (unif(rng) < p)
      x.add(u);
    else
      y.remove(u);
  }
  Extension out;
  out.d = x;
  out.value = g.value(base.unite(x));
  return out;
}

BicriteriaOutcome set_outcome(const SetFunctionOracle& fresh, const ElementSet& sol, const Constraint& c,
                              long long queries, uint64_t seed) {
  BicriteriaOutcome out;
  out.solution = sol;
  out.value = fresh.value(sol);
  out.queries = queries;
  out.seed = seed;
  try {
    out.infeasibility_certificate = infeasibility_ratio(sol, c);
  } catch (const CertificateUnavailable&) {
    out.certificate_available = false;
  }
  return out;
}

}  // namespace

BicriteriaOutcome density_greedy_monotone(const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps,
                                          GreedyTrace* trace) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("density_greedy_monotone: eps must lie in (0,1)");
  if (!f.is_monotone())
    throw std::invalid_argument("density_greedy_monotone: oracle is not flagged monotone (guarantee void)");
  if (f.n() != k.n()) throw std::invalid_argument("density_greedy_monotone: ground set mismatch");
  SetFunctionOracle g = f.cached();
  ElementSet sol = density_greedy_core(g, k, eps, ElementSet::full(f.n()), trace);
  return set_outcome(g, sol, Constraint(k), g.query_count(), 0);
}

BicriteriaOutcome iterative_matroid_greedy(const SetFunctionOracle& f, const Matroid& m, Real eps,
                                           GreedyTrace* trace) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("iterative_matroid_greedy: eps must lie in (0,1)");
  if (!f.is_monotone())
    throw std::invalid_argument("iterative_matroid_greedy: oracle is not flagged monotone (guarantee void)");
  if (f.n() != m.n()) throw std::invalid_argument("iterative_matroid_greedy: ground set mismatch");
  const int rounds = ceil_guarded(std::log2(1.0 / eps));
  SetFunctionOracle g = f.cached();
  ElementSet s(f.n());
  for (int i = 0; i < rounds; ++i) {
    ElementSet t = matroid_greedy_round(g, m, s, ElementSet::full(f.n()).minus(s), trace);
    if (trace) {
      trace->round_sets.push_back(t);
      trace->round_values.push_back(g.value(s.unite(t)));
    }
    s = s.unite(t);
  }
  return set_outcome(g, s, Constraint(m), g.query_count(), 0);
}

BicriteriaOutcome warmup_cardinality(const SetFunctionOracle& f, int budget, Real eps, uint64_t seed,
                                     DoubleGreedyMode mode, GreedyTrace* trace) {
  if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("warmup_cardinality: eps must lie in (0, 1/2)");
  if (budget < 0) throw std::invalid_argument("warmup_cardinality: negative budget");
  const int ell = ceil_guarded(1.0 / (2.0 * eps));
  const int n0 = f.n();
  Instance aug = augment_with_dummies(Instance{f, Constraint(CardinalityConstraint(budget)), 0},
                                      2 * ell * budget);
  SetFunctionOracle g = aug.f.cached();
  const int n1 = g.n();

  ElementSet a(n1);
  std::vector<ElementSet> blocks;
  for (int i = 0; i < ell; ++i) {
    ElementSet ai(n1);
    for (int j = 0; j < 2 * budget; ++j) {
      const Real base = g.value(ai);
      int best = -1;
      Real best_marginal = 0;
      for (int u : ElementSet::full(n1).minus(a).elements()) {
        const Real marg = g.value(ai.with(u)) - base;
        if (best < 0 || marg > best_marginal) {
          best = u;
          best_marginal = marg;
        }
      }
      if (best < 0) break;  // cannot happen: dummies keep the pool non-empty
      ai.add(best);
      a.add(best);
      record_pick(trace, best, best_marginal, (Real)ai.size());
    }
    blocks.push_back(ai);
    if (trace) {
      trace->round_sets.push_back(ai);
      trace->round_values.push_back(g.value(ai));
    }
  }

  ElementSet best_sol(n1);
  Real best_value = -1;
  for (int i = 0; i < ell; ++i) {
    Extension ext = extend_over_pool(g, blocks[i], a, mode, seed, (uint64_t)i);
    if (trace) {
      trace->extended_values.push_back(ext.value);
      trace->extension_targets.push_back(ext.target);
    }
    if (ext.value > best_value) {
      best_value = ext.value;
      best_sol = blocks[i].unite(ext.d);
    }
  }
  ElementSet sol = strip_dummies(best_sol, n0);
  BicriteriaOutcome out;
  out.solution = sol;
  out.value = f.value(sol);
  out.queries = g.query_count();
  out.seed = seed;
  out.infeasibility_certificate = infeasibility_ratio(sol, Constraint(CardinalityConstraint(budget)));
  return out;
}

BicriteriaOutcome combinatorial_general(const SetFunctionOracle& f, const Constraint& constraint, Real eps,
                                        uint64_t seed, DoubleGreedyMode mode, GreedyTrace* trace) {
  if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("combinatorial_general: eps must lie in (0, 1/2)");
  const bool knapsack_mode = std::holds_alternative<KnapsackConstraint>(constraint);
  const bool matroid_mode = std::holds_alternative<Matroid>(constraint);
  if (!knapsack_mode && !matroid_mode)
    throw std::invalid_argument("combinatorial_general: constraint must be knapsack or matroid");
  const int ell = ceil_guarded(1.0 / (2.0 * eps));
  const int n0 = f.n();

  int dummies;
  if (knapsack_mode) {
    const auto& k = std::get<KnapsackConstraint>(constraint);
    if (k.n() != n0) throw std::invalid_argument("combinatorial_general: ground set mismatch");
    for (Real p : k.prices())
      if (p <= 0) throw std::invalid_argument("combinatorial_general: knapsack mode needs positive prices");
    dummies = 2 * ell;
  } else {
    const auto& m = std::get<Matroid>(constraint);
    if (m.n() != n0) throw std::invalid_argument("combinatorial_general: ground set mismatch");
    dummies = 2 * ell * m.rank();
  }

  Instance aug = augment_with_dummies(Instance{f, constraint, 0}, dummies);
  SetFunctionOracle g = aug.f.cached();
  const int n1 = g.n();

  ElementSet a(n1);
  std::vector<ElementSet> blocks;
  for (int i = 0; i < ell; ++i) {
    ElementSet pool = ElementSet::full(n1).minus(a);
    ElementSet ai(n1);
    if (knapsack_mode) {
      const auto& k1 = std::get<KnapsackConstraint>(aug.constraint);
      KnapsackConstraint doubled(k1.prices(), 2 * k1.budget());
      ai = density_greedy_core(g, doubled, 1.0 / std::exp(1.0), pool, trace);
    } else {
      const auto& m1 = std::get<Matroid>(aug.constraint);
      for (int round = 0; round < 2; ++round) {  // eps = 1/4 -> two bases
        ElementSet t = matroid_greedy_round(g, m1, ai, pool.minus(ai), trace);
        ai = ai.unite(t);
      }
    }
    blocks.push_back(ai);
    a = a.unite(ai);
    if (trace) {
      trace->round_sets.push_back(ai);
      trace->round_values.push_back(g.value(ai));
    }
  }

  ElementSet best_sol(n1);
  Real best_value = -1;
  for (int i = 0; i < ell; ++i) {
    Extension ext = extend_over_pool(g, blocks[i], a, mode, seed, (uint64_t)i);
    if (trace) {
      trace->extended_values.push_back(ext.value);
      trace->extension_targets.push_back(ext.target);
    }
    if (ext.value > best_value) {
      best_value = ext.value;
      best_sol = blocks[i].unite(ext.d);
    }
  }
  ElementSet sol = strip_dummies(best_sol, n0);
  BicriteriaOutcome out;
  out.solution = sol;
  out.value = f.value(sol);
  out.queries = g.query_count();
  out.seed = seed;
  out.infeasibility_certificate = infeasibility_ratio(sol, constraint);
  return out;
}

BicriteriaOutcome density_greedy_symmetric(const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps,
                                           Real delta, GreedyTrace* trace) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("density_greedy_symmetric: eps must lie in (0,1)");
  if (!(delta > 0)) throw std::invalid_argument("density_greedy_symmetric: delta must be positive");
  if (!f.is_symmetric())
    throw std::invalid_argument("density_greedy_symmetric: oracle is not flagged symmetric (guarantee void)");
  if (f.n() != k.n()) throw std::invalid_argument("density_greedy_symmetric: ground set mismatch");
  const int n = f.n();
  SetFunctionOracle g = f.cached();

  Real m = g.value(ElementSet(n));
  for (int u = 0; u < n; ++u) m = std::max(m, g.value(ElementSet::singleton(n, u)));

  // For eps >= 1/2 the budget threshold is non-positive; the loop guard fails
  // immediately and the empty run is returned (outside the guaranteed range).
  const Real threshold = (k.budget() / 2.0) * std::log(1.0 / (2.0 * eps));
  const Real removal_cut = -delta * m / std::max(1, n);
  const long long removal_limit = (long long)std::ceil((Real)n * n / delta) + n + 1;

  ElementSet s(n);
  long long removals = 0;
  auto cost_of = [&](const ElementSet& set) { return k.cost(set); };
  while (cost_of(s) < threshold) {
    // Drop elements whose marginal w.r.t. the rest is decisively negative.
    bool removed = true;
    while (removed) {
      removed = false;
      for (int u : s.elements()) {
        if (g.value(s) - g.value(s.without(u)) < removal_cut) {
          s.remove(u);
          ++removals;
          removed = true;
          if (removals > removal_limit)
            throw std::logic_error("density_greedy_symmetric: removal loop exceeded its bound");
          break;
        }
      }
    }
    const Real base = g.value(s);
    int zero_pick = -1;
    for (int u : s.complement().elements()) {
      if (k.price(u) == 0 && g.value(s.with(u)) - base > 0) {
        zero_pick = u;
        break;
      }
    }
    if (zero_pick >= 0) {
      s.add(zero_pick);
      record_pick(trace, zero_pick, g.value(s) - base, cost_of(s));
      continue;
    }
    int best = -1;
    Real best_density = 0, best_marginal = 0;
    bool any_positive = false;
    for (int u : s.complement().elements()) {
      const Real marg = g.value(s.with(u)) - base;
      if (marg > 0) any_positive = true;
      if (k.price(u) <= 0) continue;
      const Real dens = marg / k.price(u);
      if (best < 0 || dens > best_density) {
        best = u;
        best_density = dens;
        best_marginal = marg;
      }
    }
    if (!any_positive || best < 0) break;  // early return with the current set
    s.add(best);
    record_pick(trace, best, best_marginal, cost_of(s));
  }
  if (trace) trace->removals = removals;
  return set_outcome(g, s, Constraint(k), g.query_count(), 0);
}

std::pair<ElementSet, Real> double_greedy_unconstrained(const SetFunctionOracle& f, uint64_t seed) {
  const int n = f.n();
  SetFunctionOracle g = f.cached();
  auto rng = make_rng(seed, 0xd9);
  std::uniform_real_distribution<Real> unif(0.0, 1.0);
  ElementSet x(n), y = ElementSet::full(n);
  for (int u = 0; u < n; ++u) {
    const Real a = g.value(x.with(u)) - g.value(x);
    const Real b = g.value(y.without(u)) - g.value(y);
    const Real ap = std::max(a, 0.0), bp = std::max(b, 0.0);
    const Real p = (ap + bp <= 0) ? 1.0 : ap / (ap + bp);
    if (unif(rng) < p)
      x.add(u);
    else
      y.remove(u);
  }
  return {x, g.value(x)};
}

std::pair<ElementSet, Real> double_greedy_exhaustive(const SetFunctionOracle& f) {
  const int n = f.n();
  if (n > 20) throw std::invalid_argument("double_greedy_exhaustive: ground set too large (n <= 20)");
  SetFunctionOracle g = f.cached();
  ElementSet best(n);
  Real best_value = g.value(best);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    ElementSet s(n, mask);
    const Real v = g.value(s);
    if (v > best_value || (v == best_value && ElementSet::lex_less(s, best))) {
      best = s;
      best_value = v;
    }
  }
  return {best, best_value};
}

}  // namespace bicrit
