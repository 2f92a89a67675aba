#include "bicrit/continuous_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bicrit {

namespace {

constexpr Real kCeilGuard = 1e-9;

int step_count(Real T, Real dt) {
  if (!(T >= 0)) throw std::invalid_argument("continuous solver: negative horizon");
  if (T == 0) return 0;
  if (!(dt > 0)) throw std::invalid_argument("continuous solver: step must be positive");
  return std::max(1, (int)std::llround(T / dt));
}

void record(ContinuousTrace* trace, Real t, const DenseVector& y, const MultilinearEvaluator& F) {
  if (trace) trace->checkpoints.push_back({t, y, F.eval(y)});
}

void check_shapes(const MultilinearEvaluator& F, int region_n, const char* who) {
  if (F.n() != region_n) throw std::invalid_argument(std::string(who) + ": ground set mismatch");
}

BicriteriaOutcome fractional_outcome(const MultilinearEvaluator& F, const SolvableRegion& region,
                                     DenseVector y, uint64_t seed = 0) {
  BicriteriaOutcome out;
  out.value = F.eval(y);
  out.queries = F.oracle().query_count();
  out.seed = seed;
  try {
    out.infeasibility_certificate = infeasibility_ratio(y, Constraint(region));
  } catch (const CertificateUnavailable&) {
    out.certificate_available = false;
  }
  out.solution = std::move(y);
  return out;
}

}  // namespace

BicriteriaOutcome measured_continuous_greedy(const MultilinearEvaluator& F, const SolvableRegion& region,
                                             Real T, Real dt, ContinuousTrace* trace) {
  check_shapes(F, region.n(), "measured_continuous_greedy");
  if (!region.down_closed())
    throw std::invalid_argument("measured_continuous_greedy: region must be down-closed (use the modified variant)");
  const int n = F.n();
  const int steps = step_count(T, dt);
  const Real h = steps ? T / steps : 0;
  DenseVector y(n, 0.0);
  record(trace, 0.0, y, F);
  for (int k = 0; k < steps; ++k) {
    DenseVector grad = F.reseeded(k).gradient(y);
    DenseVector w(n);
    for (int u = 0; u < n; ++u) w[u] = (1.0 - y[u]) * grad[u];
    DenseVector x = region.lp_maximize(w);
    if (trace) trace->lp_objectives.push_back(dot(w, x));
    for (int u = 0; u < n; ++u) y[u] = std::min(1.0, y[u] + h * x[u] * (1.0 - y[u]));
    record(trace, (k + 1) * h, y, F);
  }
  return fractional_outcome(F, region, std::move(y));
}

BicriteriaOutcome mcg_non_downclosed(const MultilinearEvaluator& F, const SolvableRegion& region, Real T,
                                     Real dt, ContinuousTrace* trace) {
  check_shapes(F, region.n(), "mcg_non_downclosed");
  if (!(T >= 1)) throw std::invalid_argument("mcg_non_downclosed: needs T >= 1");
  if (!F.oracle().is_monotone())
    throw std::invalid_argument("mcg_non_downclosed: oracle is not flagged monotone (guarantee void)");
  const int n = F.n();
  const int steps = step_count(T, dt);
  const Real h = T / steps;  // T/h is integral by construction
  DenseVector y(n, 0.0);
  std::vector<DenseVector> vertices;
  vertices.reserve(steps);
  record(trace, 0.0, y, F);
  for (int k = 0; k < steps; ++k) {
    DenseVector grad = F.reseeded(k).gradient(y);
    DenseVector w(n);
    for (int u = 0; u < n; ++u) w[u] = (1.0 - y[u]) * grad[u];
    DenseVector x = region.lp_maximize(w);
    if (trace) trace->lp_objectives.push_back(dot(w, x));
    vertices.push_back(x);
    for (int u = 0; u < n; ++u) y[u] = std::min(1.0, y[u] + h * x[u] * (1.0 - y[u]));
    record(trace, (k + 1) * h, y, F);
  }
  // Prefix convex combination covering total mass 1 (needs T >= 1).
  const Real inv = 1.0 / h;
  const int full_terms = (int)std::ceil(inv - 1.0 - kCeilGuard);
  const Real tail_coeff = inv - full_terms;  // in [0, 1]
  const int tail_index = (int)std::ceil(inv - kCeilGuard);
  DenseVector xprime(n, 0.0);
  for (int i = 0; i < full_terms && i < (int)vertices.size(); ++i) xprime = xprime + vertices[i];
  if (tail_index >= 1 && tail_index <= (int)vertices.size())
    xprime = xprime + scale(vertices[tail_index - 1], tail_coeff);
  xprime = clamp01(scale(xprime, h));

  DenseVector out_vec = join(y, xprime);
  BicriteriaOutcome out;
  out.value = F.eval(out_vec);
  out.queries = F.oracle().query_count();
  // Sandwich certificate: x' in P below, sum of step vertices over T above.
  DenseVector upper(n, 0.0);
  for (const auto& v : vertices) upper = upper + scale(v, h);
  bool ok = region.member(xprime, 1e-6);
  for (int u = 0; u < n && ok; ++u)
    if (out_vec[u] > upper[u] + 1e-9) ok = false;
  if (ok) ok = region.member(clamp01(scale(upper, 1.0 / T)), 1e-6);
  out.infeasibility_certificate = T;
  out.certificate_available = ok;
  out.solution = std::move(out_vec);
  return out;
}

BicriteriaOutcome continuous_double_greedy_knapsack(const MultilinearEvaluator& F,
                                                    const KnapsackConstraint& k, Real eps, Real dt,
                                                    ContinuousTrace* trace) {
  check_shapes(F, k.n(), "continuous_double_greedy_knapsack");
  if (!(eps > 0 && eps <= 1))
    throw std::invalid_argument("continuous_double_greedy_knapsack: eps must lie in (0,1]");
  const int n = F.n();
  const Real c = density(k);
  const Real cap = k.budget() * rho(c, eps);
  const int steps = std::max(1, (int)std::llround(1.0 / dt));
  const Real h = 1.0 / steps;

  DenseVector x(n, 0.0);
  record(trace, 0.0, x, F);
  for (int step = 0; step < steps; ++step) {
    const Real t = step * h;
    DenseVector y(n);
    for (int u = 0; u < n; ++u) y[u] = std::min(1.0, x[u] + (1.0 - t));  // y(t) = x(t) + (1-t) 1
    const MultilinearEvaluator Fk = F.reseeded(step);
    DenseVector a = Fk.gradient(x);
    DenseVector b = scale(Fk.gradient(y), -1.0);

    auto direction = [&](Real ell) {
      DenseVector d(n);
      for (int u = 0; u < n; ++u) {
        const Real ap = std::max(a[u] - ell * k.price(u), 0.0);
        const Real bp = std::max(b[u] + ell * k.price(u), 0.0);
        d[u] = (ap + bp > 1e-15) ? ap / (ap + bp) : 0.0;
      }
      return d;
    };
    auto price_of = [&](const DenseVector& d) { return k.cost(d); };

    DenseVector d = direction(0.0);
    if (price_of(d) > cap + 1e-12) {
      // Bisect for the minimum ell meeting the cap; the price is
      // non-increasing and right-continuous in ell.
      Real lo = 0.0, hi = 0.0;
      for (int u = 0; u < n; ++u)
        if (k.price(u) > 0) hi = std::max(hi, std::max(a[u], 0.0) / k.price(u));
      for (int it = 0; it < 60; ++it) {
        const Real mid = 0.5 * (lo + hi);
        if (price_of(direction(mid)) <= cap + 1e-12)
          hi = mid;
        else
          lo = mid;
      }
      const Real ell = hi;
      d = direction(ell);
      ElementSet z(n);
      Real z_price = 0;
      for (int u = 0; u < n; ++u) {
        const Real ap = std::max(a[u] - ell * k.price(u), 0.0);
        const Real bp = std::max(b[u] + ell * k.price(u), 0.0);
        if (ap + bp <= 1e-9) {
          z.add(u);
          z_price += k.price(u);
        }
      }
      if (z_price > 0) {
        const Real r = std::clamp((cap - price_of(d)) / z_price, 0.0, 1.0);
        for (int u : z.elements()) d[u] += r;
      }
    }
    if (trace) trace->lp_objectives.push_back(dot(a, d));
    for (int u = 0; u < n; ++u) x[u] = std::min(1.0, x[u] + h * d[u]);
    record(trace, t + h, x, F);
  }
  SolvableRegion region = SolvableRegion::knapsack_polytope(k);
  return fractional_outcome(F, region, std::move(x));
}

DenseVector guided_mcg(const MultilinearEvaluator& F, Real T, const DenseVector& guide,
                       const SolvableRegion& region, Real dt, ContinuousTrace* trace) {
  check_shapes(F, region.n(), "guided_mcg");
  if (guide.n() != F.n()) throw std::invalid_argument("guided_mcg: guide dimension mismatch");
  if (!guide.in_unit_box(kTol)) throw std::invalid_argument("guided_mcg: guide outside [0,1]^N");
  if (!region.down_closed()) throw std::invalid_argument("guided_mcg: region must be down-closed");
  const int n = F.n();
  const int steps = step_count(T, dt);
  const Real h = steps ? T / steps : 0;
  DenseVector y(n, 0.0);
  record(trace, 0.0, y, F);
  for (int k = 0; k < steps; ++k) {
    DenseVector grad = F.reseeded(k).gradient(y);
    DenseVector factor(n);  // 1 - a psum y = (1 - a)(1 - y)
    for (int u = 0; u < n; ++u) factor[u] = (1.0 - guide[u]) * (1.0 - y[u]);
    DenseVector w(n);
    for (int u = 0; u < n; ++u) w[u] = factor[u] * grad[u];
    DenseVector x = region.lp_maximize(w);
    if (trace) trace->lp_objectives.push_back(dot(w, x));
    for (int u = 0; u < n; ++u) y[u] = std::min(1.0, y[u] + h * x[u] * factor[u]);
    record(trace, (k + 1) * h, y, F);
  }
  return y;
}

DenseVector dr_double_greedy(const DrFunction& G, Real eps) {
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("dr_double_greedy: eps must lie in (0,1]");
  if (!G.value || !G.partial) throw std::invalid_argument("dr_double_greedy: missing callbacks");
  const int n = G.n;
  const int steps = std::max(1, (int)std::llround(1.0 / eps));
  const Real h = 1.0 / steps;
  DenseVector x(n, 0.0), y(n, 1.0);
  for (int step = 0; step < steps; ++step) {
    for (int u = 0; u < n; ++u) {
      const Real a = G.partial(x, u);
      const Real b = -G.partial(y, u);
      const Real ap = std::max(a, 0.0), bp = std::max(b, 0.0);
      const Real rate = (ap + bp > 1e-15) ? ap / (ap + bp) : 0.0;
      x[u] = std::min(1.0, x[u] + h * rate);
      y[u] = std::max(0.0, y[u] - h * (1.0 - rate));
    }
  }
  return x;
}

BicriteriaOutcome general_bicriteria(const MultilinearEvaluator& F, const SolvableRegion& region, Real eps,
                                     uint64_t seed, Real dt, ContinuousTrace* trace) {
  check_shapes(F, region.n(), "general_bicriteria");
  if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("general_bicriteria: eps must lie in (0, 1/2)");
  if (!region.down_closed()) throw std::invalid_argument("general_bicriteria: region must be down-closed");
  const int n = F.n();
  const int ell = (int)std::ceil(1.0 / eps - kCeilGuard);

  DenseVector g(n, 0.0);
  DenseVector guide_mass(n, 0.0);
  std::vector<DenseVector> guides;
  guides.reserve(ell);
  for (int i = 0; i < ell; ++i) {
    DenseVector gi = guided_mcg(F, 2.0, g, region, dt, nullptr);
    guide_mass = guide_mass + gi;
    guides.push_back(gi);
    g = meet(g + gi, DenseVector::ones(n));
  }
  if (trace) trace->guide_mass_inf_norm = inf_norm(guide_mass);

  DenseVector best(n, 0.0);
  Real best_value = -1;
  for (int i = 0; i < ell; ++i) {
    const DenseVector& gi = guides[i];
    DrFunction Gi;
    Gi.n = n;
    Gi.value = [&F, gi, g](const DenseVector& x) { return F.eval(prob_sum(gi, hadamard(g, x))); };
    Gi.partial = [&F, gi, g](const DenseVector& x, int u) {
      DenseVector z = prob_sum(gi, hadamard(g, x));
      return F.partial(z, u) * g[u] * (1.0 - gi[u]);
    };
    DenseVector di = dr_double_greedy(Gi, eps);
    DenseVector candidate = prob_sum(gi, hadamard(g, di));
    const Real v = F.eval(candidate);
    if (v > best_value) {
      best_value = v;
      best = candidate;
    }
    record(trace, (Real)i, candidate, F);
  }
  BicriteriaOutcome out = fractional_outcome(F, region, std::move(best), seed);
  return out;
}

BicriteriaOutcome more_mcg(const MultilinearEvaluator& F, const SolvableRegion& region, Real T, Real dt,
                           ContinuousTrace* trace) {
  check_shapes(F, region.n(), "more_mcg");
  if (!F.oracle().is_symmetric())
    throw std::invalid_argument("more_mcg: oracle is not flagged symmetric (guarantee void)");
  if (!region.down_closed()) throw std::invalid_argument("more_mcg: region must be down-closed");
  const int n = F.n();
  int steps = step_count(T, dt);
  // Steps above 1/2 would overshoot the y <= 1/2 cap.
  while (steps > 0 && T / steps > 0.5) steps *= 2;
  const Real h = steps ? T / steps : 0;
  DenseVector y(n, 0.0);
  record(trace, 0.0, y, F);
  for (int k = 0; k < steps; ++k) {
    DenseVector grad = F.reseeded(k).gradient(y);
    DenseVector w(n);
    for (int u = 0; u < n; ++u) w[u] = (1.0 - 2.0 * y[u]) * grad[u];
    DenseVector x = region.lp_maximize(w);
    if (trace) trace->lp_objectives.push_back(dot(w, x));
    for (int u = 0; u < n; ++u) y[u] = std::min(0.5, y[u] + h * x[u] * (1.0 - 2.0 * y[u]));
    record(trace, (k + 1) * h, y, F);
  }
  return fractional_outcome(F, region, std::move(y));
}

BicriteriaOutcome mcg_multi_opt(const MultilinearEvaluator& F, const SolvableRegion& region, Real T,
                                int ell, Real dt, ContinuousTrace* trace) {
  check_shapes(F, region.n(), "mcg_multi_opt");
  if (ell < 2) throw std::invalid_argument("mcg_multi_opt: ell must be >= 2");
  if (!region.down_closed()) throw std::invalid_argument("mcg_multi_opt: region must be down-closed");
  const int n = F.n();
  const int steps = step_count(T, dt);
  const Real h = steps ? T / steps : 0;
  DenseVector y(n, 0.0);
  record(trace, 0.0, y, F);
  for (int k = 0; k < steps; ++k) {
    DenseVector grad = F.reseeded(k).gradient(y);
    DenseVector w(n);
    for (int u = 0; u < n; ++u) w[u] = (1.0 - y[u]) * grad[u];
    DenseVector x = region.lp_maximize_scaled(w, ell);
    if (trace) trace->lp_objectives.push_back(dot(w, x));
    for (int u = 0; u < n; ++u) y[u] = std::min(1.0, y[u] + (h / ell) * x[u] * (1.0 - y[u]));
    record(trace, (k + 1) * h, y, F);
  }
  return fractional_outcome(F, region, std::move(y));
}

Real mcg_multi_opt_bound(int ell, Real T) {
  if (ell < 2) throw std::invalid_argument("mcg_multi_opt_bound: ell must be >= 2");
  if (T < 0) throw std::invalid_argument("mcg_multi_opt_bound: negative horizon");
  return ell * (std::exp(-T / ell) - std::exp(-T)) / (ell - 1.0);
}

DenseVector symmetric_equality_postprocess(const DenseVector& y, const KnapsackConstraint& k) {
  if (y.n() != k.n()) throw std::invalid_argument("symmetric_equality_postprocess: dimension mismatch");
  const Real c = density(k);
  if (c > 0.5 + 1e-12)
    throw std::invalid_argument(
        "symmetric_equality_postprocess: needs density <= 1/2 (apply the complement reduction first)");
  for (int u = 0; u < y.n(); ++u)
    if (y[u] < -1e-12 || y[u] > 0.5 + 1e-12)
      throw std::invalid_argument("symmetric_equality_postprocess: coordinates must lie in [0, 1/2]");
  const Real py = k.cost(y);
  const Real denom = k.budget() / (2.0 * c) - py;  // = ||p||_1 / 2 - <p, y> >= 0
  Real factor = 0.0;
  if (k.budget() - py > 0) factor = denom > 0 ? (k.budget() - py) / denom : 0.0;
  factor = std::clamp(factor, 0.0, 1.0);
  DenseVector z(y.n());
  for (int u = 0; u < y.n(); ++u) z[u] = y[u] + factor * (0.5 - y[u]);
  return z;
}

std::string trajectory_csv(const ContinuousTrace& trace) {
  std::ostringstream os;
  os << "t";
  if (!trace.checkpoints.empty())
    for (int u = 0; u < trace.checkpoints.front().y.n(); ++u) os << ",y" << u;
  os << ",F\n";
  os.precision(12);
  for (const auto& cp : trace.checkpoints) {
    os << cp.t;
    for (int u = 0; u < cp.y.n(); ++u) os << ',' << cp.y[u];
    os << ',' << cp.value << '\n';
  }
  return os.str();
}

}  // namespace bicrit
