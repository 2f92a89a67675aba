#pragma once

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"
#include "bicrit/multilinear.hpp"

// Multilinear-extension solvers, time-discretized by explicit Euler steps,
// plus the symmetric-equality post-process.

namespace bicrit {

struct Checkpoint {
  Real t = 0;
  DenseVector y;
  Real value = 0;  // F(y(t)) diagnostic
};

struct ContinuousTrace {
  std::vector<Checkpoint> checkpoints;   // includes t = 0 and t = T
  std::vector<Real> lp_objectives;       // per-step LP objective value
  Real guide_mass_inf_norm = 0;          // general_bicriteria: ||sum_i g^(i)||_inf
};

// Measured continuous greedy: dy/dt = x(t) (1 - y(t)) with x(t) the LP
// maximizer of <(1 - y) grad F(y), x> over the (down-closed) region.
// Returns y(T) with y(T)/T in the region.
BicriteriaOutcome measured_continuous_greedy(const MultilinearEvaluator& F, const SolvableRegion& region,
                                             Real T, Real dt, ContinuousTrace* trace = nullptr);

// Modified variant for non-down-closed solvable regions (monotone f, T >= 1):
// returns x join x' where x' is the step-weighted prefix convex combination of
// the per-step LP vertices covering total mass one.
BicriteriaOutcome mcg_non_downclosed(const MultilinearEvaluator& F, const SolvableRegion& region, Real T,
                                     Real dt, ContinuousTrace* trace = nullptr);

// Variant of continuous double greedy for knapsack constraints of density c:
// coupled ascent/descent from (0, 1) with per-step price cap B rho(c, eps).
// Returns x(1) = y(1) with <p, x(1)> <= B rho(c, eps).
BicriteriaOutcome continuous_double_greedy_knapsack(const MultilinearEvaluator& F,
                                                    const KnapsackConstraint& k, Real eps, Real dt,
                                                    ContinuousTrace* trace = nullptr);

// Guided measured continuous greedy: avoids the guide vector a via
// dy/dt = x(t) (1 - a psum y(t)). Guarantees y(T) <= 1 - e^{-T(1-a)} (up to
// the Euler step) and y(T)/T in the region.
DenseVector guided_mcg(const MultilinearEvaluator& F, Real T, const DenseVector& guide,
                       const SolvableRegion& region, Real dt, ContinuousTrace* trace = nullptr);

// General bicriteria algorithm for non-monotone objectives over down-closed
// solvable regions: ceil(1/eps) guided runs with T = 2 followed by a
// DR double greedy extension of each; (1/2 - O(eps), 2(1/eps + 2)).
BicriteriaOutcome general_bicriteria(const MultilinearEvaluator& F, const SolvableRegion& region, Real eps,
                                     uint64_t seed, Real dt, ContinuousTrace* trace = nullptr);

// Non-negative DR-submodular function given by value and partial-derivative
// callbacks (multilinear compositions provide these cheaply).
struct DrFunction {
  int n = 0;
  std::function<Real(const DenseVector&)> value;
  std::function<Real(const DenseVector&, int)> partial;
};

// Continuous double greedy for DR-submodular maximization over the box,
// discretized with step eps; coordinates are processed in index order within
// each step. Satisfies, for every o and r >= 0,
//   G(out) >= (2r/(r+1)^2 - O(eps)) G(o) + G(0)/(r+1)^2 + r^2 G(1)/(r+1)^2.
DenseVector dr_double_greedy(const DrFunction& G, Real eps);

// More measured continuous greedy for symmetric f: dy/dt = x(t) (1 - 2y(t)).
// Caps y(T) <= 1/2 exactly; knapsack regions obey
// <p, y(T)> <= B (1 - e^{-2Tc}) / (2c) + O(dt).
BicriteriaOutcome more_mcg(const MultilinearEvaluator& F, const SolvableRegion& region, Real T, Real dt,
                           ContinuousTrace* trace = nullptr);

// Measured continuous greedy for ell >= 2 disjoint optimal solutions:
// dy/dt = (1/ell) x(t) (1 - y(t)) with x(t) maximizing over
// {x in [0,1]^N : x/ell in region}.
BicriteriaOutcome mcg_multi_opt(const MultilinearEvaluator& F, const SolvableRegion& region, Real T,
                                int ell, Real dt, ContinuousTrace* trace = nullptr);

// Value guarantee of mcg_multi_opt: ell (e^{-T/ell} - e^{-T}) / (ell - 1).
// For ell = 2 this equals nu(T) on [0, 2 ln 2].
Real mcg_multi_opt_bound(int ell, Real T);

// Equality post-process for symmetric knapsack solutions with c <= 1/2
// and ||y||_inf <= 1/2: pushes y toward 1/2 so that <p, z> lands exactly on B
// whenever <p, y> < B.
DenseVector symmetric_equality_postprocess(const DenseVector& y, const KnapsackConstraint& k);

// Trajectory checkpoints as CSV: t, y_0..y_{n-1}, F.
std::string trajectory_csv(const ContinuousTrace& trace);

}  // namespace bicrit
