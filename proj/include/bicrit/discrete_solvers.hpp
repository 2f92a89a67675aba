#pragma once

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"

// Combinatorial bicriteria solvers: density-based greedy, iterative matroid
// greedy, the warmup cardinality algorithm, the general knapsack/matroid
// algorithm, the symmetric density greedy, and unconstrained double greedy.

namespace bicrit {

// How the "best subset of A extending A_i" subproblem is solved inside the
// warmup/general algorithms: exhaustive search certifies the selection
// inequality exactly (|A| <= 20), the randomized double greedy matches it in
// expectation.
enum class DoubleGreedyMode { Auto, Exhaustive, Randomized };

struct GreedyPick {
  int element = -1;
  Real marginal = 0;
  Real cost_after = 0;  // cost (or size) of the solution after this pick
};

struct GreedyTrace {
  std::vector<GreedyPick> picks;
  std::vector<ElementSet> round_sets;    // A_i / T_i per round (with dummies)
  std::vector<Real> round_values;        // f(A_i)
  std::vector<Real> extended_values;     // f(A_i cup D_i)
  std::vector<Real> extension_targets;   // 1/4 f(A_i) + 1/2 max_D f(A_i cup D) when certifiable
  long long removals = 0;                // symmetric greedy removal count
};

// Algorithm: density-based greedy for monotone f under a knapsack constraint.
// (1 - eps, 1 + ln eps^-1)-bicriteria; cardinality improves the infeasibility
// to ceil(ln eps^-1).
BicriteriaOutcome density_greedy_monotone(const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps,
                                          GreedyTrace* trace = nullptr);

// Iterative matroid greedy for monotone f: ceil(log2 eps^-1) rounds of the
// classic matroid greedy on the remaining elements; the output is the union
// of that many independent sets.
BicriteriaOutcome iterative_matroid_greedy(const SetFunctionOracle& f, const Matroid& m, Real eps,
                                           GreedyTrace* trace = nullptr);

// Warmup algorithm for general (possibly non-monotone) f under a cardinality
// constraint: ceil(1/(2 eps)) disjoint greedy blocks of size 2B, each
// extended by (double-)greedy over the union. (1/2 - eps, O(1/eps)).
// Dummy augmentation and stripping happen internally.
BicriteriaOutcome warmup_cardinality(const SetFunctionOracle& f, int budget, Real eps, uint64_t seed,
                                     DoubleGreedyMode mode = DoubleGreedyMode::Auto,
                                     GreedyTrace* trace = nullptr);

// General combinatorial algorithm for knapsack or matroid constraints
// (constraint must hold one of those two alternatives). Knapsack mode
// requires strictly positive prices.
BicriteriaOutcome combinatorial_general(const SetFunctionOracle& f, const Constraint& constraint, Real eps,
                                        uint64_t seed, DoubleGreedyMode mode = DoubleGreedyMode::Auto,
                                        GreedyTrace* trace = nullptr);

// Symmetric density-based greedy under a knapsack constraint:
// (1/2 - eps - delta, 1 + (1/2) ln(eps^-1/2)); cardinality improves the
// infeasibility to ceil((1/2) ln(eps^-1/2)).
BicriteriaOutcome density_greedy_symmetric(const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps,
                                           Real delta, GreedyTrace* trace = nullptr);

// Randomized double greedy for unconstrained maximization:
// E[f(X)] >= (1/2) max f + (1/4) f(empty).
std::pair<ElementSet, Real> double_greedy_unconstrained(const SetFunctionOracle& f, uint64_t seed);

// Deterministic exhaustive fallback returning the true unconstrained maximizer
// (n <= 20); used as the oracle-grade realization of the double greedy target.
std::pair<ElementSet, Real> double_greedy_exhaustive(const SetFunctionOracle& f);

}  // namespace bicrit
