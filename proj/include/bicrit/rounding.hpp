#pragma once

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"

// Dependent rounding from fractional to integral solutions: the knapsack
// pipage variant and matroid-union pipage. Both preserve the multilinear
// value in expectation; neither queries the objective.

namespace bicrit {

struct PipageTrace {
  int iterations = 0;       // moves that made one more entry integral
  int boundary_moves = 0;   // matroid walk moves absorbed by a tight rank set
  std::vector<int> integral_counts;  // after each iteration
};

// Three-phase knapsack pipage: zero-price randomized fixing, paired moves
// with s_u = min{1 - x_u, p_v x_v / p_u}, final single-entry fixing.
// Guarantees cost(S) <= <p, x> + B on every run (|S| <= ceil(<p, x>) for
// cardinality) and E[f(S)] >= F(x).
ElementSet pipage_knapsack(const DenseVector& x, const KnapsackConstraint& k, uint64_t seed,
                           PipageTrace* trace = nullptr);

// Pipage rounding inside the ceil(beta)-fold matroid-union polytope: requires
// x / beta in the matroid polytope of m. The output S is independent in the
// union matroid (so 1_S / ceil(beta) lies in m's polytope) and
// E[f(S)] >= F(x).
ElementSet pipage_matroid(const DenseVector& x, Real beta, const Matroid& m, uint64_t seed,
                          PipageTrace* trace = nullptr);

// Variant reusing a prebuilt union matroid (amortizes rank caching across
// many seeds).
ElementSet pipage_matroid(const DenseVector& x, const MatroidUnion& mu, uint64_t seed,
                          PipageTrace* trace = nullptr);

}  // namespace bicrit
