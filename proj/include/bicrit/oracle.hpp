#pragma once

#include <string>

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"

// Ground-truth engines: exhaustive optimization, function-class verification,
// and bicriteria frontier enumeration. Everything here is test machinery; the
// solvers never depend on it.

namespace bicrit {

struct BruteResult {
  ElementSet best;
  Real value = 0;
};

// Exhaustive argmax of f over feasible sets (n <= 22). Ties break toward the
// lexicographically smallest set.
BruteResult brute_opt(const SetFunctionOracle& f, const Constraint& c);
BruteResult brute_opt_unconstrained(const SetFunctionOracle& f);

struct VerifyResult {
  bool ok = true;
  std::string witness;  // human-readable counterexample when !ok
  explicit operator bool() const { return ok; }
};

VerifyResult verify_submodular(const SetFunctionOracle& f, Real tol = kTol);  // n <= 12
VerifyResult verify_monotone(const SetFunctionOracle& f, Real tol = kTol);    // n <= 12
VerifyResult verify_symmetric(const SetFunctionOracle& f, Real tol = kTol);   // n <= 12
VerifyResult verify_matroid(const Matroid& m);                                // n <= 10

// For each beta in the grid: max f over sets with infeasibility_ratio <= beta.
// The frontier is non-decreasing in beta. n <= 18.
std::vector<std::pair<Real, Real>> brute_bicriteria_frontier(const SetFunctionOracle& f, const Constraint& c,
                                                             const std::vector<Real>& beta_grid);

}  // namespace bicrit
