#pragma once

#include <optional>

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"

// Concrete submodular function families used as fixtures, including the
// hard-instance constructions for monotone cardinality maximization and the
// symmetry-gap families.

namespace bicrit {

struct Modular {
  std::vector<Real> weights;  // non-negative
};

struct Coverage {
  std::vector<Real> universe_weights;
  std::vector<std::vector<int>> covers;  // covers[u] = universe items covered by element u
};

struct DirectedCut {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // arc (u, v) counts when u in S, v not in S
};

struct UndirectedCut {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Monotone hard instance over a ground set of i*ell elements with density
// c = h/ell: f_O(S) = F_hard(|S cap O| / (i ell), |S \ O| / (i ell)) for a
// planted optimum O of size i*h. When opt_bits is unset, O is drawn uniformly
// from the instantiation seed.
struct HardMonotone {
  int h = 1;
  int ell = 2;
  int i = 1;
  Real delta_prime = 0.05;  // must lie in (0, c/4)
  std::optional<uint64_t> opt_bits;
};

// Density c = h/ell in (1/2, 1): an inner c = 1/2 instance plus `extra` fresh
// elements of linear value r / ((ell'-h') i') each.
struct HardMonotoneExtended {
  HardMonotone inner;
  Real r = 0.5;
  int extra = 0;
};

// n disjoint arcs a_i -> b_i with the partition-matroid-base constraint
// |S cap A| = 1, |S cap B| = n - 1.
struct ArcsSymmetryGap {
  int n = 2;
};

// kappa * g + (1 - kappa) * h over {a, b} + two n^2-element blocks, with a
// cardinality constraint of n + 1.
struct KappaBlend {
  int n = 2;
  Real kappa = 0.5;
};

using FunctionFamily = std::variant<Modular, Coverage, DirectedCut, UndirectedCut, HardMonotone,
                                    HardMonotoneExtended, ArcsSymmetryGap, KappaBlend>;

// G(x, y) = 1 - (1 - x - y)^{1/c} on [0, c] x [0, 1 - c].
Real eval_G(Real c, Real x, Real y);

// The planted-optimum surrogate: equals G wherever x <= c y/(1-c) + delta',
// and follows the max/min expression elsewhere.
Real eval_F_hard(Real c, Real delta_prime, Real x, Real y);

struct InstantiatedInstance {
  SetFunctionOracle oracle;
  // Canonical paper constraint for families that define one (hard instances,
  // symmetry-gap families); generic fixtures leave it empty.
  std::optional<Constraint> canonical_constraint;
};

InstantiatedInstance instantiate(const FunctionFamily& family, uint64_t seed);

int family_ground_size(const FunctionFamily& family);
std::string family_tag(const FunctionFamily& family);

// Seeded random fixtures (weights ~ Uniform(0,1], covers of random size).
Coverage random_coverage(int n, int universe, uint64_t seed);
Modular random_modular(int n, uint64_t seed);
DirectedCut random_directed_cut(int n, int arcs, uint64_t seed);
UndirectedCut random_undirected_cut(int n, int edges, uint64_t seed);

}  // namespace bicrit
