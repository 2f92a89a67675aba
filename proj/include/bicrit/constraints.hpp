#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>

#include "bicrit/core.hpp"

// Constraint representations, feasibility / infeasibility-ratio measurement,
// linear-maximization oracles over solvable regions, matroid machinery, and
// the closed-form guarantee functions rho and nu.

namespace bicrit {

struct CardinalityConstraint {
  int budget = 0;
  CardinalityConstraint() = default;
  explicit CardinalityConstraint(int b) : budget(b) {
    if (b < 0) throw std::invalid_argument("CardinalityConstraint: negative budget");
  }
};

class KnapsackConstraint {
 public:
  // Unless allow_oversized_prices is set (the equality-constraint mode of the
  // symmetric post-process), every price must be <= budget.
  KnapsackConstraint(std::vector<Real> prices, Real budget, bool allow_oversized_prices = false);

  int n() const { return (int)prices_.size(); }
  Real budget() const { return budget_; }
  const std::vector<Real>& prices() const { return prices_; }
  Real price(int u) const { return prices_.at(u); }
  Real total_price() const { return total_; }
  bool oversized_allowed() const { return allow_oversized_; }

  Real cost(const ElementSet& s) const;
  Real cost(const DenseVector& x) const;

  static KnapsackConstraint unit(int n, Real budget) {
    return KnapsackConstraint(std::vector<Real>(n, 1.0), budget);
  }

 private:
  std::vector<Real> prices_;
  Real budget_ = 0;
  Real total_ = 0;
  bool allow_oversized_ = false;
};

// Density c = B / ||p||_1. Throws on zero total price.
Real density(const KnapsackConstraint& k);

// Guarantee curve for monotone knapsack/cardinality maximization:
//   rho(c, eps) = (1 - eps^c) / c                               for c <= 1/2
//   rho(c, eps) = (1 - 2(1-c) sqrt(eps) - eps (2c-1)) / c       for c >= 1/2
Real rho(Real c, Real eps);

// Hardness curve for general submodular maximization under cardinality:
//   nu(beta) = 2 e^{-beta/2} (1 - e^{-beta/2}) for beta <= 2 ln 2, else 1/2.
Real nu(Real beta);

class Matroid {
 public:
  enum class Kind { Uniform, Partition, Graphic, Oracle };

  static Matroid uniform(int n, int rank);
  // part_of[u] in [0, parts); limits[j] caps |S intersect part j|.
  static Matroid partition(std::vector<int> part_of, std::vector<int> limits);
  // Ground set = edges of an undirected multigraph; independence = acyclic.
  static Matroid graphic(int n_vertices, std::vector<std::pair<int, int>> edges);
  static Matroid from_oracle(int n, std::function<bool(const ElementSet&)> independent,
                             std::optional<int> rank_hint = std::nullopt);

  int n() const { return state().n; }
  Kind kind() const { return state().kind; }
  bool independent(const ElementSet& s) const;
  // Greedy rank of an arbitrary subset.
  int rank_of(const ElementSet& s) const;
  // Rank of the full ground set (cached).
  int rank() const;

  // Builtin parameter accessors (throw for other kinds).
  int uniform_rank() const;
  const std::vector<int>& partition_part_of() const;
  const std::vector<int>& partition_limits() const;

 private:
  struct State {
    Kind kind = Kind::Oracle;
    int n = 0;
    std::function<bool(const ElementSet&)> indep;
    std::optional<int> rank_hint;
    int uniform_rank = 0;
    std::vector<int> part_of, limits;
    int graphic_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    mutable std::optional<int> full_rank;
  };
  const State& state() const {
    if (!state_) throw std::logic_error("Matroid: empty");
    return *state_;
  }
  std::shared_ptr<State> state_;
};

// True iff S partitions into <= k independent sets of m (membership in the
// k-fold matroid union M'). Uniform/partition matroids use the closed-form
// rank min_{T subset S} {|S \ T| + k rank(T)}; other kinds run an
// Edmonds-style matroid-partition augmentation.
bool matroid_union_independent(const Matroid& m, int k, const ElementSet& s);

// k-fold union matroid with memoized rank/independence queries. Useful when
// many queries hit the same matroid (pipage rounding, frontier enumeration).
class MatroidUnion {
 public:
  MatroidUnion(Matroid m, int k);
  int n() const { return m_.n(); }
  int fold() const { return k_; }
  const Matroid& base() const { return m_; }
  bool independent(const ElementSet& s) const;
  int rank(const ElementSet& s) const;

 private:
  Matroid m_;
  int k_ = 1;
  std::shared_ptr<std::unordered_map<uint64_t, int>> rank_cache_;
};

// Solvable convex subset of [0,1]^N: admits a linear-maximization oracle;
// builtin kinds also carry a membership check.
class SolvableRegion {
 public:
  enum class Kind { Box, CardinalityPolytope, KnapsackPolytope, MatroidPolytope, PartitionBases, Custom };

  static SolvableRegion box(int n);
  static SolvableRegion cardinality_polytope(int n, Real budget);
  static SolvableRegion knapsack_polytope(KnapsackConstraint k);
  static SolvableRegion matroid_polytope(Matroid m);
  // Convex hull of the bases of a partition matroid with exact per-part
  // counts: {x : sum over part j of x = count[j]}. Not down-closed.
  static SolvableRegion partition_bases(std::vector<int> part_of, std::vector<int> counts);
  static SolvableRegion custom(int n, std::function<DenseVector(const DenseVector&)> lp_oracle,
                               bool down_closed,
                               std::function<bool(const DenseVector&, Real)> membership = nullptr);

  int n() const { return state().n; }
  Kind kind() const { return state().kind; }
  bool down_closed() const { return state().down_closed; }
  bool has_membership() const { return (bool)state().membership; }

  // Vertex maximizing <w, x> over the region. Greedy ties break toward the
  // lowest element index. For down-closed regions, coordinates with
  // non-positive weight are set to zero.
  DenseVector lp_maximize(const DenseVector& w) const;

  // Maximizer of <w, x> over {x in [0,1]^N : x / ell in region}; requires a
  // down-closed builtin region (integral ell for matroid polytopes).
  DenseVector lp_maximize_scaled(const DenseVector& w, int ell) const;

  bool member(const DenseVector& x, Real tol = 1e-9) const;

  const KnapsackConstraint& knapsack() const;
  const Matroid& matroid() const;
  Real cardinality_budget() const;

 private:
  struct State {
    Kind kind = Kind::Custom;
    int n = 0;
    bool down_closed = true;
    std::function<DenseVector(const DenseVector&)> lp;
    std::function<bool(const DenseVector&, Real)> membership;
    std::optional<KnapsackConstraint> knapsack;
    std::optional<Matroid> matroid;
    Real card_budget = 0;
    std::vector<int> part_of, counts;
  };
  const State& state() const {
    if (!state_) throw std::logic_error("SolvableRegion: empty");
    return *state_;
  }
  std::shared_ptr<State> state_;
};

using Constraint = std::variant<CardinalityConstraint, KnapsackConstraint, Matroid, SolvableRegion>;

int constraint_ground_size(const Constraint& c);

// True iff S is feasible for the constraint (region constraints check the
// membership of the characteristic vector).
bool feasible(const ElementSet& s, const Constraint& c, Real tol = kTol);

// Continuous relaxation of a combinatorial constraint (cardinality/knapsack/
// matroid polytopes); regions pass through. Cardinality constraints carry no
// ground set, so they need the two-argument overload.
SolvableRegion relaxation(const Constraint& c);
SolvableRegion relaxation(const Constraint& c, int n);

struct CertificateUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Achieved infeasibility ratio of a solution:
//   knapsack -> cost/B, cardinality -> |S|/B,
//   matroid -> smallest k with matroid_union_independent(m, k, S),
//   region  -> smallest t >= 0 with x/t in region (bisection, 1e-6 absolute).
// Throws CertificateUnavailable for regions without a membership check and
// std::runtime_error when no finite ratio exists.
Real infeasibility_ratio(const ElementSet& s, const Constraint& c);
Real infeasibility_ratio(const DenseVector& x, const Constraint& c);

// ---- Instances and dummy-element augmentation -----------------------------

struct Instance {
  SetFunctionOracle f;
  Constraint constraint;
  // Number of trailing dummy elements (valueless, appended after the original
  // ground set by augment_with_dummies).
  int dummy_count = 0;

  int n() const { return f.n(); }
  int original_n() const { return f.n() - dummy_count; }
};

// Adds `count` dummy elements: f ignores them, knapsack mode prices them at B,
// matroid mode wraps the independence oracle so dummies are free up to the
// matroid rank, cardinality keeps its budget. Region constraints are not
// augmentable (the continuous solvers never use dummies).
Instance augment_with_dummies(const Instance& instance, int count);

// Removes dummy elements (indices >= original_n) from a solution set.
ElementSet strip_dummies(const ElementSet& s, int original_n);

}  // namespace bicrit
