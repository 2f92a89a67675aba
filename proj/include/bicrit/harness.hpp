#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bicrit/constraints.hpp"
#include "bicrit/core.hpp"
#include "bicrit/discrete_solvers.hpp"
#include "bicrit/functions.hpp"

// Instance serialization, the solver registry, experiment sweeps, CSV
// emission, and the acceptance-suite runner behind the CLI.

namespace bicrit {

// Serializable constraint descriptor (live Constraint objects can hold
// arbitrary closures; specs are restricted to the builtin kinds).
struct ConstraintSpec {
  enum class Kind {
    Cardinality,
    Knapsack,
    UniformMatroid,
    PartitionMatroid,
    GraphicMatroid,
    CardinalityPolytope,
    KnapsackPolytope,
    UniformMatroidPolytope,
    PartitionMatroidPolytope,
    PartitionBases,
  };
  Kind kind = Kind::Cardinality;
  int int_budget = 0;                       // cardinality / uniform rank
  std::vector<Real> prices;                 // knapsack kinds
  Real budget = 0;                          // knapsack / polytope budgets
  bool allow_oversized = false;
  std::vector<int> part_of, limits;         // partition kinds
  int vertices = 0;                         // graphic
  std::vector<std::pair<int, int>> edges;
};

Constraint build_constraint(const ConstraintSpec& spec, int n);

struct InstanceSpec {
  int schema_version = 1;
  std::string id;
  FunctionFamily family;
  ConstraintSpec constraint;
  uint64_t seed = 0;
};

// Single-document JSON; prices/budgets/weights are decimal strings so that
// serialization round-trips byte-identically.
std::string to_json(const InstanceSpec& spec);
InstanceSpec instance_from_json(const std::string& text);

Instance build_instance(const InstanceSpec& spec);

struct RunParams {
  Real epsilon = 0.25;
  Real delta = 0.05;
  std::optional<Real> horizon;  // T; solver-specific default when unset
  std::optional<Real> step;     // dt; default T/200
  int samples = 0;              // 0 = exact-mode multilinear evaluation
  int ell = 2;                  // mcg_multi_opt
  uint64_t seed = 0;
  DoubleGreedyMode dg_mode = DoubleGreedyMode::Auto;
};

struct RunRecord {
  std::string instance_id;
  std::string solver;
  Real epsilon = 0, delta = 0, T = 0, dt = 0;
  uint64_t seed = 0;
  Real value = 0;
  Real opt = 0;
  Real alpha = 0;
  Real beta_achieved = 0;
  bool beta_available = true;
  Real beta_bound = 0;
  long long queries = 0;
  double wall_ms = 0;  // excluded from determinism comparisons
};

std::vector<std::string> solver_ids();
RunRecord run(const InstanceSpec& spec, const std::string& solver, const RunParams& params);

std::string run_record_csv_header();
std::string to_csv_row(const RunRecord& r);
std::string to_json(const RunRecord& r);

// Plot data for the multi-OPT guarantee curve: one "analytic" row per
// (ell, beta) evaluating ell (e^{-beta/ell} - e^{-beta}) / (ell - 1), plus
// "empirical" rows from mcg_multi_opt on an instance with ell disjoint
// optimal arcs. Columns: series,ell,beta,value.
std::string sweep_curve(const std::vector<int>& ells, const std::vector<Real>& beta_grid,
                        bool empirical = true);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs required values
};

struct AcceptReport {
  std::vector<CriterionResult> results;
  bool all_pass = true;
};

// Runs the acceptance criteria in `selector` (1-based ids; empty = none,
// nullopt = all). Prints one pass/fail line per criterion to `out` if given.
AcceptReport accept(const std::optional<std::vector<int>>& selector, std::ostream* out = nullptr);

// Seeded random instance generation for the gen subcommand.
InstanceSpec generate_instance(const std::string& family, int n, const std::string& constraint_kind,
                               Real budget, uint64_t seed);

}  // namespace bicrit
