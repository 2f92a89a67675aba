#include "doctest.h"

#include <cmath>
#include <sstream>
#include <algorithm>

#include "bicrit/harness.hpp"
#include "bicrit/oracle.hpp"

using namespace bicrit;

TEST_SUITE("harness") {

TEST_CASE("instance serialization round-trips byte-identically") {
  auto rng = make_rng(99);
  std::uniform_int_distribution<int> nd(4, 10);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<uint64_t> seeds;
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = nd(rng);
    static const char* fams[] = {"coverage", "modular", "directed_cut", "undirected_cut"};
    static const char* cons[] = {"cardinality", "knapsack", "uniform_matroid", "partition_matroid",
                                 "cardinality_polytope", "knapsack_polytope"};
    auto spec = generate_instance(fams[rep % 4], n, cons[kind(rng)], 2.0, seeds(rng));
    const std::string one = to_json(spec);
    const std::string two = to_json(instance_from_json(one));
    CHECK(one == two);
  }
  SUBCASE("hard families round-trip too") {
    for (const char* fam : {"hard_monotone", "arcs_symmetry_gap", "kappa_blend"}) {
      auto spec = generate_instance(fam, 4, "", 0, 7);
      CHECK(to_json(spec) == to_json(instance_from_json(to_json(spec))));
    }
  }
}

TEST_CASE("built instances honor their InstanceSpec") {
  auto spec = generate_instance("coverage", 8, "knapsack", 2.0, 5);
  Instance inst = build_instance(spec);
  CHECK(inst.f.n() == 8);
  CHECK(std::holds_alternative<KnapsackConstraint>(inst.constraint));
  CHECK(std::get<KnapsackConstraint>(inst.constraint).budget() == doctest::Approx(2.0));
}

TEST_CASE("run records") {
  auto spec = generate_instance("coverage", 8, "knapsack", 2.0, 11);
  RunParams params;
  params.epsilon = 0.25;
  SUBCASE("density greedy meets its recorded bound") {
    auto rec = run(spec, "density_greedy", params);
    CHECK(rec.alpha >= 1 - params.epsilon - 1e-9);
    CHECK(rec.beta_achieved <= rec.beta_bound + 1e-9);
    CHECK(rec.queries > 0);
    CHECK(rec.opt > 0);
  }
  SUBCASE("unknown solver errors") { CHECK_THROWS_AS(run(spec, "nonexistent", params), std::invalid_argument); }
  SUBCASE("solver/constraint mismatch surfaces") {
    CHECK_THROWS_AS(run(spec, "matroid_greedy", params), std::invalid_argument);
  }
  SUBCASE("repeat runs are identical up to wall time") {
    auto a = run(spec, "density_greedy", params);
    auto b = run(spec, "density_greedy", params);
    CHECK(a.value == b.value);
    CHECK(a.beta_achieved == b.beta_achieved);
    CHECK(a.queries == b.queries);
    CHECK(a.alpha == b.alpha);
  }
  SUBCASE("randomized solvers are seed-deterministic") {
    auto cut = generate_instance("directed_cut", 7, "cardinality", 1.0, 13);
    RunParams p;
    p.epsilon = 0.25;
    p.seed = 42;
    auto a = run(cut, "warmup_cardinality", p);
    auto b = run(cut, "warmup_cardinality", p);
    CHECK(a.value == b.value);
  }
  SUBCASE("continuous solver populates T and dt") {
    auto rec = run(spec, "mcg", params);
    CHECK(rec.T == doctest::Approx(std::log(4.0)));
    CHECK(rec.dt == doctest::Approx(rec.T / 200));
    CHECK(rec.alpha >= 1 - params.epsilon - 0.05);
  }
}

TEST_CASE("csv emission uses the pinned schema") {
  CHECK(run_record_csv_header() ==
        "instance_id,solver,epsilon,delta,T,dt,seed,value,opt,alpha,beta_achieved,beta_bound,queries,wall_ms");
  auto spec = generate_instance("modular", 6, "cardinality", 2.0, 3);
  auto rec = run(spec, "density_greedy", RunParams{});
  auto row = to_csv_row(rec);
  CHECK(std::count(row.begin(), row.end(), ',') == 13);
  CHECK(row.rfind(spec.id + ",density_greedy,", 0) == 0);
}

TEST_CASE("sweep curve") {
  std::vector<Real> grid = {0.0, 0.5, 1.0, 2 * std::log(2.0)};
  auto csv = sweep_curve({2, 3}, grid, /*empirical=*/true);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "series,ell,beta,value");
  int analytic = 0, empirical = 0;
  bool nu_match = true;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string series, ell_s, beta_s, val_s;
    std::getline(row, series, ',');
    std::getline(row, ell_s, ',');
    std::getline(row, beta_s, ',');
    std::getline(row, val_s, ',');
    if (series == "analytic") {
      ++analytic;
      if (ell_s == "2") {
        const Real beta = std::stod(beta_s);
        if (std::fabs(std::stod(val_s) - nu(beta)) > 1e-9) nu_match = false;
      }
    } else {
      ++empirical;
    }
  }
  CHECK(analytic == 8);
  CHECK(empirical > 0);
  CHECK(nu_match);  // ell = 2 analytic rows equal nu(beta) on [0, 2 ln 2]
  CHECK_THROWS_AS(sweep_curve({1}, grid), std::invalid_argument);
}

TEST_CASE("accept selector") {
  SUBCASE("empty selector is a no-op pass") {
    auto report = accept(std::vector<int>{});
    CHECK(report.all_pass);
    CHECK(report.results.empty());
  }
  SUBCASE("single fast criterion") {
    auto report = accept(std::vector<int>{10});
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].id == 10);
    CHECK(report.results[0].pass);
  }
}

}  // TEST_SUITE
