#include "bicrit/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>

#include "bicrit/continuous_solvers.hpp"
#include "bicrit/multilinear.hpp"
#include "bicrit/oracle.hpp"
#include "json.hpp"

namespace bicrit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string real_str(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Real str_real(const ordered_json& j) {
  if (j.is_number()) return j.get<Real>();
  return std::stod(j.get<std::string>());
}

ordered_json real_array(const std::vector<Real>& xs) {
  ordered_json arr = ordered_json::array();
  for (Real x : xs) arr.push_back(real_str(x));
  return arr;
}

std::vector<Real> parse_real_array(const ordered_json& arr) {
  std::vector<Real> out;
  for (const auto& j : arr) out.push_back(str_real(j));
  return out;
}

ordered_json pair_array(const std::vector<std::pair<int, int>>& ps) {
  ordered_json arr = ordered_json::array();
  for (auto& [a, b] : ps) arr.push_back(ordered_json::array({a, b}));
  return arr;
}

std::vector<std::pair<int, int>> parse_pair_array(const ordered_json& arr) {
  std::vector<std::pair<int, int>> out;
  for (const auto& j : arr) out.emplace_back(j.at(0).get<int>(), j.at(1).get<int>());
  return out;
}

ordered_json family_to_json(const FunctionFamily& family) {
  ordered_json j;
  j["family"] = family_tag(family);
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Modular>) {
          j["weights"] = real_array(fam.weights);
        } else if constexpr (std::is_same_v<T, Coverage>) {
          j["universe_weights"] = real_array(fam.universe_weights);
          j["covers"] = fam.covers;
        } else if constexpr (std::is_same_v<T, DirectedCut>) {
          j["n"] = fam.n;
          j["arcs"] = pair_array(fam.arcs);
        } else if constexpr (std::is_same_v<T, UndirectedCut>) {
          j["n"] = fam.n;
          j["edges"] = pair_array(fam.edges);
        } else if constexpr (std::is_same_v<T, HardMonotone>) {
          j["h"] = fam.h;
          j["ell"] = fam.ell;
          j["i"] = fam.i;
          j["delta_prime"] = real_str(fam.delta_prime);
          if (fam.opt_bits)
            j["opt_bits"] = std::to_string(*fam.opt_bits);
          else
            j["opt_bits"] = nullptr;
        } else if constexpr (std::is_same_v<T, HardMonotoneExtended>) {
          j["h"] = fam.inner.h;
          j["ell"] = fam.inner.ell;
          j["i"] = fam.inner.i;
          j["delta_prime"] = real_str(fam.inner.delta_prime);
          if (fam.inner.opt_bits)
            j["opt_bits"] = std::to_string(*fam.inner.opt_bits);
          else
            j["opt_bits"] = nullptr;
          j["r"] = real_str(fam.r);
          j["extra"] = fam.extra;
        } else if constexpr (std::is_same_v<T, ArcsSymmetryGap>) {
          j["n"] = fam.n;
        } else {
          j["n"] = fam.n;
          j["kappa"] = real_str(fam.kappa);
        }
      },
      family);
  return j;
}

FunctionFamily family_from_json(const ordered_json& j) {
  const std::string tag = j.at("family").get<std::string>();
  if (tag == "modular") return Modular{parse_real_array(j.at("weights"))};
  if (tag == "coverage") {
    Coverage fam;
    fam.universe_weights = parse_real_array(j.at("universe_weights"));
    fam.covers = j.at("covers").get<std::vector<std::vector<int>>>();
    return fam;
  }
  if (tag == "directed_cut") return DirectedCut{j.at("n").get<int>(), parse_pair_array(j.at("arcs"))};
  if (tag == "undirected_cut") return UndirectedCut{j.at("n").get<int>(), parse_pair_array(j.at("edges"))};
  auto parse_hard = [&](const ordered_json& h) {
    HardMonotone fam;
    fam.h = h.at("h").get<int>();
    fam.ell = h.at("ell").get<int>();
    fam.i = h.at("i").get<int>();
    fam.delta_prime = str_real(h.at("delta_prime"));
    if (!h.at("opt_bits").is_null()) fam.opt_bits = std::stoull(h.at("opt_bits").get<std::string>());
    return fam;
  };
  if (tag == "hard_monotone") return parse_hard(j);
  if (tag == "hard_monotone_extended")
    return HardMonotoneExtended{parse_hard(j), str_real(j.at("r")), j.at("extra").get<int>()};
  if (tag == "arcs_symmetry_gap") return ArcsSymmetryGap{j.at("n").get<int>()};
  if (tag == "kappa_blend") return KappaBlend{j.at("n").get<int>(), str_real(j.at("kappa"))};
  throw std::invalid_argument("unknown function family: " + tag);
}

std::string constraint_kind_tag(ConstraintSpec::Kind kind) {
  switch (kind) {
    case ConstraintSpec::Kind::Cardinality: return "cardinality";
    case ConstraintSpec::Kind::Knapsack: return "knapsack";
    case ConstraintSpec::Kind::UniformMatroid: return "uniform_matroid";
    case ConstraintSpec::Kind::PartitionMatroid: return "partition_matroid";
    case ConstraintSpec::Kind::GraphicMatroid: return "graphic_matroid";
    case ConstraintSpec::Kind::CardinalityPolytope: return "cardinality_polytope";
    case ConstraintSpec::Kind::KnapsackPolytope: return "knapsack_polytope";
    case ConstraintSpec::Kind::UniformMatroidPolytope: return "uniform_matroid_polytope";
    case ConstraintSpec::Kind::PartitionMatroidPolytope: return "partition_matroid_polytope";
    case ConstraintSpec::Kind::PartitionBases: return "partition_bases";
  }
  throw std::logic_error("constraint_kind_tag: unreachable");
}

ordered_json constraint_to_json(const ConstraintSpec& c) {
  ordered_json j;
  j["kind"] = constraint_kind_tag(c.kind);
  switch (c.kind) {
    case ConstraintSpec::Kind::Cardinality:
    case ConstraintSpec::Kind::UniformMatroid:
    case ConstraintSpec::Kind::UniformMatroidPolytope:
      j["budget"] = c.int_budget;
      break;
    case ConstraintSpec::Kind::Knapsack:
    case ConstraintSpec::Kind::KnapsackPolytope:
      j["prices"] = real_array(c.prices);
      j["budget"] = real_str(c.budget);
      j["allow_oversized"] = c.allow_oversized;
      break;
    case ConstraintSpec::Kind::CardinalityPolytope:
      j["budget"] = real_str(c.budget);
      break;
    case ConstraintSpec::Kind::PartitionMatroid:
    case ConstraintSpec::Kind::PartitionMatroidPolytope:
    case ConstraintSpec::Kind::PartitionBases:
      j["part_of"] = c.part_of;
      j["limits"] = c.limits;
      break;
    case ConstraintSpec::Kind::GraphicMatroid:
      j["vertices"] = c.vertices;
      j["edges"] = pair_array(c.edges);
      break;
  }
  return j;
}

ConstraintSpec constraint_from_json(const ordered_json& j) {
  ConstraintSpec c;
  const std::string tag = j.at("kind").get<std::string>();
  if (tag == "cardinality") {
    c.kind = ConstraintSpec::Kind::Cardinality;
    c.int_budget = j.at("budget").get<int>();
  } else if (tag == "uniform_matroid" || tag == "uniform_matroid_polytope") {
    c.kind = tag == "uniform_matroid" ? ConstraintSpec::Kind::UniformMatroid
                                      : ConstraintSpec::Kind::UniformMatroidPolytope;
    c.int_budget = j.at("budget").get<int>();
  } else if (tag == "knapsack" || tag == "knapsack_polytope") {
    c.kind = tag == "knapsack" ? ConstraintSpec::Kind::Knapsack : ConstraintSpec::Kind::KnapsackPolytope;
    c.prices = parse_real_array(j.at("prices"));
    c.budget = str_real(j.at("budget"));
    c.allow_oversized = j.value("allow_oversized", false);
  } else if (tag == "cardinality_polytope") {
    c.kind = ConstraintSpec::Kind::CardinalityPolytope;
    c.budget = str_real(j.at("budget"));
  } else if (tag == "partition_matroid" || tag == "partition_matroid_polytope" || tag == "partition_bases") {
    c.kind = tag == "partition_matroid"            ? ConstraintSpec::Kind::PartitionMatroid
             : tag == "partition_matroid_polytope" ? ConstraintSpec::Kind::PartitionMatroidPolytope
                                                   : ConstraintSpec::Kind::PartitionBases;
    c.part_of = j.at("part_of").get<std::vector<int>>();
    c.limits = j.at("limits").get<std::vector<int>>();
  } else if (tag == "graphic_matroid") {
    c.kind = ConstraintSpec::Kind::GraphicMatroid;
    c.vertices = j.at("vertices").get<int>();
    c.edges = parse_pair_array(j.at("edges"));
  } else {
    throw std::invalid_argument("unknown constraint kind: " + tag);
  }
  return c;
}

}  // namespace

Constraint build_constraint(const ConstraintSpec& spec, int n) {
  switch (spec.kind) {
    case ConstraintSpec::Kind::Cardinality:
      return CardinalityConstraint(spec.int_budget);
    case ConstraintSpec::Kind::Knapsack:
      return KnapsackConstraint(spec.prices, spec.budget, spec.allow_oversized);
    case ConstraintSpec::Kind::UniformMatroid:
      return Matroid::uniform(n, spec.int_budget);
    case ConstraintSpec::Kind::PartitionMatroid:
      return Matroid::partition(spec.part_of, spec.limits);
    case ConstraintSpec::Kind::GraphicMatroid:
      return Matroid::graphic(spec.vertices, spec.edges);
    case ConstraintSpec::Kind::CardinalityPolytope:
      return SolvableRegion::cardinality_polytope(n, spec.budget);
    case ConstraintSpec::Kind::KnapsackPolytope:
      return SolvableRegion::knapsack_polytope(KnapsackConstraint(spec.prices, spec.budget, spec.allow_oversized));
    case ConstraintSpec::Kind::UniformMatroidPolytope:
      return SolvableRegion::matroid_polytope(Matroid::uniform(n, spec.int_budget));
    case ConstraintSpec::Kind::PartitionMatroidPolytope:
      return SolvableRegion::matroid_polytope(Matroid::partition(spec.part_of, spec.limits));
    case ConstraintSpec::Kind::PartitionBases:
      return SolvableRegion::partition_bases(spec.part_of, spec.limits);
  }
  throw std::logic_error("build_constraint: unreachable");
}

std::string to_json(const InstanceSpec& spec) {
  ordered_json j;
  j["schema_version"] = spec.schema_version;
  j["id"] = spec.id;
  j["seed"] = spec.seed;
  j["function"] = family_to_json(spec.family);
  j["constraint"] = constraint_to_json(spec.constraint);
  return j.dump(2);
}

InstanceSpec instance_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  InstanceSpec spec;
  spec.schema_version = j.at("schema_version").get<int>();
  if (spec.schema_version != 1) throw std::invalid_argument("unsupported schema_version");
  spec.id = j.at("id").get<std::string>();
  spec.seed = j.at("seed").get<uint64_t>();
  spec.family = family_from_json(j.at("function"));
  spec.constraint = constraint_from_json(j.at("constraint"));
  return spec;
}

Instance build_instance(const InstanceSpec& spec) {
  InstantiatedInstance inst = instantiate(spec.family, spec.seed);
  Constraint c = build_constraint(spec.constraint, inst.oracle.n());
  return Instance{std::move(inst.oracle), std::move(c), 0};
}

std::vector<std::string> solver_ids() {
  return {"density_greedy",  "matroid_greedy", "warmup_cardinality", "combinatorial_general",
          "symmetric_greedy", "double_greedy",  "mcg",                "mcg_non_downclosed",
          "cdg_knapsack",     "general_bicriteria", "more_mcg",       "mcg_multi_opt"};
}

namespace {

KnapsackConstraint knapsack_of(const Constraint& c, int n) {
  if (std::holds_alternative<KnapsackConstraint>(c)) return std::get<KnapsackConstraint>(c);
  if (std::holds_alternative<CardinalityConstraint>(c))
    return KnapsackConstraint::unit(n, std::get<CardinalityConstraint>(c).budget);
  throw std::invalid_argument("solver needs a knapsack or cardinality constraint");
}

bool is_cardinality(const Constraint& c) { return std::holds_alternative<CardinalityConstraint>(c); }

template <typename T>
const T& constraint_as(const Constraint& c, const char* solver, const char* wanted) {
  if (!std::holds_alternative<T>(c))
    throw std::invalid_argument(std::string(solver) + ": instance constraint must be a " + wanted);
  return std::get<T>(c);
}

}  // namespace

RunRecord run(const InstanceSpec& spec, const std::string& solver, const RunParams& params) {
  Instance inst = build_instance(spec);
  const int n = inst.f.n();
  const Real eps = params.epsilon;

  RunRecord rec;
  rec.instance_id = spec.id;
  rec.solver = solver;
  rec.epsilon = eps;
  rec.delta = params.delta;
  rec.seed = params.seed;

  auto evaluator = [&]() {
    if (params.samples > 0) return MultilinearEvaluator::sampled(inst.f, params.samples, params.seed);
    if (params.samples < 0)  // negative = per-step default max(1000, ceil(10 n ln n))
      return MultilinearEvaluator::sampled(inst.f, default_gradient_samples(n), params.seed);
    return MultilinearEvaluator::exact(inst.f);
  };
  auto horizon_or = [&](Real dflt) { return params.horizon.value_or(dflt); };
  auto step_for = [&](Real T) { return params.step.value_or(T > 0 ? T / 200 : 1.0 / 200); };

  const auto t0 = std::chrono::steady_clock::now();
  BicriteriaOutcome out;
  if (solver == "density_greedy") {
    KnapsackConstraint k = knapsack_of(inst.constraint, n);
    out = density_greedy_monotone(inst.f, k, eps);
    rec.beta_bound = is_cardinality(inst.constraint) ? std::ceil(std::log(1 / eps) - 1e-9)
                                                     : 1 + std::log(1 / eps);
  } else if (solver == "matroid_greedy") {
    out = iterative_matroid_greedy(inst.f, constraint_as<Matroid>(inst.constraint, "matroid_greedy", "matroid"), eps);
    rec.beta_bound = std::ceil(std::log2(1 / eps) - 1e-9);
  } else if (solver == "warmup_cardinality") {
    out = warmup_cardinality(inst.f,
                             constraint_as<CardinalityConstraint>(inst.constraint, "warmup_cardinality",
                                                                  "cardinality constraint")
                                 .budget,
                             eps, params.seed, params.dg_mode);
    rec.beta_bound = 2 * std::ceil(1 / (2 * eps) - 1e-9);
  } else if (solver == "combinatorial_general") {
    out = combinatorial_general(inst.f, inst.constraint, eps, params.seed, params.dg_mode);
    rec.beta_bound = (std::holds_alternative<KnapsackConstraint>(inst.constraint) ? 3.0 : 2.0) *
                     std::ceil(1 / (2 * eps) - 1e-9);
  } else if (solver == "symmetric_greedy") {
    KnapsackConstraint k = knapsack_of(inst.constraint, n);
    out = density_greedy_symmetric(inst.f, k, eps, params.delta);
    rec.beta_bound = is_cardinality(inst.constraint)
                         ? std::max(0.0, std::ceil(0.5 * std::log(1 / (2 * eps)) - 1e-9))
                         : 1 + std::max(0.0, 0.5 * std::log(1 / (2 * eps)));
  } else if (solver == "double_greedy") {
    auto [set, value] = double_greedy_unconstrained(inst.f, params.seed);
    out.solution = set;
    out.value = value;
    out.queries = inst.f.query_count();
    out.seed = params.seed;
    try {
      out.infeasibility_certificate = infeasibility_ratio(set, inst.constraint);
    } catch (const std::exception&) {
      out.certificate_available = false;
    }
    rec.beta_bound = out.certificate_available ? out.infeasibility_certificate : 0;
  } else if (solver == "mcg") {
    const Real T = horizon_or(std::log(1 / eps));
    rec.T = T;
    rec.dt = step_for(T);
    out = measured_continuous_greedy(evaluator(), relaxation(inst.constraint, n), T, rec.dt);
    rec.beta_bound = T;
  } else if (solver == "mcg_non_downclosed") {
    const Real T = horizon_or(std::max(1.0, std::log(1 / eps)));
    rec.T = T;
    rec.dt = step_for(T);
    out = mcg_non_downclosed(evaluator(), relaxation(inst.constraint, n), T, rec.dt);
    rec.beta_bound = T;
  } else if (solver == "cdg_knapsack") {
    KnapsackConstraint k = knapsack_of(inst.constraint, n);
    rec.T = 1.0;
    rec.dt = step_for(1.0);
    out = continuous_double_greedy_knapsack(evaluator(), k, eps, rec.dt);
    rec.beta_bound = rho(density(k), eps);
  } else if (solver == "general_bicriteria") {
    rec.T = 2.0;
    rec.dt = step_for(2.0);
    out = general_bicriteria(evaluator(), relaxation(inst.constraint, n), eps, params.seed, rec.dt);
    rec.beta_bound = 2 * (1 / eps + 2);
  } else if (solver == "more_mcg") {
    const Real T = horizon_or(std::max(0.0, 0.5 * std::log(1 / (2 * eps))));
    rec.T = T;
    rec.dt = step_for(T);
    SolvableRegion region = relaxation(inst.constraint, n);
    out = more_mcg(evaluator(), region, T, rec.dt);
    if (region.kind() == SolvableRegion::Kind::KnapsackPolytope) {
      const Real c = density(region.knapsack());
      rec.beta_bound = (1 - std::exp(-2 * T * c)) / (2 * c);
    } else {
      rec.beta_bound = T;
    }
  } else if (solver == "mcg_multi_opt") {
    const Real T = horizon_or(2 * std::log(2.0));
    rec.T = T;
    rec.dt = step_for(T);
    out = mcg_multi_opt(evaluator(), relaxation(inst.constraint, n), T, params.ell, rec.dt);
    rec.beta_bound = T;
  } else {
    throw std::invalid_argument("unknown solver: " + solver);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  rec.value = out.value;
  rec.queries = out.queries;
  rec.beta_achieved = out.infeasibility_certificate;
  rec.beta_available = out.certificate_available;
  if (n <= 22) {
    BruteResult opt = brute_opt(inst.f, inst.constraint);
    rec.opt = opt.value;
    rec.alpha = rec.opt > 0 ? rec.value / rec.opt
                            : (rec.value <= 1e-15 ? 1.0 : std::numeric_limits<Real>::infinity());
  } else {
    rec.opt = std::numeric_limits<Real>::quiet_NaN();
    rec.alpha = std::numeric_limits<Real>::quiet_NaN();
  }
  return rec;
}

std::string run_record_csv_header() {
  return "instance_id,solver,epsilon,delta,T,dt,seed,value,opt,alpha,beta_achieved,beta_bound,queries,wall_ms";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.instance_id << ',' << r.solver << ',' << r.epsilon << ',' << r.delta << ',' << r.T << ','
     << r.dt << ',' << r.seed << ',' << r.value << ',' << r.opt << ',' << r.alpha << ','
     << (r.beta_available ? r.beta_achieved : std::numeric_limits<Real>::quiet_NaN()) << ','
     << r.beta_bound << ',' << r.queries << ',' << r.wall_ms;
  return os.str();
}

std::string to_json(const RunRecord& r) {
  ordered_json j;
  j["instance_id"] = r.instance_id;
  j["solver"] = r.solver;
  j["epsilon"] = r.epsilon;
  j["delta"] = r.delta;
  j["T"] = r.T;
  j["dt"] = r.dt;
  j["seed"] = r.seed;
  j["value"] = r.value;
  j["opt"] = r.opt;
  j["alpha"] = r.alpha;
  if (r.beta_available)
    j["beta_achieved"] = r.beta_achieved;
  else
    j["beta_achieved"] = nullptr;
  j["beta_bound"] = r.beta_bound;
  j["queries"] = r.queries;
  j["wall_ms"] = r.wall_ms;
  return j.dump(2);
}

std::string sweep_curve(const std::vector<int>& ells, const std::vector<Real>& beta_grid, bool empirical) {
  for (int ell : ells)
    if (ell < 2) throw std::invalid_argument("sweep_curve: ell must be >= 2");
  std::ostringstream os;
  os.precision(12);
  os << "series,ell,beta,value\n";
  for (int ell : ells)
    for (Real beta : beta_grid)
      os << "analytic," << ell << ',' << beta << ',' << (beta <= 0 ? 0.0 : mcg_multi_opt_bound(ell, beta))
         << '\n';
  if (empirical) {
    for (int ell : ells) {
      // ell disjoint arcs: ell disjoint optimal singletons under budget 1.
      DirectedCut cut;
      cut.n = 2 * ell;
      for (int i = 0; i < ell; ++i) cut.arcs.emplace_back(i, ell + i);
      auto inst = instantiate(FunctionFamily(cut), 0);
      auto F = MultilinearEvaluator::exact(inst.oracle);
      auto region = SolvableRegion::cardinality_polytope(cut.n, 1);
      auto opt = brute_opt(inst.oracle, Constraint(CardinalityConstraint(1)));
      const size_t stride = std::max<size_t>(1, beta_grid.size() / 8);
      for (size_t i = 0; i < beta_grid.size(); i += stride) {
        const Real beta = beta_grid[i];
        if (beta <= 0) {
          os << "empirical," << ell << ',' << beta << ",0\n";
          continue;
        }
        auto out = mcg_multi_opt(F, region, beta, ell, beta / 200);
        os << "empirical," << ell << ',' << beta << ',' << out.value / opt.value << '\n';
      }
    }
  }
  return os.str();
}

InstanceSpec generate_instance(const std::string& family, int n, const std::string& constraint_kind,
                               Real budget, uint64_t seed) {
  InstanceSpec spec;
  spec.seed = seed;
  std::ostringstream id;
  id << family << "-n" << n << "-s" << seed;
  spec.id = id.str();

  if (family == "coverage")
    spec.family = random_coverage(n, std::max(2, (3 * n) / 2), seed);
  else if (family == "modular")
    spec.family = random_modular(n, seed);
  else if (family == "directed_cut")
    spec.family = random_directed_cut(n, 2 * n, seed);
  else if (family == "undirected_cut")
    spec.family = random_undirected_cut(n, (3 * n) / 2, seed);
  else if (family == "hard_monotone") {
    if (n % 2 != 0) throw std::invalid_argument("hard_monotone: n must be even (c = 1/2)");
    spec.family = HardMonotone{1, 2, n / 2, 0.1, {}};
  } else if (family == "arcs_symmetry_gap")
    spec.family = ArcsSymmetryGap{n};
  else if (family == "kappa_blend")
    spec.family = KappaBlend{n, 0.5};
  else
    throw std::invalid_argument("generate_instance: unknown family " + family);

  const int ground = family_ground_size(spec.family);
  auto canonical = instantiate(spec.family, seed).canonical_constraint;
  if (canonical) {
    // Hard families carry their own constraint.
    if (std::holds_alternative<CardinalityConstraint>(*canonical)) {
      spec.constraint.kind = ConstraintSpec::Kind::Cardinality;
      spec.constraint.int_budget = std::get<CardinalityConstraint>(*canonical).budget;
    } else {
      const auto& region = std::get<SolvableRegion>(*canonical);
      if (region.kind() != SolvableRegion::Kind::PartitionBases)
        throw std::logic_error("generate_instance: unexpected canonical region");
      spec.constraint.kind = ConstraintSpec::Kind::PartitionBases;
      std::vector<int> part_of(ground, 1);
      for (int i = 0; i < ground / 2; ++i) part_of[i] = 0;
      spec.constraint.part_of = part_of;
      spec.constraint.limits = {1, ground / 2 - 1};
    }
    return spec;
  }

  auto rng = make_rng(seed, 0x6e6);
  if (constraint_kind == "cardinality") {
    spec.constraint.kind = ConstraintSpec::Kind::Cardinality;
    spec.constraint.int_budget = (int)budget;
  } else if (constraint_kind == "knapsack") {
    spec.constraint.kind = ConstraintSpec::Kind::Knapsack;
    std::uniform_real_distribution<Real> price(0.2, 1.0);
    spec.constraint.prices.resize(ground);
    for (Real& p : spec.constraint.prices) p = std::min(price(rng), budget);
    spec.constraint.budget = budget;
  } else if (constraint_kind == "uniform_matroid") {
    spec.constraint.kind = ConstraintSpec::Kind::UniformMatroid;
    spec.constraint.int_budget = (int)budget;
  } else if (constraint_kind == "partition_matroid") {
    spec.constraint.kind = ConstraintSpec::Kind::PartitionMatroid;
    std::uniform_int_distribution<int> part(0, 1);
    spec.constraint.part_of.resize(ground);
    for (int& p : spec.constraint.part_of) p = part(rng);
    spec.constraint.limits = {std::max(1, (int)budget / 2), std::max(1, (int)budget - (int)budget / 2)};
  } else if (constraint_kind == "cardinality_polytope") {
    spec.constraint.kind = ConstraintSpec::Kind::CardinalityPolytope;
    spec.constraint.budget = budget;
  } else if (constraint_kind == "knapsack_polytope") {
    spec.constraint.kind = ConstraintSpec::Kind::KnapsackPolytope;
    spec.constraint.prices.assign(ground, 1.0);
    spec.constraint.budget = budget;
  } else {
    throw std::invalid_argument("generate_instance: unknown constraint kind " + constraint_kind);
  }
  return spec;
}

}  // namespace bicrit
