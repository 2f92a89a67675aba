#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicrit/continuous_solvers.hpp"
#include "bicrit/discrete_solvers.hpp"
#include "bicrit/harness.hpp"
#include "bicrit/multilinear.hpp"
#include "bicrit/oracle.hpp"
#include "bicrit/rounding.hpp"

namespace py = pybind11;
using namespace bicrit;

namespace {

ElementSet set_from_list(int n, const std::vector<int>& elems) {
  return ElementSet::from_elements(n, elems);
}

DenseVector vec_from_list(const std::vector<Real>& coords) { return DenseVector(coords); }

py::dict outcome_dict(const BicriteriaOutcome& out) {
  py::dict d;
  if (out.is_set())
    d["solution"] = out.solution_set().elements();
  else
    d["solution"] = out.solution_vector().coords();
  d["value"] = out.value;
  d["is_set"] = out.is_set();
  d["infeasibility"] = out.certificate_available ? py::cast(out.infeasibility_certificate) : py::none();
  d["queries"] = out.queries;
  d["seed"] = out.seed;
  return d;
}

MultilinearEvaluator evaluator_for(const SetFunctionOracle& f, int samples, uint64_t seed) {
  if (samples > 0) return MultilinearEvaluator::sampled(f, samples, seed);
  return MultilinearEvaluator::exact(f);
}

Real dt_or(Real dt, Real T) { return dt > 0 ? dt : (T > 0 ? T / 200 : 0.01); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bicriteria submodular maximization: solvers, rounding, and ground-truth oracles";

  // ---- core types ----
  py::class_<SetFunctionOracle>(m, "Oracle")
      .def_property_readonly("n", &SetFunctionOracle::n)
      .def_property_readonly("monotone", &SetFunctionOracle::is_monotone)
      .def_property_readonly("symmetric", &SetFunctionOracle::is_symmetric)
      .def_property_readonly("query_count", &SetFunctionOracle::query_count)
      .def("value",
           [](const SetFunctionOracle& f, const std::vector<int>& s) {
             return f.value(set_from_list(f.n(), s));
           })
      .def("__call__", [](const SetFunctionOracle& f, const std::vector<int>& s) {
        return f.value(set_from_list(f.n(), s));
      });

  py::class_<KnapsackConstraint>(m, "Knapsack")
      .def(py::init<std::vector<Real>, Real, bool>(), py::arg("prices"), py::arg("budget"),
           py::arg("allow_oversized") = false)
      .def_property_readonly("n", &KnapsackConstraint::n)
      .def_property_readonly("budget", &KnapsackConstraint::budget)
      .def_property_readonly("prices", &KnapsackConstraint::prices)
      .def("cost", [](const KnapsackConstraint& k, const std::vector<int>& s) {
        return k.cost(set_from_list(k.n(), s));
      })
      .def_static("unit", &KnapsackConstraint::unit, py::arg("n"), py::arg("budget"));

  py::class_<CardinalityConstraint>(m, "Cardinality")
      .def(py::init<int>(), py::arg("budget"))
      .def_readonly("budget", &CardinalityConstraint::budget);

  py::class_<Matroid>(m, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("n"), py::arg("rank"))
      .def_static("partition", &Matroid::partition, py::arg("part_of"), py::arg("limits"))
      .def_static("graphic", &Matroid::graphic, py::arg("n_vertices"), py::arg("edges"))
      .def_static("from_oracle",
                  [](int n, const std::function<bool(const std::vector<int>&)>& indep) {
                    return Matroid::from_oracle(
                        n, [indep, n](const ElementSet& s) { return indep(s.elements()); });
                  })
      .def_property_readonly("n", &Matroid::n)
      .def_property_readonly("rank", &Matroid::rank)
      .def("independent", [](const Matroid& mt, const std::vector<int>& s) {
        return mt.independent(set_from_list(mt.n(), s));
      });

  py::class_<SolvableRegion>(m, "Region")
      .def_static("box", &SolvableRegion::box, py::arg("n"))
      .def_static("cardinality_polytope", &SolvableRegion::cardinality_polytope, py::arg("n"),
                  py::arg("budget"))
      .def_static("knapsack_polytope", &SolvableRegion::knapsack_polytope, py::arg("knapsack"))
      .def_static("matroid_polytope", &SolvableRegion::matroid_polytope, py::arg("matroid"))
      .def_static("partition_bases", &SolvableRegion::partition_bases, py::arg("part_of"),
                  py::arg("counts"))
      .def_property_readonly("n", &SolvableRegion::n)
      .def_property_readonly("down_closed", &SolvableRegion::down_closed)
      .def("member",
           [](const SolvableRegion& r, const std::vector<Real>& x, Real tol) {
             return r.member(vec_from_list(x), tol);
           },
           py::arg("x"), py::arg("tol") = 1e-9)
      .def("lp_maximize", [](const SolvableRegion& r, const std::vector<Real>& w) {
        return r.lp_maximize(vec_from_list(w)).coords();
      });

  // ---- function families ----
  m.def("modular", [](const std::vector<Real>& w) { return instantiate(Modular{w}, 0).oracle; },
        py::arg("weights"));
  m.def("coverage",
        [](const std::vector<Real>& uw, const std::vector<std::vector<int>>& covers) {
          return instantiate(Coverage{uw, covers}, 0).oracle;
        },
        py::arg("universe_weights"), py::arg("covers"));
  m.def("directed_cut",
        [](int n, const std::vector<std::pair<int, int>>& arcs) {
          return instantiate(DirectedCut{n, arcs}, 0).oracle;
        },
        py::arg("n"), py::arg("arcs"));
  m.def("undirected_cut",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
          return instantiate(UndirectedCut{n, edges}, 0).oracle;
        },
        py::arg("n"), py::arg("edges"));
  m.def("custom_oracle",
        [](int n, const std::function<Real(const std::vector<int>&)>& fn, bool monotone, bool symmetric) {
          return SetFunctionOracle(
              n, [fn](const ElementSet& s) { return fn(s.elements()); }, monotone, symmetric, "python");
        },
        py::arg("n"), py::arg("fn"), py::arg("monotone") = false, py::arg("symmetric") = false);
  m.def("hard_monotone",
        [](int h, int ell, int i, Real delta_prime, uint64_t seed) {
          auto inst = instantiate(HardMonotone{h, ell, i, delta_prime, {}}, seed);
          return py::make_tuple(inst.oracle,
                                std::get<CardinalityConstraint>(*inst.canonical_constraint).budget);
        },
        py::arg("h"), py::arg("ell"), py::arg("i"), py::arg("delta_prime"), py::arg("seed") = 0);
  m.def("arcs_symmetry_gap", [](int n) {
    auto inst = instantiate(ArcsSymmetryGap{n}, 0);
    return py::make_tuple(inst.oracle, std::get<SolvableRegion>(*inst.canonical_constraint));
  });
  m.def("kappa_blend", [](int n, Real kappa) {
    auto inst = instantiate(KappaBlend{n, kappa}, 0);
    return py::make_tuple(inst.oracle,
                          std::get<CardinalityConstraint>(*inst.canonical_constraint).budget);
  });
  m.def("eval_G", &eval_G, py::arg("c"), py::arg("x"), py::arg("y"));
  m.def("eval_F_hard", &eval_F_hard, py::arg("c"), py::arg("delta_prime"), py::arg("x"), py::arg("y"));

  // ---- closed forms ----
  m.def("rho", &rho, py::arg("c"), py::arg("eps"));
  m.def("nu", &nu, py::arg("beta"));
  m.def("mcg_multi_opt_bound", &mcg_multi_opt_bound, py::arg("ell"), py::arg("T"));
  m.def("density", [](const KnapsackConstraint& k) { return density(k); });

  // ---- ground truth ----
  m.def("brute_opt",
        [](const SetFunctionOracle& f, const Constraint& c) {
          auto res = brute_opt(f, c);
          return py::make_tuple(res.best.elements(), res.value);
        },
        py::arg("oracle"), py::arg("constraint"));
  m.def("verify_submodular", [](const SetFunctionOracle& f) {
    auto r = verify_submodular(f);
    return py::make_tuple(r.ok, r.witness);
  });
  m.def("verify_monotone", [](const SetFunctionOracle& f) {
    auto r = verify_monotone(f);
    return py::make_tuple(r.ok, r.witness);
  });
  m.def("verify_symmetric", [](const SetFunctionOracle& f) {
    auto r = verify_symmetric(f);
    return py::make_tuple(r.ok, r.witness);
  });
  m.def("verify_matroid", [](const Matroid& mt) {
    auto r = verify_matroid(mt);
    return py::make_tuple(r.ok, r.witness);
  });
  m.def("infeasibility_ratio",
        [](const std::vector<int>& sol, int n, const Constraint& c) {
          return infeasibility_ratio(set_from_list(n, sol), c);
        },
        py::arg("solution"), py::arg("n"), py::arg("constraint"));
  m.def("matroid_union_independent",
        [](const Matroid& mt, int k, const std::vector<int>& s) {
          return matroid_union_independent(mt, k, set_from_list(mt.n(), s));
        },
        py::arg("matroid"), py::arg("k"), py::arg("solution"));

  // ---- multilinear extension ----
  py::class_<MultilinearEvaluator>(m, "Multilinear")
      .def(py::init([](const SetFunctionOracle& f, int samples, uint64_t seed) {
             return evaluator_for(f, samples, seed);
           }),
           py::arg("oracle"), py::arg("samples") = 0, py::arg("seed") = 0)
      .def("eval",
           [](const MultilinearEvaluator& F, const std::vector<Real>& x) {
             return F.eval(vec_from_list(x));
           })
      .def("partial",
           [](const MultilinearEvaluator& F, const std::vector<Real>& x, int u) {
             return F.partial(vec_from_list(x), u);
           })
      .def("gradient", [](const MultilinearEvaluator& F, const std::vector<Real>& x) {
        return F.gradient(vec_from_list(x)).coords();
      });

  // ---- discrete solvers ----
  m.def("density_greedy",
        [](const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps) {
          return outcome_dict(density_greedy_monotone(f, k, eps));
        },
        py::arg("oracle"), py::arg("knapsack"), py::arg("eps"));
  m.def("matroid_greedy",
        [](const SetFunctionOracle& f, const Matroid& mt, Real eps) {
          return outcome_dict(iterative_matroid_greedy(f, mt, eps));
        },
        py::arg("oracle"), py::arg("matroid"), py::arg("eps"));
  m.def("warmup_cardinality",
        [](const SetFunctionOracle& f, int budget, Real eps, uint64_t seed) {
          return outcome_dict(warmup_cardinality(f, budget, eps, seed));
        },
        py::arg("oracle"), py::arg("budget"), py::arg("eps"), py::arg("seed") = 0);
  m.def("combinatorial_general",
        [](const SetFunctionOracle& f, const Constraint& c, Real eps, uint64_t seed) {
          return outcome_dict(combinatorial_general(f, c, eps, seed));
        },
        py::arg("oracle"), py::arg("constraint"), py::arg("eps"), py::arg("seed") = 0);
  m.def("symmetric_greedy",
        [](const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps, Real delta) {
          return outcome_dict(density_greedy_symmetric(f, k, eps, delta));
        },
        py::arg("oracle"), py::arg("knapsack"), py::arg("eps"), py::arg("delta") = 0.05);
  m.def("double_greedy",
        [](const SetFunctionOracle& f, uint64_t seed) {
          auto [set, value] = double_greedy_unconstrained(f, seed);
          return py::make_tuple(set.elements(), value);
        },
        py::arg("oracle"), py::arg("seed") = 0);

  // ---- continuous solvers ----
  m.def("mcg",
        [](const SetFunctionOracle& f, const SolvableRegion& region, Real T, Real dt, int samples,
           uint64_t seed) {
          return outcome_dict(measured_continuous_greedy(evaluator_for(f, samples, seed), region, T, dt_or(dt, T)));
        },
        py::arg("oracle"), py::arg("region"), py::arg("T"), py::arg("dt") = 0.0, py::arg("samples") = 0,
        py::arg("seed") = 0);
  m.def("mcg_non_downclosed",
        [](const SetFunctionOracle& f, const SolvableRegion& region, Real T, Real dt, int samples,
           uint64_t seed) {
          return outcome_dict(mcg_non_downclosed(evaluator_for(f, samples, seed), region, T, dt_or(dt, T)));
        },
        py::arg("oracle"), py::arg("region"), py::arg("T"), py::arg("dt") = 0.0, py::arg("samples") = 0,
        py::arg("seed") = 0);
  m.def("cdg_knapsack",
        [](const SetFunctionOracle& f, const KnapsackConstraint& k, Real eps, Real dt, int samples,
           uint64_t seed) {
          return outcome_dict(continuous_double_greedy_knapsack(evaluator_for(f, samples, seed), k, eps, dt));
        },
        py::arg("oracle"), py::arg("knapsack"), py::arg("eps"), py::arg("dt") = 1.0 / 200,
        py::arg("samples") = 0, py::arg("seed") = 0);
  m.def("general_bicriteria",
        [](const SetFunctionOracle& f, const SolvableRegion& region, Real eps, uint64_t seed, Real dt,
           int samples) {
          return outcome_dict(general_bicriteria(evaluator_for(f, samples, seed), region, eps, seed, dt));
        },
        py::arg("oracle"), py::arg("region"), py::arg("eps"), py::arg("seed") = 0, py::arg("dt") = 0.01,
        py::arg("samples") = 0);
  m.def("more_mcg",
        [](const SetFunctionOracle& f, const SolvableRegion& region, Real T, Real dt, int samples,
           uint64_t seed) {
          return outcome_dict(more_mcg(evaluator_for(f, samples, seed), region, T, dt_or(dt, T)));
        },
        py::arg("oracle"), py::arg("region"), py::arg("T"), py::arg("dt") = 0.0, py::arg("samples") = 0,
        py::arg("seed") = 0);
  m.def("mcg_multi_opt",
        [](const SetFunctionOracle& f, const SolvableRegion& region, Real T, int ell, Real dt, int samples,
           uint64_t seed) {
          return outcome_dict(mcg_multi_opt(evaluator_for(f, samples, seed), region, T, ell, dt_or(dt, T)));
        },
        py::arg("oracle"), py::arg("region"), py::arg("T"), py::arg("ell") = 2, py::arg("dt") = 0.0,
        py::arg("samples") = 0, py::arg("seed") = 0);
  m.def("guided_mcg",
        [](const SetFunctionOracle& f, Real T, const std::vector<Real>& guide, const SolvableRegion& region,
           Real dt, int samples, uint64_t seed) {
          return guided_mcg(evaluator_for(f, samples, seed), T, vec_from_list(guide), region, dt).coords();
        },
        py::arg("oracle"), py::arg("T"), py::arg("guide"), py::arg("region"), py::arg("dt") = 0.01,
        py::arg("samples") = 0, py::arg("seed") = 0);
  m.def("symmetric_equality_postprocess",
        [](const std::vector<Real>& y, const KnapsackConstraint& k) {
          return symmetric_equality_postprocess(vec_from_list(y), k).coords();
        },
        py::arg("y"), py::arg("knapsack"));

  // ---- rounding ----
  m.def("pipage_knapsack",
        [](const std::vector<Real>& x, const KnapsackConstraint& k, uint64_t seed) {
          return pipage_knapsack(vec_from_list(x), k, seed).elements();
        },
        py::arg("x"), py::arg("knapsack"), py::arg("seed") = 0);
  m.def("pipage_matroid",
        [](const std::vector<Real>& x, Real beta, const Matroid& mt, uint64_t seed) {
          return pipage_matroid(vec_from_list(x), beta, mt, seed).elements();
        },
        py::arg("x"), py::arg("beta"), py::arg("matroid"), py::arg("seed") = 0);

  m.attr("__version__") = "0.1.0";
}
