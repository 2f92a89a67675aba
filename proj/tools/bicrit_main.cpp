#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bicrit/harness.hpp"

// Experiment CLI: generate instances, run solvers against brute-force ground
// truth, emit sweep plot data, and run the acceptance suite.
// Exit codes: 0 success/pass, 1 failed acceptance or runtime error, 2 usage.

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_grid(const std::string& text) {
  // "start:stop:count" or comma-separated values
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double start, stop;
    int count;
    char c1, c2;
    std::istringstream ss(text);
    if (!(ss >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2)
      throw std::runtime_error("bad grid spec (want start:stop:count): " + text);
    for (int i = 0; i < count; ++i) out.push_back(start + (stop - start) * i / (count - 1));
    return out;
  }
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicrit: bicriteria submodular maximization solvers"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd = app.add_subcommand("run", "run one solver on one instance");
  std::string instance_path, solver, out_path, format = "csv";
  bicrit::RunParams params;
  double horizon = -1, step = -1;
  run_cmd->add_option("--instance", instance_path, "instance JSON file")->required();
  run_cmd->add_option("--solver", solver, "solver id")->required();
  run_cmd->add_option("--epsilon", params.epsilon, "epsilon parameter");
  run_cmd->add_option("--delta", params.delta, "delta parameter (symmetric greedy)");
  run_cmd->add_option("--horizon", horizon, "stopping time T (continuous solvers)");
  run_cmd->add_option("--step", step, "Euler step dt");
  run_cmd->add_option("--samples", params.samples, "gradient samples (0 = exact mode)");
  run_cmd->add_option("--ell", params.ell, "number of disjoint optima (mcg_multi_opt)");
  run_cmd->add_option("--seed", params.seed, "run seed");
  run_cmd->add_option("--out", out_path, "output file (default stdout)");
  run_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand("sweep", "emit the multi-OPT guarantee curve");
  std::string ells_text = "2,3,5", beta_grid_text = "0:1.4:50", sweep_out;
  bool no_empirical = false;
  sweep_cmd->add_option("--ell", ells_text, "comma-separated ell values (>= 2)");
  sweep_cmd->add_option("--beta-grid", beta_grid_text, "grid start:stop:count or comma list");
  sweep_cmd->add_option("--out", sweep_out, "output CSV file (default stdout)");
  sweep_cmd->add_flag("--analytic-only", no_empirical, "skip the empirical runs");

  // ---- accept ----
  auto* accept_cmd = app.add_subcommand("accept", "run the acceptance criteria");
  std::string criteria_text = "all";
  std::string accept_out;
  accept_cmd->add_option("--criteria", criteria_text, "comma-separated ids, 'all', or 'none'");
  accept_cmd->add_option("--out", accept_out, "also write the report to a file");

  // ---- gen ----
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance spec");
  std::string family = "coverage", constraint = "cardinality", gen_out;
  int gen_n = 10;
  double gen_budget = 2.0;
  uint64_t gen_seed = 0;
  gen_cmd->add_option("--family", family,
                      "coverage|modular|directed_cut|undirected_cut|hard_monotone|arcs_symmetry_gap|kappa_blend");
  gen_cmd->add_option("--n", gen_n, "ground set size parameter");
  gen_cmd->add_option("--constraint", constraint,
                      "cardinality|knapsack|uniform_matroid|partition_matroid|cardinality_polytope|knapsack_polytope");
  gen_cmd->add_option("--budget", gen_budget, "constraint budget");
  gen_cmd->add_option("--seed", gen_seed, "generation seed");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      if (horizon >= 0) params.horizon = horizon;
      if (step > 0) params.step = step;
      auto spec = bicrit::instance_from_json(read_file(instance_path));
      auto rec = bicrit::run(spec, solver, params);
      if (format == "json")
        write_output(out_path, bicrit::to_json(rec) + "\n");
      else
        write_output(out_path, bicrit::run_record_csv_header() + "\n" + bicrit::to_csv_row(rec) + "\n");
      return 0;
    }
    if (*sweep_cmd) {
      std::vector<int> ells;
      for (double v : parse_grid(ells_text)) ells.push_back((int)v);
      write_output(sweep_out, bicrit::sweep_curve(ells, parse_grid(beta_grid_text), !no_empirical));
      return 0;
    }
    if (*accept_cmd) {
      std::optional<std::vector<int>> selector;
      if (criteria_text == "none")
        selector = std::vector<int>{};
      else if (criteria_text != "all" && !criteria_text.empty()) {
        selector = std::vector<int>{};
        for (double v : parse_grid(criteria_text)) selector->push_back((int)v);
      }
      std::ostringstream report_text;
      auto report = bicrit::accept(selector, &report_text);
      std::cout << report_text.str();
      if (!accept_out.empty()) write_output(accept_out, report_text.str());
      return report.all_pass ? 0 : 1;
    }
    if (*gen_cmd) {
      auto spec = bicrit::generate_instance(family, gen_n, constraint, gen_budget, gen_seed);
      write_output(gen_out, bicrit::to_json(spec) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
