#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cqaoa/cqaoa.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitNumerical = 3;

std::string bitstring(std::uint64_t x, int n_bits) {
  std::string s(n_bits, '0');
  for (int i = 0; i < n_bits; ++i)
    if ((x >> i) & 1) s[n_bits - 1 - i] = '1';
  return s;
}

struct RunFlags {
  std::string config_path;
  std::string family;
  int n_min = -1, n_max = -1;
  double prob = -1.0;
  int johnson_n = -1;
  std::string graph_path;
  int instances = -1;
  int classical_seeds = -1;
  int p = -1;
  int restarts = -1;
  std::string mode;
  std::int64_t seed = -1;
  std::string out;
};

cqaoa::ExperimentConfig merge_run_config(const RunFlags& f) {
  cqaoa::ExperimentConfig cfg;
  if (!f.config_path.empty()) cfg = cqaoa::load_config_file(f.config_path);
  if (!f.family.empty()) cfg.family = cqaoa::family_from_name(f.family);
  if (f.n_min >= 0) cfg.n_min = f.n_min;
  if (f.n_max >= 0) cfg.n_max = f.n_max;
  if (f.prob >= 0.0) cfg.prob = f.prob;
  if (f.johnson_n >= 0) cfg.johnson_n = f.johnson_n;
  if (!f.graph_path.empty()) cfg.path = f.graph_path;
  if (f.instances >= 1) cfg.instances_per_point = f.instances;
  if (f.classical_seeds >= 1) cfg.classical_seeds = f.classical_seeds;
  if (f.p >= 1) cfg.opt.p = f.p;
  if (f.restarts >= 1) cfg.opt.restarts = f.restarts;
  if (!f.mode.empty()) {
    if (f.mode == "exact") cfg.opt.mode = cqaoa::ObjectiveMode::Exact;
    else if (f.mode == "sampled") cfg.opt.mode = cqaoa::ObjectiveMode::Sampled;
    else throw std::invalid_argument("mode must be exact or sampled");
  }
  if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
  if (!f.out.empty()) cfg.out_dir = f.out;
  return cfg;
}

int cmd_run(const RunFlags& flags) {
  const cqaoa::ExperimentConfig cfg = merge_run_config(flags);
  std::vector<cqaoa::ExperimentRecord> records;
  try {
    cqaoa::run_experiment(cfg, records);
  } catch (const cqaoa::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    if (!records.empty()) {
      cqaoa::emit_results(records, cfg.out_dir);
      std::cerr << "flushed " << records.size() << " partial records to "
                << cfg.out_dir << "\n";
    }
    return kExitCapacity;
  }
  cqaoa::emit_results(records, cfg.out_dir);
  for (const auto& r : records)
    std::printf("%s n=%-3d quantum=%.3f classical=%.3f opt=%zu got=%zu F=%.4f (%.2fs)\n",
                r.family.c_str(), r.n, r.quantum_quality, r.classical_quality,
                r.optimal_size, r.quantum_size, r.best_f, r.wall_seconds);
  std::printf("wrote %zu records to %s\n", records.size(), cfg.out_dir.c_str());
  return kExitOk;
}

int cmd_solve(const std::string& path, int p, int restarts,
              const std::string& mode, std::uint64_t seed, double beta_max) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kExitFailure;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const cqaoa::Graph g = cqaoa::read_edge_list(buf.str());
  const cqaoa::VertexCoverInstance instance(g);
  const cqaoa::Tables tables = cqaoa::build_tables(instance);

  cqaoa::OptimizerConfig cfg;
  cfg.p = p;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.beta_max = beta_max;
  cfg.mode = mode == "sampled" ? cqaoa::ObjectiveMode::Sampled
                               : cqaoa::ObjectiveMode::Exact;
  const cqaoa::RunResult run = cqaoa::maximize_f(instance, tables, cfg);
  const cqaoa::CoverResult exact = cqaoa::exact_min_vertex_cover(g);

  const std::size_t got = g.n_vertices() - run.best_c;
  std::printf("graph: %d vertices, %zu edges\n", g.n_vertices(), g.n_edges());
  std::printf("level p=%d, %d restarts, %s mode, seed %llu\n", p, restarts,
              mode.c_str(), static_cast<unsigned long long>(seed));
  std::printf("maximised F = %.6f\n", run.best_f);
  std::printf("cover found: %s (bit i = vertex i), size %zu\n",
              bitstring(run.best_x, g.n_vertices()).c_str(), got);
  std::printf("vertices: ");
  for (int v = 0; v < g.n_vertices(); ++v)
    if ((run.best_x >> v) & 1) std::printf("%d ", v);
  std::printf("\n");
  std::printf("optimal cover size: %zu\n", exact.size);
  std::printf("approximation quality: %.4f\n",
              cqaoa::approximation_quality(exact.size, got));
  return kExitOk;
}

int cmd_verify(std::uint64_t seed) {
  const std::vector<cqaoa::CheckResult> checks = cqaoa::run_verification(seed);
  bool all = true;
  for (const auto& c : checks) {
    std::printf("%-32s %s  (%s)\n", c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "all checks passed" : "CHECKS FAILED");
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-free simulator for constrained-quantum-walk QAOA "
               "over minimum vertex cover"};
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "run a benchmark sweep");
  run->add_option("--config", rf.config_path, "JSON config file");
  run->add_option("--family", rf.family,
                  "erdos_renyi|cycle|star|johnson|file");
  run->add_option("--n-min", rf.n_min, "first sweep point");
  run->add_option("--n-max", rf.n_max, "last sweep point");
  run->add_option("--prob", rf.prob, "Erdos-Renyi edge probability");
  run->add_option("--johnson-n", rf.johnson_n, "set size for J(n, k)");
  run->add_option("--graph", rf.graph_path, "edge-list file (family=file)");
  run->add_option("--instances", rf.instances, "instances per sweep point");
  run->add_option("--classical-seeds", rf.classical_seeds,
                  "Gavril runs averaged per instance");
  run->add_option("--p", rf.p, "QAOA level");
  run->add_option("--restarts", rf.restarts, "optimizer restarts");
  run->add_option("--mode", rf.mode, "exact|sampled");
  run->add_option("--seed", rf.seed, "global seed");
  run->add_option("--out", rf.out, "output directory");

  std::string solve_path;
  int solve_p = 2, solve_restarts = 20;
  std::string solve_mode = "exact";
  std::uint64_t solve_seed = 1;
  double solve_beta_max = 3.14159265358979323846;
  CLI::App* solve =
      app.add_subcommand("solve", "solve a single edge-list graph file");
  solve->add_option("graph", solve_path, "edge-list file")->required();
  solve->add_option("--p", solve_p, "QAOA level");
  solve->add_option("--restarts", solve_restarts, "optimizer restarts");
  solve->add_option("--mode", solve_mode, "exact|sampled");
  solve->add_option("--seed", solve_seed, "optimizer seed");
  solve->add_option("--beta-max", solve_beta_max, "walk-time window top");

  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--seed", verify_seed, "verification seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(rf);
    if (solve->parsed())
      return cmd_solve(solve_path, solve_p, solve_restarts, solve_mode,
                       solve_seed, solve_beta_max);
    if (verify->parsed()) return cmd_verify(verify_seed);
  } catch (const cqaoa::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const cqaoa::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (residual " << e.residual() << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
