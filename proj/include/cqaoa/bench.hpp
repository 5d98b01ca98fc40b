#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqaoa/classical.hpp"
#include "cqaoa/errors.hpp"
#include "cqaoa/graph.hpp"
#include "cqaoa/optimize.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/rng.hpp"

namespace cqaoa {

enum class Family { ErdosRenyi, Cycle, Star, Johnson, File };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::ErdosRenyi: return "erdos_renyi";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Johnson: return "johnson";
    case Family::File: return "file";
  }
  return "unknown";
}

inline Family family_from_name(const std::string& name) {
  if (name == "erdos_renyi") return Family::ErdosRenyi;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "johnson") return Family::Johnson;
  if (name == "file") return Family::File;
  throw std::invalid_argument("unknown graph family: " + name);
}

/// One sweep: graphs from a family over a size range, the quantum pipeline
/// against the classical baseline on each. For the johnson family the
/// sweep variable is the subset size k of J(johnson_n, k); for file input
/// the range is ignored.
struct ExperimentConfig {
  Family family = Family::Cycle;
  int n_min = 4;
  int n_max = 12;
  double prob = 0.5;   // erdos_renyi edge probability
  int johnson_n = 6;   // set size of J(n, k)
  std::string path;    // family == File
  int instances_per_point = 1;
  int classical_seeds = 1000;
  int bit_cap = kDefaultBitCap;
  std::uint64_t seed = 1;
  std::string out_dir = "results";
  OptimizerConfig opt{};
};

struct ExperimentRecord {
  std::string family;
  int n = 0;  // graph vertex count
  std::uint64_t instance_seed = 0;
  double quantum_quality = 0.0;
  double classical_quality = 0.0;
  std::size_t optimal_size = 0;
  std::size_t quantum_size = 0;
  double best_f = 0.0;
  double wall_seconds = 0.0;
};

namespace detail {

inline Graph make_family_graph(const ExperimentConfig& cfg, int point,
                               std::uint64_t graph_seed) {
  switch (cfg.family) {
    case Family::ErdosRenyi:
      return gen_erdos_renyi(point, cfg.prob, graph_seed);
    case Family::Cycle: return gen_cycle(point);
    case Family::Star: return gen_star(point);
    case Family::Johnson: return gen_johnson(cfg.johnson_n, point);
    case Family::File: {
      std::ifstream in(cfg.path);
      if (!in) throw std::runtime_error("cannot read graph file " + cfg.path);
      std::stringstream buf;
      buf << in.rdbuf();
      return read_edge_list(buf.str());
    }
  }
  throw std::invalid_argument("unknown family");
}

inline double mean_gavril_quality(const Graph& g, std::size_t optimal_size,
                                  int n_seeds, std::uint64_t seed_base) {
  double sum = 0.0;
  for (int s = 0; s < n_seeds; ++s) {
    const CoverResult cover = gavril_2approx(g, derive_seed(seed_base, s));
    sum += approximation_quality(optimal_size, cover.size);
  }
  return sum / n_seeds;
}

}  // namespace detail

/// Runs the sweep, appending each finished record to `records` so partial
/// results survive an aborting capacity error. Deterministic from
/// config.seed; records are ordered by (point, instance index).
inline void run_experiment(const ExperimentConfig& cfg,
                           std::vector<ExperimentRecord>& records) {
  if (cfg.instances_per_point < 1)
    throw std::invalid_argument("run_experiment: instances_per_point >= 1");
  const bool single = cfg.family == Family::File;
  const int lo = single ? 0 : cfg.n_min;
  const int hi = single ? 0 : cfg.n_max;
  if (lo > hi) throw std::invalid_argument("run_experiment: empty n range");

  for (int point = lo; point <= hi; ++point) {
    for (int inst = 0; inst < cfg.instances_per_point; ++inst) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t graph_seed = derive_seed(cfg.seed, point, 2 * inst);
      const std::uint64_t opt_seed = derive_seed(cfg.seed, point, 2 * inst + 1);

      const Graph g = detail::make_family_graph(cfg, point, graph_seed);
      const VertexCoverInstance instance(g);
      const Tables tables = build_tables(instance, cfg.bit_cap);

      OptimizerConfig opt = cfg.opt;
      opt.seed = opt_seed;
      const RunResult run = maximize_f(instance, tables, opt);

      const CoverResult exact = exact_min_vertex_cover(g, cfg.bit_cap);
      const std::size_t quantum_size =
          static_cast<std::size_t>(g.n_vertices()) -
          static_cast<std::size_t>(run.best_c);

      ExperimentRecord rec;
      rec.family = family_name(cfg.family);
      rec.n = g.n_vertices();
      rec.instance_seed = graph_seed;
      rec.optimal_size = exact.size;
      rec.quantum_size = quantum_size;
      rec.quantum_quality = approximation_quality(exact.size, quantum_size);
      rec.classical_quality = detail::mean_gavril_quality(
          g, exact.size, cfg.classical_seeds, derive_seed(graph_seed, 0xC1A5ULL));
      rec.best_f = run.best_f;
      rec.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      records.push_back(std::move(rec));
    }
  }
}

inline std::vector<ExperimentRecord> run_experiment(
    const ExperimentConfig& cfg) {
  std::vector<ExperimentRecord> records;
  run_experiment(cfg, records);
  return records;
}

namespace detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct QualityStats {
  double mean = 0.0, lo = 0.0, hi = 0.0, ci95_half = 0.0;
  int count = 0;
};

inline QualityStats quality_stats(const std::vector<double>& xs) {
  QualityStats st;
  st.count = static_cast<int>(xs.size());
  if (xs.empty()) return st;
  st.lo = xs.front();
  st.hi = xs.front();
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
    st.lo = std::min(st.lo, x);
    st.hi = std::max(st.hi, x);
  }
  st.mean = sum / st.count;
  if (st.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - st.mean) * (x - st.mean);
    const double sd = std::sqrt(ss / (st.count - 1));
    st.ci95_half = 1.96 * sd / std::sqrt(static_cast<double>(st.count));
  }
  return st;
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace detail

/// Writes records.csv, summary.json and plotdata_{quantum,classical}.tsv
/// under out_dir. Refuses an empty record list.
inline void emit_results(const std::vector<ExperimentRecord>& records,
                         const std::string& out_dir) {
  if (records.empty())
    throw std::invalid_argument("emit_results: no records to write");
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  using detail::csv_field;
  using detail::fmt_double;

  std::string csv =
      "family,n,instance_seed,quantum_quality,classical_quality,"
      "optimal_size,quantum_size,best_f,wall_seconds\n";
  for (const ExperimentRecord& r : records) {
    csv += csv_field(r.family) + "," + std::to_string(r.n) + "," +
           std::to_string(r.instance_seed) + "," +
           fmt_double(r.quantum_quality) + "," +
           fmt_double(r.classical_quality) + "," +
           std::to_string(r.optimal_size) + "," +
           std::to_string(r.quantum_size) + "," + fmt_double(r.best_f) + "," +
           fmt_double(r.wall_seconds) + "\n";
  }
  detail::write_file(dir / "records.csv", csv);

  std::map<int, std::vector<double>> quantum_by_n, classical_by_n;
  for (const ExperimentRecord& r : records) {
    quantum_by_n[r.n].push_back(r.quantum_quality);
    classical_by_n[r.n].push_back(r.classical_quality);
  }

  nlohmann::json summary;
  summary["family"] = records.front().family;
  summary["records"] = records.size();
  summary["per_n"] = nlohmann::json::array();
  std::string tsv_q = "n\tmean\tci95_half\tmin\tmax\n";
  std::string tsv_c = tsv_q;
  for (const auto& [n, qs] : quantum_by_n) {
    const detail::QualityStats q = detail::quality_stats(qs);
    const detail::QualityStats c = detail::quality_stats(classical_by_n[n]);
    nlohmann::json row;
    row["n"] = n;
    row["instances"] = q.count;
    row["quantum"] = {{"mean", q.mean},
                      {"min", q.lo},
                      {"max", q.hi},
                      {"ci95_half", q.ci95_half}};
    row["classical"] = {{"mean", c.mean},
                        {"min", c.lo},
                        {"max", c.hi},
                        {"ci95_half", c.ci95_half}};
    summary["per_n"].push_back(row);
    tsv_q += std::to_string(n) + "\t" + fmt_double(q.mean) + "\t" +
             fmt_double(q.ci95_half) + "\t" + fmt_double(q.lo) + "\t" +
             fmt_double(q.hi) + "\n";
    tsv_c += std::to_string(n) + "\t" + fmt_double(c.mean) + "\t" +
             fmt_double(c.ci95_half) + "\t" + fmt_double(c.lo) + "\t" +
             fmt_double(c.hi) + "\n";
  }
  detail::write_file(dir / "summary.json", summary.dump(2) + "\n");
  detail::write_file(dir / "plotdata_quantum.tsv", tsv_q);
  detail::write_file(dir / "plotdata_classical.tsv", tsv_c);
}

/// Fills a config from a flat JSON object; missing keys keep defaults.
inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  if (j.contains("family")) cfg.family = family_from_name(j.at("family"));
  if (j.contains("n_min")) cfg.n_min = j.at("n_min");
  if (j.contains("n_max")) cfg.n_max = j.at("n_max");
  if (j.contains("prob")) cfg.prob = j.at("prob");
  if (j.contains("johnson_n")) cfg.johnson_n = j.at("johnson_n");
  if (j.contains("path")) cfg.path = j.at("path");
  if (j.contains("instances_per_point"))
    cfg.instances_per_point = j.at("instances_per_point");
  if (j.contains("classical_seeds"))
    cfg.classical_seeds = j.at("classical_seeds");
  if (j.contains("bit_cap")) cfg.bit_cap = j.at("bit_cap");
  if (j.contains("seed")) cfg.seed = j.at("seed");
  if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir");
  if (j.contains("p")) cfg.opt.p = j.at("p");
  if (j.contains("restarts")) cfg.opt.restarts = j.at("restarts");
  if (j.contains("max_iters")) cfg.opt.max_iters = j.at("max_iters");
  if (j.contains("beta_min")) cfg.opt.beta_min = j.at("beta_min");
  if (j.contains("beta_max")) cfg.opt.beta_max = j.at("beta_max");
  if (j.contains("epsilon")) cfg.opt.epsilon = j.at("epsilon");
  if (j.contains("z")) cfg.opt.z = j.at("z");
  if (j.contains("mode")) {
    const std::string mode = j.at("mode");
    if (mode == "exact") cfg.opt.mode = ObjectiveMode::Exact;
    else if (mode == "sampled") cfg.opt.mode = ObjectiveMode::Sampled;
    else throw std::invalid_argument("unknown mode: " + mode);
  }
  return cfg;
}

inline ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

}  // namespace cqaoa
