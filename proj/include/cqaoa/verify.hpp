#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cqaoa/classical.hpp"
#include "cqaoa/estimate.hpp"
#include "cqaoa/evolve.hpp"
#include "cqaoa/graph.hpp"
#include "cqaoa/optimize.hpp"
#include "cqaoa/problem.hpp"

namespace cqaoa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline Graph random_check_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Reference walk operator: materialize B column by column through the
// public matvec and exponentiate by dense eigendecomposition.
inline StateVector dense_walk(const StateVector& state, double beta,
                              const std::vector<std::uint8_t>& validity,
                              MixerVariant variant) {
  const int dim = static_cast<int>(state.dim());
  Eigen::MatrixXd B(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const StateVector out =
        mixer_matvec(basis_state(state.n_bits, col), validity, variant);
    for (int row = 0; row < dim; ++row) B(row, col) = out.amps[row].real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = state.amps[i];
  Eigen::VectorXcd y = es.eigenvectors().transpose() * v;
  for (int i = 0; i < dim; ++i) {
    const double ang = -beta * es.eigenvalues()(i);
    y(i) *= cplx{std::cos(ang), std::sin(ang)};
  }
  y = es.eigenvectors() * y;
  StateVector out = state;
  for (int i = 0; i < dim; ++i) out.amps[i] = y(i);
  return out;
}

inline Params random_params(int p, std::mt19937_64& rng) {
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> betas(p), gammas(p - 1);
  for (double& b : betas) b = -2.0 + 4.0 * unit();
  for (double& g : gammas) g = 2.0 * std::numbers::pi * unit();
  return Params::make(std::move(betas), std::move(gammas));
}

}  // namespace detail

/// Fast self-checks of the simulator's structural invariants; the CLI
/// `verify` subcommand prints one line per entry.
inline std::vector<CheckResult> run_verification(std::uint64_t seed = 1) {
  std::vector<CheckResult> checks;
  std::mt19937_64 rng(splitmix64(seed));

  auto add = [&checks](const std::string& name, bool pass,
                       const std::string& detail) {
    checks.push_back({name, pass, detail});
  };

  {  // edge-list round trip
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      const Graph g = detail::random_check_graph(2 + t % 9, rng);
      const Graph h = read_edge_list(write_edge_list(g));
      ok = h.n_vertices() == g.n_vertices() && h.edges() == g.edges();
    }
    add("edge-list round-trip", ok, "30 random graphs");
  }

  {  // generator shapes
    bool ok = gen_cycle(6).n_edges() == 6 && gen_star(10).n_edges() == 9 &&
              gen_johnson(6, 1).n_edges() == 15;
    const Graph j63 = gen_johnson(6, 3);
    ok = ok && j63.n_vertices() == 20;
    for (int d : j63.degrees()) ok = ok && d == 9;
    add("generator shapes", ok, "cycle/star/johnson counts and degrees");
  }

  {  // feasible-subgraph connectivity for vertex cover
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      const Graph g = detail::random_check_graph(3 + t % 8, rng);
      ok = feasible_connected(build_tables(VertexCoverInstance(g)));
    }
    add("vc feasible connectivity", ok, "20 random instances, n <= 10");
  }

  double worst_norm = 0.0, worst_conf = 0.0, worst_per = 0.0, worst_var = 0.0;
  {  // evolution invariants on random instances
    for (int t = 0; t < 10; ++t) {
      const int n = 2 + t % 3;
      const Graph g = detail::random_check_graph(n, rng);
      const VertexCoverInstance inst(g);
      const Tables tables = build_tables(inst);
      const StateVector init = basis_state(n, inst.initial_feasible());
      const Params prm = detail::random_params(2, rng);

      EvolveOptions full;
      full.restrict_to_feasible = false;
      const StateVector out = evolve(tables, prm, init, full);
      worst_norm = std::max(worst_norm, std::abs(out.norm() - 1.0));
      for (std::uint64_t x = 0; x < out.dim(); ++x)
        if (!tables.validity[x])
          worst_conf = std::max(worst_conf, std::abs(out.amps[x]));

      Params shifted = prm;
      if (!shifted.gammas.empty()) {
        shifted.gammas[0] = shifted.gammas[0] + 2.0 * std::numbers::pi;
        const StateVector out2 =
            evolve(tables, Params::make(shifted.betas, shifted.gammas), init,
                   full);
        for (std::uint64_t x = 0; x < out.dim(); ++x)
          worst_per =
              std::max(worst_per, std::abs(out.amps[x] - out2.amps[x]));
      }

      EvolveOptions other = full;
      other.variant = MixerVariant::EqualValidity;
      const StateVector out3 = evolve(tables, prm, init, other);
      for (std::uint64_t x = 0; x < out.dim(); ++x)
        worst_var = std::max(worst_var, std::abs(out.amps[x] - out3.amps[x]));
    }
    add("norm preservation", worst_norm <= 1e-8,
        "drift " + std::to_string(worst_norm));
    add("infeasible confinement", worst_conf <= 1e-10,
        "max infeasible amplitude " + std::to_string(worst_conf));
    add("gamma periodicity", worst_per <= 1e-10,
        "max deviation " + std::to_string(worst_per));
    add("mixer variant equivalence", worst_var <= 1e-10,
        "max deviation " + std::to_string(worst_var));
  }

  {  // mixer symmetry via matvec on basis states
    bool ok = true;
    for (int t = 0; t < 5 && ok; ++t) {
      const Graph g = detail::random_check_graph(3, rng);
      const Tables tables = build_tables(VertexCoverInstance(g));
      const std::uint64_t dim = tables.dim();
      for (std::uint64_t a = 0; a < dim && ok; ++a) {
        const StateVector col = mixer_matvec(basis_state(3, a), tables.validity);
        for (std::uint64_t b = 0; b < dim && ok; ++b) {
          const StateVector row =
              mixer_matvec(basis_state(3, b), tables.validity);
          ok = std::abs(col.amps[b] - row.amps[a]) < 1e-14;
        }
      }
    }
    add("mixer symmetry", ok, "exhaustive n = 3");
  }

  {  // krylov against dense eigendecomposition
    double worst = 0.0;
    for (int t = 0; t < 8; ++t) {
      const int n = 2 + t % 3;
      const Graph g = detail::random_check_graph(n, rng);
      const Tables tables = build_tables(VertexCoverInstance(g));
      const StateVector init = basis_state(n, vc_initial(g));
      const double beta =
          -10.0 + 20.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      auto matvec = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
        mixer_apply_raw(in, out, n, tables.validity,
                        MixerVariant::FeasibleOnly);
      };
      const StateVector krylov = expm_apply(init, beta, matvec);
      const StateVector dense = detail::dense_walk(
          init, beta, tables.validity, MixerVariant::FeasibleOnly);
      double diff2 = 0.0;
      for (std::uint64_t x = 0; x < krylov.dim(); ++x)
        diff2 += std::norm(krylov.amps[x] - dense.amps[x]);
      worst = std::max(worst, std::sqrt(diff2));
    }
    add("krylov vs dense", worst <= 1e-8, "max 2-norm gap " + std::to_string(worst));
  }

  {  // gavril guarantee
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      const Graph g = detail::random_check_graph(3 + t % 8, rng);
      const CoverResult opt = exact_min_vertex_cover(g);
      const CoverResult approx = gavril_2approx(g, rng());
      ok = approx.is_valid && approx.size % 2 == 0 &&
           approx.size <= 2 * opt.size;
    }
    add("gavril validity and 2-factor", ok, "30 random graphs");
  }

  {  // sampling feasibility and plan sizing
    const Graph g = gen_cycle(4);
    const Tables tables = build_tables(VertexCoverInstance(g));
    StateVector st = basis_state(4, vc_initial(g));
    st = evolve(tables, Params::make({0.8, 0.3}, {1.1}), st);
    std::mt19937_64 draw_rng(seed);
    bool ok = true;
    for (int t = 0; t < 2000 && ok; ++t)
      ok = tables.validity[sample_measurement(st, draw_rng)] != 0;
    ok = ok && make_sample_plan(5, 0.1, 1.96).n_samples == 2401;
    add("measurement feasibility + plan", ok, "2000 draws; n = 2401 case");
  }

  {  // level nesting at p = 2
    bool ok = true;
    for (int t = 0; t < 2 && ok; ++t) {
      const Graph g = detail::random_check_graph(4, rng);
      const VertexCoverInstance inst(g);
      const Tables tables = build_tables(inst);
      OptimizerConfig base;
      base.restarts = 5;
      ok = level_nesting_check(inst, tables, 2, derive_seed(seed, t), base);
    }
    add("level nesting p=2", ok, "2 random instances");
  }

  return checks;
}

}  // namespace cqaoa
