#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/estimate.hpp"
#include "cqaoa/evolve.hpp"
#include "cqaoa/nelder_mead.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/rng.hpp"

namespace cqaoa {

enum class ObjectiveMode { Exact, Sampled };

struct OptimizerConfig {
  int p = 2;
  int restarts = 20;
  int max_iters = 200;
  double x_tol = 1e-6;
  double f_tol = 1e-9;
  double init_step = 0.25;
  // initial walk times are drawn uniformly from this window; the simplex
  // may wander outside it
  double beta_min = 0.0;
  double beta_max = std::numbers::pi;
  ObjectiveMode mode = ObjectiveMode::Exact;
  double epsilon = 0.1;  // sampled mode: estimate half-width
  double z = 1.96;       // sampled mode: confidence z-score
  std::uint64_t seed = 0;
  EvolveOptions evolve{};
  // deterministic starts run before the random restarts
  std::vector<Params> extra_starts;
  // overrides the instance's initial feasible solution when set
  std::optional<std::uint64_t> initial_x;
};

struct RunResult {
  Params best_params;
  double best_f = 0.0;
  std::uint64_t best_x = 0;
  std::uint64_t best_c = 0;
  std::vector<std::pair<int, double>> trace;  // (evaluation index, f)
  int restart_index = -1;
};

/// Maximizes F_p over the 2p-1 angles with restarted Nelder-Mead. Tracks
/// the best objective value and the best-seen solution across every
/// objective evaluation, not just accepted simplex moves. Deterministic
/// for a fixed config.
inline RunResult maximize_f(const NpoInstance& instance, const Tables& tables,
                            const OptimizerConfig& cfg) {
  if (cfg.p < 1) throw std::invalid_argument("maximize_f: p must be >= 1");
  if (tables.n_bits != instance.n_bits())
    throw std::invalid_argument("maximize_f: tables do not match instance");
  if (!(cfg.beta_max >= cfg.beta_min) || !std::isfinite(cfg.beta_min) ||
      !std::isfinite(cfg.beta_max))
    throw std::invalid_argument("maximize_f: bad beta window");
  const int total_starts =
      static_cast<int>(cfg.extra_starts.size()) + std::max(0, cfg.restarts);
  if (total_starts < 1)
    throw std::invalid_argument("maximize_f: need at least one start");
  for (const Params& s : cfg.extra_starts)
    if (s.p() != cfg.p)
      throw std::invalid_argument("maximize_f: extra start has wrong level");

  const std::uint64_t init_x =
      cfg.initial_x.value_or(instance.initial_feasible());
  if (init_x >= tables.dim() || !tables.validity[init_x])
    throw std::invalid_argument("maximize_f: initial solution is infeasible");

  detail::EvolveEngine engine(tables, cfg.evolve);
  const std::vector<cplx> v0 = engine.gather(basis_state(tables.n_bits, init_x));
  const SamplePlan plan =
      make_sample_plan(tables.measure_max, cfg.epsilon, cfg.z);

  RunResult result;
  result.best_f = -std::numeric_limits<double>::infinity();
  result.best_x = init_x;
  result.best_c = tables.measure[init_x];
  result.best_params = Params::make(std::vector<double>(cfg.p, 0.0),
                                    std::vector<double>(cfg.p - 1, 0.0));

  int eval_index = 0;
  int current_restart = 0;
  std::mt19937_64 sample_rng;  // reseeded per restart

  auto objective = [&](const std::vector<double>& flat) {
    const Params prm = Params::unflatten(cfg.p, flat);
    std::vector<cplx> v = v0;
    engine.run(v, prm);
    double f;
    std::uint64_t x, c;
    if (cfg.mode == ObjectiveMode::Exact) {
      f = engine.expectation(v);
      const SupportSolution sol = engine.certified(v, f);
      x = sol.x;
      c = sol.c;
    } else {
      const EstimateResult est = engine.estimate(v, plan, sample_rng);
      f = est.f_estimate;
      x = est.best_x;
      c = est.best_c;
    }
    if (c > result.best_c) {
      result.best_c = c;
      result.best_x = x;
    }
    if (f > result.best_f) {
      result.best_f = f;
      result.best_params = prm;
      result.restart_index = current_restart;
    }
    result.trace.emplace_back(eval_index++, f);
    return f;
  };

  NelderMeadConfig nm;
  nm.max_iters = cfg.max_iters;
  nm.x_tol = cfg.x_tol;
  nm.f_tol = cfg.f_tol;
  nm.init_step = cfg.init_step;

  for (int r = 0; r < total_starts; ++r) {
    current_restart = r;
    sample_rng.seed(derive_seed(cfg.seed, 0x5a17b1e5ULL, r));
    Params start = Params::make({0.0}, {});
    if (r < static_cast<int>(cfg.extra_starts.size())) {
      start = cfg.extra_starts[r];
    } else {
      std::mt19937_64 rng(derive_seed(cfg.seed, 0x57a57ULL, r));
      auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
      };
      std::vector<double> betas(cfg.p), gammas(cfg.p - 1);
      for (double& b : betas)
        b = cfg.beta_min + unit() * (cfg.beta_max - cfg.beta_min);
      for (double& g : gammas) g = unit() * 2.0 * std::numbers::pi;
      start = Params::make(std::move(betas), std::move(gammas));
    }
    nelder_mead_maximize(objective, start.flatten(), nm);
  }
  return result;
}

inline RunResult maximize_f(const NpoInstance& instance,
                            const OptimizerConfig& cfg,
                            int bit_cap = kDefaultBitCap) {
  const Tables tables = build_tables(instance, bit_cap);
  return maximize_f(instance, tables, cfg);
}

/// Checks the level-nesting property at level p: optimizing at level p,
/// with one start made by embedding the level-(p-1) winner (zero extra
/// walk and zero extra phase appended), must reach at least the
/// level-(p-1) optimum.
inline bool level_nesting_check(const NpoInstance& instance,
                                const Tables& tables, int p,
                                std::uint64_t seed,
                                OptimizerConfig base = {}) {
  if (p < 2) throw std::invalid_argument("level_nesting_check: p must be >= 2");
  base.seed = seed;
  base.extra_starts.clear();

  OptimizerConfig lower = base;
  lower.p = p - 1;
  const RunResult lo = maximize_f(instance, tables, lower);

  Params embedded = lo.best_params;
  embedded.betas.push_back(0.0);
  embedded.gammas.push_back(0.0);

  OptimizerConfig upper = base;
  upper.p = p;
  upper.restarts = 0;
  upper.extra_starts = {embedded};
  const RunResult hi = maximize_f(instance, tables, upper);

  return hi.best_f >= lo.best_f - 1e-9;
}

}  // namespace cqaoa
