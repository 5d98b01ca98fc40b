#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cqaoa/problem.hpp"
#include "cqaoa/state.hpp"

namespace cqaoa {

/// CLT sizing of the hybrid sampling loop. The population lives in
/// [0, measure_max], so by Popoviciu's inequality its variance is at most
/// (measure_max/2)^2, giving n = ceil(z^2 (measure_max/2)^2 / epsilon^2)
/// samples for half-width epsilon at confidence z.
struct SamplePlan {
  double epsilon = 0.1;
  double z = 1.96;
  std::uint64_t n_samples = 1;
};

inline SamplePlan make_sample_plan(std::uint64_t measure_max,
                                   double epsilon = 0.1, double z = 1.96) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(z > 0.0)) throw std::invalid_argument("z must be > 0");
  const double half = static_cast<double>(measure_max) / 2.0;
  const double raw = z * z * half * half / (epsilon * epsilon);
  // snap to the nearest integer before ceiling so FP dust in the inputs
  // cannot bump the count by one
  const double nearest = std::round(raw);
  const double n = std::abs(raw - nearest) < 1e-6 * std::max(1.0, nearest)
                       ? nearest
                       : std::ceil(raw);
  SamplePlan plan;
  plan.epsilon = epsilon;
  plan.z = z;
  plan.n_samples = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
  return plan;
}

/// F = <psi| C |psi> = sum_x |amp[x]|^2 c(x).
inline double exact_expectation(const StateVector& state,
                                const std::vector<std::uint32_t>& measure) {
  if (measure.size() != state.dim())
    throw std::invalid_argument("exact_expectation: table size mismatch");
  double f = 0.0;
  for (std::uint64_t x = 0; x < state.dim(); ++x)
    f += std::norm(state.amps[x]) * static_cast<double>(measure[x]);
  return f;
}

/// Inverse-CDF sampler over a fixed probability vector. Build once per
/// state, then draw as many times as the plan demands.
class MeasurementSampler {
 public:
  explicit MeasurementSampler(const StateVector& state) {
    cdf_.resize(state.dim());
    double acc = 0.0;
    for (std::uint64_t x = 0; x < state.dim(); ++x) {
      acc += std::norm(state.amps[x]);
      cdf_[x] = acc;
    }
  }

  // probs need not be normalized; indices are returned as positions
  explicit MeasurementSampler(const std::vector<double>& probs) {
    cdf_.resize(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      cdf_[i] = acc;
    }
  }

  std::uint64_t draw(std::mt19937_64& rng) const {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return it == cdf_.end() ? cdf_.size() - 1
                            : static_cast<std::uint64_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

/// One Born-rule measurement of a normalized state.
inline std::uint64_t sample_measurement(const StateVector& state,
                                        std::mt19937_64& rng) {
  return MeasurementSampler(state).draw(rng);
}

struct EstimateResult {
  double f_estimate = 0.0;
  std::uint64_t best_x = 0;
  std::uint64_t best_c = 0;
  std::uint64_t n_samples_used = 0;
};

/// Emulates the hybrid loop: draw plan.n_samples measurements, average the
/// measure over them, and keep the best-seen sample.
inline EstimateResult estimate_expectation(
    const StateVector& state, const std::vector<std::uint32_t>& measure,
    const SamplePlan& plan, std::mt19937_64& rng) {
  if (measure.size() != state.dim())
    throw std::invalid_argument("estimate_expectation: table size mismatch");
  MeasurementSampler sampler(state);
  double sum = 0.0;
  std::uint64_t best_x = 0;
  std::uint64_t best_c = 0;
  bool first = true;
  for (std::uint64_t s = 0; s < plan.n_samples; ++s) {
    const std::uint64_t x = sampler.draw(rng);
    const std::uint64_t c = measure[x];
    sum += static_cast<double>(c);
    if (first || c > best_c) {
      best_x = x;
      best_c = c;
      first = false;
    }
  }
  return {sum / static_cast<double>(plan.n_samples), best_x, best_c,
          plan.n_samples};
}

struct SupportSolution {
  std::uint64_t x = 0;
  std::uint64_t c = 0;
};

/// Exact-mode stand-in for best-seen-sample tracking. An expectation value
/// f over an integer measure forces the state to have support on some
/// feasible x with c(x) >= ceil(f); this returns the most probable such
/// state (falling back to the most probable feasible state outright).
inline SupportSolution certified_solution(const StateVector& state,
                                          const Tables& tables,
                                          double f_exact) {
  if (tables.feasible.empty())
    throw std::invalid_argument("certified_solution: no feasible states");
  const double thr_d = std::ceil(f_exact - 1e-9);
  const std::uint64_t thr =
      thr_d <= 0.0 ? 0 : static_cast<std::uint64_t>(thr_d);
  std::uint64_t best_x = 0;
  double best_p = -1.0;
  for (const std::uint64_t x : tables.feasible) {
    const double p = std::norm(state.amps[x]);
    if (p <= 1e-12 || tables.measure[x] < thr) continue;
    if (p > best_p) {
      best_p = p;
      best_x = x;
    }
  }
  if (best_p < 0.0) {
    for (const std::uint64_t x : tables.feasible) {
      const double p = std::norm(state.amps[x]);
      if (p > best_p) {
        best_p = p;
        best_x = x;
      }
    }
  }
  return {best_x, tables.measure[best_x]};
}

}  // namespace cqaoa
