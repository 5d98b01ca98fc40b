#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/estimate.hpp"
#include "cqaoa/expm.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/state.hpp"

namespace cqaoa {

inline double reduce_mod_2pi(double g) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(g, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

/// The 2p-1 variational angles of a level-p evolution: p walk times and
/// p-1 phase angles. Phase angles are stored reduced mod 2pi, which is
/// exact for integer-valued measures.
struct Params {
  std::vector<double> betas;
  std::vector<double> gammas;

  static Params make(std::vector<double> betas, std::vector<double> gammas) {
    if (betas.empty())
      throw std::invalid_argument("Params: need at least one beta");
    if (gammas.size() + 1 != betas.size())
      throw std::invalid_argument("Params: need exactly p-1 gammas");
    for (double& g : gammas) g = reduce_mod_2pi(g);
    return Params{std::move(betas), std::move(gammas)};
  }

  int p() const noexcept { return static_cast<int>(betas.size()); }

  std::vector<double> flatten() const {
    std::vector<double> flat = betas;
    flat.insert(flat.end(), gammas.begin(), gammas.end());
    return flat;
  }

  static Params unflatten(int p, std::span<const double> flat) {
    if (static_cast<int>(flat.size()) != 2 * p - 1)
      throw std::invalid_argument("Params: flat vector must have 2p-1 entries");
    return make({flat.begin(), flat.begin() + p}, {flat.begin() + p, flat.end()});
  }
};

struct EvolveOptions {
  MixerVariant variant = MixerVariant::FeasibleOnly;
  KrylovOptions krylov{};
  // Confine all work to the feasible indices. Exact for feasible-supported
  // initial states under either mixer variant, since neither connects the
  // feasible and infeasible regions.
  bool restrict_to_feasible = true;
  double support_tol = 1e-12;  // largest infeasible amplitude tolerated
};

namespace detail {

// One evolution pipeline bound to a table set. Holds the scratch buffers,
// so create one engine per thread. In restricted mode every vector is
// compressed to the feasible index list and the dense 2^n space is touched
// only at gather/scatter time.
class EvolveEngine {
 public:
  EvolveEngine(const Tables& tables, const EvolveOptions& opts)
      : tables_(tables), opts_(opts) {
    if (restricted()) {
      size_ = tables.feasible.size();
      dense_in_.assign(tables.dim(), cplx{0.0, 0.0});
      measure_c_.resize(size_);
      for (std::size_t i = 0; i < size_; ++i)
        measure_c_[i] = tables.measure[tables.feasible[i]];
    } else {
      size_ = tables.dim();
    }
  }

  bool restricted() const noexcept { return opts_.restrict_to_feasible; }
  std::size_t size() const noexcept { return size_; }

  // Checks the feasible-support precondition and returns the working
  // vector (compressed in restricted mode).
  std::vector<cplx> gather(const StateVector& state) const {
    if (state.n_bits != tables_.n_bits)
      throw std::invalid_argument("evolve: state/table bit-width mismatch");
    for (std::uint64_t x = 0; x < state.dim(); ++x)
      if (!tables_.validity[x] && std::abs(state.amps[x]) > opts_.support_tol)
        throw std::invalid_argument(
            "evolve: initial state has infeasible support");
    if (!restricted()) return state.amps;
    std::vector<cplx> v(size_);
    for (std::size_t i = 0; i < size_; ++i)
      v[i] = state.amps[tables_.feasible[i]];
    return v;
  }

  StateVector scatter(const std::vector<cplx>& v) const {
    StateVector out;
    out.n_bits = tables_.n_bits;
    if (!restricted()) {
      out.amps = v;
      return out;
    }
    out.amps.assign(tables_.dim(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < size_; ++i) out.amps[tables_.feasible[i]] = v[i];
    return out;
  }

  void walk(std::vector<cplx>& v, double beta) {
    auto apply = [this](const std::vector<cplx>& in, std::vector<cplx>& out) {
      this->apply_mixer(in, out);
    };
    krylov_apply(v, beta, apply, opts_.krylov);
  }

  void phase(std::vector<cplx>& v, double gamma) const {
    if (gamma == 0.0) return;
    const auto& measure = restricted() ? measure_c_ : tables_.measure;
    for (std::size_t i = 0; i < size_; ++i) {
      const double ang = -gamma * static_cast<double>(measure[i]);
      v[i] *= cplx{std::cos(ang), std::sin(ang)};
    }
  }

  // Walks and phases strictly alternate, beginning and ending with a walk.
  void run(std::vector<cplx>& v, const Params& params) {
    const int p = params.p();
    for (int k = 0; k < p; ++k) {
      walk(v, params.betas[k]);
      if (k + 1 < p) phase(v, params.gammas[k]);
    }
  }

  double expectation(const std::vector<cplx>& v) const {
    const auto& measure = restricted() ? measure_c_ : tables_.measure;
    double f = 0.0;
    for (std::size_t i = 0; i < size_; ++i)
      f += std::norm(v[i]) * static_cast<double>(measure[i]);
    return f;
  }

  // Compressed twin of certified_solution().
  SupportSolution certified(const std::vector<cplx>& v, double f) const {
    const double thr_d = std::ceil(f - 1e-9);
    const std::uint64_t thr =
        thr_d <= 0.0 ? 0 : static_cast<std::uint64_t>(thr_d);
    std::size_t best_i = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (!feasible_at(i)) continue;
      const double p = std::norm(v[i]);
      if (p <= 1e-12 || measure_at(i) < thr) continue;
      if (p > best_p) {
        best_p = p;
        best_i = i;
      }
    }
    if (best_p < 0.0) {
      for (std::size_t i = 0; i < size_; ++i) {
        if (!feasible_at(i)) continue;
        const double p = std::norm(v[i]);
        if (p > best_p) {
          best_p = p;
          best_i = i;
        }
      }
    }
    return {index_at(best_i), measure_at(best_i)};
  }

  // Compressed twin of estimate_expectation().
  EstimateResult estimate(const std::vector<cplx>& v, const SamplePlan& plan,
                          std::mt19937_64& rng) const {
    std::vector<double> probs(size_);
    for (std::size_t i = 0; i < size_; ++i) probs[i] = std::norm(v[i]);
    MeasurementSampler sampler(probs);
    double sum = 0.0;
    std::uint64_t best_x = 0, best_c = 0;
    bool first = true;
    for (std::uint64_t s = 0; s < plan.n_samples; ++s) {
      const std::size_t i = sampler.draw(rng);
      const std::uint64_t c = measure_at(i);
      sum += static_cast<double>(c);
      if (first || c > best_c) {
        best_x = index_at(i);
        best_c = c;
        first = false;
      }
    }
    return {sum / static_cast<double>(plan.n_samples), best_x, best_c,
            plan.n_samples};
  }

 private:
  bool feasible_at(std::size_t i) const {
    return restricted() || tables_.validity[i];
  }
  std::uint64_t index_at(std::size_t i) const {
    return restricted() ? tables_.feasible[i] : i;
  }
  std::uint64_t measure_at(std::size_t i) const {
    return restricted() ? measure_c_[i] : tables_.measure[i];
  }

  void apply_mixer(const std::vector<cplx>& in, std::vector<cplx>& out) {
    if (!restricted()) {
      mixer_apply_raw(in, out, tables_.n_bits, tables_.validity, opts_.variant);
      return;
    }
    // Within the feasible block both variants coincide: an edge is kept
    // iff the flipped neighbour is feasible too.
    const auto& feas = tables_.feasible;
    for (std::size_t i = 0; i < size_; ++i) dense_in_[feas[i]] = in[i];
    for (std::size_t i = 0; i < size_; ++i) {
      const std::uint64_t x = feas[i];
      cplx acc{0.0, 0.0};
      for (int b = 0; b < tables_.n_bits; ++b) {
        const std::uint64_t y = x ^ (std::uint64_t{1} << b);
        if (tables_.validity[y]) acc += dense_in_[y];
      }
      out[i] = acc;
    }
  }

  const Tables& tables_;
  EvolveOptions opts_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> measure_c_;
  std::vector<cplx> dense_in_;
};

}  // namespace detail

/// The level-p evolution e^{-i b_p B} e^{-i g_{p-1} C} ... e^{-i g_1 C}
/// e^{-i b_1 B} |initial>. The initial state must be supported on feasible
/// basis states only.
inline StateVector evolve(const Tables& tables, const Params& params,
                          const StateVector& initial,
                          const EvolveOptions& opts = {}) {
  if (params.betas.empty() || params.gammas.size() + 1 != params.betas.size())
    throw std::invalid_argument("evolve: malformed params");
  detail::EvolveEngine engine(tables, opts);
  std::vector<cplx> v = engine.gather(initial);
  engine.run(v, params);
  return engine.scatter(v);
}

}  // namespace cqaoa
