#pragma once

// Independent reference implementations used only by tests. These follow
// the defining formulas directly (dense matrices, exhaustive enumeration)
// and deliberately avoid the library's matvec and search shortcuts.

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "cqaoa/graph.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/state.hpp"

namespace oracles {

// Constrained hypercube matrix straight from its matrix-element definition:
// entry (x, y) is 1 iff x and y differ in exactly one bit and the variant's
// validity condition holds.
inline Eigen::MatrixXd dense_mixer_matrix(
    int n_bits, const std::vector<std::uint8_t>& validity,
    cqaoa::MixerVariant variant) {
  const int dim = 1 << n_bits;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      if (std::popcount(static_cast<unsigned>(x ^ y)) != 1) continue;
      const bool kept = variant == cqaoa::MixerVariant::FeasibleOnly
                            ? (validity[x] && validity[y])
                            : (validity[x] == validity[y]);
      if (kept) B(x, y) = 1.0;
    }
  }
  return B;
}

// e^{-i beta B} |state> by full eigendecomposition.
inline cqaoa::StateVector dense_expm_apply(const cqaoa::StateVector& state,
                                           double beta,
                                           const Eigen::MatrixXd& B) {
  const int dim = static_cast<int>(state.dim());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = state.amps[i];
  Eigen::VectorXcd y = es.eigenvectors().transpose() * v;
  for (int i = 0; i < dim; ++i) {
    const double ang = -beta * es.eigenvalues()(i);
    y(i) *= cqaoa::cplx{std::cos(ang), std::sin(ang)};
  }
  y = es.eigenvectors() * y;
  cqaoa::StateVector out = state;
  for (int i = 0; i < dim; ++i) out.amps[i] = y(i);
  return out;
}

inline double state_distance(const cqaoa::StateVector& a,
                             const cqaoa::StateVector& b) {
  double d2 = 0.0;
  for (std::uint64_t x = 0; x < a.dim(); ++x)
    d2 += std::norm(a.amps[x] - b.amps[x]);
  return std::sqrt(d2);
}

inline std::size_t exhaustive_min_cover_size(const cqaoa::Graph& g) {
  const int n = g.n_vertices();
  std::size_t best = n;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (cqaoa::vc_validate(g, x))
      best = std::min<std::size_t>(best, std::popcount(x));
  return best;
}

inline cqaoa::Graph random_graph(int n, std::mt19937_64& rng,
                                 double edge_prob = 0.5) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < edge_prob) edges.emplace_back(u, v);
    }
  return cqaoa::Graph(n, std::move(edges));
}

// Every labelled simple graph on n vertices, one per edge subset.
inline std::vector<cqaoa::Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<cqaoa::Graph> graphs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    graphs.emplace_back(n, std::move(edges));
  }
  return graphs;
}

inline cqaoa::StateVector random_state(int n_bits, std::mt19937_64& rng) {
  cqaoa::StateVector s;
  s.n_bits = n_bits;
  s.amps.resize(std::uint64_t{1} << n_bits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& a : s.amps) a = cqaoa::cplx{gauss(rng), gauss(rng)};
  const double nrm = s.norm();
  for (auto& a : s.amps) a /= nrm;
  return s;
}

}  // namespace oracles
