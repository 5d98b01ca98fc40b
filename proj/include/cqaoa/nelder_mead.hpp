#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cqaoa {

struct NelderMeadConfig {
  int max_iters = 200;
  double x_tol = 1e-6;      // simplex diameter
  double f_tol = 1e-9;      // value spread across the simplex
  double init_step = 0.25;  // axis-aligned displacement for the start simplex
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

/// Derivative-free simplex maximization with the standard coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5). Terminates
/// when the simplex diameter or value spread drops under tolerance, or at
/// max_iters; always returns the best vertex seen.
template <class F>
NelderMeadResult nelder_mead_maximize(F&& objective,
                                      const std::vector<double>& start,
                                      const NelderMeadConfig& cfg = {}) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return objective(x);
  };

  std::vector<std::vector<double>> verts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] += cfg.init_step;
  std::vector<double> f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) f[i] = eval(verts[i]);

  auto order = [&]() {
    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
    std::vector<std::vector<double>> v2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      v2[k] = std::move(verts[idx[k]]);
      f2[k] = f[idx[k]];
    }
    verts = std::move(v2);
    f = std::move(f2);
  };

  int iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    order();

    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        diameter = std::max(diameter, std::abs(verts[k][i] - verts[0][i]));
    if (diameter < cfg.x_tol) break;
    if (std::abs(f[0] - f[n]) < cfg.f_tol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += verts[k][i] / n;

    auto blend = [&](const std::vector<double>& from, double t) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = centroid[i] + t * (from[i] - centroid[i]);
      return p;
    };

    const std::vector<double> xr = blend(verts[n], -1.0);
    const double fr = eval(xr);

    if (fr > f[0]) {
      const std::vector<double> xe = blend(verts[n], -2.0);
      const double fe = eval(xe);
      if (fe > fr) {
        verts[n] = xe;
        f[n] = fe;
      } else {
        verts[n] = xr;
        f[n] = fr;
      }
    } else if (fr > f[n - 1]) {
      verts[n] = xr;
      f[n] = fr;
    } else {
      const bool outside = fr > f[n];
      const std::vector<double> xc =
          outside ? blend(xr, 0.5) : blend(verts[n], 0.5);
      const double fc = eval(xc);
      if (fc > (outside ? fr : f[n])) {
        verts[n] = xc;
        f[n] = fc;
      } else {
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t i = 0; i < n; ++i)
            verts[k][i] = verts[0][i] + 0.5 * (verts[k][i] - verts[0][i]);
          f[k] = eval(verts[k]);
        }
      }
    }
  }

  order();
  return {verts[0], f[0], iter, evals};
}

}  // namespace cqaoa
